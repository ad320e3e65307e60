//! Coxeter transformations and the exact invariants derived from them.

pub mod forms;
pub mod stars;
pub mod symmetry;

use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::CartanAlgebra;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poly::arith::{factorize, is_perfect_square};
use crate::poly::cyclotomic::{cyclotomic_factorize, CycFactorization};
use crate::poly::IntPoly;

pub use forms::*;
pub use stars::*;
pub use symmetry::*;

/// `phi = -C^T C^{-1}` with its characteristic polynomial; the minimal
/// polynomial is computed on first use.
#[derive(Debug)]
pub struct CoxeterMatrix {
    phi: IntMatrix,
    charpoly: IntPoly,
    minpoly: OnceLock<IntPoly>,
}

impl Clone for CoxeterMatrix {
    fn clone(&self) -> Self {
        let minpoly = OnceLock::new();
        if let Some(m) = self.minpoly.get() {
            let _ = minpoly.set(m.clone());
        }
        CoxeterMatrix {
            phi: self.phi.clone(),
            charpoly: self.charpoly.clone(),
            minpoly,
        }
    }
}

impl CoxeterMatrix {
    /// Wraps an arbitrary invertible integer matrix.
    pub fn from_phi(phi: IntMatrix) -> Result<Self> {
        let charpoly = phi.charpoly()?;
        Ok(CoxeterMatrix {
            phi,
            charpoly,
            minpoly: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.phi.rows()
    }

    pub fn phi(&self) -> &IntMatrix {
        &self.phi
    }

    pub fn charpoly(&self) -> &IntPoly {
        &self.charpoly
    }

    pub fn minpoly(&self) -> &IntPoly {
        self.minpoly.get_or_init(|| self.phi.minpoly().expect("square matrix"))
    }
}

/// Column-convention Coxeter matrix: sends column `i` of `C` to minus row
/// `i` of `C`.
pub fn coxeter_matrix(a: &CartanAlgebra) -> Result<CoxeterMatrix> {
    let c = a.cartan();
    let inv = c.inverse_unimodular()?;
    CoxeterMatrix::from_phi(-&(&c.transpose() * &inv))
}

pub fn char_poly(m: &CoxeterMatrix) -> IntPoly {
    m.charpoly().clone()
}

pub fn minimal_poly(m: &CoxeterMatrix) -> IntPoly {
    m.minpoly().clone()
}

/// Coxeter polynomial straight from an algebra.
pub fn coxeter_polynomial(a: &CartanAlgebra) -> Result<IntPoly> {
    Ok(coxeter_matrix(a)?.charpoly)
}

/// Cyclotomic factorization of the Coxeter polynomial; the flag is set when
/// nothing is left over.
pub fn is_cyclotomic_type(m: &CoxeterMatrix) -> Result<(bool, CycFactorization)> {
    let fac = cyclotomic_factorize(m.charpoly())?;
    Ok((fac.is_cyclotomic(), fac))
}

/// Matrix order, finite exactly for diagonalizable matrices of cyclotomic
/// type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Period {
    Finite(u64),
    Infinite,
}

impl Period {
    pub fn is_finite(&self) -> bool {
        matches!(self, Period::Finite(_))
    }
}

impl std::fmt::Display for Period {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Period::Finite(p) => write!(f, "{p}"),
            Period::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Period {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Period::Finite(p) => s.serialize_u64(*p),
            Period::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Period {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(p) if p > 0 => Ok(Period::Finite(p)),
            Repr::Text(s) if s == "infinity" || s == "∞" => Ok(Period::Infinite),
            Repr::Text(s) => s
                .parse::<u64>()
                .ok()
                .filter(|&p| p > 0)
                .map(Period::Finite)
                .ok_or_else(|| serde::de::Error::custom(format!("invalid period {s:?}"))),
            Repr::Int(_) => Err(serde::de::Error::custom("period must be positive")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub is_cyclotomic: bool,
    pub is_diagonalizable: bool,
    pub period: Period,
}

/// Diagonalizable iff the minimal polynomial is square-free; the period of
/// a diagonalizable matrix of cyclotomic type is the lcm of the orders of
/// its eigenvalues, certified by exact powering.
pub fn periodicity(m: &CoxeterMatrix) -> Result<PeriodicityReport> {
    let (is_cyclotomic, fac) = is_cyclotomic_type(m)?;
    let mp = m.minpoly();
    let is_diagonalizable = mp.gcd(&mp.derivative()).degree() == Some(0);
    let period = if is_cyclotomic && is_diagonalizable {
        let l = fac.order_lcm();
        certify_order(m.phi(), l)?;
        Period::Finite(l)
    } else {
        Period::Infinite
    };
    Ok(PeriodicityReport {
        is_cyclotomic,
        is_diagonalizable,
        period,
    })
}

/// Checks `phi^l = 1` and `phi^(l/p) != 1` for every prime `p | l`, so `l`
/// is the exact order.
pub fn certify_order(phi: &IntMatrix, l: u64) -> Result<()> {
    if !phi.pow(l)?.is_identity() {
        return Err(Error::domain(format!("matrix power {l} is not the identity")));
    }
    for (p, _) in factorize(l) {
        if phi.pow(l / p)?.is_identity() {
            return Err(Error::domain(format!("matrix order is a proper divisor of {l}")));
        }
    }
    Ok(())
}

/// Smallest `r <= bound` with `phi^r = 1`, by repeated multiplication.
pub fn order_by_search(phi: &IntMatrix, bound: u64) -> Option<u64> {
    let mut acc = phi.clone();
    for r in 1..=bound {
        if acc.is_identity() {
            return Some(r);
        }
        acc = &acc * phi;
    }
    None
}

/// `chi(-1)` is the square of an integer (zero included).
pub fn chi_minus_one_square(m: &CoxeterMatrix) -> bool {
    is_perfect_square(&m.charpoly().eval(&BigInt::from(-1)))
}
