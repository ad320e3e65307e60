//! Euler bilinear form and the homological quadratic form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::CartanAlgebra;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormClass {
    #[serde(rename = "positive")]
    PositiveDefinite,
    #[serde(rename = "nonnegative")]
    NonNegative,
    #[serde(rename = "indefinite")]
    Indefinite,
}

impl std::fmt::Display for FormClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FormClass::PositiveDefinite => "positive",
            FormClass::NonNegative => "nonnegative",
            FormClass::Indefinite => "indefinite",
        })
    }
}

/// Sign class of the homological form and the dimension of its radical
/// (the kernel of its symmetric matrix).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomFormReport {
    pub classification: FormClass,
    pub radical_rank: usize,
}

/// Symmetric matrix `C^{-1} + C^{-T}` of the homological form.
pub fn homological_matrix(a: &CartanAlgebra) -> Result<IntMatrix> {
    let inv = a.cartan().inverse_unimodular()?;
    Ok(&inv + &inv.transpose())
}

/// Classifies an integer symmetric matrix by exact symmetric elimination
/// on positive diagonal pivots. A negative diagonal entry, or a zero
/// diagonal with a nonzero off-diagonal entry in its row, witnesses an
/// indefinite form.
pub fn classify_symmetric(s: &IntMatrix) -> Result<HomFormReport> {
    if !s.is_square() || *s != s.transpose() {
        return Err(Error::domain("matrix is not symmetric"));
    }
    let n = s.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| s.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut live: Vec<usize> = (0..n).collect();
    let mut rank = 0;
    let mut indefinite = false;
    loop {
        if live.iter().any(|&i| a[i][i].is_negative()) {
            indefinite = true;
            break;
        }
        let Some(pos) = live.iter().position(|&i| a[i][i].is_positive()) else {
            if live.iter().any(|&i| live.iter().any(|&j| !a[i][j].is_zero())) {
                indefinite = true;
            }
            break;
        };
        let p = live.swap_remove(pos);
        rank += 1;
        let pivot = a[p][p].clone();
        for &i in &live {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &pivot;
            for &j in &live {
                let t = &f * &a[p][j];
                a[i][j] -= t;
            }
        }
    }
    let radical_rank = n - matrix_rank(s);
    let classification = if indefinite {
        FormClass::Indefinite
    } else if rank == n {
        FormClass::PositiveDefinite
    } else {
        FormClass::NonNegative
    };
    Ok(HomFormReport {
        classification,
        radical_rank,
    })
}

/// Rank over the rationals.
pub fn matrix_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] / &a[rank][col];
            for j in col..m.cols() {
                let t = &f * &a[rank][j];
                a[i][j] -= t;
            }
        }
        rank += 1;
    }
    rank
}

pub fn homological_form(a: &CartanAlgebra) -> Result<HomFormReport> {
    classify_symmetric(&homological_matrix(a)?)
}

/// Euler form `<u, v> = u^T C^{-T} v`, the transpose placement matching the
/// column convention so that `<x, phi y> = -<y, x>`. Integral because `C`
/// is unimodular.
pub fn euler_form(a: &CartanAlgebra, u: &[BigInt], v: &[BigInt]) -> Result<BigInt> {
    let n = a.n();
    for w in [u, v] {
        if w.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: w.len(),
            });
        }
    }
    let inv_t = a.cartan().inverse_unimodular()?.transpose();
    let w = inv_t.mul_vec(v)?;
    Ok(u.iter().zip(&w).map(|(x, y)| x * y).sum())
}
