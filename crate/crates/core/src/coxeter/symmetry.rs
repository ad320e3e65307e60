//! Factor of the Coxeter polynomial carried by the invariant vectors of a
//! group of symmetries.

use num_bigint::BigInt;

use super::coxeter_matrix;
use crate::algebra::{CartanAlgebra, GroupAction};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poly::IntPoly;

/// Restriction of `phi` to the span of orbit indicators, written in that
/// basis: entry `(s, t)` sums row entries of `phi` from any vertex of
/// orbit `s` over orbit `t`.
pub fn invariant_restriction(a: &CartanAlgebra, g: &GroupAction) -> Result<IntMatrix> {
    if !g.preserves(a.cartan())? {
        return Err(Error::construction("group action does not preserve the Cartan matrix"));
    }
    let phi = coxeter_matrix(a)?;
    let phi = phi.phi();
    let orbits = g.orbits(a.n())?;
    let m = orbits.len();
    let mut r = IntMatrix::zeros(m, m);
    for (s, os) in orbits.iter().enumerate() {
        for (t, ot) in orbits.iter().enumerate() {
            let sum = |i: usize| -> BigInt { ot.iter().map(|&j| &phi[(i, j)]).sum() };
            let value = sum(os[0]);
            if os[1..].iter().any(|&i| sum(i) != value) {
                return Err(Error::construction("invariant subspace is not stable"));
            }
            r[(s, t)] = value;
        }
    }
    Ok(r)
}

/// `(restricted, cofactor)` with `restricted * cofactor = chi_A` and
/// `deg restricted` equal to the number of orbits.
pub fn symmetry_factor(a: &CartanAlgebra, g: &GroupAction) -> Result<(IntPoly, IntPoly)> {
    let restricted = invariant_restriction(a, g)?.charpoly()?;
    let chi = coxeter_matrix(a)?.charpoly().clone();
    let cofactor = chi.div_exact(&restricted)?;
    Ok((restricted, cofactor))
}
