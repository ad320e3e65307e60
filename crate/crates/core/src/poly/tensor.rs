//! Tensor product of monic polynomials: the polynomial whose roots are all
//! pairwise products of the roots of the factors.

use super::IntPoly;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Characteristic polynomial of the Kronecker product of the companion
/// matrices; monic of degree `deg f * deg g`.
pub fn tensor_product(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    if !f.is_monic() || !g.is_monic() {
        return Err(Error::domain("tensor product needs monic polynomials"));
    }
    if f.degree() == Some(0) || g.degree() == Some(0) {
        return Ok(IntPoly::one());
    }
    let cf = IntMatrix::companion(f)?;
    let cg = IntMatrix::companion(g)?;
    cf.kronecker(&cg).charpoly()
}
