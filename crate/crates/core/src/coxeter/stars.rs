//! Closed formulas for hereditary stars.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::cyclotomic::v_poly;
use crate::poly::IntPoly;

fn v_or_zero(k: u64) -> IntPoly {
    if k == 0 {
        IntPoly::zero()
    } else {
        v_poly(k).expect("k >= 1")
    }
}

/// Coxeter polynomial of the star with arms `p_i - 1`:
/// `(T + 1) prod v_{p_i} - T sum_i v_{p_i - 1} prod_{j != i} v_{p_j}`.
pub fn star_poly(weights: &[u64]) -> Result<IntPoly> {
    if weights.is_empty() || weights.contains(&0) {
        return Err(Error::domain(
            "star weights must be a nonempty list of positive integers",
        ));
    }
    let vs: Vec<IntPoly> = weights.iter().map(|&p| v_or_zero(p)).collect();
    let full: IntPoly = vs.iter().cloned().product();
    let mut acc = &IntPoly::from_i64(&[1, 1]) * &full;
    let t = IntPoly::from_i64(&[0, 1]);
    for (i, &p) in weights.iter().enumerate() {
        let others: IntPoly = vs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .product();
        acc = &acc - &(&(&t * &v_or_zero(p - 1)) * &others);
    }
    Ok(acc)
}

/// `chi(1) = 2 prod p_i - sum_i (p_i - 1) prod_{j != i} p_j`.
pub fn star_chi_at_one(weights: &[u64]) -> BigInt {
    let prod: BigInt = weights.iter().map(|&p| BigInt::from(p)).product();
    let mut acc = &prod * 2;
    for (i, &p) in weights.iter().enumerate() {
        let others: BigInt = weights
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &q)| BigInt::from(q))
            .product();
        acc -= others * (p - 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarClass {
    Dynkin,
    ExtendedDynkin,
    Wild,
}

/// Trichotomy by the sign of `chi(1)`.
pub fn weight_classify(weights: &[u64]) -> Result<StarClass> {
    if weights.is_empty() || weights.iter().any(|&p| p < 1) {
        return Err(Error::domain("weights must be positive"));
    }
    let v = star_chi_at_one(weights);
    Ok(if v.is_positive() {
        StarClass::Dynkin
    } else if v.is_zero() {
        StarClass::ExtendedDynkin
    } else {
        StarClass::Wild
    })
}

/// Lehmer's polynomial `T^10 + T^9 - T^7 - T^6 - T^5 - T^4 - T^3 + T + 1`.
pub fn lehmer_polynomial() -> IntPoly {
    IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}
