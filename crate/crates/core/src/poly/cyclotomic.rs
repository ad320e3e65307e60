//! Cyclotomic polynomials, factorization into cyclotomic parts and the
//! arithmetic facts read off such factorizations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::arith::{divisors, factorize, moebius, prime_power_base, totient};
use super::IntPoly;
use crate::error::{Error, Result};

/// `1 + T + ... + T^(n-1)`.
pub fn v_poly(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::domain("v-polynomial needs n >= 1"));
    }
    Ok(IntPoly::new(vec![BigInt::one(); n as usize]))
}

/// The `m`-th cyclotomic polynomial as the Möbius product of v-polynomials,
/// with the negative-exponent factors removed by exact division.
pub fn cyclotomic(m: u64) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::domain("cyclotomic polynomial needs m >= 1"));
    }
    if m == 1 {
        return Ok(IntPoly::from_i64(&[-1, 1]));
    }
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        match moebius(d)? {
            1 => num = &num * &v_poly(m / d)?,
            -1 => den = &den * &v_poly(m / d)?,
            _ => {}
        }
    }
    num.div_exact(&den)
}

/// `p = prod_m Phi_m^{e(m)} * residual` with a residual free of cyclotomic
/// factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycFactorization {
    pub factors: BTreeMap<u64, u32>,
    pub residual: IntPoly,
}

impl CycFactorization {
    /// A residual-free factorization from `(m, e)` pairs; repeated keys add up.
    pub fn from_pairs(pairs: &[(u64, u32)]) -> Self {
        let mut factors = BTreeMap::new();
        for &(m, e) in pairs.iter().filter(|&&(_, e)| e > 0) {
            *factors.entry(m).or_insert(0) += e;
        }
        CycFactorization {
            factors,
            residual: IntPoly::one(),
        }
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.residual.is_one()
    }

    /// Multiplicity of `Phi_m`, zero when absent.
    pub fn exponent(&self, m: u64) -> u32 {
        self.factors.get(&m).copied().unwrap_or(0)
    }

    /// Degree of the cyclotomic part.
    pub fn cyclotomic_degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|(&m, &e)| totient(m).expect("m >= 1") * e as u64)
            .sum()
    }

    /// Multiplies everything back out.
    pub fn expand(&self) -> IntPoly {
        let mut acc = self.residual.clone();
        for (&m, &e) in &self.factors {
            acc = &acc * &cyclotomic(m).expect("m >= 1").pow(e);
        }
        acc
    }

    /// Least common multiple of the orders `m`; the multiplicative order of
    /// a diagonalizable matrix with this characteristic polynomial.
    pub fn order_lcm(&self) -> u64 {
        self.factors.keys().fold(1, |acc, &m| super::arith::lcm(acc, m))
    }
}

impl std::fmt::Display for CycFactorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(m, e)| {
                if *e == 1 {
                    format!("Phi{m}")
                } else {
                    format!("Phi{m}^{e}")
                }
            })
            .collect();
        if !self.residual.is_one() {
            parts.push(format!("({})", self.residual));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Candidate orders `m` whose cyclotomic polynomial could divide a
/// polynomial of degree `deg`: `phi(m) <= deg`. Since `phi(m) >= sqrt(m)`
/// away from `m in {2, 6}`, scanning `m <= deg^2` plus those two suffices.
pub fn candidate_orders(deg: usize) -> Vec<u64> {
    let bound = (deg as u64 * deg as u64).max(6);
    (1..=bound)
        .filter(|&m| totient(m).expect("m >= 1") <= deg as u64)
        .collect()
}

/// Divides out every cyclotomic factor with multiplicity.
pub fn cyclotomic_factorize(p: &IntPoly) -> Result<CycFactorization> {
    let deg = p
        .degree()
        .ok_or_else(|| Error::domain("cannot factor the zero polynomial"))?;
    let mut residual = p.clone();
    let mut factors = BTreeMap::new();
    for m in candidate_orders(deg) {
        let rdeg = residual.degree().expect("nonzero");
        if rdeg == 0 {
            break;
        }
        if totient(m)? as usize > rdeg {
            continue;
        }
        let phi = cyclotomic(m)?;
        while let Some((q, r)) = residual.checked_div_rem(&phi) {
            if !r.is_zero() {
                break;
            }
            residual = q;
            *factors.entry(m).or_insert(0) += 1;
        }
    }
    Ok(CycFactorization { factors, residual })
}

/// Evaluation point for [`special_value_formula`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialPoint {
    PlusOne,
    MinusOne,
}

/// `Phi_m(1)`: 0 for `m = 1`, `p` for `m = p^s`, 1 otherwise.
pub fn cyclotomic_at_one(m: u64) -> BigInt {
    if m == 1 {
        return BigInt::zero();
    }
    prime_power_base(m).map_or_else(BigInt::one, BigInt::from)
}

/// `Phi_m(-1)`: -2 for `m = 1`, 0 for `m = 2`, `p` for `m = 2 p^s` with
/// `s >= 1`, 1 otherwise.
pub fn cyclotomic_at_minus_one(m: u64) -> BigInt {
    match m {
        1 => BigInt::from(-2),
        2 => BigInt::zero(),
        _ if m.is_multiple_of(2) => prime_power_base(m / 2).map_or_else(BigInt::one, BigInt::from),
        _ => BigInt::one(),
    }
}

/// Value at `±1` read off a residual-free factorization without expanding.
pub fn special_value_formula(fac: &CycFactorization, point: SpecialPoint) -> Result<BigInt> {
    if !fac.is_cyclotomic() {
        return Err(Error::domain("special values need a residual-free factorization"));
    }
    let eval = match point {
        SpecialPoint::PlusOne => cyclotomic_at_one,
        SpecialPoint::MinusOne => cyclotomic_at_minus_one,
    };
    Ok(fac
        .factors
        .iter()
        .map(|(&m, &e)| num_traits::pow(eval(m), e as usize))
        .product())
}

/// Exponent sums over `m = 2 p^s`, keyed by the prime `p`.
pub fn twisted_prime_exponents(fac: &CycFactorization) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for (&m, &e) in &fac.factors {
        if m % 2 == 0 && m > 2 {
            if let Some(p) = prime_power_base(m / 2) {
                *out.entry(p).or_insert(0) += e;
            }
        }
    }
    out
}

/// Exponent sums over `m = p^s`, keyed by the prime `p`.
pub fn prime_exponents(fac: &CycFactorization) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for (&m, &e) in &fac.factors {
        if let [(p, _)] = factorize(m).as_slice() {
            *out.entry(*p).or_insert(0) += e;
        }
    }
    out
}

/// Palindromic coefficient sequence.
pub fn is_self_reciprocal(p: &IntPoly) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

/// Outcome of the three necessary conditions on the factorization of a
/// Coxeter polynomial of degree `n` with linear coefficient `a1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientConditions {
    /// `sum e(m) phi(m) = n`
    pub degree_sum: bool,
    /// `e(1)` is even
    pub unit_root_parity: bool,
    /// `sum e(m) mu(m) = -a1`
    pub moebius_sum: bool,
}

impl CoefficientConditions {
    pub fn all(&self) -> bool {
        self.degree_sum && self.unit_root_parity && self.moebius_sum
    }
}

pub fn coefficient_conditions(fac: &CycFactorization, n: usize, a1: &BigInt) -> Result<CoefficientConditions> {
    if !fac.is_cyclotomic() {
        return Err(Error::domain(
            "coefficient conditions need a residual-free factorization",
        ));
    }
    let mut mu_sum = BigInt::zero();
    for (&m, &e) in &fac.factors {
        mu_sum += BigInt::from(moebius(m)?) * e;
    }
    Ok(CoefficientConditions {
        degree_sum: fac.cyclotomic_degree() == n as u64,
        unit_root_parity: fac.exponent(1).is_multiple_of(2),
        moebius_sum: mu_sum == -a1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn v_poly_values() {
        assert_eq!(v_poly(1).unwrap(), p(&[1]));
        assert_eq!(v_poly(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(v_poly(7).unwrap().degree(), Some(6));
        assert!(v_poly(0).is_err());
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_105_has_a_minus_two() {
        let c = cyclotomic(105).unwrap();
        assert_eq!(c.degree(), Some(48));
        assert_eq!(c.coeff(7), BigInt::from(-2));
    }

    #[test]
    fn t_power_minus_one_splits() {
        for m in 1..=200u64 {
            let prod: IntPoly = divisors(m).into_iter().map(|d| cyclotomic(d).unwrap()).product();
            let expect = &IntPoly::monomial(BigInt::one(), m as usize) - &IntPoly::one();
            assert_eq!(prod, expect, "m = {m}");
        }
    }

    #[test]
    fn factorize_examples() {
        let f = cyclotomic_factorize(&v_poly(3).unwrap()).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(3, 1)]));
        assert!(f.is_cyclotomic());

        let prod = &(&cyclotomic(2).unwrap() * &cyclotomic(10).unwrap()) * &cyclotomic(30).unwrap();
        let f = cyclotomic_factorize(&prod).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(2, 1), (10, 1), (30, 1)]));

        let f = cyclotomic_factorize(&p(&[1, -3, 1])).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.residual, p(&[1, -3, 1]));

        assert!(cyclotomic_factorize(&IntPoly::zero()).is_err());
    }

    #[test]
    fn factorize_keeps_monomial_and_sign_in_residual() {
        let q = &(&p(&[0, 0, -1]) * &cyclotomic(4).unwrap()) * &cyclotomic(4).unwrap();
        let f = cyclotomic_factorize(&q).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(4, 2)]));
        assert_eq!(f.residual, p(&[0, 0, -1]));
        assert_eq!(f.expand(), q);
    }

    #[test]
    fn special_values() {
        let one = SpecialPoint::PlusOne;
        let minus = SpecialPoint::MinusOne;
        assert_eq!(
            special_value_formula(&CycFactorization::from_pairs(&[(42, 1)]), one).unwrap(),
            BigInt::from(1)
        );
        let f = CycFactorization::from_pairs(&[(1, 2), (2, 1), (3, 1)]);
        assert_eq!(special_value_formula(&f, one).unwrap(), BigInt::zero());
        let f = CycFactorization::from_pairs(&[(1, 2), (18, 1)]);
        assert_eq!(special_value_formula(&f, minus).unwrap(), BigInt::from(12));
        assert_eq!(f.expand().eval_i64(-1), BigInt::from(12));
        let bad = CycFactorization {
            factors: BTreeMap::new(),
            residual: p(&[1, 1, 0, 1]),
        };
        assert!(special_value_formula(&bad, one).is_err());
    }

    #[test]
    fn special_values_match_direct_evaluation() {
        for m in 1..=120u64 {
            let c = cyclotomic(m).unwrap();
            assert_eq!(cyclotomic_at_one(m), c.eval_i64(1), "m = {m}");
            assert_eq!(cyclotomic_at_minus_one(m), c.eval_i64(-1), "m = {m}");
        }
    }

    #[test]
    fn self_reciprocity() {
        assert!(is_self_reciprocal(&v_poly(5).unwrap()));
        assert!(!is_self_reciprocal(&cyclotomic(1).unwrap()));
        assert!(is_self_reciprocal(&cyclotomic(1).unwrap().pow(2)));
    }

    #[test]
    fn coefficient_condition_examples() {
        let f = CycFactorization::from_pairs(&[(42, 1)]);
        let a1 = cyclotomic(42).unwrap().coeff(1);
        assert_eq!(a1, BigInt::one());
        assert!(coefficient_conditions(&f, 12, &a1).unwrap().all());

        let f = CycFactorization::from_pairs(&[(1, 2), (2, 1)]);
        let a1 = f.expand().coeff(1);
        let c = coefficient_conditions(&f, 3, &a1).unwrap();
        assert!(c.degree_sum && c.unit_root_parity);

        let f = CycFactorization::from_pairs(&[(1, 1)]);
        let c = coefficient_conditions(&f, 1, &BigInt::one()).unwrap();
        assert!(!c.unit_root_parity);
    }

    #[test]
    fn prime_exponent_maps() {
        let f = CycFactorization::from_pairs(&[(4, 2), (6, 1), (9, 1), (18, 3), (1, 2)]);
        assert_eq!(twisted_prime_exponents(&f), BTreeMap::from([(2, 2), (3, 4)]));
        assert_eq!(prime_exponents(&f), BTreeMap::from([(2, 2), (3, 1)]));
    }

    #[test]
    fn factorization_json_shape() {
        let f = CycFactorization::from_pairs(&[(2, 1), (10, 1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"factors":{"2":1,"10":1},"residual":["1"]}"#);
        let back: CycFactorization = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
