//! Spectral radius, Mahler measure and energy of Coxeter matrices.
//!
//! The cyclotomic part of a Coxeter polynomial is handled exactly: its roots
//! are placed at `exp(2 pi i k / m)` and never come from iteration. Only the
//! non-cyclotomic residual goes through the numeric root finder. When the
//! residual is trivial the report is marked certified and the measures are
//! the exact values `rho = M = 1`, `e = n`.

pub mod eigen;
pub mod roots;

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::algebra::BigIntString;
use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};
use crate::poly::cyclotomic::cyclotomic_factorize;
use crate::poly::IntPoly;

pub use eigen::*;
pub use roots::*;

/// Residual bound for numeric roots.
pub const DEFAULT_ROOT_TOLERANCE: f64 = 1e-10;
/// Tolerance for assertions derived from numeric roots.
pub const DERIVED_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub n: usize,
    pub roots: Vec<RootEstimate>,
    pub spectral_radius: f64,
    pub mahler: f64,
    pub energy: f64,
    /// Square root of the exact sum of squared matrix entries.
    pub frobenius: f64,
    pub frobenius_sq: BigIntString,
    /// `sqrt(sum |lambda|^2)`; at most `frobenius`, with equality iff the
    /// matrix is normal.
    pub spectral_frobenius: f64,
    pub tolerance: f64,
    pub certified: bool,
}

impl SpectralReport {
    pub fn sum_sq_moduli(&self) -> f64 {
        self.spectral_frobenius * self.spectral_frobenius
    }

    /// Copy with every real value rounded to `digits` significant digits.
    pub fn rounded(&self, digits: usize) -> SpectralReport {
        let r = |x: f64| round_significant(x, digits);
        SpectralReport {
            roots: self
                .roots
                .iter()
                .map(|x| RootEstimate {
                    re: r(x.re),
                    im: r(x.im),
                    residual: r(x.residual),
                })
                .collect(),
            spectral_radius: r(self.spectral_radius),
            mahler: r(self.mahler),
            energy: r(self.energy),
            frobenius: r(self.frobenius),
            spectral_frobenius: r(self.spectral_frobenius),
            ..self.clone()
        }
    }
}

pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let s = format!("{:.*e}", digits.saturating_sub(1), x);
    s.parse().unwrap_or(x)
}

/// Exact roots of `Phi_m`, each with its residual.
pub fn cyclotomic_roots(m: u64) -> Result<Vec<RootEstimate>> {
    let phi_m = crate::poly::cyclotomic::cyclotomic(m)?;
    Ok((1..=m)
        .filter(|&k| num_integer::gcd(k, m) == 1)
        .map(|k| {
            let z = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64);
            RootEstimate {
                re: z.re,
                im: z.im,
                residual: normalized_residual(&phi_m, z),
            }
        })
        .collect())
}

/// Roots of `p` with multiplicity: exact placement for the cyclotomic part,
/// numeric for the rest. The flag is set when no numeric root was needed.
pub fn polynomial_roots(p: &IntPoly, tol: f64) -> Result<(Vec<RootEstimate>, bool)> {
    if p.is_zero() {
        return Err(Error::domain("the zero polynomial has no finite root set"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain("tolerance must be positive"));
    }
    let fac = cyclotomic_factorize(p)?;
    let mut roots = Vec::new();
    for (&m, &e) in &fac.factors {
        for z in cyclotomic_roots(m)? {
            roots.extend(std::iter::repeat_n(z, e as usize));
        }
    }
    let certified = fac.residual.degree().unwrap_or(0) == 0;
    if !certified {
        roots.extend(numeric_roots(&fac.residual, tol)?);
    }
    Ok((roots, certified))
}

/// `|lead| * prod max(1, |lambda|)`, computed from the roots.
pub fn mahler_measure(p: &IntPoly, tol: f64) -> Result<f64> {
    let (roots, _) = polynomial_roots(p, tol)?;
    let lead = p.leading().and_then(|c| c.to_f64()).unwrap_or(f64::NAN).abs();
    Ok(lead * roots.iter().map(|x| x.modulus().max(1.0)).product::<f64>())
}

/// Spectral measures of a Coxeter matrix.
pub fn measures(m: &CoxeterMatrix, tol: f64) -> Result<SpectralReport> {
    let n = m.n();
    let (roots, certified) = polynomial_roots(m.charpoly(), tol)?;
    let frobenius_sq = m.phi().frobenius_sq();
    let frobenius = frobenius_sq.to_f64().unwrap_or(f64::INFINITY).sqrt();
    let (spectral_radius, mahler, energy, spectral_frobenius) = if certified {
        (1.0, 1.0, n as f64, (n as f64).sqrt())
    } else {
        let moduli: Vec<f64> = roots.iter().map(RootEstimate::modulus).collect();
        (
            moduli.iter().copied().fold(0.0, f64::max),
            moduli.iter().map(|r| r.max(1.0)).product(),
            moduli.iter().sum(),
            moduli.iter().map(|r| r * r).sum::<f64>().sqrt(),
        )
    };
    Ok(SpectralReport {
        n,
        roots,
        spectral_radius,
        mahler,
        energy,
        frobenius,
        frobenius_sq: BigIntString(frobenius_sq),
        spectral_frobenius,
        tolerance: tol,
        certified,
    })
}

/// Outcome of checking `n <= e <= sqrt(n) F <= n rho` with `F` the
/// spectral Frobenius norm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainVerdict {
    pub holds: bool,
    /// Per link, whether its two sides agree within tolerance.
    pub equalities: [bool; 3],
    pub failures: Vec<String>,
}

impl ChainVerdict {
    pub fn is_ok(&self) -> bool {
        self.holds
    }
}

/// Checks the inequality chain, that every link is an equality exactly when
/// `cyclotomic` is set, and that the spectral Frobenius norm does not exceed
/// the entrywise one.
pub fn verify_inequality_chain(report: &SpectralReport, cyclotomic: bool) -> ChainVerdict {
    let tol = report.tolerance.max(DERIVED_TOLERANCE);
    let n = report.n as f64;
    let links = [
        ("n", n, "e", report.energy),
        ("e", report.energy, "sqrt(n) F", n.sqrt() * report.spectral_frobenius),
        (
            "sqrt(n) F",
            n.sqrt() * report.spectral_frobenius,
            "n rho",
            n * report.spectral_radius,
        ),
    ];
    let mut failures = Vec::new();
    let mut equalities = [false; 3];
    for (k, &(ln, lv, rn, rv)) in links.iter().enumerate() {
        let slack = tol * n.max(1.0);
        if lv > rv + slack {
            failures.push(format!("{ln} = {lv} exceeds {rn} = {rv}"));
        }
        equalities[k] = (lv - rv).abs() <= slack;
        if equalities[k] != cyclotomic {
            failures.push(format!(
                "{ln} {} {rn} but cyclotomic flag is {cyclotomic}",
                if equalities[k] { "=" } else { "<" }
            ));
        }
    }
    if report.sum_sq_moduli() > report.frobenius * report.frobenius + tol * n.max(1.0) {
        failures.push(format!(
            "sum |lambda|^2 = {} exceeds squared Frobenius norm {}",
            report.sum_sq_moduli(),
            report.frobenius_sq.0
        ));
    }
    let product: f64 = report.roots.iter().map(RootEstimate::modulus).product();
    if !report.roots.is_empty() && (product - 1.0).abs() > tol * n.max(1.0) {
        failures.push(format!("product of root moduli is {product}, not 1"));
    }
    ChainVerdict {
        holds: failures.is_empty(),
        equalities,
        failures,
    }
}

/// Every root `z` has a partner within `tol` of `conj(z)`, and one within
/// `tol` of `1 / z`; multiplicities are respected by greedy matching.
pub fn closed_under(roots: &[RootEstimate], map: impl Fn(Complex64) -> Complex64, tol: f64) -> bool {
    let mut used = vec![false; roots.len()];
    for r in roots {
        let target = map(r.z());
        let hit = roots
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, s)| (j, (s.z() - target).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match hit {
            Some((j, d)) if d <= tol => used[j] = true,
            _ => return false,
        }
    }
    true
}

pub fn conjugation_closed(roots: &[RootEstimate], tol: f64) -> bool {
    closed_under(roots, |z| z.conj(), tol)
}

pub fn reciprocal_closed(roots: &[RootEstimate], tol: f64) -> bool {
    closed_under(roots, |z| Complex64::one() / z, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;
    use crate::coxeter::{coxeter_matrix, is_cyclotomic_type};

    fn report(a: &CartanAlgebra) -> SpectralReport {
        measures(&coxeter_matrix(a).unwrap(), DEFAULT_ROOT_TOLERANCE).unwrap()
    }

    #[test]
    fn e8_is_certified() {
        let r = report(&dynkin(DynkinType::E(8)).unwrap());
        assert!(r.certified);
        assert_eq!((r.spectral_radius, r.mahler, r.energy), (1.0, 1.0, 8.0));
        assert_eq!(r.roots.len(), 8);
        assert!(r.roots.iter().all(|x| x.residual < 1e-14));
        let v = verify_inequality_chain(&r, true);
        assert!(v.holds, "{:?}", v.failures);
        assert_eq!(v.equalities, [true; 3]);
    }

    #[test]
    fn single_vertex() {
        let r = report(&truncated_linear(1, 2).unwrap());
        assert_eq!((r.spectral_radius, r.mahler, r.energy), (1.0, 1.0, 1.0));
        assert_eq!(r.frobenius, 1.0);
    }

    #[test]
    fn lehmer_star() {
        let a = from_hereditary_quiver(&star_quiver(&[2, 3, 7]).unwrap()).unwrap();
        let m = coxeter_matrix(&a).unwrap();
        let r = measures(&m, DEFAULT_ROOT_TOLERANCE).unwrap();
        assert!(!r.certified);
        assert!((r.mahler - 1.176_280).abs() < 1e-5);
        assert!((r.spectral_radius - r.mahler).abs() < 1e-12);
        let (cyc, _) = is_cyclotomic_type(&m).unwrap();
        let v = verify_inequality_chain(&r, cyc);
        assert!(v.holds, "{:?}", v.failures);
        assert!(r.energy > r.n as f64 + 1e-3);
    }

    #[test]
    fn three_kronecker_is_strict() {
        let q = QuiverSpec::indexed(2, &[(0, 1), (0, 1), (0, 1)]);
        let m = coxeter_matrix(&from_hereditary_quiver(&q).unwrap()).unwrap();
        assert_eq!(m.charpoly(), &IntPoly::from_i64(&[1, -7, 1]));
        let r = measures(&m, DEFAULT_ROOT_TOLERANCE).unwrap();
        assert!((r.spectral_radius - (7.0 + 45f64.sqrt()) / 2.0).abs() < 1e-12);
        let v = verify_inequality_chain(&r, false);
        assert!(v.holds, "{:?}", v.failures);
        assert_eq!(v.equalities, [false; 3]);
        // A wrong flag must be caught.
        assert!(!verify_inequality_chain(&r, true).holds);
    }

    #[test]
    fn mahler_is_multiplicative() {
        let f = IntPoly::from_i64(&[1, -3, 1]);
        let g = crate::coxeter::lehmer_polynomial();
        let h = IntPoly::from_i64(&[-1, 1]) * IntPoly::from_i64(&[2, 0, 3]);
        let fg = &f * &g;
        let prod = mahler_measure(&f, 1e-10).unwrap() * mahler_measure(&g, 1e-10).unwrap();
        assert!((mahler_measure(&fg, 1e-10).unwrap() - prod).abs() < 1e-8);
        assert!((mahler_measure(&h, 1e-10).unwrap() - 3.0).abs() < 1e-10);
    }

    #[test]
    fn root_set_symmetries() {
        let a = canonical(&[2, 3, 8]).unwrap();
        let r = report(&a);
        assert!(conjugation_closed(&r.roots, 1e-8));
        assert!(reciprocal_closed(&r.roots, 1e-8));
        let skew = vec![RootEstimate {
            re: 2.0,
            im: 1.0,
            residual: 0.0,
        }];
        assert!(!conjugation_closed(&skew, 1e-8));
    }

    #[test]
    fn rounding() {
        assert_eq!(round_significant(1.234_567_890_123_456, 12), 1.234_567_890_12);
        assert_eq!(round_significant(0.0, 12), 0.0);
        let r = report(&dynkin(DynkinType::A(3)).unwrap()).rounded(12);
        assert_eq!(r.energy, 3.0);
    }
}
