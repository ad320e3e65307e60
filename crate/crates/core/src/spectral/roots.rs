//! Simultaneous polynomial root finding (Aberth-Ehrlich) on square-free
//! factors, with Newton polishing.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

const MAX_ITERATIONS: usize = 2000;

/// A root estimate with its normalized residual
/// `|p(z)| / sum_k |a_k| max(1, |z|)^k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootEstimate {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

impl RootEstimate {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn modulus(&self) -> f64 {
        self.z().norm()
    }
}

fn to_f64_coeffs(p: &IntPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut val = Complex64::new(0.0, 0.0);
    let mut der = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        der = der * z + val;
        val = val * z + a;
    }
    (val, der)
}

/// Normalized residual of `p` at `z`.
pub fn normalized_residual(p: &IntPoly, z: Complex64) -> f64 {
    let c = to_f64_coeffs(p);
    let (val, _) = horner(&c, z);
    let r = z.norm().max(1.0);
    let scale: f64 = c.iter().enumerate().map(|(k, a)| a.abs() * r.powi(k as i32)).sum();
    if scale == 0.0 {
        0.0
    } else {
        val.norm() / scale
    }
}

/// Roots of a square-free polynomial of positive degree.
fn aberth(p: &IntPoly, tol: f64) -> Result<Vec<Complex64>> {
    let c = to_f64_coeffs(p);
    let n = c.len() - 1;
    if n == 1 {
        return Ok(vec![Complex64::new(-c[0] / c[1], 0.0)]);
    }
    // Start on a circle whose radius matches the geometric mean of the root
    // moduli, rotated off the real axis.
    let radius = (c[0].abs() / c[n].abs()).powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    let mut converged = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        let mut moved = false;
        for i in 0..n {
            if converged[i] {
                continue;
            }
            let (val, der) = horner(&c, z[i]);
            if val.norm() == 0.0 {
                converged[i] = true;
                continue;
            }
            let ratio = val / der;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                z[i] += Complex64::new(1e-8, 1e-8);
                moved = true;
                continue;
            }
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(1.0) {
                converged[i] = true;
            } else {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (val, der) = horner(&c, *zi);
            let step = val / der;
            if step.is_finite() && step.norm() < 1e-6 * zi.norm().max(1.0) {
                *zi -= step;
            }
        }
    }
    let worst = z.iter().map(|&zi| normalized_residual(p, zi)).fold(0.0f64, f64::max);
    if worst.is_nan() || worst >= tol {
        return Err(Error::NonConvergence {
            iterations: MAX_ITERATIONS,
            residual: worst,
            best: z,
        });
    }
    Ok(z)
}

/// All complex roots with multiplicity, sorted by argument then modulus.
/// Repeated factors are split off exactly first, so clustered roots of
/// powers like `(T - 1)^k` are found from the square-free part.
pub fn numeric_roots(p: &IntPoly, tol: f64) -> Result<Vec<RootEstimate>> {
    if p.is_zero() {
        return Err(Error::domain("the zero polynomial has no finite root set"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain("tolerance must be positive"));
    }
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        for z in aberth(&factor, tol)? {
            let est = RootEstimate {
                re: z.re,
                im: z.im,
                residual: normalized_residual(&factor, z),
            };
            out.extend(std::iter::repeat_n(est, mult as usize));
        }
    }
    out.sort_by(|a, b| {
        let ka = (a.im.atan2(a.re), a.modulus());
        let kb = (b.im.atan2(b.re), b.modulus());
        ka.partial_cmp(&kb).unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::stars::lehmer_polynomial;
    use crate::poly::cyclotomic::cyclotomic;

    #[test]
    fn cube_roots_of_unity() {
        let r = numeric_roots(&IntPoly::from_i64(&[1, 1, 1]), 1e-10).unwrap();
        assert_eq!(r.len(), 2);
        for x in &r {
            assert!((x.modulus() - 1.0).abs() < 1e-12);
            assert!((x.re + 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn lehmer_has_one_real_root_above_one() {
        let r = numeric_roots(&lehmer_polynomial(), 1e-10).unwrap();
        let big: Vec<_> = r.iter().filter(|x| x.modulus() > 1.0 + 1e-9).collect();
        assert_eq!(big.len(), 1);
        assert!(big[0].im.abs() < 1e-12);
        assert!((big[0].re - 1.176_280_818_259_917).abs() < 1e-9);
    }

    #[test]
    fn real_quadratic() {
        let r = numeric_roots(&IntPoly::from_i64(&[1, -3, 1]), 1e-10).unwrap();
        let mut re: Vec<f64> = r.iter().map(|x| x.re).collect();
        re.sort_by(f64::total_cmp);
        let s5 = 5f64.sqrt();
        assert!((re[0] - (3.0 - s5) / 2.0).abs() < 1e-12);
        assert!((re[1] - (3.0 + s5) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn repeated_roots_via_squarefree_split() {
        let p = &(&cyclotomic(1).unwrap().pow(6) * &cyclotomic(12).unwrap().pow(3)) * &cyclotomic(7).unwrap();
        let r = numeric_roots(&p, 1e-10).unwrap();
        assert_eq!(r.len(), 24);
        assert!(r.iter().all(|x| (x.modulus() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn high_degree_cyclotomic() {
        let r = numeric_roots(&cyclotomic(105).unwrap(), 1e-10).unwrap();
        assert_eq!(r.len(), 48);
        assert!(r.iter().all(|x| (x.modulus() - 1.0).abs() < 1e-10));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(numeric_roots(&IntPoly::zero(), 1e-10).is_err());
        assert!(numeric_roots(&IntPoly::from_i64(&[1, 1]), 0.0).is_err());
        assert!(numeric_roots(&IntPoly::from_i64(&[5]), 1e-10).unwrap().is_empty());
    }
}
