//! Numeric eigenvectors by inverse iteration, and the Euler form extended
//! bilinearly (not sesquilinearly) to complex vectors.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::CartanAlgebra;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

fn to_complex(m: &IntMatrix) -> Vec<Vec<Complex64>> {
    m.to_f64_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| Complex64::new(x, 0.0)).collect())
        .collect()
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting; a zero
/// pivot is replaced by a tiny one, which is what inverse iteration wants.
fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Vec<Complex64> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .expect("nonempty range");
        a.swap(col, p);
        b.swap(col, p);
        if a[col][col].norm() < 1e-300 {
            a[col][col] = Complex64::new(1e-300, 0.0);
        }
        for i in col + 1..n {
            let f = a[i][col] / a[col][col];
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                let t = f * a[col][j];
                a[i][j] -= t;
            }
            let t = f * b[col];
            b[i] -= t;
        }
    }
    let mut x = vec![Complex64::zero(); n];
    for i in (0..n).rev() {
        let s: Complex64 = (i + 1..n).map(|j| a[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x
}

fn normalize(v: &mut [Complex64]) -> f64 {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|z| *z /= norm);
    }
    norm
}

/// Unit eigenvector of `phi` for the approximate eigenvalue `lambda`, with
/// the residual `|phi v - lambda v|`.
pub fn eigenvector(phi: &IntMatrix, lambda: Complex64) -> Result<(Vec<Complex64>, f64)> {
    if !phi.is_square() {
        return Err(Error::domain("eigenvectors need a square matrix"));
    }
    let n = phi.rows();
    let base = to_complex(phi);
    let shift = lambda + Complex64::new(1e-10, 1e-10) * lambda.norm().max(1.0);
    let mut shifted = base.clone();
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] -= shift;
    }
    let mut v: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(1.0 + 0.1 * i as f64, 0.3 - 0.05 * i as f64))
        .collect();
    normalize(&mut v);
    for _ in 0..4 {
        v = solve(shifted.clone(), v);
        normalize(&mut v);
    }
    let residual = (0..n)
        .map(|i| {
            let row: Complex64 = (0..n).map(|j| base[i][j] * v[j]).sum();
            (row - lambda * v[i]).norm_sqr()
        })
        .sum::<f64>()
        .sqrt();
    Ok((v, residual))
}

/// `u^T C^{-T} v` on complex vectors.
pub fn complex_euler_form(a: &CartanAlgebra, u: &[Complex64], v: &[Complex64]) -> Result<Complex64> {
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
    let mut acc = Complex64::zero();
    for i in 0..n {
        for j in 0..n {
            let c = inv_t[(i, j)].to_f64().unwrap_or(f64::NAN);
            if c != 0.0 {
                acc += u[i] * c * v[j];
            }
        }
    }
    Ok(acc)
}
