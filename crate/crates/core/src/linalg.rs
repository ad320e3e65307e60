//! Dense exact integer matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Square or rectangular matrix of arbitrary-precision integers, row major.
///
/// Serializes as a list of rows of decimal strings; plain JSON integers are
/// accepted on input.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Entry>>", into = "Vec<Vec<String>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Text(String),
    Int(i64),
}

impl From<IntMatrix> for Vec<Vec<String>> {
    fn from(m: IntMatrix) -> Self {
        (0..m.rows)
            .map(|i| m.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl TryFrom<Vec<Vec<Entry>>> for IntMatrix {
    type Error = String;

    fn try_from(rows: Vec<Vec<Entry>>) -> std::result::Result<Self, Self::Error> {
        let r: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| match e {
                        Entry::Int(i) => Ok(BigInt::from(i)),
                        Entry::Text(s) => s
                            .trim()
                            .parse::<BigInt>()
                            .map_err(|_| format!("invalid integer entry {s:?}")),
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<_, _>>()?;
        IntMatrix::from_rows(r).map_err(|e| e.to_string())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix { rows: r, cols: c, data })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Sum of squared entries.
    pub fn frobenius_sq(&self) -> BigInt {
        self.data.iter().map(|x| x * x).sum()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn try_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Square-and-multiply power.
    pub fn pow(&self, mut e: u64) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::domain("power of a non-square matrix"));
        }
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let (r, c) = (other.rows, other.cols);
        IntMatrix::from_fn(self.rows * r, self.cols * c, |i, j| {
            &self[(i / r, j / c)] * &other[(i % r, j % c)]
        })
    }

    /// `[[a, b], [c, d]]` from four blocks of matching shapes.
    pub fn block2(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> Result<IntMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::domain("block shapes do not fit"));
        }
        let (r0, c0) = (a.rows, a.cols);
        Ok(IntMatrix::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < r0, j < c0) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => b[(i, j - c0)].clone(),
                (false, true) => c[(i - r0, j)].clone(),
                (false, false) => d[(i - r0, j - c0)].clone(),
            }
        }))
    }

    /// Submatrix keeping the listed rows and columns in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// the negated low coefficients in the last column.
    pub fn companion(p: &IntPoly) -> Result<IntMatrix> {
        let n = p
            .degree()
            .ok_or_else(|| Error::domain("companion of the zero polynomial"))?;
        if !p.is_monic() {
            return Err(Error::domain("companion matrix needs a monic polynomial"));
        }
        Ok(IntMatrix::from_fn(n, n, |i, j| {
            if j + 1 == n {
                -p.coeff(i)
            } else if i == j + 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::domain("determinant of a non-square matrix"));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * prev })
    }

    /// Exact inverse over the rationals, `None` when singular.
    pub fn inverse_rational(&self) -> Result<Option<Vec<Vec<BigRational>>>> {
        if !self.is_square() {
            return Err(Error::domain("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = self
                    .row(i)
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(None);
            };
            a.swap(p, k);
            let inv = a[k][k].recip();
            for x in a[k].iter_mut() {
                *x *= &inv;
            }
            for i in 0..n {
                if i != k && !a[i][k].is_zero() {
                    let f = a[i][k].clone();
                    for j in k..2 * n {
                        let t = &f * &a[k][j];
                        a[i][j] -= t;
                    }
                }
            }
        }
        Ok(Some(a.into_iter().map(|row| row[n..].to_vec()).collect()))
    }

    /// Inverse of a matrix with determinant `±1`.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let d = self.det()?;
        if d.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        let inv = self.inverse_rational()?.expect("nonzero determinant");
        IntMatrix::from_rows(
            inv.into_iter()
                .map(|row| row.into_iter().map(|x| x.to_integer()).collect())
                .collect(),
        )
    }

    /// Characteristic polynomial `det(T I - A)` by Berkowitz's division-free
    /// recursion over leading principal submatrices.
    pub fn charpoly(&self) -> Result<IntPoly> {
        if !self.is_square() {
            return Err(Error::domain("characteristic polynomial of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        // `v` holds the coefficients of the current principal minor's
        // characteristic polynomial, highest degree first.
        let mut v = vec![BigInt::one(), -self[(0, 0)].clone()];
        // Nonzero entries per row; the recursion only ever touches the
        // leading principal block, so rows are filtered by column on use.
        let sparse: Vec<Vec<(usize, &BigInt)>> = (0..n)
            .map(|i| self.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let dot = |i: usize, r: usize, w: &[BigInt]| -> BigInt {
            sparse[i].iter().filter(|(j, _)| *j < r).map(|(j, x)| *x * &w[*j]).sum()
        };
        for r in 1..n {
            let mut t = Vec::with_capacity(r + 2);
            t.push(BigInt::one());
            t.push(-self[(r, r)].clone());
            let mut w: Vec<BigInt> = (0..r).map(|i| self[(i, r)].clone()).collect();
            for k in 0..r {
                t.push(-dot(r, r, &w));
                if k + 1 < r {
                    w = (0..r).map(|i| dot(i, r, &w)).collect();
                }
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate().take(i + 1) {
                    if !vj.is_zero() {
                        *slot += &t[i - j] * vj;
                    }
                }
            }
            v = next;
        }
        v.reverse();
        Ok(IntPoly::new(v))
    }

    /// Monic minimal polynomial over the rationals: the first power of `A`
    /// that is a linear combination of the lower ones.
    pub fn minpoly(&self) -> Result<IntPoly> {
        if !self.is_square() {
            return Err(Error::domain("minimal polynomial of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        // Echelon rows, each carrying the combination of powers it encodes.
        let mut basis: Vec<(usize, Vec<BigRational>, Vec<BigRational>)> = Vec::new();
        let mut power = IntMatrix::identity(n);
        for k in 0..=n {
            let mut vec: Vec<BigRational> = power
                .data
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            let mut combo = vec![BigRational::zero(); n + 1];
            combo[k] = BigRational::one();
            for (pivot, bvec, bcombo) in &basis {
                if vec[*pivot].is_zero() {
                    continue;
                }
                let f = vec[*pivot].clone() / &bvec[*pivot];
                for (x, y) in vec.iter_mut().zip(bvec) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
                for (x, y) in combo.iter_mut().zip(bcombo) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            match vec.iter().position(|x| !x.is_zero()) {
                Some(p) => basis.push((p, vec, combo)),
                None => {
                    // combo[k] = 1 and the combination annihilates A.
                    let lcm = combo
                        .iter()
                        .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
                    let coeffs: Vec<BigInt> = combo[..=k]
                        .iter()
                        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                        .collect();
                    let p = IntPoly::new(coeffs);
                    let lead = p.leading().expect("nonzero").clone();
                    return p
                        .div_exact(&IntPoly::constant(lead))
                        .map_err(|_| Error::domain("minimal polynomial is not integral"));
                }
            }
            power = &power * self;
        }
        unreachable!("Cayley-Hamilton bounds the degree by n")
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&IntMatrix> for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.try_mul(rhs).expect("matrix shapes must agree")
    }
}

impl Add<&IntMatrix> for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&IntMatrix> for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>()))
            .finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
