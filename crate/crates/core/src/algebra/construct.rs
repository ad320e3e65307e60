//! Cartan matrices from structural descriptions and closure operations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{BigIntString, CartanAlgebra, GroupAction, PosetSpec, Provenance, QuiverSpec};
use crate::coxeter::coxeter_polynomial;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poly::IntPoly;

/// Path algebra of an acyclic quiver: entry `(i, j)` counts paths `i -> j`,
/// the trivial path included.
pub fn from_hereditary_quiver(q: &QuiverSpec) -> Result<CartanAlgebra> {
    let adj = q.adjacency()?;
    let n = adj.len();
    let order = super::topological_order(n, |i, j| adj[i][j] > 0).expect("checked acyclic");
    let mut paths = vec![vec![BigInt::zero(); n]; n];
    for &i in order.iter().rev() {
        let mut row = vec![BigInt::zero(); n];
        row[i] = BigInt::one();
        for (k, &mult) in adj[i].iter().enumerate() {
            if mult > 0 {
                for (slot, p) in row.iter_mut().zip(&paths[k]) {
                    if !p.is_zero() {
                        *slot += p * mult;
                    }
                }
            }
        }
        paths[i] = row;
    }
    CartanAlgebra::new(
        IntMatrix::from_rows(paths)?,
        q.vertices.clone(),
        Provenance::Quiver { quiver: q.clone() },
    )
}

/// Incidence algebra: entry `(i, j)` is 1 exactly when `i <= j`.
pub fn from_poset(p: &PosetSpec) -> Result<CartanAlgebra> {
    let le = p.order()?;
    let n = le.len();
    CartanAlgebra::new(
        IntMatrix::from_fn(n, n, |i, j| BigInt::from(le[i][j] as u8)),
        p.elements.clone(),
        Provenance::Poset { poset: p.clone() },
    )
}

/// Linear quiver `0 -> 1 -> ... -> n-1` modulo all paths of length `r`.
pub fn truncated_linear(n: usize, r: usize) -> Result<CartanAlgebra> {
    if n == 0 {
        return Err(Error::domain("truncated linear algebra needs n >= 1"));
    }
    if r < 2 {
        return Err(Error::domain("nilpotency index must be at least 2"));
    }
    CartanAlgebra::new(
        IntMatrix::from_fn(n, n, |i, j| BigInt::from((j >= i && j - i < r) as u8)),
        (0..n).map(|i| i.to_string()).collect(),
        Provenance::TruncatedLinear { n, r },
    )
}

/// Tensor product over the field: Kronecker product of Cartan matrices,
/// vertex `(i, j)` at position `i * n_b + j`.
pub fn tensor(a: &CartanAlgebra, b: &CartanAlgebra) -> Result<CartanAlgebra> {
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("({x},{y})")))
        .collect();
    CartanAlgebra::new(
        a.cartan().kronecker(b.cartan()),
        labels,
        Provenance::Tensor {
            left: Box::new(a.provenance().clone()),
            right: Box::new(b.provenance().clone()),
        },
    )
}

/// Block-diagonal sum; labels of the second summand are primed when they
/// clash.
pub fn direct_sum(a: &CartanAlgebra, b: &CartanAlgebra) -> Result<CartanAlgebra> {
    let zero_ab = IntMatrix::zeros(a.n(), b.n());
    let zero_ba = IntMatrix::zeros(b.n(), a.n());
    let mut labels = a.labels().to_vec();
    for l in b.labels() {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    CartanAlgebra::new(
        IntMatrix::block2(a.cartan(), &zero_ab, &zero_ba, b.cartan())?,
        labels,
        Provenance::Matrix,
    )
}

/// One-point extension by a module with dimension vector `d`: the new
/// vertex is last and its projective has class `(d, 1)`.
pub fn one_point_extension(a: &CartanAlgebra, d: &[BigInt]) -> Result<CartanAlgebra> {
    if d.len() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: d.len(),
        });
    }
    if d.iter().any(Signed::is_negative) {
        return Err(Error::domain("extension vector must be nonnegative"));
    }
    let n = a.n();
    let c = a.cartan();
    let cartan = IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
        (true, true) => c[(i, j)].clone(),
        (true, false) => d[i].clone(),
        (false, true) => BigInt::zero(),
        (false, false) => BigInt::one(),
    });
    let mut labels = a.labels().to_vec();
    let mut fresh = "ext".to_string();
    while labels.contains(&fresh) {
        fresh.push('\'');
    }
    labels.push(fresh);
    CartanAlgebra::new(
        cartan,
        labels,
        Provenance::OnePointExtension {
            base: Box::new(a.provenance().clone()),
            vector: d.iter().cloned().map(BigIntString).collect(),
        },
    )
}

/// Double repetitive algebra with Cartan matrix `[[C, C^T], [0, C]]`.
pub fn double_repetitive(a: &CartanAlgebra) -> Result<CartanAlgebra> {
    let c = a.cartan();
    let cartan = IntMatrix::block2(c, &c.transpose(), &IntMatrix::zeros(a.n(), a.n()), c)?;
    let labels = a
        .labels()
        .iter()
        .cloned()
        .chain(a.labels().iter().map(|l| format!("{l}^")))
        .collect();
    CartanAlgebra::new(
        cartan,
        labels,
        Provenance::DoubleRepetitive {
            base: Box::new(a.provenance().clone()),
        },
    )
}

/// Orbit algebra of a free action by Cartan automorphisms: entry `(s, t)`
/// sums the cover's entries from any representative of `s` into the whole
/// orbit `t`.
pub fn galois_quotient(a: &CartanAlgebra, g: &GroupAction) -> Result<CartanAlgebra> {
    let n = a.n();
    if !g.preserves(a.cartan())? {
        return Err(Error::construction("group action does not preserve the Cartan matrix"));
    }
    if !g.is_free(n)? {
        return Err(Error::construction("group action has a fixed vertex"));
    }
    let orbits = g.orbits(n)?;
    let c = a.cartan();
    let m = orbits.len();
    let mut cartan = IntMatrix::zeros(m, m);
    for (s, orbit_s) in orbits.iter().enumerate() {
        for (t, orbit_t) in orbits.iter().enumerate() {
            let sum_from = |i: usize| -> BigInt { orbit_t.iter().map(|&j| &c[(i, j)]).sum() };
            let value = sum_from(orbit_s[0]);
            if orbit_s[1..].iter().any(|&i| sum_from(i) != value) {
                return Err(Error::construction(format!(
                    "orbit sum from {:?} into {:?} depends on the representative",
                    orbit_s, orbit_t
                )));
            }
            cartan[(s, t)] = value;
        }
    }
    let labels = orbits
        .iter()
        .map(|o| {
            let names: Vec<&str> = o.iter().map(|&i| a.labels()[i].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    CartanAlgebra::new(
        cartan,
        labels,
        Provenance::GaloisQuotient {
            base: Box::new(a.provenance().clone()),
            action: g.clone(),
        },
    )
}

fn check_weights(weights: &[u64]) -> Result<()> {
    if weights.len() < 2 {
        return Err(Error::domain("need at least two weights"));
    }
    if let Some(p) = weights.iter().find(|&&p| p < 2) {
        return Err(Error::domain(format!("weight {p} is below 2")));
    }
    Ok(())
}

/// Canonical algebra of a weight sequence. Vertex 0 is the source, then the
/// interior vertices arm by arm, the sink last. The sink's projective has
/// multiplicity 2 at the source: `t` arm paths modulo `t - 2` relations.
pub fn canonical(weights: &[u64]) -> Result<CartanAlgebra> {
    check_weights(weights)?;
    let posets: Vec<PosetSpec> = weights
        .iter()
        .map(|&p| {
            let len = (p - 1) as usize;
            let covers: Vec<(usize, usize)> = (1..len).map(|k| (k - 1, k)).collect();
            PosetSpec::indexed(len, &covers)
        })
        .collect();
    let a = double_cone(&posets, |arm, k| format!("x{}_{}", arm + 1, k + 1))?;
    Ok(a.with_provenance(Provenance::Canonical {
        weights: weights.to_vec(),
    }))
}

/// Which projective of the canonical algebra the extension vertex is
/// attached through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtensionPoint {
    #[default]
    Source,
    Sink,
}

/// One-point extension of the canonical algebra by the projective at the
/// chosen end vertex.
pub fn extended_canonical_at(weights: &[u64], at: ExtensionPoint) -> Result<CartanAlgebra> {
    let c = canonical(weights)?;
    let col = match at {
        ExtensionPoint::Source => 0,
        ExtensionPoint::Sink => c.n() - 1,
    };
    let d = c.cartan().column(col);
    let a = one_point_extension(&c, &d)?;
    Ok(a.with_provenance(Provenance::ExtendedCanonical {
        weights: weights.to_vec(),
    }))
}

pub fn extended_canonical(weights: &[u64]) -> Result<CartanAlgebra> {
    extended_canonical_at(weights, ExtensionPoint::Source)
}

/// Supercanonical algebra: the posets side by side between a common source
/// and sink, with the sink's projective of multiplicity 2 at the source.
pub fn supercanonical(posets: &[PosetSpec]) -> Result<CartanAlgebra> {
    if posets.len() < 2 {
        return Err(Error::domain("need at least two posets"));
    }
    if posets.iter().any(PosetSpec::is_empty) {
        return Err(Error::domain("posets must be nonempty"));
    }
    let a = double_cone(posets, |arm, k| format!("s{}:{}", arm + 1, posets[arm].elements[k]))?;
    Ok(a.with_provenance(Provenance::Supercanonical {
        posets: posets.to_vec(),
    }))
}

/// `(T - 1)^2` times the Coxeter polynomials of the posets' incidence
/// algebras.
pub fn supercanonical_poly(posets: &[PosetSpec]) -> Result<IntPoly> {
    if posets.len() < 2 {
        return Err(Error::domain("need at least two posets"));
    }
    let mut acc = IntPoly::from_i64(&[-1, 1]).pow(2);
    for p in posets {
        acc = &acc * &coxeter_polynomial(&from_poset(p)?)?;
    }
    Ok(acc)
}

fn double_cone(posets: &[PosetSpec], label: impl Fn(usize, usize) -> String) -> Result<CartanAlgebra> {
    let orders = posets.iter().map(PosetSpec::order).collect::<Result<Vec<_>>>()?;
    let n = 2 + orders.iter().map(Vec::len).sum::<usize>();
    let mut cartan = IntMatrix::identity(n);
    let mut labels = vec!["alpha".to_string()];
    let omega = n - 1;
    let mut offset = 1;
    for (arm, le) in orders.iter().enumerate() {
        for (i, row) in le.iter().enumerate() {
            labels.push(label(arm, i));
            cartan[(0, offset + i)] = BigInt::one();
            cartan[(offset + i, omega)] = BigInt::one();
            for (j, &below) in row.iter().enumerate() {
                if below {
                    cartan[(offset + i, offset + j)] = BigInt::one();
                }
            }
        }
        offset += le.len();
    }
    cartan[(0, omega)] = BigInt::from(2);
    labels.push("omega".to_string());
    CartanAlgebra::new(cartan, labels, Provenance::Matrix)
}
