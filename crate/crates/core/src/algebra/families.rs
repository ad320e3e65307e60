//! Named families: Dynkin and extended Dynkin quivers, stars, cycles and the
//! posets used as supercanonical inputs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::construct::from_hereditary_quiver;
use super::{CartanAlgebra, PosetSpec, QuiverSpec, VertexRef};
use crate::error::{Error, Result};

/// Star with arms of `p_i - 1` vertices around a center; every arrow
/// points toward the center.
pub fn star_quiver(arms: &[u64]) -> Result<QuiverSpec> {
    if arms.is_empty() {
        return Err(Error::domain("a star needs at least one arm"));
    }
    if arms.contains(&0) {
        return Err(Error::domain("arm weights must be at least 1"));
    }
    let mut vertices = vec!["c".to_string()];
    let mut arrows = Vec::new();
    for (i, &p) in arms.iter().enumerate() {
        let mut inner = VertexRef::Index(0);
        for k in 1..p {
            let v = format!("a{}_{}", i + 1, k);
            vertices.push(v.clone());
            arrows.push((VertexRef::Label(v.clone()), inner));
            inner = VertexRef::Label(v);
        }
    }
    Ok(QuiverSpec { vertices, arrows })
}

/// Same quiver with the arrows at the flagged positions reversed.
pub fn reorient(q: &QuiverSpec, flips: &[bool]) -> Result<QuiverSpec> {
    if flips.len() != q.arrows.len() {
        return Err(Error::DimensionMismatch {
            expected: q.arrows.len(),
            found: flips.len(),
        });
    }
    Ok(QuiverSpec {
        vertices: q.vertices.clone(),
        arrows: q
            .arrows
            .iter()
            .zip(flips)
            .map(|((s, t), &f)| {
                if f {
                    (t.clone(), s.clone())
                } else {
                    (s.clone(), t.clone())
                }
            })
            .collect(),
    })
}

/// Cycle on `orientation.len()` vertices; edge `k` joins `k` and `k + 1`
/// and points forward when `orientation[k]` is set. All-forward or
/// all-backward orientations are oriented cycles and rejected downstream.
pub fn cycle_quiver(orientation: &[bool]) -> Result<QuiverSpec> {
    let n = orientation.len();
    if n < 2 {
        return Err(Error::domain("a cycle needs at least two vertices"));
    }
    let arrows: Vec<(usize, usize)> = orientation
        .iter()
        .enumerate()
        .map(|(k, &fwd)| if fwd { (k, (k + 1) % n) } else { ((k + 1) % n, k) })
        .collect();
    Ok(QuiverSpec::indexed(n, &arrows))
}

/// Extended Dynkin tree of type `D~n`: two branch vertices carrying two
/// leaves each, joined by a path; `n + 1` vertices in all.
pub fn d_tilde_quiver(n: usize) -> Result<QuiverSpec> {
    if n < 4 {
        return Err(Error::domain("D~n needs n >= 4"));
    }
    if n == 4 {
        return star_quiver(&[2, 2, 2, 2]);
    }
    let spine = n - 3;
    let mut arrows: Vec<(usize, usize)> = (1..spine).map(|k| (k - 1, k)).collect();
    arrows.extend([
        (spine, 0),
        (spine + 1, 0),
        (spine + 2, spine - 1),
        (spine + 3, spine - 1),
    ]);
    Ok(QuiverSpec::indexed(n + 1, &arrows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Order of the Coxeter transformation.
    pub fn coxeter_number(&self) -> u64 {
        match *self {
            DynkinType::A(n) => n as u64 + 1,
            DynkinType::D(n) => 2 * (n as u64 - 1),
            DynkinType::E(6) => 12,
            DynkinType::E(7) => 18,
            DynkinType::E(_) => 30,
        }
    }

    /// Arm weights of the star with this underlying graph.
    pub fn star_weights(&self) -> Vec<u64> {
        match *self {
            DynkinType::A(n) => vec![n as u64],
            DynkinType::D(n) => vec![2, 2, n as u64 - 2],
            DynkinType::E(n) => vec![2, 3, n as u64 - 3],
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            DynkinType::A(n) => n >= 1,
            DynkinType::D(n) => n >= 4,
            DynkinType::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::domain(format!("no Dynkin type {self}")))
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let n: usize = tail
            .parse()
            .map_err(|_| Error::Parse(format!("bad Dynkin type {s:?}")))?;
        match head.to_ascii_uppercase().as_str() {
            "A" => DynkinType::A(n),
            "D" => DynkinType::D(n),
            "E" => DynkinType::E(n),
            _ => return Err(Error::Parse(format!("bad Dynkin type {s:?}"))),
        }
        .validate()
    }
}

/// Hereditary algebra of a Dynkin type; arrows point toward the branch
/// vertex (toward vertex 0 for type A).
pub fn dynkin(t: DynkinType) -> Result<CartanAlgebra> {
    let t = t.validate()?;
    let q = star_quiver(&t.star_weights())?;
    Ok(from_hereditary_quiver(&q)?.named(t.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtendedDynkinType {
    /// Cycle with `p` forward and `q` backward arrows.
    A(usize, usize),
    D(usize),
    E(usize),
}

impl ExtendedDynkinType {
    fn validate(self) -> Result<Self> {
        let ok = match self {
            ExtendedDynkinType::A(p, q) => p >= 1 && q >= 1,
            ExtendedDynkinType::D(n) => n >= 4,
            ExtendedDynkinType::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::domain(format!("no extended Dynkin type {self}")))
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            ExtendedDynkinType::A(p, q) => p + q,
            ExtendedDynkinType::D(n) | ExtendedDynkinType::E(n) => n + 1,
        }
    }

    pub fn quiver(&self) -> Result<QuiverSpec> {
        match self.validate()? {
            ExtendedDynkinType::A(p, q) => {
                let orientation: Vec<bool> = (0..p + q).map(|k| k < p).collect();
                cycle_quiver(&orientation)
            }
            ExtendedDynkinType::D(n) => d_tilde_quiver(n),
            ExtendedDynkinType::E(6) => star_quiver(&[3, 3, 3]),
            ExtendedDynkinType::E(7) => star_quiver(&[2, 4, 4]),
            ExtendedDynkinType::E(_) => star_quiver(&[2, 3, 6]),
        }
    }
}

impl fmt::Display for ExtendedDynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedDynkinType::A(p, q) => write!(f, "A~{p},{q}"),
            ExtendedDynkinType::D(n) => write!(f, "D~{n}"),
            ExtendedDynkinType::E(n) => write!(f, "E~{n}"),
        }
    }
}

impl FromStr for ExtendedDynkinType {
    type Err = Error;

    /// Accepts `A~p,q`, `D~n` and `E~n`; the tilde may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad extended Dynkin type {s:?}"));
        let t = s.trim();
        let (head, rest) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let rest = rest.trim_start_matches('~');
        let parsed = match head.to_ascii_uppercase().as_str() {
            "A" => {
                let (p, q) = rest.split_once(',').ok_or_else(bad)?;
                ExtendedDynkinType::A(
                    p.trim().parse().map_err(|_| bad())?,
                    q.trim().parse().map_err(|_| bad())?,
                )
            }
            "D" => ExtendedDynkinType::D(rest.parse().map_err(|_| bad())?),
            "E" => ExtendedDynkinType::E(rest.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        parsed.validate()
    }
}

pub fn extended_dynkin(t: ExtendedDynkinType) -> Result<CartanAlgebra> {
    Ok(from_hereditary_quiver(&t.quiver()?)?.named(t.to_string()))
}

/// The poset `1, 2 < 3 < 4 < ... < n`.
pub fn poset_d(n: usize) -> Result<PosetSpec> {
    if n < 3 {
        return Err(Error::domain("poset D_n needs n >= 3"));
    }
    semichain_poset(n, 1)
}

/// Two chains `1 < ... < m` and `1' < ... < m'` with crossing relations
/// `k < (k+1)'` and `k' < k+1`, both below a chain of the remaining
/// `n - 2m` elements.
pub fn semichain_poset(n: usize, m: usize) -> Result<PosetSpec> {
    if m == 0 || n < 2 * m + 1 {
        return Err(Error::domain("semichain poset needs m >= 1 and n >= 2m + 1"));
    }
    let mut elements: Vec<String> = (1..=m).map(|k| k.to_string()).collect();
    elements.extend((1..=m).map(|k| format!("{k}'")));
    elements.extend((2 * m + 1..=n).map(|k| k.to_string()));
    let top = |k: usize| k - 1;
    let bottom = |k: usize| m + k - 1;
    let tail = |k: usize| 2 * m + k;
    let mut covers = Vec::new();
    for k in 1..m {
        covers.extend([(top(k), top(k + 1)), (bottom(k), bottom(k + 1))]);
        covers.extend([(top(k), bottom(k + 1)), (bottom(k), top(k + 1))]);
    }
    covers.extend([(top(m), tail(0)), (bottom(m), tail(0))]);
    covers.extend((1..n - 2 * m).map(|k| (tail(k - 1), tail(k))));
    Ok(PosetSpec {
        elements,
        covers: covers.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
    })
}

/// Chain `0 < 1 < ... < len-1`.
pub fn chain_poset(len: usize) -> PosetSpec {
    let covers: Vec<(usize, usize)> = (1..len).map(|k| (k - 1, k)).collect();
    PosetSpec::indexed(len, &covers)
}
