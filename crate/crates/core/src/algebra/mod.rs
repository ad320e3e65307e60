//! Triangular algebras presented by their Cartan matrices, and the
//! combinatorial descriptions they are built from.

pub mod construct;
pub mod families;

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub use construct::*;
pub use families::*;

/// A vertex named either by position or by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Label(String),
}

impl From<usize> for VertexRef {
    fn from(i: usize) -> Self {
        VertexRef::Index(i)
    }
}

impl From<&str> for VertexRef {
    fn from(s: &str) -> Self {
        VertexRef::Label(s.to_string())
    }
}

fn resolve(labels: &[String], r: &VertexRef, what: &str) -> Result<usize> {
    match r {
        VertexRef::Index(i) if *i < labels.len() => Ok(*i),
        VertexRef::Index(i) => Err(Error::construction(format!(
            "{what} index {i} out of range (have {})",
            labels.len()
        ))),
        VertexRef::Label(s) => labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| Error::construction(format!("unknown {what} label {s:?}"))),
    }
}

fn check_unique(labels: &[String], what: &str) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::construction(format!("duplicate {what} label {l:?}")));
        }
    }
    Ok(())
}

/// Topological order of the relation `i -> j` whenever `adj(i, j)` holds
/// for `i != j`; `None` if the relation has a cycle.
fn topological_order(n: usize, adj: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && adj(i, j) {
                indeg[j] += 1;
            }
        }
    }
    // Smallest available index first keeps the order deterministic.
    let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(i) = ready.pop_first() {
        order.push(i);
        for j in 0..n {
            if i != j && adj(i, j) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.insert(j);
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Quiver with labelled vertices; parallel arrows are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<(VertexRef, VertexRef)>,
}

impl QuiverSpec {
    /// Quiver on vertices `0..n` labelled by their indices.
    pub fn indexed(n: usize, arrows: &[(usize, usize)]) -> Self {
        QuiverSpec {
            vertices: (0..n).map(|i| i.to_string()).collect(),
            arrows: arrows.iter().map(|&(s, t)| (s.into(), t.into())).collect(),
        }
    }

    /// Arrow multiplicities `adj[s][t]`, after checking labels, loops and
    /// oriented cycles.
    pub fn adjacency(&self) -> Result<Vec<Vec<u64>>> {
        check_unique(&self.vertices, "vertex")?;
        let n = self.vertices.len();
        let mut adj = vec![vec![0u64; n]; n];
        for (s, t) in &self.arrows {
            let (s, t) = (
                resolve(&self.vertices, s, "vertex")?,
                resolve(&self.vertices, t, "vertex")?,
            );
            if s == t {
                return Err(Error::construction(format!("loop at vertex {:?}", self.vertices[s])));
            }
            adj[s][t] += 1;
        }
        if topological_order(n, |i, j| adj[i][j] > 0).is_none() {
            return Err(Error::construction("quiver has an oriented cycle"));
        }
        Ok(adj)
    }

    /// Arrow list as index pairs.
    pub fn arrow_indices(&self) -> Result<Vec<(usize, usize)>> {
        self.arrows
            .iter()
            .map(|(s, t)| {
                Ok((
                    resolve(&self.vertices, s, "vertex")?,
                    resolve(&self.vertices, t, "vertex")?,
                ))
            })
            .collect()
    }
}

/// Finite poset given by labelled elements and a generating relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSpec {
    pub elements: Vec<String>,
    pub covers: Vec<(VertexRef, VertexRef)>,
}

impl PosetSpec {
    pub fn indexed(n: usize, covers: &[(usize, usize)]) -> Self {
        PosetSpec {
            elements: (0..n).map(|i| i.to_string()).collect(),
            covers: covers.iter().map(|&(a, b)| (a.into(), b.into())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Reflexive-transitive closure `le[i][j] = (i <= j)`.
    pub fn order(&self) -> Result<Vec<Vec<bool>>> {
        check_unique(&self.elements, "element")?;
        let n = self.elements.len();
        let mut le = vec![vec![false; n]; n];
        for (a, b) in &self.covers {
            let (a, b) = (
                resolve(&self.elements, a, "element")?,
                resolve(&self.elements, b, "element")?,
            );
            if a == b {
                return Err(Error::construction(format!(
                    "element {:?} covers itself",
                    self.elements[a]
                )));
            }
            le[a][b] = true;
        }
        let order =
            topological_order(n, |i, j| le[i][j]).ok_or_else(|| Error::construction("cover relation has a cycle"))?;
        // Reverse topological sweep: everything above a successor is above.
        for &i in order.iter().rev() {
            le[i][i] = true;
            let ups: Vec<usize> = (0..n).filter(|&j| j != i && le[i][j]).collect();
            for j in ups {
                for k in 0..n {
                    if le[j][k] {
                        le[i][k] = true;
                    }
                }
            }
        }
        Ok(le)
    }
}

/// Group of vertex permutations given by generators; `g[i]` is the image
/// of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAction {
    pub generators: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn trivial() -> Self {
        GroupAction { generators: Vec::new() }
    }

    pub fn new(generators: Vec<Vec<usize>>) -> Self {
        GroupAction { generators }
    }

    /// Checks that every generator is a permutation of `0..n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        for g in &self.generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.len(),
                });
            }
            let mut seen = vec![false; n];
            for &x in g {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::construction(format!("{g:?} is not a permutation")));
                }
            }
        }
        Ok(())
    }

    /// All group elements, identity first, by closure under the generators.
    pub fn elements(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        self.validate(n)?;
        let id: Vec<usize> = (0..n).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
        let mut out = vec![id];
        let mut frontier = 0;
        while frontier < out.len() {
            let h = out[frontier].clone();
            frontier += 1;
            for g in &self.generators {
                let gh: Vec<usize> = h.iter().map(|&x| g[x]).collect();
                if seen.insert(gh.clone()) {
                    out.push(gh);
                }
            }
        }
        Ok(out)
    }

    /// Orbits as sorted index lists, ordered by smallest member.
    pub fn orbits(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        self.validate(n)?;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for g in &self.generators {
            for (i, &gi) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, gi));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        Ok(out)
    }

    /// No non-identity element fixes a vertex.
    pub fn is_free(&self, n: usize) -> Result<bool> {
        Ok(self
            .elements(n)?
            .iter()
            .skip(1)
            .all(|g| g.iter().enumerate().all(|(i, &gi)| i != gi)))
    }

    /// Every generator satisfies `m[g i][g j] = m[i][j]`.
    pub fn preserves(&self, m: &IntMatrix) -> Result<bool> {
        let n = m.rows();
        self.validate(n)?;
        Ok(self
            .generators
            .iter()
            .all(|g| (0..n).all(|i| (0..n).all(|j| m[(g[i], g[j])] == m[(i, j)]))))
    }
}

/// How an algebra was obtained; carried along for reports and round trips.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Matrix,
    Quiver {
        quiver: QuiverSpec,
    },
    Poset {
        poset: PosetSpec,
    },
    TruncatedLinear {
        n: usize,
        r: usize,
    },
    Tensor {
        left: Box<Provenance>,
        right: Box<Provenance>,
    },
    OnePointExtension {
        base: Box<Provenance>,
        vector: Vec<BigIntString>,
    },
    DoubleRepetitive {
        base: Box<Provenance>,
    },
    GaloisQuotient {
        base: Box<Provenance>,
        action: GroupAction,
    },
    Canonical {
        weights: Vec<u64>,
    },
    ExtendedCanonical {
        weights: Vec<u64>,
    },
    Supercanonical {
        posets: Vec<PosetSpec>,
    },
    Subalgebra {
        base: Box<Provenance>,
        removed: Vec<usize>,
    },
    Family {
        name: String,
        base: Box<Provenance>,
    },
}

/// Integer carried as a decimal string in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct BigIntString(pub BigInt);

impl From<BigIntString> for String {
    fn from(b: BigIntString) -> String {
        b.0.to_string()
    }
}

impl TryFrom<String> for BigIntString {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, String> {
        s.trim()
            .parse()
            .map(BigIntString)
            .map_err(|_| format!("invalid integer {s:?}"))
    }
}

/// Cartan matrix of a triangular algebra: unit diagonal, nonnegative
/// entries, acyclic support, determinant one. Column `i` is the dimension
/// vector of the projective at vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAlgebra", into = "RawAlgebra")]
pub struct CartanAlgebra {
    cartan: IntMatrix,
    labels: Vec<String>,
    provenance: Provenance,
    order: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawAlgebra {
    n: usize,
    labels: Vec<String>,
    cartan: IntMatrix,
    #[serde(default = "matrix_provenance")]
    provenance: Provenance,
}

fn matrix_provenance() -> Provenance {
    Provenance::Matrix
}

impl From<CartanAlgebra> for RawAlgebra {
    fn from(a: CartanAlgebra) -> Self {
        RawAlgebra {
            n: a.n(),
            labels: a.labels,
            cartan: a.cartan,
            provenance: a.provenance,
        }
    }
}

impl TryFrom<RawAlgebra> for CartanAlgebra {
    type Error = Error;

    fn try_from(raw: RawAlgebra) -> Result<Self> {
        if raw.n != raw.labels.len() {
            return Err(Error::DimensionMismatch {
                expected: raw.n,
                found: raw.labels.len(),
            });
        }
        CartanAlgebra::new(raw.cartan, raw.labels, raw.provenance)
    }
}

impl CartanAlgebra {
    pub fn new(cartan: IntMatrix, labels: Vec<String>, provenance: Provenance) -> Result<Self> {
        let n = cartan.rows();
        if !cartan.is_square() {
            return Err(Error::construction("Cartan matrix must be square"));
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: labels.len(),
            });
        }
        check_unique(&labels, "vertex")?;
        for i in 0..n {
            if !cartan[(i, i)].is_one() {
                return Err(Error::construction(format!(
                    "diagonal entry at {:?} is {}, expected 1",
                    labels[i],
                    cartan[(i, i)]
                )));
            }
            for j in 0..n {
                if cartan[(i, j)].is_negative() {
                    return Err(Error::construction(format!(
                        "negative Cartan entry at ({}, {})",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let order = topological_order(n, |i, j| !cartan[(i, j)].is_zero())
            .ok_or_else(|| Error::construction("Cartan support has a cycle; algebra is not triangular"))?;
        // Triangular with unit diagonal forces det = 1; checked anyway.
        let det = cartan.det()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(CartanAlgebra {
            cartan,
            labels,
            provenance,
            order,
        })
    }

    /// Unlabelled algebra from a raw matrix; vertices are named by index.
    pub fn from_matrix(cartan: IntMatrix) -> Result<Self> {
        let labels = (0..cartan.rows()).map(|i| i.to_string()).collect();
        CartanAlgebra::new(cartan, labels, Provenance::Matrix)
    }

    pub fn n(&self) -> usize {
        self.cartan.rows()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// A vertex order in which the Cartan matrix is upper triangular.
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// Same algebra with the family name recorded around its provenance.
    pub fn named(self, name: impl Into<String>) -> Self {
        let base = Box::new(self.provenance.clone());
        self.with_provenance(Provenance::Family {
            name: name.into(),
            base,
        })
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Full subcategory on the vertices not listed.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<CartanAlgebra> {
        let keep: Vec<usize> = (0..self.n()).filter(|i| !removed.contains(i)).collect();
        if let Some(&bad) = removed.iter().find(|&&i| i >= self.n()) {
            return Err(Error::domain(format!("vertex {bad} out of range")));
        }
        CartanAlgebra::new(
            self.cartan.select(&keep, &keep),
            keep.iter().map(|&i| self.labels[i].clone()).collect(),
            Provenance::Subalgebra {
                base: Box::new(self.provenance.clone()),
                removed: removed.to_vec(),
            },
        )
    }

    /// Matrix conjugated by a vertex permutation: entry `(i, j)` of the
    /// result is entry `(perm[i], perm[j])` of this one.
    pub fn permuted_cartan(&self, perm: &[usize]) -> IntMatrix {
        self.cartan.select(perm, perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_matrices() {
        let m = |r: &[Vec<i64>]| IntMatrix::from_i64(r).unwrap();
        assert!(CartanAlgebra::from_matrix(m(&[vec![2, 0], vec![0, 1]])).is_err());
        assert!(CartanAlgebra::from_matrix(m(&[vec![1, 1], vec![1, 1]])).is_err());
        assert!(CartanAlgebra::from_matrix(m(&[vec![1, -1], vec![0, 1]])).is_err());
        assert!(CartanAlgebra::from_matrix(m(&[vec![1, 1], vec![0, 1]])).is_ok());
    }

    #[test]
    fn topological_order_triangularizes() {
        let c = IntMatrix::from_i64(&[vec![1, 0, 0], vec![1, 1, 1], vec![1, 0, 1]]).unwrap();
        let a = CartanAlgebra::from_matrix(c).unwrap();
        let order = a.topological_order().to_vec();
        let t = a.permuted_cartan(&order);
        for i in 0..3 {
            for j in 0..i {
                assert!(t[(i, j)].is_zero());
            }
        }
    }

    #[test]
    fn algebra_json_round_trip() {
        let a = from_hereditary_quiver(&QuiverSpec::indexed(3, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        let back: CartanAlgebra = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn quiver_labels_and_indices_mix() {
        let q: QuiverSpec = serde_json::from_str(r#"{"vertices":["a","b","c"],"arrows":[["a","b"],[1,2]]}"#).unwrap();
        assert_eq!(q.arrow_indices().unwrap(), vec![(0, 1), (1, 2)]);
        let bad: QuiverSpec = serde_json::from_str(r#"{"vertices":["a"],"arrows":[["a","z"]]}"#).unwrap();
        assert!(bad.adjacency().is_err());
    }

    #[test]
    fn poset_closure_is_transitive() {
        let p = PosetSpec::indexed(4, &[(0, 1), (1, 2), (2, 3)]);
        let le = p.order().unwrap();
        assert!(le[0][3] && le[1][3] && !le[3][0]);
        assert!(PosetSpec::indexed(2, &[(0, 1), (1, 0)]).order().is_err());
    }

    #[test]
    fn group_closure_orbits_and_freeness() {
        let g = GroupAction::new(vec![vec![1, 2, 3, 0]]);
        assert_eq!(g.elements(4).unwrap().len(), 4);
        assert_eq!(g.orbits(4).unwrap(), vec![vec![0, 1, 2, 3]]);
        assert!(g.is_free(4).unwrap());
        let swap = GroupAction::new(vec![vec![0, 2, 1]]);
        assert!(!swap.is_free(3).unwrap());
        assert_eq!(swap.orbits(3).unwrap(), vec![vec![0], vec![1, 2]]);
        assert!(GroupAction::new(vec![vec![0, 0]]).validate(2).is_err());
    }
}
