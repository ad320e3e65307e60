//! Algebra corpus shared by the acceptance and property targets.

#![allow(dead_code)]

use coxeterlab::algebra::{cycle_quiver, reorient, star_quiver};
use coxeterlab::{
    direct_sum, dynkin, extended_canonical, extended_dynkin, from_hereditary_quiver, from_poset, CartanAlgebra,
    DynkinType, ExtendedDynkinType, GroupAction, PosetSpec, QuiverSpec,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x00c0_7e7e;
pub const RANDOM_POSETS: usize = 100;
pub const RANDOM_QUIVERS: usize = 100;
pub const MAX_RANDOM_VERTICES: usize = 8;

pub struct Entry {
    pub name: String,
    pub algebra: CartanAlgebra,
}

fn entry(name: impl Into<String>, algebra: CartanAlgebra) -> Entry {
    Entry {
        name: name.into(),
        algebra,
    }
}

pub fn dynkin_types() -> Vec<DynkinType> {
    let mut out: Vec<DynkinType> = (1..=8).map(DynkinType::A).collect();
    out.extend((4..=8).map(DynkinType::D));
    out.extend((6..=8).map(DynkinType::E));
    out
}

pub fn extended_dynkin_types() -> Vec<ExtendedDynkinType> {
    let mut out = Vec::new();
    for p in 1..=4 {
        for q in 1..=4 {
            out.push(ExtendedDynkinType::A(p, q));
        }
    }
    out.extend((4..=8).map(ExtendedDynkinType::D));
    out.extend((6..=8).map(ExtendedDynkinType::E));
    out
}

/// Weight sequences of the weight table, in printed order.
pub fn weight_rows() -> Vec<Vec<u64>> {
    let v: serde_json::Value = serde_json::from_str(include_str!("../../data/weights.json")).unwrap();
    v["rows"]
        .as_array()
        .expect("weight table is an array")
        .iter()
        .map(|row| serde_json::from_value(row["weights"].clone()).unwrap())
        .collect()
}

/// Bit `k` of `mask` flips edge `k` of the Dynkin star.
pub fn oriented_dynkin(t: DynkinType, mask: u64) -> CartanAlgebra {
    let q = star_quiver(&t.star_weights()).unwrap();
    let flips: Vec<bool> = (0..q.arrows.len()).map(|k| mask >> k & 1 == 1).collect();
    from_hereditary_quiver(&reorient(&q, &flips).unwrap()).unwrap()
}

pub fn table_algebras() -> Vec<Entry> {
    let mut out = Vec::new();
    for (k, t) in dynkin_types().into_iter().enumerate() {
        out.push(entry(t.to_string(), dynkin(t).unwrap()));
        if t.rank() > 1 {
            let mask = 0x5555_5555u64 >> (k % 2);
            out.push(entry(format!("{t} reoriented"), oriented_dynkin(t, mask)));
        }
    }
    for t in extended_dynkin_types() {
        out.push(entry(format!("{t}"), extended_dynkin(t).unwrap()));
    }
    for w in weight_rows() {
        out.push(entry(format!("ext-canonical {w:?}"), extended_canonical(&w).unwrap()));
    }
    out
}

/// Random finite poset: relations `i < j` drawn on a shuffled labelling.
pub fn random_poset(rng: &mut ChaCha8Rng) -> PosetSpec {
    let n = rng.gen_range(1..=MAX_RANDOM_VERTICES);
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.35) {
                covers.push((relabel[i], relabel[j]));
            }
        }
    }
    PosetSpec::indexed(n, &covers)
}

/// Random acyclic quiver; some arrows are doubled.
pub fn random_quiver(rng: &mut ChaCha8Rng) -> QuiverSpec {
    let n = rng.gen_range(1..=MAX_RANDOM_VERTICES);
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.3) {
                arrows.push((relabel[i], relabel[j]));
                if rng.gen_bool(0.1) {
                    arrows.push((relabel[i], relabel[j]));
                }
            }
        }
    }
    QuiverSpec::indexed(n, &arrows)
}

pub fn random_algebras() -> Vec<Entry> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::new();
    for k in 0..RANDOM_POSETS {
        out.push(entry(
            format!("random poset {k}"),
            from_poset(&random_poset(&mut rng)).unwrap(),
        ));
    }
    for k in 0..RANDOM_QUIVERS {
        let q = random_quiver(&mut rng);
        out.push(entry(format!("random quiver {k}"), from_hereditary_quiver(&q).unwrap()));
    }
    out
}

pub fn corpus() -> Vec<Entry> {
    let mut out = table_algebras();
    out.extend(random_algebras());
    out
}

fn crown_arrows(k: usize, offsets: &[usize]) -> Vec<(usize, usize)> {
    (0..k)
        .flat_map(|i| offsets.iter().map(move |&o| (i, k + (i + o) % k)))
        .collect()
}

fn crown(k: usize, offsets: &[usize]) -> CartanAlgebra {
    from_hereditary_quiver(&QuiverSpec::indexed(2 * k, &crown_arrows(k, offsets))).unwrap()
}

/// Shift by `step` on both rows of a crown on `2k` vertices.
fn crown_shift(k: usize, step: usize) -> Vec<usize> {
    (0..2 * k).map(|i| (i / k) * k + (i % k + step) % k).collect()
}

fn block_rotation(blocks: usize, size: usize) -> Vec<usize> {
    (0..blocks * size).map(|i| (i + size) % (blocks * size)).collect()
}

/// Free actions with their covering algebras.
pub fn galois_actions() -> Vec<(String, CartanAlgebra, GroupAction)> {
    let single = |g: Vec<usize>| GroupAction::new(vec![g]);
    let a3 = dynkin(DynkinType::A(3)).unwrap();
    let d4 = dynkin(DynkinType::D(4)).unwrap();
    let poset_crown = {
        let covers: Vec<(usize, usize)> = crown_arrows(3, &[0, 1]);
        from_poset(&PosetSpec::indexed(6, &covers)).unwrap()
    };
    let alternating: Vec<bool> = (0..6).map(|k| k % 2 == 0).collect();
    vec![
        ("crown 2, swap".into(), crown(2, &[0, 1]), single(crown_shift(2, 1))),
        ("crown 3, rotation".into(), crown(3, &[0, 1]), single(crown_shift(3, 1))),
        ("crown 4, rotation".into(), crown(4, &[0, 1]), single(crown_shift(4, 1))),
        (
            "crown 4, half turn".into(),
            crown(4, &[0, 1]),
            single(crown_shift(4, 2)),
        ),
        ("crown 5, rotation".into(), crown(5, &[0, 1]), single(crown_shift(5, 1))),
        (
            "A3 + A3, swap".into(),
            direct_sum(&a3, &a3).unwrap(),
            single(block_rotation(2, 3)),
        ),
        (
            "3 x D4, rotation".into(),
            direct_sum(&direct_sum(&d4, &d4).unwrap(), &d4).unwrap(),
            single(block_rotation(3, 4)),
        ),
        (
            "triple crown 4, rotation".into(),
            crown(4, &[0, 1, 2]),
            single(crown_shift(4, 1)),
        ),
        ("poset crown 3, rotation".into(), poset_crown, single(crown_shift(3, 1))),
        (
            "alternating 6-cycle, two steps".into(),
            from_hereditary_quiver(&cycle_quiver(&alternating).unwrap()).unwrap(),
            single((0..6).map(|i| (i + 2) % 6).collect()),
        ),
    ]
}
