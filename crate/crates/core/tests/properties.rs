mod common;

use common::{corpus, extended_dynkin_types, galois_actions, random_poset, random_quiver, weight_rows, Entry};
use coxeterlab::algebra::{chain_poset, cycle_quiver, poset_d, reorient, star_quiver};
use coxeterlab::coxeter::FormClass;
use coxeterlab::input::algebra_to_json;
use coxeterlab::poly::arith::{is_perfect_square, totient};
use coxeterlab::poly::cyclotomic::twisted_prime_exponents;
use coxeterlab::spectral::{mahler_measure, polynomial_roots, reciprocal_closed, DERIVED_TOLERANCE};
use coxeterlab::{
    coxeter_matrix, coxeter_polynomial, cyclotomic, cyclotomic_factorize, double_repetitive, extended_canonical,
    extended_dynkin, from_hereditary_quiver, from_poset, galois_quotient, homological_form, is_cyclotomic_type,
    is_self_reciprocal, measures, numeric_roots, periodicity, special_value_formula, supercanonical, symmetry_factor,
    tensor, CartanAlgebra, CycFactorization, GroupAction, InputDocument, IntPoly, PosetSpec, SpecialPoint,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ROOT_TOLERANCE: f64 = 1e-10;

fn chi(a: &CartanAlgebra) -> IntPoly {
    coxeter_polynomial(a).unwrap()
}

fn small_algebra(seed: u64) -> CartanAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if seed.is_multiple_of(2) {
        from_poset(&random_poset(&mut rng)).unwrap()
    } else {
        from_hereditary_quiver(&random_quiver(&mut rng)).unwrap()
    }
}

/// Every tree and cycle orientation with at most nine vertices.
fn all_orientations() -> Vec<CartanAlgebra> {
    let mut out = Vec::new();
    let mut trees: Vec<Vec<u64>> = (1..=9).map(|n| vec![n]).collect();
    trees.extend((4..=9).map(|n| vec![2, 2, n - 2]));
    trees.extend((6..=8).map(|n| vec![2, 3, n - 3]));
    trees.extend([vec![3, 3, 3], vec![2, 4, 4], vec![2, 3, 6]]);
    for w in trees {
        let q = star_quiver(&w).unwrap();
        for mask in 0..1u64 << q.arrows.len() {
            let flips: Vec<bool> = (0..q.arrows.len()).map(|k| mask >> k & 1 == 1).collect();
            out.push(from_hereditary_quiver(&reorient(&q, &flips).unwrap()).unwrap());
        }
    }
    for len in 2..=9usize {
        for mask in 1..(1u64 << len) - 1 {
            let orientation: Vec<bool> = (0..len).map(|k| mask >> k & 1 == 1).collect();
            out.push(from_hereditary_quiver(&cycle_quiver(&orientation).unwrap()).unwrap());
        }
    }
    out.extend(extended_dynkin_types().into_iter().map(|t| extended_dynkin(t).unwrap()));
    out
}

#[test]
fn charpoly_shape_over_all_orientations() {
    let algebras = all_orientations();
    assert!(algebras.len() > 2000);
    for a in &algebras {
        let p = chi(a);
        assert!(p.is_monic() && is_self_reciprocal(&p), "{p}");
        let at_minus_one = p.eval_i64(-1);
        assert!(
            at_minus_one >= BigInt::from(0) && is_perfect_square(&at_minus_one),
            "{p}"
        );
    }
}

#[test]
fn constructed_algebras_are_unitriangular() {
    let one = BigInt::from(1);
    for e in corpus() {
        let c = e.algebra.cartan();
        assert_eq!(c.det().unwrap(), one, "{}", e.name);
        assert!((0..e.algebra.n()).all(|i| c[(i, i)] == one), "{}", e.name);
        if e.algebra.n() <= 6 {
            assert_eq!(
                double_repetitive(&e.algebra).unwrap().cartan().det().unwrap(),
                one,
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn special_values_over_weight_table() {
    for w in weight_rows() {
        let p = chi(&extended_canonical(&w).unwrap());
        let fac = cyclotomic_factorize(&p).unwrap();
        assert_eq!(
            special_value_formula(&fac, SpecialPoint::PlusOne).unwrap(),
            p.eval_i64(1),
            "{w:?}"
        );
        let at_minus_one = special_value_formula(&fac, SpecialPoint::MinusOne).unwrap();
        assert_eq!(at_minus_one, p.eval_i64(-1), "{w:?}");
        if at_minus_one != BigInt::from(0) && is_perfect_square(&at_minus_one) {
            assert!(twisted_prime_exponents(&fac).values().all(|e| e % 2 == 0), "{w:?}");
        }
    }
}

#[test]
fn trivial_quotient_is_identity() {
    for e in corpus() {
        let q = galois_quotient(&e.algebra, &GroupAction::trivial()).unwrap();
        assert_eq!(q.cartan(), e.algebra.cartan(), "{}", e.name);
    }
}

#[test]
fn symmetry_factor_splits_the_polynomial() {
    for (name, a, g) in galois_actions() {
        let (restricted, cofactor) = symmetry_factor(&a, &g).unwrap();
        assert_eq!(&restricted * &cofactor, chi(&a), "{name}");
        assert_eq!(restricted.degree(), Some(g.orbits(a.n()).unwrap().len()), "{name}");
    }
}

/// Supercanonical instances: finite period exactly when the form is
/// non-negative of corank two, and then deleting the source leaves corank one.
#[test]
fn supercanonical_radical_ranks() {
    let chains = |w: &[usize]| -> Vec<PosetSpec> { w.iter().map(|&p| chain_poset(p - 1)).collect() };
    let mut families: Vec<Vec<PosetSpec>> = [
        &[2, 3, 6][..],
        &[2, 4, 4],
        &[3, 3, 3],
        &[2, 2, 2, 2],
        &[2, 3, 5],
        &[2, 2, 7],
        &[2, 3, 7],
        &[3, 3, 4],
        &[2, 2, 2, 3],
    ]
    .iter()
    .map(|w| chains(w))
    .collect();
    for n in 4..=7 {
        families.push(vec![chain_poset(1), chain_poset(1), poset_d(n).unwrap()]);
    }
    families.push(vec![chain_poset(1), PosetSpec::indexed(2, &[]), chain_poset(2)]);
    let mut tubular = 0;
    for posets in &families {
        let a = supercanonical(posets).unwrap();
        let form = homological_form(&a).unwrap();
        let periodic = periodicity(&coxeter_matrix(&a).unwrap()).unwrap().period.is_finite();
        let corank_two = form.classification == FormClass::NonNegative && form.radical_rank == 2;
        assert_eq!(periodic, corank_two, "{:?}", a.labels());
        if periodic {
            tubular += 1;
            let b = a.delete_vertices(&[0]).unwrap();
            let hb = homological_form(&b).unwrap();
            assert_eq!(hb.classification, FormClass::NonNegative);
            assert_eq!(hb.radical_rank, 1, "{:?}", a.labels());
        }
    }
    // Four tubular weight sequences and the four pg-critical instances.
    assert_eq!(tubular, 8);
}

#[test]
fn spectral_invariants_over_corpus() {
    for Entry { name, algebra } in corpus() {
        let m = coxeter_matrix(&algebra).unwrap();
        let (cyclotomic, _) = is_cyclotomic_type(&m).unwrap();
        let report = measures(&m, ROOT_TOLERANCE).unwrap();
        assert!(report.energy >= algebra.n() as f64 - DERIVED_TOLERANCE, "{name}");
        let (roots, _) = polynomial_roots(m.charpoly(), ROOT_TOLERANCE).unwrap();
        assert!(reciprocal_closed(&roots, DERIVED_TOLERANCE), "{name}");
        if cyclotomic {
            // Purely numeric route, bypassing the exact placement of roots of unity.
            for r in numeric_roots(m.charpoly(), ROOT_TOLERANCE).unwrap() {
                assert!((r.modulus() - 1.0).abs() < DERIVED_TOLERANCE, "{name}: {r:?}");
            }
        }
    }
}

#[test]
fn algebra_json_round_trips_through_the_parser() {
    for e in corpus() {
        let text = algebra_to_json(&e.algebra);
        let back = InputDocument::parse(&text).unwrap().build().unwrap();
        assert_eq!(back.cartan(), e.algebra.cartan(), "{}", e.name);
        assert_eq!(back.labels(), e.algebra.labels(), "{}", e.name);
        assert_eq!(algebra_to_json(&back), text, "{}", e.name);
    }
}

#[test]
fn dynkin_polynomials_need_no_residual() {
    for t in common::dynkin_types() {
        let p = chi(&coxeterlab::dynkin(t).unwrap());
        assert!(cyclotomic_factorize(&p).unwrap().is_cyclotomic(), "{t}");
    }
}

fn factorization() -> impl Strategy<Value = Vec<(u64, u32)>> {
    prop::collection::vec((1u64..=60, 1u32..=3), 0..6).prop_filter("degree at most 40", |pairs| {
        pairs.iter().map(|&(m, e)| totient(m).unwrap() * e as u64).sum::<u64>() <= 40
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorize_inverts_expand(pairs in factorization()) {
        let fac = CycFactorization::from_pairs(&pairs);
        let expanded: IntPoly = pairs.iter().map(|&(m, e)| cyclotomic(m).unwrap().pow(e)).product();
        prop_assert_eq!(&fac.expand(), &expanded);
        prop_assert_eq!(cyclotomic_factorize(&expanded).unwrap(), fac);
    }

    #[test]
    fn tensor_is_associative(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (small_algebra(a), small_algebra(b), small_algebra(c));
        prop_assume!(a.n() * b.n() * c.n() <= 64);
        let left = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
        let right = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.cartan(), right.cartan());
    }

    #[test]
    fn mahler_measure_is_multiplicative(a in any::<u64>(), b in any::<u64>()) {
        let (f, g) = (chi(&small_algebra(a)), chi(&small_algebra(b)));
        let product = mahler_measure(&(&f * &g), ROOT_TOLERANCE).unwrap();
        let separate = mahler_measure(&f, ROOT_TOLERANCE).unwrap() * mahler_measure(&g, ROOT_TOLERANCE).unwrap();
        prop_assert!((product - separate).abs() < DERIVED_TOLERANCE * separate, "{} vs {}", product, separate);
    }

    #[test]
    fn quotient_spectrum_is_contained(k in 2usize..=6, extra in 0usize..3) {
        // Crown with offsets 0..=extra, rotated by one step.
        let offsets: Vec<usize> = (0..=extra.min(k - 1)).collect();
        let arrows: Vec<(usize, usize)> =
            (0..k).flat_map(|i| offsets.iter().map(move |&o| (i, k + (i + o) % k))).collect();
        let cover = from_hereditary_quiver(&coxeterlab::QuiverSpec::indexed(2 * k, &arrows)).unwrap();
        let shift: Vec<usize> = (0..2 * k).map(|i| (i / k) * k + (i % k + 1) % k).collect();
        let q = galois_quotient(&cover, &GroupAction::new(vec![shift])).unwrap();
        prop_assert!(chi(&q).squarefree_part().divides(&chi(&cover).squarefree_part()));
    }
}
