use super::*;
use crate::analyzers::{is_centrally_essential, Strategy, Verdict};
use crate::builders::{group_algebra, matrix_span_algebra};
use crate::groups::{cyclic, dihedral, heisenberg, quaternion_q8};
use crate::scalars::ScalarRing;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::strategy::Strategy as _;

fn example_monoid() -> (Vec<String>, Vec<Vec<usize>>) {
    let labels = ["1", "a", "b", "c"].map(String::from).to_vec();
    let table = vec![vec![0, 1, 2, 3], vec![1, 1, 1, 3], vec![2, 2, 2, 3], vec![3, 3, 3, 3]];
    (labels, table)
}

fn example() -> FiniteSemiring {
    let (l, t) = example_monoid();
    powerset_semiring(&l, &t).unwrap()
}

/// Direct reading of the definition, no precomputed center.
fn brute_ce(s: &FiniteSemiring) -> bool {
    let n = s.size();
    let central = |x: usize| (0..n).all(|y| s.mul(x, y) == s.mul(y, x));
    if (0..n).all(central) {
        return true;
    }
    (0..n).filter(|&a| a != s.zero()).all(|a| {
        (0..n).any(|x| x != s.zero() && central(x) && s.mul(a, x) != s.zero() && central(s.mul(a, x)))
    })
}

#[test]
fn powerset_example_center_and_ce() {
    let s = example();
    assert_eq!(s.size(), 16);
    let mut z: Vec<&str> = semiring_center(&s).into_iter().map(|i| s.label(i)).collect();
    z.sort();
    assert_eq!(z, vec!["{1,c}", "{1}", "{c}", "∅"]);
    assert!(!s.is_commutative());
    let rep = is_ce_semiring(&s);
    assert_eq!(rep.verdict, Verdict::True);
    assert!(brute_ce(&s));
    let w = rep.witness.unwrap();
    assert_eq!(s.mul(s.index_of(&w.element).unwrap(), s.index_of(&w.multiplier).unwrap()), s.index_of(&w.product).unwrap());
    // A·{c} is central and nonzero for every non-central A
    let c = s.index_of("{c}").unwrap();
    let center = semiring_center(&s);
    for a in (0..16).filter(|a| !center.contains(a)) {
        let y = s.mul(a, c);
        assert!(y != s.zero() && center.contains(&y));
    }
}

#[test]
fn powerset_example_predicates() {
    let s = example();
    assert!(is_additively_idempotent(&s));
    assert!(is_multiplicatively_idempotent(&s));
    let p = semiring_predicates(&s);
    assert!(p.zero_sum_free);
    assert!(!p.additively_cancellative);
    assert_eq!(p.sampled, None);
}

#[test]
fn trivial_and_invalid_monoids() {
    let s = powerset_semiring(&["e".to_string()], &[vec![0]]).unwrap();
    assert_eq!(s.size(), 2);
    assert_eq!(s.labels(), ["∅", "{e}"]);
    let labels = ["1", "x", "y"].map(String::from);
    let bad = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 2, 2]];
    assert!(matches!(powerset_semiring(&labels, &bad), Err(crate::Error::NotASemigroup(_))));
    let no_unit = vec![vec![0, 0], vec![0, 0]];
    assert!(matches!(powerset_semiring(&labels[..2], &no_unit), Err(crate::Error::NotASemigroup(_))));
}

#[test]
fn boolean_group_semirings_of_class_two() {
    for g in [quaternion_q8(), dihedral(8).unwrap(), heisenberg(2, 1).unwrap()] {
        let s = boolean_group_semiring(&g).unwrap();
        assert_eq!(s.size(), 256);
        assert!(!s.is_commutative());
        assert!(is_ce_semiring(&s).holds());
        let gs = GroupSemiring::new(Coefficients::Boolean, g);
        assert!(gs.is_ce(0, 0).unwrap().holds());
    }
}

#[test]
fn triangular_over_truncated_naturals() {
    let n2 = saturating_semiring(2).unwrap();
    let t2 = upper_triangular_semiring(&n2, 2).unwrap();
    assert_eq!(t2.size(), 27);
    let (e, f) = noncentral_complemented_idempotent(&t2).unwrap();
    assert_eq!(t2.add(e, f), t2.one());
    assert_eq!(t2.label(e), "[1 0; 0 0]");
    let rep = is_ce_semiring(&t2);
    assert_eq!(rep.verdict, Verdict::False);
    assert!(!brute_ce(&t2));
    assert!(!semiring_predicates(&t2).complemented_idempotents_central);
    assert!(!semiring_predicates(&n2).additively_cancellative);
    assert_eq!(matrix_semiring(&saturating_semiring(1).unwrap(), 2).unwrap().size(), 16);
}

#[test]
fn finite_fields_as_semirings() {
    for r in [ScalarRing::prime_field(5).unwrap(), ScalarRing::galois_field_default(2, 2).unwrap()] {
        let s = semiring_of_scalars(&r).unwrap();
        let p = semiring_predicates(&s);
        assert!(p.additively_cancellative && p.multiplicatively_cancellative && p.reduced && p.semisubtractive);
        assert!(!p.zero_sum_free);
        assert!(is_ce_semiring(&s).holds());
    }
    let z4 = semiring_of_scalars(&ScalarRing::residue_ring(4).unwrap()).unwrap();
    let p = semiring_predicates(&z4);
    assert!(!p.reduced && !p.multiplicatively_cancellative);
}

#[test]
fn rings_as_semirings_agree_with_algebra_ce() {
    let f2 = ScalarRing::prime_field(2).unwrap();
    let m = |rows: [[i64; 2]; 2]| rows.iter().map(|r| r.iter().map(|&x| f2.from_int(x)).collect()).collect::<Vec<_>>();
    let t2 = matrix_span_algebra(&f2, 2, &[m([[1, 0], [0, 0]]), m([[0, 1], [0, 0]]), m([[0, 0], [0, 1]])], crate::algebra::default_labels(3)).unwrap();
    let algebras = [
        group_algebra(&f2, &quaternion_q8()).unwrap().algebra,
        group_algebra(&f2, &dihedral(8).unwrap()).unwrap().algebra,
        group_algebra(&ScalarRing::prime_field(3).unwrap(), &cyclic(3).unwrap()).unwrap().algebra,
        t2,
    ];
    for a in &algebras {
        let s = semiring_of_algebra(a).unwrap();
        let ring_ce = is_centrally_essential(a, Strategy::Enumerate).unwrap().holds();
        assert_eq!(is_ce_semiring(&s).holds(), ring_ce);
        assert_eq!(brute_ce(&s), ring_ce);
        let p = semiring_predicates(&s);
        assert!(p.additively_cancellative);
        if ring_ce {
            assert!(p.complemented_idempotents_central);
        }
    }
}

#[test]
fn json_round_trip_and_errors() {
    let s = example();
    let text = s.to_json();
    let back = FiniteSemiring::from_json(&text).unwrap();
    assert_eq!(back, s);
    assert_eq!(back.to_json(), text);
    let bad = r#"{"size":2,"add":[[0,1],[1,1]],"mul":[[0,0],[0]],"zero":0,"one":1}"#;
    match FiniteSemiring::from_json(bad) {
        Err(crate::Error::Parse { path, .. }) => assert_eq!(path, "mul[1]"),
        other => panic!("{other:?}"),
    }
    let not_absorbing = r#"{"size":2,"add":[[0,1],[1,1]],"mul":[[0,1],[1,1]],"zero":0,"one":1}"#;
    assert!(matches!(FiniteSemiring::from_json(not_absorbing), Err(crate::Error::NotASemiring(_))));
    let typo = r#"{"size":2,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]],"zero":"x","one":1}"#;
    match FiniteSemiring::from_json(typo) {
        Err(crate::Error::Parse { path, .. }) => assert_eq!(path, "zero"),
        other => panic!("{other:?}"),
    }
}

fn q8_rationals() -> GroupSemiring {
    GroupSemiring::new(Coefficients::NonNegativeRationals, quaternion_q8())
}

#[test]
fn rational_q8_class_sum_witnesses() {
    let gs = q8_rationals();
    let g = gs.group().clone();
    let z = gs.class_sum(&g.center());
    for k in g.conjugacy_classes().iter().filter(|k| k.len() > 1) {
        for &x in k {
            assert_eq!(gs.mul(&gs.basis(x), &z), gs.class_sum(k));
        }
    }
    for a in gs.sample_elements(1000, 11) {
        assert!(gs.class_sum_witness(&a).is_some());
    }
    let rep = gs.is_ce(1000, 11).unwrap();
    assert_eq!(rep.verdict, Verdict::True);
    assert_eq!(rep.strategy, "sampled");
    assert_eq!(rep.notes[0], "Σ_Z(G) witness succeeded on 1000 of 1000 samples");
}

#[test]
fn rational_q8_predicates() {
    let gs = q8_rationals();
    let p = gs.predicates(2000, 5).unwrap();
    assert!(p.reduced && p.additively_cancellative && p.zero_sum_free && p.complemented_idempotents_central);
    assert!(!p.semisubtractive);
    assert!(!p.multiplicatively_cancellative);
    assert_eq!(p.sampled, Some(2000));
    // 1 + a² is a zero-divisor of ℚQ₈: (1 + a²)·1 = (1 + a²)·a²
    let a2 = gs.group().index_of("a^2").unwrap();
    let x = gs.add(&gs.one(), &gs.basis(a2));
    assert_eq!(gs.mul(&x, &gs.one()), gs.mul(&x, &gs.basis(a2)));
    assert!(gs.cancellation_counterexample(&x).unwrap().is_some());
    assert!(gs.cancellation_counterexample(&gs.one()).unwrap().is_none());
}

#[test]
fn rational_commutative_group_semiring() {
    let gs = GroupSemiring::new(Coefficients::NonNegativeRationals, cyclic(4).unwrap());
    assert_eq!(gs.is_ce(10, 0).unwrap().strategy, "commutative");
    assert!(gs.element(vec![BigRational::one(); 3]).is_err());
    assert!(gs.element(vec![-BigRational::one(), BigRational::zero(), BigRational::zero(), BigRational::zero()]).is_err());
    assert_eq!(gs.format(&gs.zero()), "0");
}

fn monoid_tables() -> impl proptest::strategy::Strategy<Value = Vec<Vec<usize>>> {
    proptest::collection::vec(0usize..3, 4).prop_map(|v| vec![vec![0, 1, 2], vec![1, v[0], v[1]], vec![2, v[2], v[3]]])
}

fn associative(t: &[Vec<usize>]) -> bool {
    (0..3).all(|x| (0..3).all(|y| (0..3).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn powerset_semirings_verify_and_agree(t in monoid_tables()) {
        prop_assume!(associative(&t));
        let labels = ["e", "x", "y"].map(String::from);
        let s = powerset_semiring(&labels, &t).unwrap();
        prop_assert!(s.verify().is_ok());
        let back = FiniteSemiring::from_json(&s.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), s.to_json());
        prop_assert_eq!(is_ce_semiring(&s).holds(), brute_ce(&s));
    }

    #[test]
    fn saturating_triangular_not_ce(k in 1usize..4) {
        let t = upper_triangular_semiring(&saturating_semiring(k).unwrap(), 2).unwrap();
        prop_assert!(!is_ce_semiring(&t).holds());
        prop_assert!(noncentral_complemented_idempotent(&t).is_some());
    }
}
