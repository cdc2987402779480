use super::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

fn ints(ring: &ScalarRing, v: &[i64]) -> Vector {
    v.iter().map(|&x| ring.from_int(x)).collect()
}

fn random_rows(ring: &ScalarRing, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vector> {
    (0..rows).map(|_| (0..cols).map(|_| ring.random(rng)).collect()).collect()
}

/// Span by exhaustive linear combinations.
fn brute_span(ring: &ScalarRing, rows: &[Vector], cols: usize) -> HashSet<Vector> {
    let els = ring.elements().unwrap();
    let mut span: HashSet<Vector> = HashSet::from([zero_vec(ring, cols)]);
    for row in rows {
        let mut next = HashSet::new();
        for v in &span {
            for c in &els {
                next.insert(vec_add(ring, v, &vec_scale(ring, c, row)));
            }
        }
        span = next;
    }
    span
}

fn all_vectors(ring: &ScalarRing, cols: usize) -> Vec<Vector> {
    let els = ring.elements().unwrap();
    let mut out = vec![Vec::new()];
    for _ in 0..cols {
        out = out
            .into_iter()
            .flat_map(|v| {
                els.iter().map(move |c| {
                    let mut w = v.clone();
                    w.push(c.clone());
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn canonical_examples() {
    let f2 = ScalarRing::prime_field(2).unwrap();
    let s = Subspace::new(&f2, 2, vec![ints(&f2, &[1, 1]), ints(&f2, &[0, 1])]).unwrap();
    assert_eq!(s.basis(), &[ints(&f2, &[1, 0]), ints(&f2, &[0, 1])]);

    let z4 = ScalarRing::residue_ring(4).unwrap();
    let s = Subspace::new(&z4, 2, vec![ints(&z4, &[2, 0])]).unwrap();
    assert_eq!(s.basis(), &[ints(&z4, &[2, 0])]);
    assert_eq!(s.cardinality(), Some(2));

    let q = ScalarRing::rationals();
    let s = Subspace::new(&q, 2, vec![ints(&q, &[1, 2]), ints(&q, &[2, 4])]).unwrap();
    assert_eq!(s.basis(), &[ints(&q, &[1, 2])]);
}

#[test]
fn kernel_image_solve_examples() {
    let z4 = ScalarRing::residue_ring(4).unwrap();
    let two = Matrix::from_rows(&z4, vec![ints(&z4, &[2])], 1).unwrap();
    assert_eq!(two.kernel().unwrap().basis(), &[ints(&z4, &[2])]);

    let f3 = ScalarRing::prime_field(3).unwrap();
    let id = Matrix::identity(&f3, 3);
    let b = ints(&f3, &[1, 2, 0]);
    assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));

    let f2 = ScalarRing::prime_field(2).unwrap();
    let m = Matrix::from_rows(&f2, vec![ints(&f2, &[1, 1])], 2).unwrap();
    assert_eq!(m.kernel().unwrap().basis(), &[ints(&f2, &[1, 1])]);

    // 2x = 1 has no solution over Z4, 2x = 2 does
    assert_eq!(two.solve(&ints(&z4, &[1])).unwrap(), None);
    let x = two.solve(&ints(&z4, &[2])).unwrap().unwrap();
    assert_eq!(two.mul_vec(&x).unwrap(), ints(&z4, &[2]));
    assert_eq!(two.image().unwrap().basis(), &[ints(&z4, &[2])]);
}

#[test]
fn lattice_examples() {
    let f3 = ScalarRing::prime_field(3).unwrap();
    let u = Subspace::new(&f3, 2, vec![ints(&f3, &[1, 0])]).unwrap();
    let v = Subspace::new(&f3, 2, vec![ints(&f3, &[0, 1])]).unwrap();
    assert!(u.intersect(&v).unwrap().is_zero());
    assert_eq!(u.intersect(&u).unwrap(), u);

    let z4 = ScalarRing::residue_ring(4).unwrap();
    let a = Subspace::new(&z4, 2, vec![ints(&z4, &[2, 0])]).unwrap();
    let b = Subspace::new(&z4, 2, vec![ints(&z4, &[0, 2])]).unwrap();
    let s = a.sum(&b).unwrap();
    assert_eq!(s.basis(), &[ints(&z4, &[2, 0]), ints(&z4, &[0, 2])]);
    assert_eq!(s.cardinality(), Some(4));

    let bad = Subspace::zero(&z4, 3);
    assert_eq!(a.sum(&bad).unwrap_err(), Error::AmbientMismatch(2, 3));
}

#[test]
fn membership_matches_exhaustive_span_over_small_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in [2u64, 3] {
        let ring = ScalarRing::prime_field(p).unwrap();
        for cols in 1..=6usize {
            if p == 3 && cols > 5 {
                continue;
            }
            let all = all_vectors(&ring, cols);
            for _ in 0..4 {
                let k = rng.gen_range(0..=cols);
                let rows = random_rows(&ring, &mut rng, k, cols);
                let span = brute_span(&ring, &rows, cols);
                let s = Subspace::new(&ring, cols, rows).unwrap();
                assert_eq!(s.cardinality().unwrap() as usize, span.len());
                for v in &all {
                    assert_eq!(s.contains(v), span.contains(v));
                }
            }
        }
    }
}

#[test]
fn howell_membership_matches_exhaustive_span() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [4u64, 6, 8, 9, 12] {
        let ring = ScalarRing::residue_ring(n).unwrap();
        for cols in 1..=3usize {
            let all = all_vectors(&ring, cols);
            for _ in 0..15 {
                let k = rng.gen_range(0..=3);
                let rows = random_rows(&ring, &mut rng, k, cols);
                let span = brute_span(&ring, &rows, cols);
                let s = Subspace::new(&ring, cols, rows).unwrap();
                assert_eq!(s.cardinality().unwrap() as usize, span.len(), "Z{n}");
                let els: HashSet<Vector> = s.elements().unwrap().into_iter().collect();
                assert_eq!(els, span);
                for v in &all {
                    assert_eq!(s.contains(v), span.contains(v));
                }
            }
        }
    }
}

#[test]
fn intersection_matches_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for ring in [ScalarRing::residue_ring(4).unwrap(), ScalarRing::residue_ring(6).unwrap(), ScalarRing::prime_field(3).unwrap()] {
        for _ in 0..30 {
            let a = random_rows(&ring, &mut rng, 2, 3);
            let b = random_rows(&ring, &mut rng, 2, 3);
            let sa = brute_span(&ring, &a, 3);
            let sb = brute_span(&ring, &b, 3);
            let inter = Subspace::new(&ring, 3, a).unwrap().intersect(&Subspace::new(&ring, 3, b).unwrap()).unwrap();
            let got: HashSet<Vector> = inter.elements().unwrap().into_iter().collect();
            let want: HashSet<Vector> = sa.intersection(&sb).cloned().collect();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn kernel_matches_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for ring in [ScalarRing::residue_ring(4).unwrap(), ScalarRing::residue_ring(6).unwrap(), ScalarRing::prime_field(2).unwrap()] {
        for _ in 0..20 {
            let m = Matrix::from_rows(&ring, random_rows(&ring, &mut rng, 2, 3), 3).unwrap();
            let ker = m.kernel().unwrap();
            for v in all_vectors(&ring, 3) {
                let is_ker = vec_is_zero(&ring, &m.mul_vec(&v).unwrap());
                assert_eq!(ker.contains(&v), is_ker);
            }
        }
    }
}

fn lattice_rings() -> Vec<ScalarRing> {
    vec![
        ScalarRing::prime_field(2).unwrap(),
        ScalarRing::prime_field(3).unwrap(),
        ScalarRing::galois_field(2, 2, vec![1, 1, 1]).unwrap(),
        ScalarRing::residue_ring(4).unwrap(),
        ScalarRing::residue_ring(6).unwrap(),
        ScalarRing::rationals(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn modular_lattice_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for ring in lattice_rings() {
            let n = 4;
            let sub = |rng: &mut ChaCha8Rng| {
                let k = rng.gen_range(0..=3);
                Subspace::new(&ring, n, random_rows(&ring, rng, k, n)).unwrap()
            };
            let (u, v, w) = (sub(&mut rng), sub(&mut rng), sub(&mut rng));
            prop_assert_eq!(u.sum(&v).unwrap(), v.sum(&u).unwrap());
            prop_assert_eq!(u.intersect(&v).unwrap(), v.intersect(&u).unwrap());
            prop_assert_eq!(u.intersect(&u.sum(&v).unwrap()).unwrap(), u.clone());
            prop_assert_eq!(u.sum(&u.intersect(&v).unwrap()).unwrap(), u.clone());
            prop_assert!(u.intersect(&v).unwrap().is_subspace_of(&u).unwrap());
            // modular law: if U ⊆ W then U + (V ∩ W) = (U + V) ∩ W
            let uw = u.intersect(&w).unwrap();
            let lhs = uw.sum(&v.intersect(&w).unwrap()).unwrap();
            let rhs = uw.sum(&v).unwrap().intersect(&w).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn howell_form_is_invariant_under_unimodular_rows(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for n in [4i64, 6, 8, 12] {
            let ring = ScalarRing::residue_ring(n as u64).unwrap();
            let rows = random_rows(&ring, &mut rng, 3, 4);
            let base = Subspace::new(&ring, 4, rows.clone()).unwrap();
            let mut mixed = rows;
            for _ in 0..6 {
                let i = rng.gen_range(0..3);
                let j = (i + rng.gen_range(1..3)) % 3;
                match rng.gen_range(0..3) {
                    0 => mixed.swap(i, j),
                    1 => {
                        let c = ring.from_int(rng.gen_range(0..n));
                        mixed[i] = vec_add(&ring, &mixed[i], &vec_scale(&ring, &c, &mixed[j]));
                    }
                    _ => {
                        let units: Vec<i64> = (1..n).filter(|u| num_integer::Integer::gcd(u, &n) == 1).collect();
                        let u = ring.from_int(units[rng.gen_range(0..units.len())]);
                        mixed[i] = vec_scale(&ring, &u, &mixed[i]);
                    }
                }
            }
            prop_assert_eq!(Subspace::new(&ring, 4, mixed).unwrap(), base);
        }
    }
}
