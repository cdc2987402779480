use super::*;
use std::collections::BTreeSet;

fn labels_of(g: &FiniteGroup, s: &[usize]) -> Vec<String> {
    s.iter().map(|&x| g.label(x).to_string()).collect()
}

fn el(g: &FiniteGroup, l: &str) -> usize {
    g.index_of(l).unwrap_or_else(|| panic!("no element {l}"))
}

/// Nilpotence class from the lower central series, independent of the upper series code.
fn lower_central_class(g: &FiniteGroup) -> Option<usize> {
    let mut cur: Vec<usize> = (0..g.order()).collect();
    let mut c = 0;
    loop {
        if cur.len() == 1 {
            return Some(c);
        }
        let gens: BTreeSet<usize> = cur.iter().flat_map(|&x| (0..g.order()).map(move |y| (x, y))).map(|(x, y)| g.commutator(x, y)).collect();
        let next = g.subgroup_generated(&gens.into_iter().collect::<Vec<_>>());
        if next.len() == cur.len() {
            return None;
        }
        cur = next;
        c += 1;
    }
}

fn catalogue() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("C1", trivial_group()),
        ("C6", cyclic(6).unwrap()),
        ("V4", direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap()),
        ("Q8", quaternion_q8()),
        ("D4", dihedral(8).unwrap()),
        ("S3", symmetric(3).unwrap()),
        ("S4", symmetric(4).unwrap()),
        ("D16", dihedral(16).unwrap()),
        ("Q16", generalized_quaternion(16).unwrap()),
        ("SD16", semidihedral(16).unwrap()),
        ("H(2,1)", heisenberg(2, 1).unwrap()),
        ("H(3,1)", heisenberg(3, 1).unwrap()),
        ("H(2,2)", heisenberg(2, 2).unwrap()),
        ("Q8xC3", direct_product(&quaternion_q8(), &cyclic(3).unwrap()).unwrap()),
        ("G32", order32_example()),
    ]
}

#[test]
fn q8_conjugacy_classes() {
    let g = quaternion_q8();
    let classes: Vec<Vec<String>> = g.conjugacy_classes().iter().map(|c| labels_of(&g, c)).collect();
    let want = [vec!["e"], vec!["a^2"], vec!["a", "a^3"], vec!["b", "a^2b"], vec!["ab", "a^3b"]];
    let got: BTreeSet<Vec<String>> = classes.into_iter().collect();
    let want: BTreeSet<Vec<String>> = want.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect();
    assert_eq!(got, want);
    // relations of Q8: a^4 = 1, b^2 = a^2, b a b^-1 = a^-1
    let (a, b) = (el(&g, "a"), el(&g, "b"));
    assert_eq!(g.pow(a, 4), g.identity());
    assert_eq!(g.pow(b, 2), g.pow(a, 2));
    assert_eq!(g.mul(g.mul(b, a), g.inv(b)), g.inv(a));
}

#[test]
fn heisenberg_commutator_formula() {
    for (p, n) in [(2, 1), (3, 1), (2, 2)] {
        let g = heisenberg(p, n).unwrap();
        let q = p.pow(n as u32);
        let dec = |i: usize| (i / (q * q), (i / q) % q, i % q);
        let c = el(&g, "c");
        for u in 0..g.order() {
            for v in 0..g.order() {
                let ((y, _, x), (y2, _, x2)) = (dec(u), dec(v));
                let e = ((x * y2) as i64 - (y * x2) as i64).rem_euclid(q as i64) as usize;
                assert_eq!(g.commutator(u, v), g.pow(c, e));
            }
        }
        let (a, b) = (el(&g, "a"), el(&g, "b"));
        assert_eq!(g.mul(g.mul(a, b), g.inv(a)), g.mul(b, c));
        for x in [a, b, c] {
            assert_eq!(g.element_order(x), q);
        }
        assert_eq!(g.nilpotence_class(), Some(2));
    }
    assert!(heisenberg(2, 5).is_err());
    assert!(heisenberg(4, 1).is_err());
}

#[test]
fn dihedral_center_and_derived() {
    let g = dihedral(8).unwrap();
    let z = g.center();
    assert_eq!(labels_of(&g, &z), ["e", "a^2"]);
    assert_eq!(g.commutator_subgroup(), z);
    let (a, b) = (el(&g, "a"), el(&g, "b"));
    assert_eq!(g.pow(a, 4), g.identity());
    assert_eq!(g.pow(b, 2), g.identity());
    assert_eq!(g.pow(g.mul(a, b), 2), g.identity());
}

#[test]
fn nilpotence_classes() {
    let want = [
        ("C1", Some(0)),
        ("C6", Some(1)),
        ("V4", Some(1)),
        ("Q8", Some(2)),
        ("D4", Some(2)),
        ("S3", None),
        ("S4", None),
        ("D16", Some(3)),
        ("Q16", Some(3)),
        ("SD16", Some(3)),
        ("H(2,1)", Some(2)),
        ("H(3,1)", Some(2)),
        ("H(2,2)", Some(2)),
        ("Q8xC3", Some(2)),
        ("G32", Some(3)),
    ];
    for ((name, g), (wname, nc)) in catalogue().iter().zip(want) {
        assert_eq!(*name, wname);
        assert_eq!(g.nilpotence_class(), nc, "{name}");
        assert_eq!(lower_central_class(g), nc, "{name}");
    }
}

#[test]
fn class_equation_and_series_shape() {
    for (name, g) in catalogue() {
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order(), "{name}");
        assert!(classes.iter().all(|c| g.order() % c.len() == 0), "{name}");
        let series = g.upper_central_series();
        for w in series.windows(2) {
            assert!(w[0].len() < w[1].len());
            assert!(w[0].iter().all(|x| w[1].contains(x)));
            assert!(g.is_normal(&w[1]));
        }
    }
}

#[test]
fn order32_invariants() {
    let g = order32_example();
    assert_eq!(g.order(), 32);
    let series = g.upper_central_series();
    assert_eq!(series[1].len(), 2);
    assert_eq!(series[2].len(), 8);
    assert_eq!(g.centralizer(&series[2]), series[2]);
    // Z1 = <-1>, Z2 = <k, t>
    let minus1 = g.labels().iter().position(|l| l == "((a^2,e),e)").unwrap();
    assert_eq!(series[1], {
        let mut v = vec![g.identity(), minus1];
        v.sort();
        v
    });
    let k = g.labels().iter().position(|l| l == "((ab,e),e)").unwrap();
    let t = g.labels().iter().position(|l| l == "((e,g),e)").unwrap();
    assert_eq!(g.subgroup_generated(&[k, t]), series[2]);
}

#[test]
fn order243_invariants() {
    let g = order_p5_example(3).unwrap();
    assert_eq!(g.order(), 243);
    let series = g.upper_central_series();
    let find = |l: &str| g.labels().iter().position(|x| x == &format!("({l},e)")).unwrap();
    let (a, b, c) = (find("a"), find("b"), find("c"));
    assert_eq!(series[1], g.subgroup_generated(&[a, b]));
    assert_eq!(series[2], g.subgroup_generated(&[a, b, c]));
    assert_eq!(series[2].len(), 27);
    assert_eq!(g.centralizer(&series[2]), series[2]);
    assert!(g.nilpotence_class().unwrap() > 2);
    assert!(order_p5_example(5).is_err());
}

#[test]
fn sylow_decomposition() {
    let g = direct_product(&quaternion_q8(), &cyclic(3).unwrap()).unwrap();
    let split = g.sylow_direct_decomposition(2).unwrap();
    assert_eq!(split.p_part.len(), 8);
    assert_eq!(split.complement.len(), 3);
    assert_eq!(g.subgroup(&split.p_part).unwrap().nilpotence_class(), Some(2));

    let q8 = quaternion_q8();
    let split = q8.sylow_direct_decomposition(2).unwrap();
    assert_eq!(split.p_part.len(), 8);
    assert_eq!(split.complement, vec![q8.identity()]);

    let s3 = symmetric(3).unwrap();
    assert_eq!(s3.sylow_direct_decomposition(3), None);
    assert_eq!(s3.sylow_direct_decomposition(2), None);
    // oracle: no subgroup of order 2 centralizes the normal C3
    let c3: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) != 2).collect();
    assert!(s3.is_normal(&c3));
    for x in (0..6).filter(|&x| s3.element_order(x) == 2) {
        assert!(c3.iter().any(|&y| s3.mul(x, y) != s3.mul(y, x)));
    }
}

#[test]
fn semidirect_rejects_bad_actions() {
    let c3 = cyclic(3).unwrap();
    let c2 = cyclic(2).unwrap();
    let id: Vec<usize> = (0..3).collect();
    let not_auto = vec![0, 0, 0];
    assert!(matches!(semidirect_product(&c3, &c2, &[id.clone(), not_auto]), Err(Error::NotAnAutomorphism(_))));
    let inv = vec![0, 2, 1];
    let s3 = semidirect_product(&c3, &c2, &[id.clone(), inv.clone()]).unwrap();
    assert_eq!(s3.nilpotence_class(), None);
    let c4 = cyclic(4).unwrap();
    let bad = [id.clone(), inv.clone(), id.clone(), id];
    assert!(matches!(semidirect_product(&c3, &c4, &bad), Err(Error::NotAHomomorphism(_))));
    let klein = direct_product(&c2, &c2).unwrap();
    assert_eq!(klein.nilpotence_class(), Some(1));
}

#[test]
fn from_table_validates() {
    let labels: Vec<String> = ["e", "x", "y"].map(String::from).to_vec();
    let not_latin = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
    assert!(matches!(FiniteGroup::from_table(labels.clone(), &not_latin), Err(Error::NotAGroup(_))));
    // a Latin square with identity that is not associative
    let l5: Vec<String> = (0..5).map(|i| i.to_string()).collect();
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(matches!(FiniteGroup::from_table(l5, &loop5), Err(Error::NotAGroup(_))));
}

#[test]
fn json_roundtrip() {
    for (_, g) in catalogue() {
        let s = g.to_json();
        let back = FiniteGroup::from_json(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json(), s);
    }
    match FiniteGroup::from_json("{\"order\":1,\"labels\":[\"e\"],\"table\":[[\"x\"]]}") {
        Err(Error::Parse { path, .. }) => assert_eq!(path, "table[0][0]"),
        other => panic!("unexpected {other:?}"),
    }
}
