use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalars::ScalarRing;
use std::collections::HashMap;

/// Subsets of {1..n} as bitmasks, ordered by size and then lexicographically.
fn subsets(n: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0..1u32 << n).collect();
    out.sort_by_key(|&m| {
        let idx: Vec<u32> = (0..n as u32).filter(|i| m >> i & 1 == 1).collect();
        (m.count_ones(), idx)
    });
    out
}

/// (−1)^{#{(s, t) : s ∈ S, t ∈ T, t < s}}, the sign of e_S·e_T for disjoint S, T.
pub fn grassmann_sign(s: u32, t: u32) -> i64 {
    let mut inversions = 0;
    for i in 0..32 {
        if t >> i & 1 == 1 {
            inversions += (s >> (i + 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn label(n: usize, m: u32) -> String {
    if m == 0 {
        return "1".into();
    }
    (0..n).filter(|i| m >> i & 1 == 1).map(|i| format!("e{}", i + 1)).collect::<Vec<_>>().join("∧")
}

/// Exterior algebra Λ(Fⁿ) on the basis e_S.
pub fn grassmann(ring: &ScalarRing, n: usize) -> Result<Algebra> {
    if n > 16 {
        return Err(Error::UnsupportedParameter(format!("grassmann n = {n}")));
    }
    let order = subsets(n);
    let pos: HashMap<u32, usize> = order.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let corrupt = std::env::var("CE_LAB_TEST_CORRUPT").is_ok_and(|v| v == "grassmann-sign");
    let mut entries = Vec::new();
    for (i, &s) in order.iter().enumerate() {
        for (j, &t) in order.iter().enumerate() {
            if s & t == 0 {
                let mut sign = grassmann_sign(s, t);
                if corrupt && s.count_ones() == 1 && t.count_ones() == 1 {
                    sign = 1;
                }
                entries.push((i, j, pos[&(s | t)], ring.from_int(sign)));
            }
        }
    }
    let labels = order.iter().map(|&m| label(n, m)).collect();
    let a = Algebra::from_entries(ring, labels, entries)?;
    let u = a.basis(0);
    a.with_unit(u)
}

/// Λ(Aⁿ) = A ⊗ Λ(Kⁿ) for a unital algebra A over K.
pub fn grassmann_over(a: &Algebra, n: usize) -> Result<Algebra> {
    if !a.is_unital() {
        return Err(Error::NotUnital);
    }
    a.tensor_unchecked(&grassmann(a.ring(), n)?)
}

/// The span of e_S with S nonempty, as an algebra without unit.
pub fn grassmann_positive_part(ring: &ScalarRing, n: usize) -> Result<Algebra> {
    let g = grassmann(ring, n)?;
    let basis: Vec<_> = (1..g.dim()).map(|i| g.basis(i)).collect();
    let labels = g.labels()[1..].to_vec();
    g.subalgebra(&basis, labels)
}
