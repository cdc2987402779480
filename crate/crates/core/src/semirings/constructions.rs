use super::FiniteSemiring;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::Vector;
use crate::scalars::ScalarRing;
use std::collections::HashMap;

/// Largest |M| accepted by [`powerset_semiring`] (tables for 2^8 = 256 subsets).
pub const MAX_POWERSET_BASE: usize = 8;
const MAX_TABLE: u128 = 256;

fn too_large(size: u128) -> Error {
    Error::EnumerationTooLarge { size: size.to_string(), cap: MAX_TABLE }
}

fn from_products(size: usize, labels: Vec<String>, zero: usize, one: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteSemiring> {
    let table = |f: &dyn Fn(usize, usize) -> usize| (0..size).map(|x| (0..size).map(|y| f(x, y)).collect()).collect();
    FiniteSemiring::new(table(&add), table(&mul), zero, one, labels)
}

fn subset_label(labels: &[String], mask: usize) -> String {
    if mask == 0 {
        return "∅".into();
    }
    let parts: Vec<&str> = (0..labels.len()).filter(|i| mask >> i & 1 == 1).map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

/// 2^M with A + B = A ∪ B and AB = {ab}, for a finite monoid M.
pub fn powerset_semiring(labels: &[String], table: &[Vec<usize>]) -> Result<FiniteSemiring> {
    let m = labels.len();
    if m == 0 || table.len() != m || table.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
        return Err(Error::NotASemigroup("table shape does not match the labels".into()));
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(Error::NotASemigroup(format!("({}{}){} ≠ {}({}{})", labels[x], labels[y], labels[z], labels[x], labels[y], labels[z])));
                }
            }
        }
    }
    let e = (0..m)
        .find(|&e| (0..m).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotASemigroup("no identity element".into()))?;
    if m > MAX_POWERSET_BASE {
        return Err(too_large(1u128 << m));
    }
    let size = 1usize << m;
    let mul = |a: usize, b: usize| {
        let mut out = 0usize;
        for i in (0..m).filter(|i| a >> i & 1 == 1) {
            for j in (0..m).filter(|j| b >> j & 1 == 1) {
                out |= 1 << table[i][j];
            }
        }
        out
    };
    let names = (0..size).map(|s| subset_label(labels, s)).collect();
    from_products(size, names, 0, 1 << e, |a, b| a | b, mul)
}

/// The Boolean group semiring 𝔹[G], realized as the powerset semiring of G.
pub fn boolean_group_semiring(g: &FiniteGroup) -> Result<FiniteSemiring> {
    let table: Vec<Vec<usize>> = (0..g.order()).map(|x| (0..g.order()).map(|y| g.mul(x, y)).collect()).collect();
    powerset_semiring(g.labels(), &table)
}

/// {0, 1, ..., k} with addition and multiplication truncated at k.
pub fn saturating_semiring(k: usize) -> Result<FiniteSemiring> {
    if k == 0 {
        return Err(Error::UnsupportedParameter("saturation bound must be at least 1".into()));
    }
    let labels = (0..=k).map(|i| i.to_string()).collect();
    from_products(k + 1, labels, 0, 1, |a, b| (a + b).min(k), |a, b| (a * b).min(k))
}

fn matrices(s: &FiniteSemiring, n: usize, slot: impl Fn(usize, usize) -> bool) -> Result<FiniteSemiring> {
    if n == 0 {
        return Err(Error::UnsupportedN(n));
    }
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| slot(i, j)).collect();
    let q = s.size();
    let size = (q as u128).checked_pow(slots.len() as u32).filter(|&v| v <= MAX_TABLE).ok_or_else(|| too_large(u128::MAX))?
        as usize;
    let decode = |mut idx: usize| {
        let mut m = vec![vec![s.zero(); n]; n];
        for &(i, j) in &slots {
            m[i][j] = idx % q;
            idx /= q;
        }
        m
    };
    let encode = |m: &[Vec<usize>]| slots.iter().rev().fold(0, |acc, &(i, j)| acc * q + m[i][j]);
    let mats: Vec<Vec<Vec<usize>>> = (0..size).map(decode).collect();
    let add = |a: usize, b: usize| {
        let m: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| s.add(mats[a][i][j], mats[b][i][j])).collect()).collect();
        encode(&m)
    };
    let mul = |a: usize, b: usize| {
        let m: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n).map(|j| (0..n).fold(s.zero(), |acc, k| s.add(acc, s.mul(mats[a][i][k], mats[b][k][j])))).collect()
            })
            .collect();
        encode(&m)
    };
    let mut id = vec![vec![s.zero(); n]; n];
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = s.one();
    }
    let labels = mats
        .iter()
        .map(|m| {
            let rows: Vec<String> = m.iter().map(|r| r.iter().map(|&x| s.label(x)).collect::<Vec<_>>().join(" ")).collect();
            format!("[{}]", rows.join("; "))
        })
        .collect();
    from_products(size, labels, 0, encode(&id), add, mul)
}

/// M_n(S).
pub fn matrix_semiring(s: &FiniteSemiring, n: usize) -> Result<FiniteSemiring> {
    matrices(s, n, |_, _| true)
}

/// T_n(S), upper triangular matrices.
pub fn upper_triangular_semiring(s: &FiniteSemiring, n: usize) -> Result<FiniteSemiring> {
    matrices(s, n, |i, j| i <= j)
}

/// A finite unital associative algebra viewed as a semiring, elements in enumeration order.
pub fn semiring_of_algebra(a: &Algebra) -> Result<FiniteSemiring> {
    let unit = a.unit().ok_or(Error::NotUnital)?.clone();
    if !a.is_associative() {
        return Err(Error::NotASemiring("multiplication is not associative".into()));
    }
    let size = a.cardinality().ok_or(Error::InfiniteRing)?;
    if size > MAX_TABLE {
        return Err(too_large(size));
    }
    let elems = a.elements()?;
    let index: HashMap<&Vector, usize> = elems.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let labels = elems.iter().map(|v| a.format_element(v)).collect();
    let at = |v: Vector| index[&v];
    from_products(elems.len(), labels, at(a.zero()), at(unit), |x, y| at(a.add(&elems[x], &elems[y])), |x, y| {
        at(a.mul(&elems[x], &elems[y]))
    })
}

/// A finite scalar ring viewed as a semiring.
pub fn semiring_of_scalars(ring: &ScalarRing) -> Result<FiniteSemiring> {
    let elems = ring.elements()?;
    if elems.len() as u128 > MAX_TABLE {
        return Err(too_large(elems.len() as u128));
    }
    let at = |x: &crate::Scalar| elems.iter().position(|y| y == x).expect("closed");
    let labels = elems.iter().map(|x| ring.format(x)).collect();
    from_products(elems.len(), labels, at(&ring.zero()), at(&ring.one()), |x, y| at(&ring.add(&elems[x], &elems[y])), |x, y| {
        at(&ring.mul(&elems[x], &elems[y]))
    })
}
