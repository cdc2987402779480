//! Finite groups stored as full Cayley tables.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};

mod families;
#[cfg(test)]
mod tests;

pub use families::*;

pub const MAX_ORDER: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    labels: Vec<String>,
    table: Vec<u16>,
    identity: usize,
    inverses: Vec<usize>,
}

/// On-disk form of a group.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// Result of splitting G as P × H with P the Sylow p-subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowSplit {
    pub p_part: Vec<usize>,
    pub complement: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication function on indices `0..n`.
    pub fn from_fn(labels: Vec<String>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedParameter(format!("group order {n}")));
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let k = f(i, j);
                if k >= n {
                    return Err(Error::NotAGroup(format!("product {i}*{j} = {k} out of range")));
                }
                table.push(k as u16);
            }
        }
        Self::from_raw(labels, table)
    }

    pub fn from_table(labels: Vec<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup("table is not square of the label count".into()));
        }
        Self::from_fn(labels, |i, j| table[i][j])
    }

    fn from_raw(labels: Vec<String>, table: Vec<u16>) -> Result<Self> {
        let n = labels.len();
        let at = |i: usize, j: usize| table[i * n + j] as usize;
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let k = at(i, j);
                if std::mem::replace(&mut seen[k], true) {
                    return Err(Error::NotAGroup(format!("row {} repeats {}", labels[i], labels[k])));
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let k = at(j, i);
                if std::mem::replace(&mut seen[k], true) {
                    return Err(Error::NotAGroup(format!("column {} repeats {}", labels[i], labels[k])));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let inverses = (0..n)
            .map(|x| (0..n).find(|&y| at(x, y) == identity).expect("latin square"))
            .collect();
        let g = FiniteGroup { n, labels, table, identity, inverses };
        g.check_associative()?;
        Ok(g)
    }

    /// Full triple check for small orders, Light's test on a generating set otherwise.
    fn check_associative(&self) -> Result<()> {
        let gens: Vec<usize> = if self.n <= 64 { (0..self.n).collect() } else { self.generating_set() };
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = self.mul(x, y);
                for &z in &gens {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::NotAGroup(format!(
                            "({}*{})*{} differs from {}*({}*{})",
                            self.labels[x], self.labels[y], self.labels[z], self.labels[x], self.labels[y], self.labels[z]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// g⁻¹h⁻¹gh.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv(by), g), by)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A greedy generating set: each element added is outside the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![self.identity];
        let mut inside = vec![false; self.n];
        inside[self.identity] = true;
        for g in 0..self.n {
            if !inside[g] {
                gens.push(g);
                current = self.subgroup_generated(&gens);
                inside.iter_mut().for_each(|s| *s = false);
                for &x in &current {
                    inside[x] = true;
                }
            }
        }
        gens
    }

    /// Closure of a set under multiplication, sorted.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.n).filter(|&i| inside[i]).collect()
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        set.contains(&self.identity) && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        self.is_subgroup(s) && (0..self.n).all(|g| set.iter().all(|&x| set.contains(&self.conjugate(x, g))))
    }

    /// The subgroup on the given elements, relabelled and reindexed in the given order.
    pub fn subgroup(&self, s: &[usize]) -> Result<FiniteGroup> {
        if !self.is_subgroup(s) {
            return Err(Error::NotAGroup("subset is not a subgroup".into()));
        }
        let pos = |x: usize| s.iter().position(|&y| y == x).expect("closed");
        let labels = s.iter().map(|&x| self.labels[x].clone()).collect();
        FiniteGroup::from_fn(labels, |i, j| pos(self.mul(s[i], s[j])))
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for g in 0..self.n {
            if seen[g] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.n).map(|h| self.conjugate(g, h)).collect();
            for &x in &class {
                seen[x] = true;
            }
            out.push(class.into_iter().collect());
        }
        out
    }

    pub fn centralizer(&self, s: &[usize]) -> Vec<usize> {
        (0..self.n).filter(|&g| s.iter().all(|&x| self.mul(g, x) == self.mul(x, g))).collect()
    }

    pub fn center(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.n).collect();
        self.centralizer(&all)
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let comms: BTreeSet<usize> = (0..self.n).flat_map(|g| (0..self.n).map(move |h| (g, h))).map(|(g, h)| self.commutator(g, h)).collect();
        self.subgroup_generated(&comms.into_iter().collect::<Vec<_>>())
    }

    /// Z₀ ⊆ Z₁ ⊆ … until it stops growing; Zᵢ = {g : [g, x] ∈ Zᵢ₋₁ for all x}.
    pub fn upper_central_series(&self) -> Vec<Vec<usize>> {
        let mut series = vec![vec![self.identity]];
        loop {
            let prev = series.last().expect("nonempty");
            let mut inside = vec![false; self.n];
            for &x in prev {
                inside[x] = true;
            }
            let next: Vec<usize> = (0..self.n).filter(|&g| (0..self.n).all(|x| inside[self.commutator(g, x)])).collect();
            if next.len() == prev.len() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn nilpotence_class(&self) -> Option<usize> {
        let series = self.upper_central_series();
        (series.last().expect("nonempty").len() == self.n).then(|| series.len() - 1)
    }

    /// Largest power of p dividing the order.
    pub fn p_part(&self, p: usize) -> usize {
        let mut q = 1;
        while self.n % (q * p) == 0 {
            q *= p;
        }
        q
    }

    /// G = P × H with P the normal Sylow p-subgroup and H its elementwise-commuting complement.
    pub fn sylow_direct_decomposition(&self, p: usize) -> Option<SylowSplit> {
        if p < 2 {
            return None;
        }
        let q = self.p_part(p);
        let is_p_power = |mut k: usize| {
            while k % p == 0 {
                k /= p;
            }
            k == 1
        };
        let orders: Vec<usize> = (0..self.n).map(|g| self.element_order(g)).collect();
        let p_part: Vec<usize> = (0..self.n).filter(|&g| is_p_power(orders[g])).collect();
        let complement: Vec<usize> = (0..self.n).filter(|&g| orders[g] % p != 0).collect();
        if p_part.len() != q || complement.len() != self.n / q {
            return None;
        }
        if !self.is_subgroup(&p_part) || !self.is_subgroup(&complement) {
            return None;
        }
        let commute = p_part.iter().all(|&x| complement.iter().all(|&y| self.mul(x, y) == self.mul(y, x)));
        commute.then_some(SylowSplit { p_part, complement })
    }

    /// Extends `gens[i] ↦ images[i]` to a homomorphism into `target`.
    pub fn extend_hom(&self, gens: &[usize], images: &[usize], target: &FiniteGroup) -> Result<Vec<usize>> {
        let mut map = vec![usize::MAX; self.n];
        map[self.identity] = target.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = target.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return Err(Error::NotAHomomorphism(format!("image of {} is not well defined", self.labels[y])));
                }
            }
        }
        if map.contains(&usize::MAX) {
            return Err(Error::NotAHomomorphism("generators do not generate the group".into()));
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!("fails on ({}, {})", self.labels[a], self.labels[b])));
                }
            }
        }
        Ok(map)
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &x in perm {
            if x >= self.n || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        (0..self.n).all(|a| (0..self.n).all(|b| perm[self.mul(a, b)] == self.mul(perm[a], perm[b])))
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            order: self.n,
            labels: self.labels.clone(),
            table: (0..self.n).map(|i| (0..self.n).map(|j| self.mul(i, j)).collect()).collect(),
        }
    }

    pub fn from_file(f: &GroupFile) -> Result<Self> {
        if f.labels.len() != f.order {
            return Err(Error::parse("labels", format!("expected {} labels, found {}", f.order, f.labels.len())));
        }
        Self::from_table(f.labels.clone(), &f.table)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_file()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(s);
        let f: GroupFile = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::parse(path, e.into_inner().to_string())
        })?;
        Self::from_file(&f)
    }
}
