mod analysis;
mod constructions;
mod group;
#[cfg(test)]
mod tests;

pub use analysis::{
    complemented_idempotents, idempotents, is_additively_idempotent, is_ce_semiring, is_multiplicatively_idempotent,
    noncentral_complemented_idempotent, semiring_center, semiring_predicates, SemiringPredicates, SemiringReport,
    SemiringWitness,
};
pub use constructions::{
    boolean_group_semiring, matrix_semiring, powerset_semiring, saturating_semiring, semiring_of_algebra,
    semiring_of_scalars, upper_triangular_semiring, MAX_POWERSET_BASE,
};
pub use group::{Coefficients, GroupSemiring, GroupSemiringElement};

use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A finite semiring given by its addition and multiplication tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemiring {
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiringFile {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn check_table(name: &str, t: &[Vec<usize>], n: usize) -> Result<()> {
    if t.len() != n {
        return Err(Error::parse(name, format!("expected {n} rows, found {}", t.len())));
    }
    for (i, row) in t.iter().enumerate() {
        if row.len() != n {
            return Err(Error::parse(format!("{name}[{i}]"), format!("expected {n} entries, found {}", row.len())));
        }
        if let Some(j) = row.iter().position(|&x| x >= n) {
            return Err(Error::parse(format!("{name}[{i}][{j}]"), format!("index {} out of range", row[j])));
        }
    }
    Ok(())
}

impl FiniteSemiring {
    /// Validates every semiring axiom exhaustively.
    pub fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, zero: usize, one: usize, labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NotASemiring("empty carrier".into()));
        }
        check_table("add", &add, n)?;
        check_table("mul", &mul, n)?;
        if zero >= n || one >= n {
            return Err(Error::parse(if zero >= n { "zero" } else { "one" }, "index out of range"));
        }
        let s = FiniteSemiring { add, mul, zero, one, labels };
        s.verify()?;
        Ok(s)
    }

    pub fn verify(&self) -> Result<()> {
        let n = self.size();
        let (a, m) = (&self.add, &self.mul);
        let fail = |msg: String| Err(Error::NotASemiring(msg));
        for x in 0..n {
            if a[x][self.zero] != x {
                return fail(format!("{} + 0 ≠ {}", self.labels[x], self.labels[x]));
            }
            if m[x][self.one] != x || m[self.one][x] != x {
                return fail(format!("1 is not a two-sided identity at {}", self.labels[x]));
            }
            if m[x][self.zero] != self.zero || m[self.zero][x] != self.zero {
                return fail(format!("0 is not absorbing at {}", self.labels[x]));
            }
            for y in 0..n {
                if a[x][y] != a[y][x] {
                    return fail(format!("addition not commutative at ({}, {})", self.labels[x], self.labels[y]));
                }
            }
        }
        let bad = (0..n).into_par_iter().find_map_first(|x| {
            for y in 0..n {
                for z in 0..n {
                    if a[a[x][y]][z] != a[x][a[y][z]] {
                        return Some("addition not associative");
                    }
                    if m[m[x][y]][z] != m[x][m[y][z]] {
                        return Some("multiplication not associative");
                    }
                    if m[x][a[y][z]] != a[m[x][y]][m[x][z]] {
                        return Some("left distributivity fails");
                    }
                    if m[a[y][z]][x] != a[m[y][x]][m[z][x]] {
                        return Some("right distributivity fails");
                    }
                }
            }
            None
        });
        match bad {
            Some(msg) => fail(msg.into()),
            None => Ok(()),
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x][y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..x).all(|y| self.mul[x][y] == self.mul[y][x]))
    }

    pub fn to_file(&self) -> SemiringFile {
        let default = (0..self.size()).map(|i| i.to_string()).collect::<Vec<_>>();
        SemiringFile {
            size: self.size(),
            add: self.add.clone(),
            mul: self.mul.clone(),
            zero: self.zero,
            one: self.one,
            labels: (self.labels != default).then(|| self.labels.clone()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_file()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_file(f: &SemiringFile) -> Result<Self> {
        let labels = match &f.labels {
            Some(l) if l.len() != f.size => {
                return Err(Error::parse("labels", format!("expected {} labels, found {}", f.size, l.len())))
            }
            Some(l) => l.clone(),
            None => (0..f.size).map(|i| i.to_string()).collect(),
        };
        Self::new(f.add.clone(), f.mul.clone(), f.zero, f.one, labels)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(s);
        let f: SemiringFile = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::parse(path, e.into_inner().to_string())
        })?;
        Self::from_file(&f)
    }
}
