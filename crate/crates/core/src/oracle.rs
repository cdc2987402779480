//! Seeded random unital algebras checked against brute force and the general theorems.

use crate::algebra::{default_labels, Algebra};
use crate::analyzers::{all_idempotents_central, center_nilradical, is_centrally_essential, Strategy};
use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

pub const MAX_ORACLE_DIM: usize = 4;
const ASSOCIATIVE_TRIES: usize = 10_000;

/// Set to make the first generated algebra report a strategy disagreement.
pub const INJECT_ENV: &str = "CE_LAB_TEST_INJECT_DISAGREEMENT";

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub count: usize,
    pub dim: usize,
    pub scalar: ScalarRing,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCase {
    pub index: usize,
    pub dim: usize,
    pub associative: bool,
    pub commutative: bool,
    pub ce: bool,
}

#[derive(Clone, Debug)]
pub struct OracleFailure {
    pub index: usize,
    pub reason: String,
    /// The failing algebra after greedy removal of table entries that keep it failing.
    pub minimized: Algebra,
}

#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub config: OracleConfig,
    pub cases: Vec<OracleCase>,
    pub failures: Vec<OracleFailure>,
}

impl OracleOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let count = |f: fn(&OracleCase) -> bool| self.cases.iter().filter(|c| f(c)).count();
        json!({
            "scalar": self.config.scalar.name(),
            "dim": self.config.dim,
            "count": self.config.count,
            "seed": self.config.seed,
            "associative": count(|c| c.associative),
            "ce": count(|c| c.ce),
            "noncommutative_ce": count(|c| c.ce && !c.commutative),
            "cases": self.cases.iter().map(|c| json!([c.index, c.dim, c.associative, c.commutative, c.ce])).collect::<Vec<_>>(),
            "failures": self.failures.iter().map(|f| json!({"index": f.index, "reason": f.reason})).collect::<Vec<_>>(),
        })
    }
}

/// e0 is the unit; products e_i e_j for i, j ≥ 1 have random coordinates.
pub fn random_unital_algebra<R: Rng + ?Sized>(ring: &ScalarRing, dim: usize, rng: &mut R) -> Result<Algebra> {
    if dim == 0 {
        return Err(Error::UnsupportedN(0));
    }
    let mut entries = Vec::new();
    for i in 1..dim {
        for j in 1..dim {
            for k in 0..dim {
                entries.push((i, j, k, ring.random(rng)));
            }
        }
    }
    with_unit_row(ring, dim, entries)
}

fn with_unit_row(ring: &ScalarRing, dim: usize, mut entries: Vec<(usize, usize, usize, Scalar)>) -> Result<Algebra> {
    for i in 0..dim {
        entries.push((0, i, i, ring.one()));
        if i > 0 {
            entries.push((i, 0, i, ring.one()));
        }
    }
    let a = Algebra::from_entries(ring, default_labels(dim), entries)?;
    let u = a.basis(0);
    a.with_unit(u)
}

/// Resamples until the table is associative; gives up after a fixed number of draws.
pub fn random_associative_unital_algebra<R: Rng + ?Sized>(ring: &ScalarRing, dim: usize, rng: &mut R) -> Result<Option<Algebra>> {
    for _ in 0..ASSOCIATIVE_TRIES {
        let a = random_unital_algebra(ring, dim, rng)?;
        if a.is_associative() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// The first violated invariant, if any.
pub fn check_algebra(a: &Algebra) -> Result<Option<String>> {
    let enumerated = is_centrally_essential(a, Strategy::Enumerate)?.holds();
    let socle = is_centrally_essential(a, Strategy::Socle)?.holds();
    if enumerated != socle {
        return Ok(Some(format!("enumerate says {enumerated}, socle says {socle}")));
    }
    if enumerated && a.is_associative() {
        if !all_idempotents_central(a)? {
            return Ok(Some("CE algebra with a non-central idempotent".into()));
        }
        if !a.is_commutative() && center_nilradical(a)?.is_zero() {
            return Ok(Some("non-commutative CE algebra with reduced center".into()));
        }
    }
    Ok(None)
}

fn non_unit_entries(a: &Algebra) -> Vec<(usize, usize, usize, Scalar)> {
    let n = a.dim();
    (1..n)
        .flat_map(|i| (1..n).map(move |j| (i, j)))
        .flat_map(|(i, j)| a.table_entry(i, j).iter().map(move |(k, c)| (i, j, *k, c.clone())))
        .collect()
}

/// Drops table entries one at a time while `fails` keeps holding.
pub fn minimize(a: &Algebra, fails: impl Fn(&Algebra) -> bool) -> Algebra {
    let mut entries = non_unit_entries(a);
    let mut best = a.clone();
    let mut i = 0;
    while i < entries.len() {
        let mut trial = entries.clone();
        trial.remove(i);
        match with_unit_row(a.ring(), a.dim(), trial.clone()) {
            Ok(b) if fails(&b) => {
                entries = trial;
                best = b;
            }
            _ => i += 1,
        }
    }
    best
}

pub fn run_oracle(config: &OracleConfig) -> Result<OracleOutcome> {
    if config.dim == 0 || config.dim > MAX_ORACLE_DIM {
        return Err(Error::UnsupportedParameter(format!("oracle dimension must be in 1..={MAX_ORACLE_DIM}")));
    }
    if !config.scalar.is_finite() {
        return Err(Error::InfiniteRing);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut algebras = Vec::with_capacity(config.count);
    for i in 0..config.count {
        let dim = rng.gen_range(1..=config.dim);
        let a = if i % 2 == 1 {
            random_associative_unital_algebra(&config.scalar, dim, &mut rng)?
        } else {
            None
        };
        algebras.push(match a {
            Some(a) => a,
            None => random_unital_algebra(&config.scalar, dim, &mut rng)?,
        });
    }
    let inject = std::env::var_os(INJECT_ENV).is_some();
    let results = algebras
        .par_iter()
        .enumerate()
        .map(|(index, a)| -> Result<(OracleCase, Option<OracleFailure>)> {
            let case = OracleCase {
                index,
                dim: a.dim(),
                associative: a.is_associative(),
                commutative: a.is_commutative(),
                ce: is_centrally_essential(a, Strategy::Enumerate)?.holds(),
            };
            let reason = if inject && index == 0 { Some("injected disagreement".to_string()) } else { check_algebra(a)? };
            let failure = reason.map(|reason| {
                let minimized = if inject && index == 0 {
                    minimize(a, |_| true)
                } else {
                    minimize(a, |b| check_algebra(b).is_ok_and(|r| r.is_some()))
                };
                OracleFailure { index, reason, minimized }
            });
            Ok((case, failure))
        })
        .collect::<Result<Vec<_>>>()?;
    let (cases, failures): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    Ok(OracleOutcome { config: config.clone(), cases, failures: failures.into_iter().flatten().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(count: usize, dim: usize, p: u64, seed: u64) -> OracleConfig {
        OracleConfig { count, dim, scalar: ScalarRing::prime_field(p).unwrap(), seed }
    }

    #[test]
    fn batches_pass_and_are_reproducible() {
        let a = run_oracle(&config(60, 3, 2, 7)).unwrap();
        assert!(a.ok(), "{:?}", a.failures.iter().map(|f| &f.reason).collect::<Vec<_>>());
        assert!(a.cases.iter().any(|c| c.associative && c.ce));
        assert!(a.cases.iter().any(|c| !c.associative) && a.cases.iter().any(|c| !c.ce));
        let b = run_oracle(&config(60, 3, 2, 7)).unwrap();
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
        assert_ne!(a.to_json(), run_oracle(&config(60, 3, 2, 8)).unwrap().to_json());
        assert!(run_oracle(&config(40, 2, 3, 1)).unwrap().ok());
    }

    #[test]
    fn bad_parameters() {
        assert!(run_oracle(&config(1, 5, 2, 0)).is_err());
        let q = OracleConfig { count: 1, dim: 2, scalar: ScalarRing::rationals(), seed: 0 };
        assert!(matches!(run_oracle(&q), Err(Error::InfiniteRing)));
    }

    #[test]
    fn minimization_keeps_failure() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ring = ScalarRing::prime_field(2).unwrap();
        let a = random_unital_algebra(&ring, 3, &mut rng).unwrap();
        let m = minimize(&a, |_| true);
        assert!(non_unit_entries(&m).is_empty());
        assert_eq!(m.unit(), a.unit());
        let keep = minimize(&a, |b| !b.is_commutative());
        if !a.is_commutative() {
            assert!(!keep.is_commutative());
        }
    }
}
