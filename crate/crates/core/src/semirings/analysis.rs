use super::FiniteSemiring;
use crate::analyzers::Verdict;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use std::time::Instant;

/// Labels of s, x and y = sx with x, y nonzero central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiringWitness {
    pub element: String,
    pub multiplier: String,
    pub product: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SemiringReport {
    pub predicate: String,
    pub verdict: Verdict,
    pub strategy: String,
    pub witness: Option<SemiringWitness>,
    pub counterexample: Option<String>,
    /// Number of random elements examined in sampled mode.
    pub samples: Option<usize>,
    pub notes: Vec<String>,
    pub millis: u128,
}

impl SemiringReport {
    pub fn new(predicate: &str, verdict: Verdict, strategy: &str) -> Self {
        SemiringReport {
            predicate: predicate.into(),
            verdict,
            strategy: strategy.into(),
            witness: None,
            counterexample: None,
            samples: None,
            notes: Vec::new(),
            millis: 0,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::True
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("predicate".into(), json!(self.predicate));
        m.insert("verdict".into(), self.verdict.to_json());
        m.insert("strategy".into(), json!(self.strategy));
        m.insert("millis".into(), json!(self.millis as u64));
        if let Some(n) = self.samples {
            m.insert("samples".into(), json!(n));
        }
        if let Some(w) = &self.witness {
            m.insert("witness".into(), json!({"element": w.element, "multiplier": w.multiplier, "product": w.product}));
        }
        if let Some(c) = &self.counterexample {
            m.insert("counterexample".into(), json!({ "element": c }));
        }
        if !self.notes.is_empty() {
            m.insert("notes".into(), json!(self.notes));
        }
        Value::Object(m)
    }
}

pub fn semiring_center(s: &FiniteSemiring) -> Vec<usize> {
    let n = s.size();
    (0..n).filter(|&x| (0..n).all(|y| s.mul(x, y) == s.mul(y, x))).collect()
}

/// S is commutative, or every s ≠ 0 has nonzero central x with sx nonzero and central.
pub fn is_ce_semiring(s: &FiniteSemiring) -> SemiringReport {
    let start = Instant::now();
    let center = semiring_center(s);
    let is_central = {
        let mut v = vec![false; s.size()];
        for &c in &center {
            v[c] = true;
        }
        v
    };
    let z = s.zero();
    let mut rep = if s.is_commutative() {
        SemiringReport::new("ce", Verdict::True, "enumerate").with_note("commutative")
    } else {
        let search = |x: usize| center.iter().copied().find(|&c| c != z && s.mul(x, c) != z && is_central[s.mul(x, c)]);
        let failure = (0..s.size()).into_par_iter().filter(|&x| x != z).find_first(|&x| search(x).is_none());
        let mut rep = SemiringReport::new("ce", Verdict::from_bool(failure.is_none()), "enumerate");
        match failure {
            Some(x) => rep.counterexample = Some(s.label(x).into()),
            None => {
                if let Some(x) = (0..s.size()).find(|&x| !is_central[x]) {
                    let c = search(x).expect("checked above");
                    rep.witness = Some(SemiringWitness {
                        element: s.label(x).into(),
                        multiplier: s.label(c).into(),
                        product: s.label(s.mul(x, c)).into(),
                    });
                }
            }
        }
        rep
    };
    rep.notes.push(format!("|S| = {}, |Z(S)| = {}", s.size(), center.len()));
    rep.millis = start.elapsed().as_millis();
    rep
}

impl SemiringReport {
    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiringPredicates {
    pub additively_cancellative: bool,
    pub zero_sum_free: bool,
    pub reduced: bool,
    pub semisubtractive: bool,
    pub multiplicatively_cancellative: bool,
    pub complemented_idempotents_central: bool,
    /// `Some(n)` when each quantifier was checked on n random samples only.
    pub sampled: Option<usize>,
}

impl SemiringPredicates {
    pub fn to_json(&self) -> Value {
        json!({
            "additively_cancellative": self.additively_cancellative,
            "zero_sum_free": self.zero_sum_free,
            "reduced": self.reduced,
            "semisubtractive": self.semisubtractive,
            "multiplicatively_cancellative": self.multiplicatively_cancellative,
            "complemented_idempotents_central": self.complemented_idempotents_central,
            "mode": match self.sampled { Some(_) => "sampled", None => "exhaustive" },
            "samples": self.sampled,
        })
    }
}

fn injective(n: usize, f: impl Fn(usize) -> usize) -> bool {
    let mut seen = vec![false; n];
    (0..n).all(|x| !std::mem::replace(&mut seen[f(x)], true))
}

pub fn idempotents(s: &FiniteSemiring) -> Vec<usize> {
    (0..s.size()).filter(|&e| s.mul(e, e) == e).collect()
}

/// Pairs (e, f) of idempotents with e + f = 1.
pub fn complemented_idempotents(s: &FiniteSemiring) -> Vec<(usize, usize)> {
    let idem = idempotents(s);
    idem.iter().flat_map(|&e| idem.iter().map(move |&f| (e, f))).filter(|&(e, f)| s.add(e, f) == s.one()).collect()
}

pub fn noncentral_complemented_idempotent(s: &FiniteSemiring) -> Option<(usize, usize)> {
    let center = semiring_center(s);
    complemented_idempotents(s).into_iter().find(|(e, _)| !center.contains(e))
}

pub fn is_additively_idempotent(s: &FiniteSemiring) -> bool {
    (0..s.size()).all(|x| s.add(x, x) == x)
}

pub fn is_multiplicatively_idempotent(s: &FiniteSemiring) -> bool {
    (0..s.size()).all(|x| s.mul(x, x) == x)
}

pub fn semiring_predicates(s: &FiniteSemiring) -> SemiringPredicates {
    let n = s.size();
    let z = s.zero();
    let reduced = (0..n).into_par_iter().all(|x| {
        (0..n).all(|y| x == y || s.add(s.mul(x, x), s.mul(y, y)) != s.add(s.mul(x, y), s.mul(y, x)))
    });
    let semisubtractive =
        (0..n).into_par_iter().all(|a| (0..a).all(|b| (0..n).any(|x| s.add(a, x) == b || s.add(b, x) == a)));
    SemiringPredicates {
        additively_cancellative: (0..n).all(|c| injective(n, |x| s.add(x, c))),
        zero_sum_free: (0..n).all(|x| (0..n).all(|y| s.add(x, y) != z || (x == z && y == z))),
        reduced,
        semisubtractive,
        multiplicatively_cancellative: (0..n)
            .filter(|&x| x != z)
            .all(|x| injective(n, |y| s.mul(x, y)) && injective(n, |y| s.mul(y, x))),
        complemented_idempotents_central: noncentral_complemented_idempotent(s).is_none(),
        sampled: None,
    }
}
