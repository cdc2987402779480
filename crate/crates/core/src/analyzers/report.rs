use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalars::Scalar;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Ce,
    Strong,
    Weak,
    NEssential,
    KEssential,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Ce => "ce",
            Flavor::Strong => "strong",
            Flavor::Weak => "weak",
            Flavor::NEssential => "n-essential",
            Flavor::KEssential => "k-essential",
        }
    }
}

/// The multiplier x in a·x = y.
#[derive(Clone, Debug, PartialEq)]
pub enum Multiplier {
    Element(Vector),
    /// x + c·1 with 1 adjoined formally (non-unital algebras).
    ElementPlusScalar(Vector, Scalar),
    Endomorphism(Matrix),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CEWitness {
    pub element: Vector,
    pub multiplier: Multiplier,
    pub product: Vector,
    pub flavor: Flavor,
}

impl CEWitness {
    pub fn to_json(&self, a: &Algebra) -> Value {
        let mult = match &self.multiplier {
            Multiplier::Element(x) => json!(a.format_element(x)),
            Multiplier::ElementPlusScalar(x, c) => {
                json!(format!("{} + {}·1", a.format_element(x), a.ring().format(c)))
            }
            Multiplier::Endomorphism(m) => {
                json!(m.rows_vec().iter().map(|r| r.iter().map(|c| a.ring().format(c)).collect::<Vec<_>>()).collect::<Vec<_>>())
            }
        };
        json!({
            "element": a.format_element(&self.element),
            "multiplier": mult,
            "product": a.format_element(&self.product),
            "flavor": self.flavor.name(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Unknown => None,
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            Verdict::True => json!(true),
            Verdict::False => json!(false),
            Verdict::Unknown => json!("unknown"),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Enumerate,
    PerElementLinear,
    Socle,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Enumerate => "enumerate",
            Strategy::PerElementLinear => "per-element-linear",
            Strategy::Socle => "socle",
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Strategy::Auto,
            "enumerate" => Strategy::Enumerate,
            "per-element-linear" => Strategy::PerElementLinear,
            "socle" => Strategy::Socle,
            _ => return Err(Error::UnsupportedParameter(format!("unknown strategy {s:?}"))),
        })
    }
}

/// Outcome of one predicate evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub predicate: String,
    pub verdict: Verdict,
    /// Strategy actually used; sampled or certified runs say so here.
    pub strategy: String,
    pub witness: Option<CEWitness>,
    pub counterexample: Option<Vector>,
    pub notes: Vec<String>,
    pub millis: u128,
}

impl Report {
    pub fn new(predicate: &str, verdict: Verdict, strategy: &str) -> Self {
        Report {
            predicate: predicate.into(),
            verdict,
            strategy: strategy.into(),
            witness: None,
            counterexample: None,
            notes: Vec::new(),
            millis: 0,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::True
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self, a: &Algebra) -> Value {
        let mut v = json!({
            "predicate": self.predicate,
            "verdict": self.verdict.to_json(),
            "strategy": self.strategy,
            "millis": self.millis as u64,
        });
        let obj = v.as_object_mut().expect("object");
        if let Some(w) = &self.witness {
            obj.insert("witness".into(), w.to_json(a));
        }
        if let Some(c) = &self.counterexample {
            obj.insert("counterexample".into(), json!({ "element": a.format_element(c) }));
        }
        if !self.notes.is_empty() {
            obj.insert("notes".into(), json!(self.notes));
        }
        v
    }
}

/// Runs `f` and stores its wall time in the report.
pub(crate) fn timed(f: impl FnOnce() -> Result<Report>) -> Result<Report> {
    let start = std::time::Instant::now();
    let mut r = f()?;
    r.millis = start.elapsed().as_millis();
    Ok(r)
}
