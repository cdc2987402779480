//! Named cases with expected verdicts, run in parallel and reported in id order.

mod cases;

pub use cases::cases;

use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Stated in the literature the case reproduces.
    Published,
    /// Computed independently (brute force or a theorem-level consequence).
    Derived,
    /// Immediate from the definitions.
    Elementary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub source: Source,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

/// Accumulates the checks of one case.
#[derive(Default)]
pub struct Checks {
    items: Vec<Check>,
    notes: Vec<String>,
}

impl Checks {
    fn push(&mut self, source: Source, name: &str, expected: impl Serialize, actual: impl Serialize) {
        let expected = serde_json::to_value(expected).expect("serializable");
        let actual = serde_json::to_value(actual).expect("serializable");
        self.items.push(Check { name: name.into(), expected, actual, source });
    }

    pub fn published(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize) {
        self.push(Source::Published, name, expected, actual);
    }

    pub fn derived(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize) {
        self.push(Source::Derived, name, expected, actual);
    }

    pub fn elementary(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize) {
        self.push(Source::Elementary, name, expected, actual);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

pub struct SuiteCase {
    pub id: &'static str,
    pub title: &'static str,
    pub run: fn(&mut Checks) -> Result<()>,
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub id: String,
    pub title: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub error: Option<String>,
    pub millis: u128,
}

impl CaseOutcome {
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(Check::ok)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.ok()).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "title": self.title,
            "ok": self.ok(),
            "millis": self.millis as u64,
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "source": c.source,
                "ok": c.ok(),
            })).collect::<Vec<_>>(),
        });
        if !self.notes.is_empty() {
            v["notes"] = json!(self.notes);
        }
        if let Some(e) = &self.error {
            v["error"] = json!(e);
        }
        v
    }
}

pub fn run_case(case: &SuiteCase) -> CaseOutcome {
    let start = Instant::now();
    let mut checks = Checks::default();
    let result = (case.run)(&mut checks);
    CaseOutcome {
        id: case.id.into(),
        title: case.title.into(),
        checks: checks.items,
        notes: checks.notes,
        error: result.err().map(|e| e.to_string()),
        millis: start.elapsed().as_millis(),
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    /// Sorted by case id.
    pub outcomes: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.outcomes.iter().all(CaseOutcome::ok)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.outcomes.iter().filter(|o| !o.ok()).map(|o| o.id.as_str()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "total": self.outcomes.len(),
            "passed": self.outcomes.iter().filter(|o| o.ok()).count(),
            "failed": self.failed_ids(),
            "cases": self.outcomes.iter().map(CaseOutcome::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Cases whose id matches the glob `filter` (all cases without one).
pub fn select(filter: Option<&str>) -> Result<Vec<SuiteCase>> {
    let pattern = filter
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| Error::UnsupportedParameter(format!("bad filter: {e}")))?;
    Ok(cases().into_iter().filter(|c| pattern.as_ref().is_none_or(|p| p.matches(c.id))).collect())
}

pub fn run_suite(filter: Option<&str>) -> Result<SuiteReport> {
    let selected = select(filter)?;
    let mut outcomes: Vec<CaseOutcome> = selected.par_iter().map(run_case).collect();
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteReport { outcomes })
}

/// Removes every "millis" field, for comparing reports across runs.
pub fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("millis");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}
