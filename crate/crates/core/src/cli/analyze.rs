use crate::algebra::Algebra;
use crate::analyzers::{
    all_idempotents_central, center, center_nilradical, essentiality, idempotents, is_alternative, is_centrally_essential,
    socle_over_center, zero_divisors_symmetric, Flavor, Report, Strategy,
};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::semirings::{self, FiniteSemiring};
use serde_json::{json, Value};

pub const ALGEBRA_CHECKS: &[&str] = &[
    "ce",
    "strong",
    "weak",
    "n-essential",
    "k-essential",
    "center",
    "idempotents",
    "socle",
    "center-nilradical",
    "zero-divisors",
    "associative",
    "commutative",
    "alternative",
];

pub const SEMIRING_CHECKS: &[&str] = &["ce", "center", "idempotents", "predicates", "commutative"];

pub fn analyze(text: &str, checks: &[String], strategy: Strategy) -> Result<Vec<Value>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", e.to_string()))?;
    if v.get("kind").is_some() {
        return Err(Error::UnsupportedParameter("descriptor files have no finite table to analyze".into()));
    }
    let semiring = v.get("add").is_some();
    let known = if semiring { SEMIRING_CHECKS } else { ALGEBRA_CHECKS };
    if let Some(c) = checks.iter().find(|c| !known.contains(&c.as_str())) {
        return Err(Error::UnsupportedParameter(format!("unknown check {c:?}; expected one of {}", known.join(", "))));
    }
    if semiring {
        let s = FiniteSemiring::from_json(text)?;
        Ok(checks.iter().map(|c| semiring_check(&s, c)).collect())
    } else {
        let a = Algebra::from_json(text)?;
        checks.iter().map(|c| algebra_check(&a, c, strategy)).collect()
    }
}

fn report(a: &Algebra, check: &str, r: Report) -> Value {
    let mut v = r.to_json(a);
    v["check"] = json!(check);
    v
}

fn subspace(a: &Algebra, check: &str, s: &Subspace) -> Value {
    json!({
        "check": check,
        "dim": s.rank(),
        "basis": s.basis().iter().map(|b| a.format_element(b)).collect::<Vec<_>>(),
    })
}

fn flag(check: &str, value: bool) -> Value {
    json!({ "check": check, "value": value })
}

fn algebra_check(a: &Algebra, check: &str, strategy: Strategy) -> Result<Value> {
    Ok(match check {
        "ce" => report(a, check, is_centrally_essential(a, strategy)?),
        "strong" => report(a, check, essentiality(a, Flavor::Strong)?),
        "weak" => report(a, check, essentiality(a, Flavor::Weak)?),
        "n-essential" => report(a, check, essentiality(a, Flavor::NEssential)?),
        "k-essential" => report(a, check, essentiality(a, Flavor::KEssential)?),
        "center" => subspace(a, check, &center(a)?),
        "socle" => subspace(a, check, &socle_over_center(a)?),
        "center-nilradical" => subspace(a, check, &center_nilradical(a)?),
        "idempotents" => {
            let e = idempotents(a)?;
            json!({
                "check": check,
                "count": e.len(),
                "elements": e.iter().map(|x| a.format_element(x)).collect::<Vec<_>>(),
                "all_central": all_idempotents_central(a)?,
            })
        }
        "zero-divisors" => json!({ "check": check, "left_equals_right": zero_divisors_symmetric(a)? }),
        "associative" => flag(check, a.is_associative()),
        "commutative" => flag(check, a.is_commutative()),
        "alternative" => flag(check, is_alternative(a)),
        _ => unreachable!("checks are validated first"),
    })
}

fn semiring_check(s: &FiniteSemiring, check: &str) -> Value {
    let labels = |xs: Vec<usize>| xs.into_iter().map(|x| s.label(x).to_string()).collect::<Vec<_>>();
    match check {
        "ce" => {
            let mut v = semirings::is_ce_semiring(s).to_json();
            v["check"] = json!(check);
            v
        }
        "center" => {
            let z = semirings::semiring_center(s);
            json!({ "check": check, "size": z.len(), "elements": labels(z) })
        }
        "idempotents" => {
            let e = semirings::idempotents(s);
            json!({ "check": check, "count": e.len(), "elements": labels(e) })
        }
        "predicates" => {
            let mut v = semirings::semiring_predicates(s).to_json();
            v["check"] = json!(check);
            v
        }
        "commutative" => flag(check, s.is_commutative()),
        _ => unreachable!("checks are validated first"),
    }
}

/// One human-readable line per result.
pub fn text_line(v: &Value) -> String {
    let check = v["check"].as_str().unwrap_or("?");
    let list = |k: &str| v[k].as_array().map(|xs| xs.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(", ")).unwrap_or_default();
    if let Some(verdict) = v.get("verdict") {
        let verdict = verdict.as_bool().map_or_else(|| verdict.as_str().unwrap_or("?").to_string(), |b| b.to_string());
        format!("{check}: {verdict} ({})", v["strategy"].as_str().unwrap_or(""))
    } else if let Some(x) = v.get("value") {
        format!("{check}: {x}")
    } else if let Some(d) = v.get("dim") {
        format!("{check}: dim {d} [{}]", list("basis"))
    } else if v.get("elements").is_some() {
        format!("{check}: {{{}}}", list("elements"))
    } else {
        let mut o = v.clone();
        if let Some(m) = o.as_object_mut() {
            m.remove("check");
        }
        format!("{check}: {o}")
    }
}
