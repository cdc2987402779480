use super::{read, BuildArgs};
use crate::algebra::Algebra;
use crate::builders::{
    cayley_dickson_scalar, ce_matrix_family, grassmann, group_algebra, jelonek_triangular, octonion_algebra, quaternion_algebra,
    scalar_algebra, skew_poly_quotient, t_algebra, truncated_polynomial, uniserial_derivation_ring, TVariant,
};
use crate::error::{Error, Result};
use crate::groups::{
    cyclic, dihedral, generalized_quaternion, heisenberg, order32_example, order_p5_example, quaternion_q8, semidihedral,
    symmetric, FiniteGroup,
};
use crate::scalars::ScalarRing;
use crate::semirings::{boolean_group_semiring, powerset_semiring, saturating_semiring, upper_triangular_semiring};
use serde::Deserialize;
use serde_json::json;
use std::path::Path;

fn bad(msg: impl Into<String>) -> Error {
    Error::UnsupportedParameter(msg.into())
}

fn need<T: Copy>(v: Option<T>, flag: &str, name: &str) -> Result<T> {
    v.ok_or_else(|| bad(format!("{name} needs --{flag}")))
}

fn field(a: &BuildArgs, default: &str) -> Result<ScalarRing> {
    ScalarRing::from_name(a.field.as_deref().unwrap_or(default))
}

/// Serialized construction for `build NAME ...`.
pub fn build(a: &BuildArgs) -> Result<String> {
    let algebra = |x: Algebra| Ok(x.to_json());
    match a.name.as_str() {
        "q8-group-algebra" => algebra(group_algebra(&field(a, "F2")?, &quaternion_q8())?.algebra),
        "group-algebra" => {
            let g = group(a.group.as_deref().ok_or_else(|| bad("group-algebra needs --group"))?)?;
            algebra(group_algebra(&field(a, "F2")?, &g)?.algebra)
        }
        "grassmann" => algebra(grassmann(&field(a, "F3")?, need(a.n, "n", "grassmann")?)?),
        "cayley-dickson" => algebra(doubling(&field(a, "Z4")?, &a.alpha)?),
        "ce-matrix" => algebra(ce_matrix_family(&field(a, "F3")?, need(a.n, "n", "ce-matrix")?, !a.no_unit)?),
        "t-algebra" => algebra(t_algebra(&field(a, "Q")?, &t_variant(a)?)?),
        "skew-poly" => algebra(skew_poly_quotient(a.q.unwrap_or(4), a.k.unwrap_or(3))?),
        "uniserial" => algebra(uniserial_derivation_ring(a.p.unwrap_or(2))?),
        "truncated" => {
            let g = group(a.group.as_deref().unwrap_or("Q8"))?;
            algebra(truncated_polynomial(&group_algebra(&field(a, "F2")?, &g)?.algebra, a.k.unwrap_or(2))?)
        }
        "jelonek" => {
            let r = jelonek_triangular(a.p)?;
            let (d1, d2) = r.derivations();
            let v = json!({
                "kind": "derivation-triangular-ring",
                "scalar": r.ring().name(),
                "derivations": [d1, d2],
                "product": format!("(f1,g1)(f2,g2) = (f1 f2, f1 g2 + g1 f2 + {d1}(f1) {d2}(f2))"),
            });
            Ok(super::pretty(&v))
        }
        "powerset-semiring" => {
            let (labels, table) = monoid(a.base.as_deref().unwrap_or("example"))?;
            Ok(powerset_semiring(&labels, &table)?.to_json())
        }
        "boolean-group-semiring" => {
            let g = group(a.group.as_deref().ok_or_else(|| bad("boolean-group-semiring needs --group"))?)?;
            Ok(boolean_group_semiring(&g)?.to_json())
        }
        "triangular-semiring" => {
            let base = saturating_semiring(a.k.unwrap_or(2))?;
            Ok(upper_triangular_semiring(&base, a.n.unwrap_or(2))?.to_json())
        }
        other => Err(bad(format!("unknown construction {other:?}"))),
    }
}

/// Two parameters give the named quaternion basis, three the octonion one; otherwise raw iterated doubles.
fn doubling(ring: &ScalarRing, alpha: &[String]) -> Result<Algebra> {
    let params = alpha.iter().map(|s| ring.parse(s.trim())).collect::<Result<Vec<_>>>()?;
    match params.as_slice() {
        [] => Err(bad("cayley-dickson needs --alpha")),
        [a, b] => quaternion_algebra(ring, a, b),
        [a, b, c] => octonion_algebra(ring, a, b, c),
        _ => params.iter().try_fold(scalar_algebra(ring), |acc, c| cayley_dickson_scalar(&acc, c)),
    }
}

fn t_variant(a: &BuildArgs) -> Result<TVariant> {
    Ok(match a.variant.as_deref().map(str::to_ascii_uppercase).as_deref() {
        Some("K") => TVariant::K,
        Some("R") => TVariant::R,
        Some("S") => TVariant::S(a.k.unwrap_or(1) as i64),
        Some("T") => TVariant::T,
        Some(v) => return Err(bad(format!("unknown t-algebra variant {v:?}"))),
        None => return Err(bad("t-algebra needs --variant")),
    })
}

fn group(name: &str) -> Result<FiniteGroup> {
    if name.ends_with(".json") || Path::new(name).is_file() {
        return FiniteGroup::from_json(&read(Path::new(name))?);
    }
    let lower = name.to_ascii_lowercase();
    let num = |prefix: &str| lower.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    match lower.as_str() {
        "q8" => return Ok(quaternion_q8()),
        "order32" => return Ok(order32_example()),
        "order243" => return order_p5_example(3),
        _ => {}
    }
    if let Some(n) = num("sd") {
        semidihedral(n)
    } else if let Some(n) = num("c") {
        cyclic(n)
    } else if let Some(n) = num("d") {
        dihedral(n)
    } else if let Some(n) = num("q") {
        generalized_quaternion(n)
    } else if let Some(k) = num("s") {
        symmetric(k)
    } else if let Some(p) = num("h") {
        heisenberg(p, 1)
    } else {
        Err(bad(format!("unknown group {name:?}")))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MonoidFile {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

fn monoid(base: &str) -> Result<(Vec<String>, Vec<Vec<usize>>)> {
    if base == "example" {
        let labels = ["1", "a", "b", "c"].map(String::from).to_vec();
        return Ok((labels, vec![vec![0, 1, 2, 3], vec![1, 1, 1, 3], vec![2, 2, 2, 3], vec![3, 3, 3, 3]]));
    }
    let text = read(Path::new(base))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    let m: MonoidFile = serde_path_to_error::deserialize(de).map_err(|e| Error::parse(e.path().to_string(), e.inner().to_string()))?;
    Ok((m.labels, m.table))
}
