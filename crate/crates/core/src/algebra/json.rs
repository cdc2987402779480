use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::scalars::{ScalarRing, ScalarRingSpec};
use serde::{Deserialize, Serialize};

/// On-disk form of an [`Algebra`]; table entries are sparse `[i, j, k, "coeff"]` quadruples.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub scalar: ScalarRingSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    pub table: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<String>>>,
}

impl Algebra {
    pub fn to_file(&self) -> AlgebraFile {
        let r = &self.ring;
        let fmt = |v: &[crate::Scalar]| v.iter().map(|c| r.format(c)).collect::<Vec<_>>();
        let mut table = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.table_entry(i, j) {
                    table.push((i, j, *k, r.format(c)));
                }
            }
        }
        AlgebraFile {
            scalar: r.spec().clone(),
            dim: self.dim,
            labels: self.labels.clone(),
            unit: self.unit.as_ref().map(|u| fmt(u)),
            table,
            involution: self.involution.as_ref().map(|rows| rows.iter().map(|v| fmt(v)).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_file()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_file(f: &AlgebraFile) -> Result<Algebra> {
        let ring = ScalarRing::new(f.scalar.clone()).map_err(|e| Error::parse("scalar", e.to_string()))?;
        if f.labels.len() != f.dim {
            return Err(Error::parse("labels", format!("expected {} labels, found {}", f.dim, f.labels.len())));
        }
        let parse_vec = |v: &[String], path: &str| -> Result<Vector> {
            if v.len() != f.dim {
                return Err(Error::parse(path, format!("expected {} entries, found {}", f.dim, v.len())));
            }
            v.iter()
                .enumerate()
                .map(|(i, s)| ring.parse(s).map_err(|e| Error::parse(format!("{path}[{i}]"), e.to_string())))
                .collect()
        };
        let mut entries = Vec::with_capacity(f.table.len());
        for (idx, (i, j, k, c)) in f.table.iter().enumerate() {
            for (pos, v) in [i, j, k].into_iter().enumerate() {
                if *v >= f.dim {
                    return Err(Error::parse(format!("table[{idx}][{pos}]"), format!("index {v} out of range")));
                }
            }
            let c = ring.parse(c).map_err(|e| Error::parse(format!("table[{idx}][3]"), e.to_string()))?;
            entries.push((*i, *j, *k, c));
        }
        let mut a = Algebra::from_entries(&ring, f.labels.clone(), entries)?;
        if let Some(u) = &f.unit {
            a = a.with_unit(parse_vec(u, "unit")?).map_err(|e| Error::parse("unit", e.to_string()))?;
        }
        if let Some(inv) = &f.involution {
            let rows = inv
                .iter()
                .enumerate()
                .map(|(i, row)| parse_vec(row, &format!("involution[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            a = a.with_involution(rows).map_err(|e| Error::parse("involution", e.to_string()))?;
        }
        Ok(a)
    }

    pub fn from_json(s: &str) -> Result<Algebra> {
        let de = &mut serde_json::Deserializer::from_str(s);
        let f: AlgebraFile = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::parse(path, e.into_inner().to_string())
        })?;
        Self::from_file(&f)
    }
}
