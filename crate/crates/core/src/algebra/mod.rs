//! Finite-dimensional algebras presented by structure constants.

mod json;
pub mod triangular;

use crate::error::{Error, Result};
use crate::linalg::{self, combination, unit_vec, vec_add, vec_is_zero, vec_sub, zero_vec, Matrix, Subspace, Vector};
use crate::scalars::{Scalar, ScalarRing};
use std::collections::BTreeMap;
use std::sync::OnceLock;

pub use json::AlgebraFile;

/// Algebra over a commutative scalar ring with basis e_0..e_{n-1} and e_i·e_j = Σ_k c_ijk e_k.
#[derive(Clone, Debug)]
pub struct Algebra {
    ring: ScalarRing,
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Option<Vector>,
    involution: Option<Vec<Vector>>,
    associative: OnceLock<bool>,
    commutative: OnceLock<bool>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.dim == other.dim
            && self.labels == other.labels
            && self.table == other.table
            && self.unit == other.unit
            && self.involution == other.involution
    }
}

/// Largest dimension accepted by the constructors; `CE_LAB_MAX_DIM` overrides the default 64.
pub fn dimension_cap() -> usize {
    std::env::var("CE_LAB_MAX_DIM").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(64)
}

pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl Algebra {
    /// Builds an algebra from (i, j, k, c) entries meaning e_i·e_j += c·e_k.
    pub fn from_entries(
        ring: &ScalarRing,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim > dimension_cap() {
            return Err(Error::UnsupportedParameter(format!("dimension {dim} exceeds the cap {}", dimension_cap())));
        }
        let mut acc: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: i.max(j).max(k) + 1 });
            }
            let e = acc.entry((i, j, k)).or_insert_with(|| ring.zero());
            *e = ring.add(e, &c);
        }
        let mut table = vec![Vec::new(); dim * dim];
        for ((i, j, k), c) in acc {
            if !ring.is_zero(&c) {
                table[i * dim + j].push((k, c));
            }
        }
        Ok(Algebra {
            ring: ring.clone(),
            dim,
            labels,
            table,
            unit: None,
            involution: None,
            associative: OnceLock::new(),
            commutative: OnceLock::new(),
        })
    }

    /// Builds an algebra from a product function on basis indices.
    pub fn from_fn(
        ring: &ScalarRing,
        labels: Vec<String>,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let n = labels.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                if v.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: v.len() });
                }
                entries.extend(v.into_iter().enumerate().map(|(k, c)| (i, j, k, c)));
            }
        }
        Self::from_entries(ring, labels, entries)
    }

    /// Zero multiplication on ring^n.
    pub fn zero_product(ring: &ScalarRing, n: usize) -> Self {
        Self::from_entries(ring, default_labels(n), []).expect("valid")
    }

    /// Attaches a unit after checking u·e_i = e_i·u = e_i.
    pub fn with_unit(mut self, u: Vector) -> Result<Self> {
        self.check_len(&u)?;
        for i in 0..self.dim {
            let e = self.basis(i);
            if self.mul(&u, &e) != e || self.mul(&e, &u) != e {
                return Err(Error::InvalidUnit(format!("fails on basis element {}", self.labels[i])));
            }
        }
        self.unit = Some(u);
        Ok(self)
    }

    /// Attaches the unit found by [`Algebra::find_unit`], if any.
    pub fn with_found_unit(self) -> Self {
        match self.find_unit() {
            Some(u) => self.with_unit(u).expect("found unit is valid"),
            None => self,
        }
    }

    /// Attaches an involution given by the images of the basis vectors.
    pub fn with_involution(mut self, images: Vec<Vector>) -> Result<Self> {
        if images.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: images.len() });
        }
        for v in &images {
            self.check_len(v)?;
        }
        let star = |v: &[Scalar]| combination(&self.ring, v, &images, self.dim);
        for i in 0..self.dim {
            if star(&images[i]) != self.basis(i) {
                return Err(Error::InvalidInvolution(format!("not of order two on {}", self.labels[i])));
            }
            for j in 0..self.dim {
                let lhs = star(&self.mul_basis(i, j));
                let rhs = self.mul(&images[j], &images[i]);
                if lhs != rhs {
                    return Err(Error::InvalidInvolution(format!(
                        "(e_{i}e_{j})* differs from e_{j}*e_{i}*"
                    )));
                }
            }
        }
        self.involution = Some(images);
        Ok(self)
    }

    pub fn without_unit(mut self) -> Self {
        self.unit = None;
        self
    }

    pub fn without_involution(mut self) -> Self {
        self.involution = None;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn involution(&self) -> Option<&[Vector]> {
        self.involution.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    /// Number of elements when the scalar ring is finite.
    pub fn cardinality(&self) -> Option<u128> {
        (self.ring.order()? as u128).checked_pow(self.dim as u32)
    }

    /// Nonzero structure constants of e_i·e_j.
    pub fn table_entry(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(&self.ring, self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        zero_vec(&self.ring, self.dim)
    }

    /// Element from sparse (index, coefficient) pairs.
    pub fn element(&self, terms: &[(usize, i64)]) -> Vector {
        let mut v = self.zero();
        for &(i, c) in terms {
            v[i] = self.ring.add(&v[i], &self.ring.from_int(c));
        }
        v
    }

    pub fn element_by_label(&self, label: &str) -> Option<Vector> {
        self.labels.iter().position(|l| l == label).map(|i| self.basis(i))
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        let mut v = self.zero();
        for (k, c) in &self.table[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    /// Product of two coordinate vectors. Panics on length mismatch; see [`Algebra::multiply`].
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        assert!(a.len() == self.dim && b.len() == self.dim, "element length differs from algebra dimension");
        let r = &self.ring;
        if let Some(n) = r.residue_modulus() {
            let mut acc = vec![0u128; self.dim];
            for (i, x) in a.iter().enumerate() {
                let Scalar::Int(x) = x else { unreachable!() };
                if *x == 0 {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    let Scalar::Int(y) = y else { unreachable!() };
                    if *y == 0 {
                        continue;
                    }
                    let xy = (*x as u128 * *y as u128) % n as u128;
                    for (k, c) in &self.table[i * self.dim + j] {
                        let Scalar::Int(c) = c else { unreachable!() };
                        acc[*k] = (acc[*k] + xy * *c as u128) % n as u128;
                    }
                }
            }
            return acc.into_iter().map(|v| Scalar::Int(v as u64)).collect();
        }
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if r.is_zero(y) {
                    continue;
                }
                let xy = r.mul(x, y);
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k] = r.add(&out[*k], &r.mul(&xy, c));
                }
            }
        }
        out
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vector> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul(a, b))
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        vec_add(&self.ring, a, b)
    }

    pub fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        vec_sub(&self.ring, a, b)
    }

    pub fn scale(&self, c: &Scalar, a: &[Scalar]) -> Vector {
        linalg::vec_scale(&self.ring, c, a)
    }

    pub fn is_zero(&self, a: &[Scalar]) -> bool {
        vec_is_zero(&self.ring, a)
    }

    pub fn pow(&self, a: &[Scalar], e: usize) -> Option<Vector> {
        if e == 0 {
            return self.unit.clone();
        }
        let mut acc = a.to_vec();
        for _ in 1..e {
            acc = self.mul(&acc, a);
        }
        Some(acc)
    }

    /// (ab)c − a(bc).
    pub fn associator(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vector {
        self.sub(&self.mul(&self.mul(a, b), c), &self.mul(a, &self.mul(b, c)))
    }

    /// ab − ba.
    pub fn commutator(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn apply_involution(&self, a: &[Scalar]) -> Result<Vector> {
        let inv = self.involution.as_ref().ok_or(Error::NoInvolution)?;
        Ok(combination(&self.ring, a, inv, self.dim))
    }

    /// Matrix of x ↦ a·x (columns a·e_j).
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(&self.ring, &cols, self.dim).expect("square")
    }

    /// Matrix of x ↦ x·a (columns e_j·a).
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(&self.ring, &cols, self.dim).expect("square")
    }

    /// Checked on basis triples, which suffices by trilinearity.
    pub fn is_associative(&self) -> bool {
        *self.associative.get_or_init(|| {
            let n = self.dim;
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let ij = self.mul_basis(i, j);
                    (0..n).all(|k| {
                        let jk = self.mul_basis(j, k);
                        self.mul(&ij, &self.basis(k)) == self.mul(&self.basis(i), &jk)
                    })
                })
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        *self.commutative.get_or_init(|| {
            (0..self.dim).all(|i| (0..i).all(|j| self.table_entry(i, j) == self.table_entry(j, i)))
        })
    }

    /// Solves u·e_i = e_i·u = e_i for all i.
    pub fn find_unit(&self) -> Option<Vector> {
        let n = self.dim;
        if n == 0 {
            return None;
        }
        let mut m = Matrix::zeros(&self.ring, 2 * n * n, n);
        for i in 0..n {
            for k in 0..n {
                let left = self.mul_basis(k, i);
                let right = self.mul_basis(i, k);
                for r in 0..n {
                    m.set(i * n + r, k, left[r].clone());
                    m.set(n * n + i * n + r, k, right[r].clone());
                }
            }
        }
        let targets: Vec<Scalar> = (0..n).flat_map(|i| self.basis(i)).collect();
        let rhs: Vec<Scalar> = targets.iter().chain(&targets).cloned().collect();
        m.solve(&rhs).ok().flatten()
    }

    /// A ⊗ B over a common field, basis e_i ⊗ f_j at index i·dim B + j.
    pub fn tensor_product(&self, other: &Algebra) -> Result<Algebra> {
        if self.ring != other.ring {
            return Err(Error::ScalarMismatch(self.ring.name(), other.ring.name()));
        }
        if !self.ring.is_field() {
            return Err(Error::UnsupportedScalars(format!(
                "tensor product requires a field, got {}",
                self.ring.name()
            )));
        }
        self.tensor_unchecked(other)
    }

    /// Kronecker product of structure constants without the field requirement.
    pub(crate) fn tensor_unchecked(&self, other: &Algebra) -> Result<Algebra> {
        let (n, m) = (self.dim, other.dim);
        let r = &self.ring;
        let labels = (0..n)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|(i, j)| match (self.labels[i].as_str(), other.labels[j].as_str()) {
                ("1", b) => b.to_string(),
                (a, "1") => a.to_string(),
                (a, b) => format!("{a}*{b}"),
            })
            .collect();
        let mut entries = Vec::new();
        for i1 in 0..n {
            for i2 in 0..n {
                for (k1, c1) in self.table_entry(i1, i2) {
                    for j1 in 0..m {
                        for j2 in 0..m {
                            for (k2, c2) in other.table_entry(j1, j2) {
                                entries.push((i1 * m + j1, i2 * m + j2, k1 * m + k2, r.mul(c1, c2)));
                            }
                        }
                    }
                }
            }
        }
        let mut out = Algebra::from_entries(r, labels, entries)?;
        if let (Some(u), Some(v)) = (&self.unit, &other.unit) {
            let w: Vector = u.iter().flat_map(|a| v.iter().map(move |b| r.mul(a, b))).collect();
            out = out.with_unit(w)?;
        }
        Ok(out)
    }

    /// A × B with componentwise operations.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.ring != other.ring {
            return Err(Error::ScalarMismatch(self.ring.name(), other.ring.name()));
        }
        let n = self.dim;
        let labels: Vec<String> = self
            .labels
            .iter()
            .map(|l| format!("({l},0)"))
            .chain(other.labels.iter().map(|l| format!("(0,{l})")))
            .collect();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                entries.extend(self.table_entry(i, j).iter().map(|(k, c)| (i, j, *k, c.clone())));
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                entries.extend(other.table_entry(i, j).iter().map(|(k, c)| (n + i, n + j, n + k, c.clone())));
            }
        }
        let mut out = Algebra::from_entries(&self.ring, labels, entries)?;
        if let (Some(u), Some(v)) = (&self.unit, &other.unit) {
            let mut w = u.clone();
            w.extend(v.iter().cloned());
            out = out.with_unit(w)?;
        }
        Ok(out)
    }

    /// The same algebra expressed in a new basis (rows of an invertible matrix).
    pub fn change_basis(&self, new_basis: &[Vector], labels: Vec<String>) -> Result<Algebra> {
        let n = self.dim;
        if new_basis.len() != n || labels.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: new_basis.len() });
        }
        let p = Matrix::from_columns(&self.ring, new_basis, n)?;
        let coords = |v: &[Scalar]| -> Result<Vector> {
            p.solve(v)?.ok_or_else(|| Error::UnsupportedParameter("basis change matrix is singular".into()))
        };
        for i in 0..n {
            coords(&self.basis(i))?;
        }
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = coords(&self.mul(&new_basis[i], &new_basis[j]))?;
                entries.extend(c.into_iter().enumerate().map(|(k, x)| (i, j, k, x)));
            }
        }
        let mut out = Algebra::from_entries(&self.ring, labels, entries)?;
        if let Some(u) = &self.unit {
            out = out.with_unit(coords(u)?)?;
        }
        if self.involution.is_some() {
            let images = new_basis
                .iter()
                .map(|b| coords(&self.apply_involution(b)?))
                .collect::<Result<Vec<_>>>()?;
            out = out.with_involution(images)?;
        }
        Ok(out)
    }

    /// The subalgebra on a free basis closed under multiplication.
    pub fn subalgebra(&self, basis: &[Vector], labels: Vec<String>) -> Result<Algebra> {
        let m = basis.len();
        let span = Matrix::from_columns(&self.ring, basis, self.dim)?;
        let mut entries = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let prod = self.mul(&basis[i], &basis[j]);
                let c = span
                    .solve(&prod)?
                    .ok_or_else(|| Error::UnsupportedParameter("subspace is not closed under products".into()))?;
                entries.extend(c.into_iter().enumerate().map(|(k, x)| (i, j, k, x)));
            }
        }
        let mut out = Algebra::from_entries(&self.ring, labels, entries)?;
        if let Some(u) = &self.unit {
            if let Some(c) = span.solve(u)? {
                out = out.with_unit(c)?;
            }
        }
        Ok(out)
    }

    pub fn span(&self, vectors: Vec<Vector>) -> Result<Subspace> {
        Subspace::new(&self.ring, self.dim, vectors)
    }

    fn check_sub(&self, u: &Subspace) -> Result<()> {
        if u.ambient() != self.dim {
            return Err(Error::AmbientMismatch(u.ambient(), self.dim));
        }
        Ok(())
    }

    /// span{u·v : u ∈ U, v ∈ V}.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_sub(u)?;
        self.check_sub(v)?;
        let mut rows = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                rows.push(self.mul(a, b));
            }
        }
        self.span(rows)
    }

    /// Smallest two-sided ideal containing the given vectors.
    pub fn ideal_generated_by(&self, gens: &[Vector]) -> Result<Subspace> {
        let mut cur = self.span(gens.to_vec())?;
        loop {
            let mut rows = cur.basis().to_vec();
            for b in cur.basis() {
                for i in 0..self.dim {
                    let e = self.basis(i);
                    rows.push(self.mul(&e, b));
                    rows.push(self.mul(b, &e));
                }
            }
            let next = self.span(rows)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        self.check_sub(u)?;
        for b in u.basis() {
            for i in 0..self.dim {
                let e = self.basis(i);
                if !u.contains(&self.mul(&e, b)) || !u.contains(&self.mul(b, &e)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_right_ideal(&self, u: &Subspace) -> Result<bool> {
        self.check_sub(u)?;
        Ok(u.basis().iter().all(|b| (0..self.dim).all(|i| u.contains(&self.mul(b, &self.basis(i))))))
    }

    pub fn is_left_ideal(&self, u: &Subspace) -> Result<bool> {
        self.check_sub(u)?;
        Ok(u.basis().iter().all(|b| (0..self.dim).all(|i| u.contains(&self.mul(&self.basis(i), b)))))
    }

    /// Powers U, U², … with U^{k+1} = U^k·U.
    pub fn subspace_powers(&self, u: &Subspace, max: usize) -> Result<Vec<Subspace>> {
        let mut out = vec![u.clone()];
        while out.len() < max {
            let next = self.subspace_product(out.last().expect("nonempty"), u)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Least n ≥ 1 with Uⁿ = 0, or None when the powers stabilize at a nonzero module.
    pub fn nilpotency_index(&self, u: &Subspace) -> Result<Option<usize>> {
        self.check_sub(u)?;
        let mut cur = u.clone();
        let mut k = 1;
        loop {
            if cur.is_zero() {
                return Ok(Some(k));
            }
            let next = self.subspace_product(&cur, u)?;
            if next == cur {
                return Ok(None);
            }
            cur = next;
            k += 1;
        }
    }

    /// A/I on the complement spanned by the non-pivot coordinates of I, with the projection matrix.
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<(Algebra, Matrix)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let r = &self.ring;
        for (row, c) in ideal.basis().iter().zip(ideal.pivots()) {
            if !r.is_unit(&row[c]) {
                return Err(Error::UnsupportedScalars("quotient module is not free".into()));
            }
        }
        let pivots = ideal.pivots();
        let keep: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let project = |v: &[Scalar]| -> Vector {
            let (rem, _) = ideal.reduce(v);
            keep.iter().map(|&i| rem[i].clone()).collect()
        };
        let m = keep.len();
        let mut entries = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let pr = project(&self.mul_basis(i, j));
                entries.extend(pr.into_iter().enumerate().map(|(k, c)| (a, b, k, c)));
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut q = Algebra::from_entries(r, labels, entries)?;
        if let Some(u) = &self.unit {
            q = q.with_unit(project(u))?;
        }
        let cols: Vec<Vector> = (0..self.dim).map(|i| project(&self.basis(i))).collect();
        let proj = Matrix::from_columns(r, &cols, m)?;
        Ok((q, proj))
    }

    /// All elements for finite scalar rings, lexicographic in coordinates.
    pub fn elements(&self) -> Result<Vec<Vector>> {
        let size = self.cardinality().ok_or(Error::InfiniteRing)?;
        let cap = crate::scalars::enumeration_cap();
        if size > cap {
            return Err(Error::EnumerationTooLarge { size: size.to_string(), cap });
        }
        Subspace::full(&self.ring, self.dim).elements()
    }

    pub fn format_element(&self, v: &[Scalar]) -> String {
        let r = &self.ring;
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if r.is_zero(c) {
                continue;
            }
            let s = r.format(c);
            let coef = if s.contains(['+', '-', '/']) && !r.is_one(c) { format!("({s})") } else { s };
            parts.push(if r.is_one(c) {
                self.labels[i].clone()
            } else if self.labels[i] == "1" {
                coef
            } else {
                format!("{coef}*{}", self.labels[i])
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
