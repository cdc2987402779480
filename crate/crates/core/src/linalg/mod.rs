//! Dense exact matrices and canonical sub-module lattices over fields and Z_n.

pub mod howell;

use crate::error::{Error, Result};
use crate::scalars::{enumeration_cap, Scalar, ScalarRing};

pub type Vector = Vec<Scalar>;

pub fn zero_vec(ring: &ScalarRing, n: usize) -> Vector {
    vec![ring.zero(); n]
}

pub fn unit_vec(ring: &ScalarRing, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(ring, n);
    v[i] = ring.one();
    v
}

pub fn vec_add(ring: &ScalarRing, a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect()
}

pub fn vec_sub(ring: &ScalarRing, a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| ring.sub(x, y)).collect()
}

pub fn vec_neg(ring: &ScalarRing, a: &[Scalar]) -> Vector {
    a.iter().map(|x| ring.neg(x)).collect()
}

pub fn vec_scale(ring: &ScalarRing, c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| ring.mul(c, x)).collect()
}

pub fn vec_is_zero(ring: &ScalarRing, a: &[Scalar]) -> bool {
    a.iter().all(|x| ring.is_zero(x))
}

/// Σ coeffs[i]·vectors[i].
pub fn combination(ring: &ScalarRing, coeffs: &[Scalar], vectors: &[Vector], n: usize) -> Vector {
    let mut out = zero_vec(ring, n);
    for (c, v) in coeffs.iter().zip(vectors) {
        if ring.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o = ring.add(o, &ring.mul(c, x));
        }
    }
    out
}

pub fn format_vec(ring: &ScalarRing, v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| ring.format(x)).collect()
}

fn to_u64(v: &[Scalar]) -> Vec<u64> {
    v.iter()
        .map(|x| match x {
            Scalar::Int(k) => *k,
            _ => unreachable!("residue scalars"),
        })
        .collect()
}

fn from_u64(v: Vec<u64>) -> Vector {
    v.into_iter().map(Scalar::Int).collect()
}

fn require_linalg(ring: &ScalarRing) -> Result<()> {
    if ring.is_field() || ring.residue_modulus().is_some() {
        Ok(())
    } else {
        Err(Error::UnsupportedScalars(format!("no linear algebra over {}", ring.name())))
    }
}

fn rref(ring: &ScalarRing, mut a: Vec<Vector>, cols: usize) -> Vec<Vector> {
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| !ring.is_zero(&a[i][c])) else { continue };
        a.swap(r, piv);
        let inv = ring.invert(&a[r][c]).expect("field");
        if !ring.is_one(&inv) {
            for k in c..cols {
                a[r][k] = ring.mul(&a[r][k], &inv);
            }
        }
        for i in 0..a.len() {
            if i == r || ring.is_zero(&a[i][c]) {
                continue;
            }
            let f = a[i][c].clone();
            for k in c..cols {
                let t = ring.mul(&f, &a[r][k]);
                a[i][k] = ring.sub(&a[i][k], &t);
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    a
}

/// Canonical generating rows: RREF over fields, Howell form over Z_n.
pub fn canonical_rows(ring: &ScalarRing, rows: Vec<Vector>, cols: usize) -> Result<Vec<Vector>> {
    require_linalg(ring)?;
    for r in &rows {
        if r.len() != cols {
            return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
        }
    }
    if let Some(n) = ring.residue_modulus() {
        let raw: Vec<Vec<u64>> = rows.iter().map(|r| to_u64(r)).collect();
        return Ok(howell::howell_form(raw, n, cols).into_iter().map(from_u64).collect());
    }
    let rows: Vec<Vector> = rows.into_iter().filter(|r| !vec_is_zero(ring, r)).collect();
    Ok(rref(ring, rows, cols))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: ScalarRing,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(ring: &ScalarRing, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &ScalarRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: &ScalarRing, rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { ring: ring.clone(), rows: nrows, cols, data })
    }

    /// Matrix whose j-th column is `columns[j]`.
    pub fn from_columns(ring: &ScalarRing, columns: &[Vector], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let r = &self.ring;
        let mut out = Matrix::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let v = r.add(out.get(i, j), &r.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let r = &self.ring;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = r.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !r.is_zero(a) && !r.is_zero(x) {
                        acc = r.add(&acc, &r.mul(a, x));
                    }
                }
                acc
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.ring.is_zero(x))
    }

    /// Right kernel {x : A x = 0}.
    pub fn kernel(&self) -> Result<Subspace> {
        let r = &self.ring;
        let (m, n) = (self.rows, self.cols);
        let rows: Vec<Vector> = (0..n)
            .map(|j| {
                let mut row = self.column(j);
                row.extend(unit_vec(r, n, j));
                row
            })
            .collect();
        let canon = canonical_rows(r, rows, m + n)?;
        let ker: Vec<Vector> = canon
            .into_iter()
            .filter(|row| vec_is_zero(r, &row[..m]))
            .map(|row| row[m..].to_vec())
            .collect();
        Subspace::new(r, n, ker)
    }

    /// Column span.
    pub fn image(&self) -> Result<Subspace> {
        let cols = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::new(&self.ring, self.rows, cols)
    }

    /// Some x with A x = b, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let r = &self.ring;
        let mut cols = vec![vec_neg(r, b)];
        cols.extend((0..self.cols).map(|j| self.column(j)));
        let aug = Matrix::from_columns(r, &cols, self.rows)?;
        let ker = aug.kernel()?;
        Ok(ker.basis.first().filter(|row| r.is_one(&row[0])).map(|row| row[1..].to_vec()))
    }
}

/// A sub-module of ring^n stored in canonical form (RREF over fields, Howell over Z_n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ring: ScalarRing,
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn new(ring: &ScalarRing, ambient: usize, rows: Vec<Vector>) -> Result<Self> {
        let basis = canonical_rows(ring, rows, ambient)?;
        Ok(Subspace { ring: ring.clone(), ambient, basis })
    }

    pub fn zero(ring: &ScalarRing, ambient: usize) -> Self {
        Subspace { ring: ring.clone(), ambient, basis: Vec::new() }
    }

    pub fn full(ring: &ScalarRing, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vec(ring, ambient, i)).collect();
        Subspace { ring: ring.clone(), ambient, basis }
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.ring
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Number of canonical generators (the dimension over a field).
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.iter().position(|x| !self.ring.is_zero(x)).expect("nonzero row"))
            .collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.ring != other.ring {
            return Err(Error::ScalarMismatch(self.ring.name(), other.ring.name()));
        }
        Ok(())
    }

    /// Remainder of `v` after reduction by the canonical basis, with the coefficients used.
    pub fn reduce(&self, v: &[Scalar]) -> (Vector, Vector) {
        let r = &self.ring;
        if let Some(n) = r.residue_modulus() {
            let basis: Vec<Vec<u64>> = self.basis.iter().map(|b| to_u64(b)).collect();
            let (rem, coeffs) = howell::reduce(&basis, &to_u64(v), n);
            return (from_u64(rem), from_u64(coeffs));
        }
        let mut v = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for (row, c) in self.basis.iter().zip(self.pivots()) {
            let f = v[c].clone();
            if !r.is_zero(&f) {
                for k in c..self.ambient {
                    let t = r.mul(&f, &row[k]);
                    v[k] = r.sub(&v[k], &t);
                }
            }
            coeffs.push(f);
        }
        (v, coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && vec_is_zero(&self.ring, &self.reduce(v).0)
    }

    /// Coefficients expressing `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let (rem, coeffs) = self.reduce(v);
        vec_is_zero(&self.ring, &rem).then_some(coeffs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self.basis.iter().all(|b| other.contains(b)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::new(&self.ring, self.ambient, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(&self.ring, self.ambient));
        }
        let r = &self.ring;
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().cloned());
        let stacked = Matrix::from_columns(r, &cols, self.ambient)?;
        let ker = stacked.kernel()?;
        let k = self.basis.len();
        let rows = ker
            .basis
            .iter()
            .map(|c| combination(r, &c[..k], &self.basis, self.ambient))
            .collect();
        Subspace::new(r, self.ambient, rows)
    }

    /// Number of elements for finite scalar rings.
    pub fn cardinality(&self) -> Option<u128> {
        let q = self.ring.order()? as u128;
        if let Some(n) = self.ring.residue_modulus() {
            let mut total: u128 = 1;
            for (row, c) in self.basis.iter().zip(self.pivots()) {
                let g = match row[c] {
                    Scalar::Int(g) => g,
                    _ => unreachable!(),
                };
                total = total.checked_mul((n / g) as u128)?;
            }
            return Some(total);
        }
        q.checked_pow(self.basis.len() as u32)
    }

    /// Multipliers ranges per canonical generator: each element is uniquely Σ c_i b_i with
    /// c_i drawn from the i-th list.
    fn coefficient_ranges(&self) -> Result<Vec<Vec<Scalar>>> {
        let r = &self.ring;
        if let Some(n) = r.residue_modulus() {
            return Ok(self
                .basis
                .iter()
                .zip(self.pivots())
                .map(|(row, c)| {
                    let g = match row[c] {
                        Scalar::Int(g) => g,
                        _ => unreachable!(),
                    };
                    (0..n / g).map(Scalar::Int).collect()
                })
                .collect());
        }
        let els = r.elements()?;
        Ok(vec![els; self.basis.len()])
    }

    /// Every element of the span, in a deterministic order (zero first).
    pub fn elements(&self) -> Result<Vec<Vector>> {
        let size = self.cardinality().ok_or(Error::InfiniteRing)?;
        if size > enumeration_cap() {
            return Err(Error::EnumerationTooLarge { size: size.to_string(), cap: enumeration_cap() });
        }
        let ranges = self.coefficient_ranges()?;
        let r = &self.ring;
        let mut out = vec![zero_vec(r, self.ambient)];
        for (row, range) in self.basis.iter().zip(&ranges) {
            let mut next = Vec::with_capacity(out.len() * range.len());
            for c in range {
                let scaled = vec_scale(r, c, row);
                for v in &out {
                    next.push(vec_add(r, v, &scaled));
                }
            }
            out = next;
        }
        Ok(out)
    }

    pub fn basis_strings(&self) -> Vec<Vec<String>> {
        self.basis.iter().map(|b| format_vec(&self.ring, b)).collect()
    }
}

#[cfg(test)]
mod tests;
