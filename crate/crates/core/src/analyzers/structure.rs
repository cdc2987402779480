use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalars::Scalar;

/// Kernel of the linear map e_k ↦ column(k) on ring^vars.
pub(crate) fn solve_columns(a: &Algebra, vars: usize, column: impl Fn(usize) -> Vector) -> Result<Subspace> {
    let cols: Vec<Vector> = (0..vars).map(column).collect();
    let len = cols.first().map_or(0, Vec::len);
    if len == 0 {
        return Ok(Subspace::full(a.ring(), vars));
    }
    Matrix::from_columns(a.ring(), &cols, len)?.kernel()
}

fn commutator_conditions(a: &Algebra, k: usize, out: &mut Vector) {
    let n = a.dim();
    let r = a.ring();
    for i in 0..n {
        let lhs = a.mul_basis(k, i);
        let rhs = a.mul_basis(i, k);
        out.extend(lhs.iter().zip(&rhs).map(|(x, y)| r.sub(x, y)));
    }
}

fn associator_conditions(a: &Algebra, k: usize, out: &mut Vector) {
    let n = a.dim();
    let ek = a.basis(k);
    for i in 0..n {
        let ei = a.basis(i);
        for j in 0..n {
            let ej = a.basis(j);
            out.extend(a.associator(&ek, &ei, &ej));
            out.extend(a.associator(&ei, &ek, &ej));
            out.extend(a.associator(&ei, &ej, &ek));
        }
    }
}

/// Z(A) = N(A) ∩ K(A).
pub fn center(a: &Algebra) -> Result<Subspace> {
    let assoc = a.is_associative();
    solve_columns(a, a.dim(), |k| {
        let mut v = Vec::new();
        commutator_conditions(a, k, &mut v);
        if !assoc {
            associator_conditions(a, k, &mut v);
        }
        v
    })
}

/// N(A): elements with (x,a,b) = (a,x,b) = (a,b,x) = 0.
pub fn associative_center(a: &Algebra) -> Result<Subspace> {
    if a.is_associative() {
        return Ok(Subspace::full(a.ring(), a.dim()));
    }
    solve_columns(a, a.dim(), |k| {
        let mut v = Vec::new();
        associator_conditions(a, k, &mut v);
        v
    })
}

/// K(A): elements commuting with everything.
pub fn commutative_center(a: &Algebra) -> Result<Subspace> {
    solve_columns(a, a.dim(), |k| {
        let mut v = Vec::new();
        commutator_conditions(a, k, &mut v);
        v
    })
}

/// A space of additive endomorphisms of an algebra, as n×n matrices acting on coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct EndoSpace {
    pub dim: usize,
    pub basis: Vec<Matrix>,
}

impl EndoSpace {
    /// Checks every basis map against all left and right multiplications by basis vectors.
    pub fn verify(&self, a: &Algebra) -> Result<bool> {
        for phi in &self.basis {
            for i in 0..a.dim() {
                let e = a.basis(i);
                let (l, r) = (a.left_mul_matrix(&e), a.right_mul_matrix(&e));
                if phi.mul(&l)? != l.mul(phi)? || phi.mul(&r)? != r.mul(phi)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn contains(&self, a: &Algebra, phi: &Matrix) -> Result<bool> {
        let flat = |m: &Matrix| -> Vector { m.rows_vec().concat() };
        let span = Subspace::new(a.ring(), self.dim * self.dim, self.basis.iter().map(flat).collect())?;
        Ok(span.contains(&flat(phi)))
    }
}

/// Centroid: maps φ with φ(e_i e_j) = e_i φ(e_j) = φ(e_i) e_j.
pub fn centroid(a: &Algebra) -> Result<EndoSpace> {
    let n = a.dim();
    let r = a.ring();
    // unknown r*n+s is the coefficient of e_r in φ(e_s)
    let ker = solve_columns(a, n * n, |v| {
        let (row, s) = (v / n, v % n);
        let er = a.basis(row);
        let mut out = Vec::with_capacity(2 * n * n * n);
        for i in 0..n {
            for j in 0..n {
                let coef = a.mul_basis(i, j)[s].clone();
                let phi_prod = a.scale(&coef, &er);
                let left = if j == s { a.mul(&a.basis(i), &er) } else { a.zero() };
                let right = if i == s { a.mul(&er, &a.basis(j)) } else { a.zero() };
                out.extend(phi_prod.iter().zip(&left).map(|(x, y)| r.sub(x, y)));
                out.extend(phi_prod.iter().zip(&right).map(|(x, y)| r.sub(x, y)));
            }
        }
        out
    })?;
    let basis = ker
        .basis()
        .iter()
        .map(|v| Matrix::from_rows(r, v.chunks(n).map(<[Scalar]>::to_vec).collect(), n))
        .collect::<Result<Vec<_>>>()?;
    Ok(EndoSpace { dim: n, basis })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// ℓ(S) = {x : xS = 0}, r(S) = {x : Sx = 0}, or their intersection.
pub fn annihilator(a: &Algebra, s: &Subspace, side: Side) -> Result<Subspace> {
    if s.ambient() != a.dim() {
        return Err(Error::AmbientMismatch(s.ambient(), a.dim()));
    }
    solve_columns(a, a.dim(), |k| {
        let e = a.basis(k);
        let mut v = Vec::new();
        for b in s.basis() {
            if side != Side::Right {
                v.extend(a.mul(&e, b));
            }
            if side != Side::Left {
                v.extend(a.mul(b, &e));
            }
        }
        v
    })
}

/// Ann_A(m) = {x : m·x = 0}.
pub fn integer_annihilator(a: &Algebra, m: i64) -> Result<Subspace> {
    let c = a.ring().from_int(m);
    solve_columns(a, a.dim(), |k| a.scale(&c, &a.basis(k)))
}

/// The two-sided ideal generated by all commutators.
pub fn commutator_ideal(a: &Algebra) -> Result<Subspace> {
    let n = a.dim();
    let gens: Vec<Vector> =
        (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).map(|(i, j)| a.commutator(&a.basis(i), &a.basis(j))).collect();
    a.ideal_generated_by(&gens)
}

/// All e with e² = e, by exhaustive scan.
pub fn idempotents(a: &Algebra) -> Result<Vec<Vector>> {
    Ok(a.elements()?.into_iter().filter(|e| a.mul(e, e) == *e).collect())
}

pub fn all_idempotents_central(a: &Algebra) -> Result<bool> {
    let c = center(a)?;
    Ok(idempotents(a)?.iter().all(|e| c.contains(e)))
}

/// a ≠ 0 with ab = 0 for some b ≠ 0.
pub fn is_left_zero_divisor(a: &Algebra, x: &[Scalar]) -> Result<bool> {
    Ok(!a.is_zero(x) && !a.left_mul_matrix(x).kernel()?.is_zero())
}

pub fn is_right_zero_divisor(a: &Algebra, x: &[Scalar]) -> Result<bool> {
    Ok(!a.is_zero(x) && !a.right_mul_matrix(x).kernel()?.is_zero())
}

/// Whether every left zero-divisor is a right zero-divisor and conversely (exhaustive).
pub fn zero_divisors_symmetric(a: &Algebra) -> Result<bool> {
    for x in a.elements()? {
        if is_left_zero_divisor(a, &x)? != is_right_zero_divisor(a, &x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// (x, y, y) = 0 for all x, y, via (e_k, e_i, e_i) = 0 and (e_k, e_i, e_j) + (e_k, e_j, e_i) = 0.
pub fn is_right_alternative(a: &Algebra) -> bool {
    if a.is_associative() {
        return true;
    }
    polarized(a, |x, y, z| a.associator(x, y, z))
}

/// (y, y, x) = 0 for all x, y, via the mirrored conditions.
pub fn is_left_alternative(a: &Algebra) -> bool {
    if a.is_associative() {
        return true;
    }
    polarized(a, |x, y, z| a.associator(y, z, x))
}

pub fn is_alternative(a: &Algebra) -> bool {
    is_right_alternative(a) && is_left_alternative(a)
}

fn polarized(a: &Algebra, assoc: impl Fn(&[Scalar], &[Scalar], &[Scalar]) -> Vector) -> bool {
    let n = a.dim();
    let b: Vec<Vector> = (0..n).map(|i| a.basis(i)).collect();
    (0..n).all(|k| {
        (0..n).all(|i| {
            a.is_zero(&assoc(&b[k], &b[i], &b[i]))
                && (0..i).all(|j| a.is_zero(&a.add(&assoc(&b[k], &b[i], &b[j]), &assoc(&b[k], &b[j], &b[i]))))
        })
    })
}
