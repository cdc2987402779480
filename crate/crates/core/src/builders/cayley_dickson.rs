use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalars::{Scalar, ScalarRing};

/// K as a one-dimensional algebra with the identity involution.
pub fn scalar_algebra(ring: &ScalarRing) -> Algebra {
    let a = Algebra::from_entries(ring, vec!["1".into()], [(0, 0, 0, ring.one())]).expect("dim 1");
    let e = a.basis(0);
    a.with_unit(e.clone()).expect("unit").with_involution(vec![e]).expect("identity involution")
}

fn is_central(a: &Algebra, x: &[Scalar]) -> bool {
    let n = a.dim();
    (0..n).all(|i| {
        let ei = a.basis(i);
        a.is_zero(&a.commutator(x, &ei))
            && (0..n).all(|j| {
                let ej = a.basis(j);
                a.is_zero(&a.associator(x, &ei, &ej))
                    && a.is_zero(&a.associator(&ei, x, &ej))
                    && a.is_zero(&a.associator(&ei, &ej, x))
            })
    })
}

fn is_invertible(a: &Algebra, x: &[Scalar], unit: &[Scalar]) -> Result<bool> {
    let n = a.dim();
    let l = a.left_mul_matrix(x);
    let r = a.right_mul_matrix(x);
    let mut rows = l.rows_vec();
    rows.extend(r.rows_vec());
    let stacked = Matrix::from_rows(a.ring(), rows, n)?;
    let rhs: Vector = unit.iter().chain(unit).cloned().collect();
    Ok(stacked.solve(&rhs)?.is_some())
}

/// The doubling (A, α) on pairs with (a₁,a₂)(a₃,a₄) = (a₁a₃ + α·a₄a₂*, a₁*a₄ + a₃a₂) and (a,b)* = (a*, −b).
pub fn cayley_dickson(a: &Algebra, alpha: &[Scalar]) -> Result<Algebra> {
    let inv = a.involution().ok_or(Error::NoInvolution)?;
    let unit = a.unit().ok_or(Error::NotUnital)?.clone();
    if alpha.len() != a.dim() {
        return Err(Error::AlgebraMismatch);
    }
    if !is_central(a, alpha) {
        return Err(Error::AlphaNotCentral);
    }
    if a.apply_involution(alpha)? != alpha {
        return Err(Error::AlphaNotSymmetric);
    }
    if !is_invertible(a, alpha, &unit)? {
        return Err(Error::AlphaNotUnit);
    }
    let n = a.dim();
    let r = a.ring();
    let zero = a.zero();
    let pair = |x: Vector, y: Vector| -> Vector { x.into_iter().chain(y).collect() };
    let labels: Vec<String> = a
        .labels()
        .iter()
        .cloned()
        .chain(a.labels().iter().map(|l| if l == "1" { "v".to_string() } else { format!("v{l}") }))
        .collect();
    let dbl = Algebra::from_fn(r, labels, |i, j| {
        let (hi, hj) = (i >= n, j >= n);
        let (ei, ej) = (a.basis(i % n), a.basis(j % n));
        match (hi, hj) {
            (false, false) => pair(a.mul(&ei, &ej), zero.clone()),
            (false, true) => pair(zero.clone(), a.mul(&inv[i], &ej)),
            (true, false) => pair(zero.clone(), a.mul(&ej, &ei)),
            (true, true) => pair(a.mul(alpha, &a.mul(&ej, &inv[i % n])), zero.clone()),
        }
    })?;
    let dbl = dbl.with_unit(pair(unit, zero.clone()))?;
    let images = (0..2 * n)
        .map(|i| if i < n { pair(inv[i].clone(), zero.clone()) } else { pair(zero.clone(), a.scale(&r.from_int(-1), &a.basis(i - n))) })
        .collect();
    dbl.with_involution(images)
}

/// Doubling with α = c·1 for a scalar c.
pub fn cayley_dickson_scalar(a: &Algebra, c: &Scalar) -> Result<Algebra> {
    let u = a.unit().ok_or(Error::NotUnital)?;
    cayley_dickson(a, &a.scale(c, u))
}

/// The quaternion algebra (a, b / K) on 1, i, j, k with i² = a, j² = b, ij = k.
pub fn quaternion_algebra(ring: &ScalarRing, a: &Scalar, b: &Scalar) -> Result<Algebra> {
    let k = scalar_algebra(ring);
    let first = cayley_dickson_scalar(&k, a)?;
    let q = cayley_dickson_scalar(&first, b)?;
    // raw basis: (1,0), (v,0), (0,1), (0,v)
    let e = |i| q.basis(i);
    let neg = |v: Vector| q.scale(&ring.from_int(-1), &v);
    let basis = vec![e(0), e(1), e(2), neg(e(3))];
    q.change_basis(&basis, ["1", "i", "j", "k"].map(String::from).to_vec())
}

/// The octonion algebra doubling (a, b / K) by c, on 1, i, j, k, l, il, jl, kl.
pub fn octonion_algebra(ring: &ScalarRing, a: &Scalar, b: &Scalar, c: &Scalar) -> Result<Algebra> {
    let q = quaternion_algebra(ring, a, b)?;
    let o = cayley_dickson_scalar(&q, c)?;
    let e = |i| o.basis(i);
    let neg = |v: Vector| o.scale(&ring.from_int(-1), &v);
    let basis = vec![e(0), e(1), e(2), e(3), e(4), neg(e(5)), neg(e(6)), neg(e(7))];
    o.change_basis(&basis, ["1", "i", "j", "k", "l", "il", "jl", "kl"].map(String::from).to_vec())
}
