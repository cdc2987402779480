use super::structure::{center, solve_columns};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{combination, Matrix, Subspace, Vector};
use crate::scalars::{is_prime, ScalarKind};

/// Nilpotent elements of a commutative associative algebra.
pub fn nilradical_commutative(c: &Algebra) -> Result<Subspace> {
    nilradical_within(c, &Subspace::full(c.ring(), c.dim()))
}

/// Nilpotent elements of Z(A), as a subspace of A.
pub fn center_nilradical(a: &Algebra) -> Result<Subspace> {
    nilradical_within(a, &center(a)?)
}

/// Whether the nilradical of the center can be computed for these scalars.
pub fn nilradical_supported(a: &Algebra, c: &Subspace) -> bool {
    match a.ring().kind() {
        ScalarKind::PrimeField { .. } | ScalarKind::GaloisField { .. } | ScalarKind::Rationals => true,
        ScalarKind::ResidueRing { n } => is_prime(*n) || c.cardinality().is_some_and(|s| s <= crate::scalars::enumeration_cap()),
        _ => false,
    }
}

/// Nilradical of the commutative subalgebra spanned by `c` inside `a`.
pub(crate) fn nilradical_within(a: &Algebra, c: &Subspace) -> Result<Subspace> {
    let ring = a.ring();
    match ring.kind().clone() {
        ScalarKind::Rationals => trace_form_radical(a, c),
        ScalarKind::PrimeField { p } => frobenius_kernel(a, c, p, 1),
        ScalarKind::GaloisField { p, k, .. } => frobenius_kernel(a, c, p, k),
        ScalarKind::ResidueRing { n } if is_prime(n) => frobenius_kernel(a, c, n, 1),
        ScalarKind::ResidueRing { .. } => enumerate_nilpotents(a, c),
        _ => Err(Error::UnsupportedScalars(format!("no nilradical algorithm over {}", ring.name()))),
    }
}

fn trace(m: &Matrix) -> crate::scalars::Scalar {
    let r = m.ring();
    (0..m.nrows()).fold(r.zero(), |acc, i| r.add(&acc, m.get(i, i)))
}

/// Radical of (x, y) ↦ tr(L_{xy}); equals the nilradical in characteristic 0.
fn trace_form_radical(a: &Algebra, c: &Subspace) -> Result<Subspace> {
    let b = c.basis();
    let m = b.len();
    let ker = solve_columns(a, m, |j| (0..m).map(|i| trace(&a.left_mul_matrix(&a.mul(&b[i], &b[j])))).collect())?;
    let rows = ker.basis().iter().map(|l| combination(a.ring(), l, b, a.dim())).collect();
    a.span(rows)
}

/// Kernel of x ↦ x^{p^e} with p^e > dim C, which is additive on a commutative algebra in characteristic p.
/// Over GF(p^k) the map is σ^e-semilinear: solve for b = σ^e(λ), then untwist.
fn frobenius_kernel(a: &Algebra, c: &Subspace, p: u64, k: u32) -> Result<Subspace> {
    let ring = a.ring();
    let b = c.basis();
    let m = b.len();
    let mut e = 1u32;
    let mut q = p;
    while q <= m as u64 {
        q *= p;
        e += 1;
    }
    let w: Vec<Vector> = b.iter().map(|x| a.pow(x, q as usize).expect("positive exponent")).collect();
    let ker = solve_columns(a, m, |i| w[i].clone())?;
    let back = (k - e % k) % k;
    let mut rows = Vec::new();
    for v in ker.basis() {
        let mut lam = v.clone();
        for _ in 0..back {
            lam = lam.iter().map(|x| ring.frobenius(x)).collect::<Result<_>>()?;
        }
        rows.push(combination(ring, &lam, b, a.dim()));
    }
    a.span(rows)
}

fn is_nilpotent(a: &Algebra, x: &[crate::scalars::Scalar]) -> bool {
    let mut y = x.to_vec();
    for _ in 0..256 {
        if a.is_zero(&y) {
            return true;
        }
        y = a.mul(&y, x);
    }
    false
}

fn enumerate_nilpotents(a: &Algebra, c: &Subspace) -> Result<Subspace> {
    let mut acc = Subspace::zero(a.ring(), a.dim());
    for x in c.elements()? {
        if !acc.contains(&x) && is_nilpotent(a, &x) {
            acc = acc.sum(&a.span(vec![x])?)?;
        }
    }
    Ok(acc)
}

/// Soc(A_C) = {a : a·J(C) = 0}, valid for unital A of finite length over C.
pub fn socle_over_center(a: &Algebra) -> Result<Subspace> {
    let c = center(a)?;
    socle_with(a, &c)
}

pub(crate) fn socle_with(a: &Algebra, c: &Subspace) -> Result<Subspace> {
    if !a.is_unital() {
        return Err(Error::NotUnital);
    }
    let j = nilradical_within(a, c)?;
    super::structure::annihilator(a, &j, super::structure::Side::Left)
}

/// Result of checking that J is the radical of a local algebra with field quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalRadical {
    pub nilpotency_index: usize,
    pub quotient: Algebra,
    /// Whether the field property of A/J was decided exhaustively (otherwise only by dimension one).
    pub exhaustive: bool,
}

/// J a nilpotent two-sided ideal with A/J a field.
pub fn verify_local_radical(a: &Algebra, j: &Subspace) -> Result<LocalRadical> {
    if !a.is_unital() {
        return Err(Error::NotUnital);
    }
    if !a.is_ideal(j)? {
        return Err(Error::NotAnIdeal);
    }
    let index = a.nilpotency_index(j)?.ok_or(Error::NotNilpotent)?;
    let (q, _) = a.quotient_by_ideal(j)?;
    if !q.is_commutative() || !q.is_associative() {
        return Err(Error::QuotientNotAField);
    }
    if q.dim() == 0 {
        return Err(Error::QuotientNotAField);
    }
    let ring = q.ring();
    let exhaustive = if q.dim() == 1 && ring.is_field() {
        false
    } else if q.cardinality().is_some_and(|s| s <= crate::scalars::enumeration_cap()) {
        for x in q.elements()? {
            if !q.is_zero(&x) && !q.left_mul_matrix(&x).kernel()?.is_zero() {
                return Err(Error::QuotientNotAField);
            }
        }
        true
    } else {
        return Err(Error::UnsupportedScalars(format!("cannot decide whether a {}-dimensional quotient is a field", q.dim())));
    };
    Ok(LocalRadical { nilpotency_index: index, quotient: q, exhaustive })
}
