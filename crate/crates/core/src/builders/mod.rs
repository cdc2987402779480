//! Constructors for the concrete algebras studied in the workbench.

mod cayley_dickson;
mod examples;
mod grassmann;

pub use cayley_dickson::{cayley_dickson, cayley_dickson_scalar, octonion_algebra, quaternion_algebra, scalar_algebra};
pub use examples::{ce_matrix_family, skew_poly_quotient, t_algebra, uniserial_derivation_ring, TVariant};
pub use grassmann::{grassmann, grassmann_over, grassmann_positive_part, grassmann_sign};

use crate::algebra::triangular::DerivationTriangularRing;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalars::{PolyBase, Scalar, ScalarRing};

/// A group algebra together with the data its analysis needs.
#[derive(Clone, Debug)]
pub struct GroupAlgebraInfo {
    pub algebra: Algebra,
    pub group: FiniteGroup,
    pub class_sums: Vec<Vector>,
    pub augmentation: Subspace,
}

pub fn group_algebra(ring: &ScalarRing, g: &FiniteGroup) -> Result<GroupAlgebraInfo> {
    let n = g.order();
    let one = ring.one();
    let algebra = Algebra::from_entries(
        ring,
        g.labels().to_vec(),
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, g.mul(a, b), one.clone())),
    )?;
    let e = g.identity();
    let algebra = algebra.with_unit(unit_vec(ring, n, e))?;
    let class_sums = g
        .conjugacy_classes()
        .iter()
        .map(|cls| {
            let mut v = algebra.zero();
            for &x in cls {
                v[x] = one.clone();
            }
            v
        })
        .collect();
    let aug_gens = (0..n)
        .filter(|&x| x != e)
        .map(|x| {
            let mut v = algebra.basis(x);
            v[e] = ring.neg(&one);
            v
        })
        .collect();
    let augmentation = Subspace::new(ring, n, aug_gens)?;
    Ok(GroupAlgebraInfo { algebra, group: g.clone(), class_sums, augmentation })
}

fn unit_vec(ring: &ScalarRing, n: usize, i: usize) -> Vector {
    crate::linalg::unit_vec(ring, n, i)
}

/// Monoid algebra of a finite monoid given by its multiplication table.
pub fn monoid_algebra(ring: &ScalarRing, labels: Vec<String>, table: &[Vec<usize>]) -> Result<Algebra> {
    let n = labels.len();
    if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(Error::NotAMonoid("table shape does not match the labels".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAMonoid(format!("not associative at ({}, {}, {})", labels[a], labels[b], labels[c])));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotAMonoid("no identity".into()))?;
    let one = ring.one();
    let entries = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, table[a][b], one.clone()));
    Algebra::from_entries(ring, labels, entries.collect::<Vec<_>>())?.with_unit(unit_vec(ring, n, e))
}

/// The algebra spanned by the given square matrices; products are re-expressed in that span.
pub fn matrix_span_algebra(ring: &ScalarRing, size: usize, mats: &[Vec<Vec<Scalar>>], labels: Vec<String>) -> Result<Algebra> {
    let flat = |m: &Vec<Vec<Scalar>>| -> Vector { m.iter().flatten().cloned().collect() };
    let cols: Vec<Vector> = mats.iter().map(flat).collect();
    let span = Matrix::from_columns(ring, &cols, size * size)?;
    if span.kernel()?.rank() != 0 {
        return Err(Error::UnsupportedParameter("matrices are linearly dependent".into()));
    }
    let mut entries = Vec::new();
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            let prod = mat_mul(ring, a, b);
            let c = span.solve(&flat(&prod))?.ok_or_else(|| {
                Error::UnsupportedParameter(format!("span not closed: {}·{} leaves it", labels[i], labels[j]))
            })?;
            entries.extend(c.into_iter().enumerate().map(|(k, x)| (i, j, k, x)));
        }
    }
    let alg = Algebra::from_entries(ring, labels, entries)?;
    let id: Vec<Vec<Scalar>> =
        (0..size).map(|r| (0..size).map(|c| if r == c { ring.one() } else { ring.zero() }).collect()).collect();
    match span.solve(&flat(&id))? {
        Some(u) => alg.with_unit(u),
        None => Ok(alg),
    }
}

pub(crate) fn mat_mul(ring: &ScalarRing, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(&a[i][k], &b[k][j]))))
                .collect()
        })
        .collect()
}

/// R[x]/(x^k) with R the scalar ring.
pub fn truncated_scalars(ring: &ScalarRing, k: usize) -> Result<Algebra> {
    if k == 0 {
        return Err(Error::UnsupportedParameter("truncation degree must be at least 1".into()));
    }
    let labels = (0..k).map(|i| monomial_label(&[("x", i)])).collect();
    let entries = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|(i, j)| i + j < k)
        .map(|(i, j)| (i, j, i + j, ring.one()));
    Algebra::from_entries(ring, labels, entries.collect::<Vec<_>>())?.with_unit(unit_vec(ring, k, 0))
}

/// A[x]/(x^k) with x central; basis a_i·x^j at index i·k + j.
pub fn truncated_polynomial(a: &Algebra, k: usize) -> Result<Algebra> {
    a.tensor_unchecked(&truncated_scalars(a.ring(), k)?)
}

/// The two-derivation triangular ring over ℤ[x,y] (`p = None`) or F_p[x,y].
pub fn jelonek_triangular(p: Option<u64>) -> Result<DerivationTriangularRing> {
    let base = match p {
        None => PolyBase::Integers,
        Some(p) => PolyBase::PrimeField(p),
    };
    let ring = ScalarRing::polynomial_ring(base, &["x", "y"])?;
    DerivationTriangularRing::new(&ring, "d1", "d2")
}

/// "1", "t", "t^2*x", … from variable powers.
pub(crate) fn monomial_label(parts: &[(&str, usize)]) -> String {
    let s: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s.join("*")
    }
}
