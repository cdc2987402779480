use super::{matrix_span_algebra, monomial_label};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarRing};

fn zero_mat(ring: &ScalarRing, n: usize) -> Vec<Vec<Scalar>> {
    vec![vec![ring.zero(); n]; n]
}

/// Nilpotent n×n pattern with free first row a_{12}..a_{1n} and the repeated entries
/// a_{13} at (2,4), (n−1,n); a_{12} at (n−2,n); a_{1,n−2} at (2,n); a_{1,n−1} at (3,n).
/// Basis vector `a1j` sets a_{1j} = 1; a unit is adjoined unless `adjoin_unit` is false.
pub fn ce_matrix_family(ring: &ScalarRing, n: usize, adjoin_unit: bool) -> Result<Algebra> {
    if n < 7 {
        return Err(Error::UnsupportedN(n));
    }
    let one = ring.one();
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    if adjoin_unit {
        let mut id = zero_mat(ring, n);
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = one.clone();
        }
        mats.push(id);
        labels.push("1".to_string());
    }
    // 0-based copies of each parameter
    let extra = |j: usize| -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        if j == 3 {
            v.push((1, 3));
            v.push((n - 2, n - 1));
        }
        if j == 2 {
            v.push((n - 3, n - 1));
        }
        if j == n - 2 {
            v.push((1, n - 1));
        }
        if j == n - 1 {
            v.push((2, n - 1));
        }
        v
    };
    for j in 2..=n {
        let mut m = zero_mat(ring, n);
        m[0][j - 1] = one.clone();
        for (r, c) in extra(j) {
            m[r][c] = one.clone();
        }
        mats.push(m);
        labels.push(format!("a1_{j}"));
    }
    matrix_span_algebra(ring, n, &mats, labels)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TVariant {
    K,
    R,
    S(i64),
    T,
}

/// Subalgebras of 3×3 upper triangular matrices: K = ⟨I, E13⟩, R = ⟨I, E12, E13⟩,
/// S(k) = ⟨I, E12 + kE23, E13⟩, T = ⟨I, E12, E13, E23⟩.
pub fn t_algebra(ring: &ScalarRing, variant: &TVariant) -> Result<Algebra> {
    let unit = |r: usize, c: usize, v: i64| {
        let mut m = zero_mat(ring, 3);
        m[r][c] = ring.from_int(v);
        m
    };
    let add = |a: Vec<Vec<Scalar>>, b: Vec<Vec<Scalar>>| -> Vec<Vec<Scalar>> {
        a.iter().zip(&b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| ring.add(p, q)).collect()).collect()
    };
    let id = add(add(unit(0, 0, 1), unit(1, 1, 1)), unit(2, 2, 1));
    let (mats, labels): (Vec<_>, Vec<&str>) = match variant {
        TVariant::K => (vec![id, unit(0, 2, 1)], vec!["1", "E13"]),
        TVariant::R => (vec![id, unit(0, 1, 1), unit(0, 2, 1)], vec!["1", "E12", "E13"]),
        TVariant::S(k) => {
            if ring.is_zero(&ring.from_int(*k)) {
                return Err(Error::UnsupportedParameter("S(k) needs k ≠ 0".into()));
            }
            (vec![id, add(unit(0, 1, 1), unit(1, 2, *k)), unit(0, 2, 1)], vec!["1", "E12+kE23", "E13"])
        }
        TVariant::T => (vec![id, unit(0, 1, 1), unit(0, 2, 1), unit(1, 2, 1)], vec!["1", "E12", "E13", "E23"]),
    };
    matrix_span_algebra(ring, 3, &mats, labels.into_iter().map(String::from).collect())
}

/// F_q[x; σ]/(x^k) as an F_p-algebra on θ^i x^j, with σ the Frobenius and θ the field generator.
pub fn skew_poly_quotient(q: u64, k: usize) -> Result<Algebra> {
    let (p, m) = prime_power(q).ok_or_else(|| Error::UnsupportedParameter(format!("q = {q} is not a prime power")))?;
    if k < 2 {
        return Err(Error::UnsupportedParameter(format!("k = {k} must be at least 2")));
    }
    let fq = ScalarRing::galois_field_default(p, m as u32)?;
    let fp = ScalarRing::prime_field(p)?;
    let theta = fq.variable("t")?;
    let idx = |i: usize, j: usize| j * m + i;
    let mut labels = vec![String::new(); k * m];
    for j in 0..k {
        for i in 0..m {
            labels[idx(i, j)] = monomial_label(&[("θ", i), ("x", j)]);
        }
    }
    let mut entries = Vec::new();
    for (a, b, c, d) in itertools4(m, k) {
        if b + d >= k {
            continue;
        }
        // θ^a · σ^b(θ^c) = θ^a · θ^{c p^b}
        let tc = fq.pow(&theta, (c as u64) * p.pow(b as u32));
        let prod = fq.mul(&fq.pow(&theta, a as u64), &tc);
        for (i, coef) in fq.gf_coords(&prod).into_iter().enumerate() {
            if coef != 0 {
                entries.push((idx(a, b), idx(c, d), idx(i, b + d), fp.from_int(coef as i64)));
            }
        }
    }
    let alg = Algebra::from_entries(&fp, labels, entries)?;
    let u = alg.basis(0);
    alg.with_unit(u)
}

fn itertools4(m: usize, k: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..m).flat_map(move |a| (0..k).flat_map(move |b| (0..m).flat_map(move |c| (0..k).map(move |d| (a, b, c, d)))))
}

fn prime_power(q: u64) -> Option<(u64, usize)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut r = q;
    let mut m = 0;
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

/// The uniserial ring over K = F_p(u), u = t^p, on t^i x^j (i < p, j < 4),
/// with x·t = t·x + x³, t^p = u and x⁴ = 0.
pub fn uniserial_derivation_ring(p: u64) -> Result<Algebra> {
    if p != 2 && p != 3 {
        return Err(Error::UnsupportedParameter(format!("p = {p}; only 2 and 3 are supported")));
    }
    let k = ScalarRing::rational_function_field(p, "u")?;
    let pu = p as usize;
    let idx = |i: usize, j: usize| j * pu + i;
    let mut labels = vec![String::new(); 4 * pu];
    for j in 0..4 {
        for i in 0..pu {
            labels[idx(i, j)] = monomial_label(&[("t", i), ("x", j)]);
        }
    }
    let u = k.variable("u")?;
    // t^e x^j reduced with t^p = u
    let term = |e: usize, j: usize, c: Scalar| -> (usize, Scalar) {
        if e >= pu {
            (idx(e - pu, j), k.mul(&c, &u))
        } else {
            (idx(e, j), c)
        }
    };
    let mut entries = Vec::new();
    for (a, b, c, d) in itertools4(pu, 4) {
        if b + d < 4 {
            let (t, coef) = term(a + c, b + d, k.one());
            entries.push((idx(a, b), idx(c, d), t, coef));
        }
        // x·t^c = t^c·x + c·t^{c−1}·x³
        if b == 1 && c > 0 && 3 + d < 4 {
            let (t, coef) = term(a + c - 1, 3 + d, k.from_int(c as i64));
            entries.push((idx(a, b), idx(c, d), t, coef));
        }
    }
    let alg = Algebra::from_entries(&k, labels, entries)?;
    let one = alg.basis(0);
    alg.with_unit(one)
}
