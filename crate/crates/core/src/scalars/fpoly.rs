//! Dense univariate polynomials over F_p, coefficients low degree first.

pub type FPoly = Vec<u64>;

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn trim(mut a: FPoly) -> FPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub fn neg(a: &[u64], p: u64) -> FPoly {
    a.iter().map(|&c| (p - c) % p).collect()
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FPoly {
    add(a, &neg(b, p), p)
}

pub fn scale(a: &[u64], c: u64, p: u64) -> FPoly {
    trim(a.iter().map(|&x| mulmod(x, c, p)).collect())
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Division with remainder; `b` must be nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (FPoly, FPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(b[db], p).expect("leading coefficient invertible");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mulmod(r[dr], lead_inv, p);
        let shift = dr - db;
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[i + shift] = (r[i + shift] + p - mulmod(c, bc, p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic(a: &[u64], p: u64) -> FPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, inv_mod(l, p).expect("nonzero leading"), p),
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Returns (g, s) with s·a ≡ g (mod m), g = gcd(a, m) monic.
pub fn inverse_mod_poly(a: &[u64], m: &[u64], p: u64) -> Option<FPoly> {
    let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
    let (mut s0, mut s1): (FPoly, FPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = inv_mod(r0[0], p)?;
    Some(divrem(&scale(&s0, c, p), m, p).1)
}

pub fn derivative(a: &[u64], p: u64) -> FPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect())
}

/// Substitutes t ↦ t^k.
pub fn inflate(a: &[u64], k: usize) -> FPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; (a.len() - 1) * k + 1];
    for (i, &c) in a.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

/// Trial division by every monic polynomial of degree ≤ deg/2.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    for dd in 1..=d / 2 {
        let count = p.pow(dd as u32);
        for idx in 0..count {
            let mut g = vec![0u64; dd + 1];
            let mut v = idx;
            for c in g.iter_mut().take(dd) {
                *c = v % p;
                v /= p;
            }
            g[dd] = 1;
            if divrem(f, &g, p).1.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first monic irreducible polynomial of degree `k`.
pub fn first_irreducible(p: u64, k: usize) -> FPoly {
    let count = p.pow(k as u32);
    for idx in 0..count {
        let mut g = vec![0u64; k + 1];
        let mut v = idx;
        for c in g.iter_mut().take(k) {
            *c = v % p;
            v /= p;
        }
        g[k] = 1;
        if is_irreducible(&g, p) {
            return g;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_is_irreducible() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert_eq!(first_irreducible(2, 2), vec![1, 1, 1]);
    }

    #[test]
    fn division_roundtrip() {
        let a = vec![1, 2, 0, 1];
        let b = vec![2, 1];
        let (q, r) = divrem(&a, &b, 3);
        assert_eq!(add(&mul(&q, &b, 3), &r, 3), trim(a));
    }

    #[test]
    fn poly_inverse() {
        let m = vec![1, 1, 1];
        let inv = inverse_mod_poly(&[0, 1], &m, 2).unwrap();
        assert_eq!(inv, vec![1, 1]);
    }
}
