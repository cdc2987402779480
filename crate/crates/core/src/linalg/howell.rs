//! Howell normal form over Z/nZ on raw residues.

use num_integer::Integer;

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

#[inline]
fn m(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

/// Unit u with u·a ≡ gcd(a, n) (mod n).
fn normalizing_unit(a: u64, n: u64) -> u64 {
    let g = a.gcd(&n);
    let (a1, n1) = (a / g, n / g);
    let u0 = if n1 == 1 { 0 } else { super::super::scalars::fpoly::inv_mod(a1, n1).expect("coprime") };
    let mut u = u0;
    while u.gcd(&n) != 1 {
        u += n1.max(1);
    }
    u % n
}

/// Rows in Howell normal form spanning the same Z_n-submodule. Zero rows are dropped.
pub fn howell_form(mut a: Vec<Vec<u64>>, n: u64, cols: usize) -> Vec<Vec<u64>> {
    for row in a.iter_mut() {
        row.iter_mut().for_each(|x| *x %= n);
    }
    a.retain(|row| row.iter().any(|&x| x != 0));
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        for i in r + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let (x, y) = (a[r][c] as i128, a[i][c] as i128);
            let (g, s, t) = ext_gcd(x, y);
            let (u, v) = (y / g, x / g);
            for k in c..cols {
                let (p, q) = (a[r][k] as i128, a[i][k] as i128);
                a[r][k] = m(s * p + t * q, n);
                a[i][k] = m(-u * p + v * q, n);
            }
        }
        let unit = normalizing_unit(a[r][c], n);
        if unit != 1 {
            for k in c..cols {
                a[r][k] = ((a[r][k] as u128 * unit as u128) % n as u128) as u64;
            }
        }
        let g = a[r][c];
        for i in 0..r {
            let q = a[i][c] / g;
            if q != 0 {
                for k in c..cols {
                    a[i][k] = m(a[i][k] as i128 - q as i128 * a[r][k] as i128, n);
                }
            }
        }
        let ann = n / g;
        if ann != n {
            let extra: Vec<u64> =
                a[r].iter().map(|&x| ((x as u128 * ann as u128) % n as u128) as u64).collect();
            if extra.iter().any(|&x| x != 0) {
                a.push(extra);
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Reduces `v` against a Howell basis; returns the remainder and the coefficients used.
pub fn reduce(basis: &[Vec<u64>], v: &[u64], n: u64) -> (Vec<u64>, Vec<u64>) {
    let mut v: Vec<u64> = v.iter().map(|x| x % n).collect();
    let mut coeffs = vec![0u64; basis.len()];
    for (bi, row) in basis.iter().enumerate() {
        let c = row.iter().position(|&x| x != 0).expect("nonzero row");
        let g = row[c];
        if v[c] % g != 0 {
            continue;
        }
        let q = v[c] / g;
        if q == 0 {
            continue;
        }
        coeffs[bi] = q;
        for k in c..v.len() {
            v[k] = m(v[k] as i128 - q as i128 * row[k] as i128, n);
        }
    }
    (v, coeffs)
}
