//! Sparse polynomials in at most two variables over ℤ or F_p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

pub type MPoly = BTreeMap<[u32; 2], BigInt>;

fn reduce(c: BigInt, p: u64) -> BigInt {
    if p == 0 {
        c
    } else {
        c.mod_floor(&BigInt::from(p))
    }
}

pub fn constant(c: BigInt, p: u64) -> MPoly {
    let c = reduce(c, p);
    let mut m = MPoly::new();
    if !c.is_zero() {
        m.insert([0, 0], c);
    }
    m
}

pub fn var(idx: usize) -> MPoly {
    let mut e = [0u32; 2];
    e[idx] = 1;
    let mut m = MPoly::new();
    m.insert(e, BigInt::one());
    m
}

fn push(m: &mut MPoly, e: [u32; 2], c: BigInt, p: u64) {
    let entry = m.entry(e).or_insert_with(BigInt::zero);
    *entry = reduce(&*entry + c, p);
    if entry.is_zero() {
        m.remove(&e);
    }
}

pub fn add(a: &MPoly, b: &MPoly, p: u64) -> MPoly {
    let mut out = a.clone();
    for (e, c) in b {
        push(&mut out, *e, c.clone(), p);
    }
    out
}

pub fn neg(a: &MPoly, p: u64) -> MPoly {
    a.iter().map(|(e, c)| (*e, reduce(-c, p))).collect()
}

pub fn mul(a: &MPoly, b: &MPoly, p: u64) -> MPoly {
    let mut out = MPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            push(&mut out, [ea[0] + eb[0], ea[1] + eb[1]], ca * cb, p);
        }
    }
    out
}

pub fn derivative(a: &MPoly, idx: usize, p: u64) -> MPoly {
    let mut out = MPoly::new();
    for (e, c) in a {
        if e[idx] == 0 {
            continue;
        }
        let mut f = *e;
        f[idx] -= 1;
        push(&mut out, f, c * BigInt::from(e[idx]), p);
    }
    out
}

pub fn format(a: &MPoly, vars: &[String]) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut terms: Vec<_> = a.iter().collect();
    terms.sort_by(|(x, _), (y, _)| (y[0] + y[1], y).cmp(&(x[0] + x[1], x)));
    let mut s = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        let mut factors = Vec::new();
        if !mag.is_one() || (e[0] == 0 && e[1] == 0) {
            factors.push(mag.to_string());
        }
        for (k, &d) in e.iter().enumerate() {
            match d {
                0 => {}
                1 => factors.push(vars[k].clone()),
                _ => factors.push(format!("{}^{}", vars[k], d)),
            }
        }
        s.push_str(&factors.join("*"));
    }
    s
}
