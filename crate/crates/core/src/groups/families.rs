use super::FiniteGroup;
use crate::error::{Error, Result};

fn power_label(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn word(parts: &[String]) -> String {
    let s: String = parts.concat();
    if s.is_empty() {
        "e".into()
    } else {
        s
    }
}

pub fn trivial_group() -> FiniteGroup {
    cyclic(1).expect("order 1")
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    let labels = (0..n).map(|i| word(&[power_label("g", i)])).collect();
    FiniteGroup::from_fn(labels, |i, j| (i + j) % n)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let m = h.order();
    let labels = (0..g.order() * m).map(|i| format!("({},{})", g.label(i / m), h.label(i % m))).collect();
    FiniteGroup::from_fn(labels, |x, y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
}

/// N ⋊ H with (n₁,h₁)(n₂,h₂) = (n₁·φ_{h₁}(n₂), h₁h₂); `action[h]` is φ_h as a permutation of N.
pub fn semidirect_product(n: &FiniteGroup, h: &FiniteGroup, action: &[Vec<usize>]) -> Result<FiniteGroup> {
    if action.len() != h.order() {
        return Err(Error::NotAHomomorphism(format!("expected {} maps, found {}", h.order(), action.len())));
    }
    for (i, phi) in action.iter().enumerate() {
        if !n.is_automorphism(phi) {
            return Err(Error::NotAnAutomorphism(format!("image of {}", h.label(i))));
        }
    }
    for a in 0..h.order() {
        for b in 0..h.order() {
            let ab = &action[h.mul(a, b)];
            if (0..n.order()).any(|x| ab[x] != action[a][action[b][x]]) {
                return Err(Error::NotAHomomorphism(format!("at ({}, {})", h.label(a), h.label(b))));
            }
        }
    }
    let m = h.order();
    let labels = (0..n.order() * m).map(|i| format!("({},{})", n.label(i / m), h.label(i % m))).collect();
    FiniteGroup::from_fn(labels, |x, y| {
        let (n1, h1, n2, h2) = (x / m, x % m, y / m, y % m);
        n.mul(n1, action[h1][n2]) * m + h.mul(h1, h2)
    })
}

/// N ⋊ ⟨φ⟩ for a single automorphism φ of N.
pub fn semidirect_cyclic(n: &FiniteGroup, phi: &[usize]) -> Result<FiniteGroup> {
    if !n.is_automorphism(phi) {
        return Err(Error::NotAnAutomorphism("generator".into()));
    }
    let mut powers = vec![(0..n.order()).collect::<Vec<_>>()];
    loop {
        let last = powers.last().expect("nonempty");
        let next: Vec<usize> = last.iter().map(|&x| phi[x]).collect();
        if next.iter().enumerate().all(|(i, &x)| i == x) {
            break;
        }
        powers.push(next);
    }
    let h = cyclic(powers.len())?;
    semidirect_product(n, &h, &powers)
}

/// Groups of order 2m on a^i b^j with (a^i b^j)(a^k b^l) = a^{i + r^j k + [j=l=1]s} b^{j+l}.
fn metacyclic(m: usize, r: i64, s: usize) -> Result<FiniteGroup> {
    let labels = (0..2 * m).map(|x| word(&[power_label("a", x % m), power_label("b", x / m)])).collect();
    let mi = m as i64;
    FiniteGroup::from_fn(labels, |x, y| {
        let (i, j, k, l) = ((x % m) as i64, x / m, (y % m) as i64, y / m);
        let twisted = if j == 1 { r * k } else { k };
        let extra = if j == 1 && l == 1 { s as i64 } else { 0 };
        let e = (i + twisted + extra).rem_euclid(mi) as usize;
        e + m * ((j + l) % 2)
    })
}

/// Q₈ on e, a, a², a³, b, ab, a²b, a³b with a = i, b = j.
pub fn quaternion_q8() -> FiniteGroup {
    metacyclic(4, -1, 2).expect("Q8")
}

/// Dihedral group of the given order (2n, n ≥ 2).
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 4 || order % 2 != 0 {
        return Err(Error::UnsupportedParameter(format!("dihedral order {order}")));
    }
    metacyclic(order / 2, -1, 0)
}

/// Generalized quaternion group of order 2^k ≥ 8.
pub fn generalized_quaternion(order: usize) -> Result<FiniteGroup> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::UnsupportedParameter(format!("generalized quaternion order {order}")));
    }
    let m = order / 2;
    metacyclic(m, -1, m / 2)
}

/// Semidihedral group of order 2^k ≥ 16: b a b⁻¹ = a^{m/2 - 1}.
pub fn semidihedral(order: usize) -> Result<FiniteGroup> {
    if order < 16 || !order.is_power_of_two() {
        return Err(Error::UnsupportedParameter(format!("semidihedral order {order}")));
    }
    let m = order / 2;
    metacyclic(m, (m / 2 - 1) as i64, 0)
}

pub fn symmetric(k: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&k) {
        return Err(Error::UnsupportedParameter(format!("symmetric degree {k}")));
    }
    let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
    for pos in 1..k {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..=pos).map(move |i| {
                    let mut q = p.clone();
                    q.swap(i, pos);
                    q
                })
            })
            .collect();
    }
    perms.sort();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    let idx = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed");
    // (στ)(x) = σ(τ(x))
    FiniteGroup::from_fn(labels, |a, b| {
        let c: Vec<usize> = (0..k).map(|x| perms[a][perms[b][x]]).collect();
        idx(&c)
    })
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x + 1);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Triples (y, z, x) ∈ (Z_{pⁿ})³ read as b^y c^z a^x, with c central and a b a⁻¹ = b c.
pub fn heisenberg(p: usize, n: usize) -> Result<FiniteGroup> {
    if !crate::scalars::is_prime(p as u64) || n == 0 {
        return Err(Error::UnsupportedParameter(format!("heisenberg p={p}, n={n}")));
    }
    let q = p.checked_pow(n as u32).filter(|q| q.checked_pow(3).is_some_and(|o| o <= super::MAX_ORDER));
    let q = q.ok_or_else(|| Error::UnsupportedParameter(format!("heisenberg p={p}, n={n} exceeds order {}", super::MAX_ORDER)))?;
    let enc = |y: usize, z: usize, x: usize| (y * q + z) * q + x;
    let dec = |i: usize| (i / (q * q), (i / q) % q, i % q);
    let labels = (0..q * q * q)
        .map(|i| {
            let (y, z, x) = dec(i);
            word(&[power_label("b", y), power_label("c", z), power_label("a", x)])
        })
        .collect();
    FiniteGroup::from_fn(labels, |u, v| {
        let ((y, z, x), (y2, z2, x2)) = (dec(u), dec(v));
        enc((y + y2) % q, (z + z2 + x * y2) % q, (x + x2) % q)
    })
}

/// (Q₈ × C₂) ⋊ ⟨α⟩ with α swapping i and j and sending the C₂ generator t to (−1)t.
pub fn order32_example() -> FiniteGroup {
    let q8 = quaternion_q8();
    let c2 = cyclic(2).expect("C2");
    let n = direct_product(&q8, &c2).expect("Q8 x C2");
    let el = |q: &str, c: usize| q8.index_of(q).expect("label") * 2 + c;
    let gens = [el("a", 0), el("b", 0), el("e", 1)];
    let images = [el("b", 0), el("a", 0), el("a^2", 1)];
    let alpha = n.extend_hom(&gens, &images, &n).expect("alpha is an endomorphism");
    semidirect_cyclic(&n, &alpha).expect("alpha is an automorphism")
}

/// N ⋊ ⟨β̂⟩ of order p⁵ for p = 3, N = A ⋊ ⟨γ⟩ on a^k b^l c^m γ^r.
pub fn order_p5_example(p: usize) -> Result<FiniteGroup> {
    if p != 3 {
        return Err(Error::UnsupportedParameter(format!("order p^5 example only for p = 3, got {p}")));
    }
    let enc = |k: usize, l: usize, m: usize, r: usize| ((k % p * p + l % p) * p + m % p) * p + r % p;
    let dec = |i: usize| (i / (p * p * p), (i / (p * p)) % p, (i / p) % p, i % p);
    let labels = (0..p.pow(4))
        .map(|i| {
            let (k, l, m, r) = dec(i);
            word(&[power_label("a", k), power_label("b", l), power_label("c", m), power_label("γ", r)])
        })
        .collect();
    let n = FiniteGroup::from_fn(labels, |u, v| {
        let ((k, l, m, r), (k2, l2, m2, r2)) = (dec(u), dec(v));
        enc(k + k2, l + l2 + r * m2, m + m2, r + r2)
    })?;
    let beta: Vec<usize> = (0..n.order())
        .map(|i| {
            let (k, l, m, r) = dec(i);
            enc(k + m + r, l + r * (r + 1) / 2, m + r, r)
        })
        .collect();
    semidirect_cyclic(&n, &beta)
}
