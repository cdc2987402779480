//! Exact coefficient rings: F_p, GF(p^k), Z_n, ℚ, ℤ[x,y], F_p[x,y] and F_p(t).

pub mod fpoly;
mod mpoly;
mod parse;

use crate::error::{Error, Result};
use fpoly::{inv_mod, mulmod, FPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

pub use mpoly::MPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyBase {
    Integers,
    PrimeField(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScalarKind {
    PrimeField { p: u64 },
    GaloisField { p: u64, k: u32, modulus: Vec<u64>, var: String },
    ResidueRing { n: u64 },
    Rationals,
    PolynomialRing { base: PolyBase, vars: Vec<String> },
    RationalFunctionField { p: u64, var: String },
}

/// A derivation given as the partial derivative along one variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Derivation {
    pub name: String,
    pub var: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScalarRingSpec {
    #[serde(flatten)]
    pub kind: ScalarKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub derivations: Vec<Derivation>,
}

impl ScalarRingSpec {
    pub fn new(kind: ScalarKind) -> Self {
        ScalarRingSpec { kind, derivations: Vec::new() }
    }

    pub fn with_derivation(mut self, name: &str, var: &str) -> Self {
        self.derivations.push(Derivation { name: name.into(), var: var.into() });
        self
    }
}

/// Rational function num/den over F_p with monic denominator coprime to the numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFn {
    pub num: FPoly,
    pub den: FPoly,
}

/// Canonical scalar payload. Values carry no ring pointer; every operation goes through
/// the owning [`ScalarRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    /// Residue for F_p and Z_n; base-p packed coefficients for GF(p^k).
    Int(u64),
    Rat(BigRational),
    Poly(MPoly),
    Frac(RatFn),
}

struct GfData {
    q: u64,
    mul: Option<Vec<u32>>,
}

struct Inner {
    spec: ScalarRingSpec,
    gf: Option<GfData>,
}

/// Cheaply clonable handle to a validated coefficient ring.
#[derive(Clone)]
pub struct ScalarRing {
    inner: Arc<Inner>,
}

impl fmt::Debug for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarRing({})", self.name())
    }
}

impl PartialEq for ScalarRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}
impl Eq for ScalarRing {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Upper bound on brute-force enumeration; `CE_LAB_MAX_ENUM` overrides the default 2^20.
pub fn enumeration_cap() -> u128 {
    std::env::var("CE_LAB_MAX_ENUM")
        .ok()
        .and_then(|v| v.trim().parse::<u128>().ok())
        .unwrap_or(1 << 20)
}

fn unpack(mut x: u64, p: u64, k: usize) -> FPoly {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(x % p);
        x /= p;
    }
    fpoly::trim(out)
}

fn pack(a: &[u64], p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn fmt_upoly(a: &[u64], var: &str) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, &c) in a.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    parts.join("+")
}

impl ScalarRing {
    pub fn new(spec: ScalarRingSpec) -> Result<Self> {
        let mut gf = None;
        let vars: Vec<String> = match &spec.kind {
            ScalarKind::PrimeField { p } => {
                if !is_prime(*p) {
                    return Err(Error::NonPrimeModulus(*p));
                }
                vec![]
            }
            ScalarKind::GaloisField { p, k, modulus, var } => {
                if !is_prime(*p) {
                    return Err(Error::NonPrimeModulus(*p));
                }
                let m = fpoly::trim(modulus.iter().map(|c| c % p).collect());
                if *k == 0 || m.len() != *k as usize + 1 || m[*k as usize] != 1 {
                    return Err(Error::UnsupportedParameter(format!(
                        "modulus must be monic of degree {k}"
                    )));
                }
                if !fpoly::is_irreducible(&m, *p) {
                    return Err(Error::ReduciblePolynomial(fmt_upoly(&m, var)));
                }
                let q = p.checked_pow(*k).filter(|q| *q < (1 << 32)).ok_or_else(|| {
                    Error::UnsupportedParameter(format!("field order {p}^{k} too large"))
                })?;
                gf = Some(GfData { q, mul: None });
                vec![var.clone()]
            }
            ScalarKind::ResidueRing { n } => {
                if *n < 2 {
                    return Err(Error::UnsupportedParameter(format!("residue modulus {n} < 2")));
                }
                vec![]
            }
            ScalarKind::Rationals => vec![],
            ScalarKind::PolynomialRing { base, vars } => {
                if vars.is_empty() || vars.len() > 2 {
                    return Err(Error::UnsupportedVariableCount(vars.len()));
                }
                if let PolyBase::PrimeField(p) = base {
                    if !is_prime(*p) {
                        return Err(Error::NonPrimeModulus(*p));
                    }
                }
                vars.clone()
            }
            ScalarKind::RationalFunctionField { p, var } => {
                if !is_prime(*p) {
                    return Err(Error::NonPrimeModulus(*p));
                }
                vec![var.clone()]
            }
        };
        for d in &spec.derivations {
            if !vars.contains(&d.var) {
                return Err(Error::UnsupportedParameter(format!(
                    "derivation {} refers to unknown variable {}",
                    d.name, d.var
                )));
            }
        }
        let mut ring = ScalarRing { inner: Arc::new(Inner { spec, gf }) };
        if let Some(g) = &ring.inner.gf {
            if g.q <= 256 {
                let q = g.q;
                let mut table = vec![0u32; (q * q) as usize];
                for a in 0..q {
                    for b in 0..q {
                        table[(a * q + b) as usize] = ring.gf_mul_slow(a, b) as u32;
                    }
                }
                let spec = ring.inner.spec.clone();
                ring = ScalarRing {
                    inner: Arc::new(Inner { spec, gf: Some(GfData { q, mul: Some(table) }) }),
                };
            }
        }
        Ok(ring)
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        Self::new(ScalarRingSpec::new(ScalarKind::PrimeField { p }))
    }

    pub fn residue_ring(n: u64) -> Result<Self> {
        Self::new(ScalarRingSpec::new(ScalarKind::ResidueRing { n }))
    }

    pub fn rationals() -> Self {
        Self::new(ScalarRingSpec::new(ScalarKind::Rationals)).expect("ℚ is valid")
    }

    /// GF(p^k) with the given monic modulus (low degree first) in the variable `t`.
    pub fn galois_field(p: u64, k: u32, modulus: Vec<u64>) -> Result<Self> {
        Self::new(ScalarRingSpec::new(ScalarKind::GaloisField { p, k, modulus, var: "t".into() }))
    }

    /// GF(p^k) using the lexicographically first monic irreducible modulus.
    pub fn galois_field_default(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Self::galois_field(p, k, fpoly::first_irreducible(p, k as usize))
    }

    /// ℤ[vars] or F_p[vars] with d/d(var) derivations named `d1`, `d2`.
    pub fn polynomial_ring(base: PolyBase, vars: &[&str]) -> Result<Self> {
        let mut spec = ScalarRingSpec::new(ScalarKind::PolynomialRing {
            base,
            vars: vars.iter().map(|s| s.to_string()).collect(),
        });
        for (i, v) in vars.iter().enumerate() {
            spec = spec.with_derivation(&format!("d{}", i + 1), v);
        }
        Self::new(spec)
    }

    /// F_p(var) with the derivation d/d(var) named `d/d{var}`.
    pub fn rational_function_field(p: u64, var: &str) -> Result<Self> {
        Self::new(
            ScalarRingSpec::new(ScalarKind::RationalFunctionField { p, var: var.into() })
                .with_derivation(&format!("d/d{var}"), var),
        )
    }

    /// Short names as printed by [`Self::name`]: `F5`, `GF4` or `GF(4)`, `Z4`, `Q`.
    pub fn from_name(name: &str) -> Result<Self> {
        let bad = || Error::UnsupportedParameter(format!("unknown scalar ring {name:?}"));
        let num = |s: &str| s.trim_start_matches('(').trim_end_matches(')').parse::<u64>().map_err(|_| bad());
        let s = name.trim();
        if s == "Q" {
            return Ok(Self::rationals());
        }
        if let Some(q) = s.strip_prefix("GF") {
            let q = num(q)?;
            let p = (2..=q).find(|d| q % d == 0).ok_or_else(bad)?;
            let mut k = 0;
            let mut r = q;
            while r % p == 0 {
                r /= p;
                k += 1;
            }
            if r != 1 {
                return Err(Error::UnsupportedParameter(format!("{q} is not a prime power")));
            }
            return Self::galois_field_default(p, k);
        }
        if let Some(p) = s.strip_prefix('F') {
            return Self::prime_field(num(p)?);
        }
        if let Some(n) = s.strip_prefix('Z') {
            return Self::residue_ring(num(n)?);
        }
        Err(bad())
    }

    pub fn spec(&self) -> &ScalarRingSpec {
        &self.inner.spec
    }

    pub fn kind(&self) -> &ScalarKind {
        &self.inner.spec.kind
    }

    pub fn name(&self) -> String {
        match self.kind() {
            ScalarKind::PrimeField { p } => format!("F{p}"),
            ScalarKind::GaloisField { p, k, .. } => format!("GF({})", p.pow(*k)),
            ScalarKind::ResidueRing { n } => format!("Z{n}"),
            ScalarKind::Rationals => "Q".into(),
            ScalarKind::PolynomialRing { base, vars } => match base {
                PolyBase::Integers => format!("Z[{}]", vars.join(",")),
                PolyBase::PrimeField(p) => format!("F{p}[{}]", vars.join(",")),
            },
            ScalarKind::RationalFunctionField { p, var } => format!("F{p}({var})"),
        }
    }

    /// Modulus when elements are plain residues (F_p or Z_n).
    pub fn residue_modulus(&self) -> Option<u64> {
        match self.kind() {
            ScalarKind::PrimeField { p } => Some(*p),
            ScalarKind::ResidueRing { n } => Some(*n),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self.kind() {
            ScalarKind::PrimeField { p } | ScalarKind::GaloisField { p, .. } => *p,
            ScalarKind::ResidueRing { n } => *n,
            ScalarKind::Rationals => 0,
            ScalarKind::PolynomialRing { base, .. } => match base {
                PolyBase::Integers => 0,
                PolyBase::PrimeField(p) => *p,
            },
            ScalarKind::RationalFunctionField { p, .. } => *p,
        }
    }

    pub fn is_field(&self) -> bool {
        match self.kind() {
            ScalarKind::PrimeField { .. }
            | ScalarKind::GaloisField { .. }
            | ScalarKind::Rationals
            | ScalarKind::RationalFunctionField { .. } => true,
            ScalarKind::ResidueRing { n } => is_prime(*n),
            ScalarKind::PolynomialRing { .. } => false,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn order(&self) -> Option<u64> {
        match self.kind() {
            ScalarKind::PrimeField { p } => Some(*p),
            ScalarKind::ResidueRing { n } => Some(*n),
            ScalarKind::GaloisField { .. } => self.inner.gf.as_ref().map(|g| g.q),
            _ => None,
        }
    }

    fn poly_p(&self) -> u64 {
        match self.kind() {
            ScalarKind::PolynomialRing { base: PolyBase::PrimeField(p), .. } => *p,
            _ => 0,
        }
    }

    fn gf_params(&self) -> (u64, usize, &[u64]) {
        match self.kind() {
            ScalarKind::GaloisField { p, k, modulus, .. } => (*p, *k as usize, modulus),
            _ => unreachable!("not a Galois field"),
        }
    }

    fn gf_mul_slow(&self, a: u64, b: u64) -> u64 {
        let (p, k, m) = self.gf_params();
        let prod = fpoly::mul(&unpack(a, p, k), &unpack(b, p, k), p);
        pack(&fpoly::divrem(&prod, m, p).1, p)
    }

    /// Coefficients of a GF(p^k) element in the power basis 1, t, …, t^{k-1}.
    pub fn gf_coords(&self, x: &Scalar) -> Vec<u64> {
        let (p, k, _) = self.gf_params();
        let mut v = match x {
            Scalar::Int(x) => unpack(*x, p, k),
            _ => unreachable!(),
        };
        v.resize(k, 0);
        v
    }

    pub fn gf_from_coords(&self, c: &[u64]) -> Scalar {
        let (p, _, _) = self.gf_params();
        Scalar::Int(pack(c, p))
    }

    fn normalize_frac(&self, num: FPoly, den: FPoly) -> Scalar {
        let p = self.characteristic();
        let num = fpoly::trim(num);
        if num.is_empty() {
            return Scalar::Frac(RatFn { num: vec![], den: vec![1] });
        }
        let g = fpoly::gcd(&num, &den, p);
        let (mut n, _) = fpoly::divrem(&num, &g, p);
        let (mut d, _) = fpoly::divrem(&den, &g, p);
        let lead = *d.last().expect("nonzero denominator");
        let li = inv_mod(lead, p).expect("field");
        n = fpoly::scale(&n, li, p);
        d = fpoly::scale(&d, li, p);
        Scalar::Frac(RatFn { num: n, den: d })
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        let modp = |m: u64| v.mod_floor(&BigInt::from(m)).to_u64().expect("reduced residue");
        match self.kind() {
            ScalarKind::PrimeField { p } | ScalarKind::GaloisField { p, .. } => Scalar::Int(modp(*p)),
            ScalarKind::ResidueRing { n } => Scalar::Int(modp(*n)),
            ScalarKind::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            ScalarKind::PolynomialRing { .. } => Scalar::Poly(mpoly::constant(v.clone(), self.poly_p())),
            ScalarKind::RationalFunctionField { p, .. } => {
                let c = modp(*p);
                Scalar::Frac(RatFn { num: fpoly::trim(vec![c]), den: vec![1] })
            }
        }
    }

    /// The generator named `name` (GF generator, polynomial or function-field variable).
    pub fn variable(&self, name: &str) -> Result<Scalar> {
        match self.kind() {
            ScalarKind::GaloisField { p, k, modulus, var } if var == name => {
                let x = if *k == 1 { (p - modulus[0]) % p } else { *p };
                Ok(Scalar::Int(x))
            }
            ScalarKind::PolynomialRing { vars, .. } => match vars.iter().position(|v| v == name) {
                Some(i) => Ok(Scalar::Poly(mpoly::var(i))),
                None => Err(Error::parse("", format!("unknown variable {name}"))),
            },
            ScalarKind::RationalFunctionField { var, .. } if var == name => {
                Ok(Scalar::Frac(RatFn { num: vec![0, 1], den: vec![1] }))
            }
            _ => Err(Error::parse("", format!("unknown variable {name}"))),
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Int(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Poly(m) => m.is_empty(),
            Scalar::Frac(f) => f.num.is_empty(),
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        *x == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => match self.kind() {
                ScalarKind::PrimeField { p } => Scalar::Int((x + y) % p),
                ScalarKind::ResidueRing { n } => Scalar::Int(((*x as u128 + *y as u128) % *n as u128) as u64),
                ScalarKind::GaloisField { p, k, .. } => {
                    let (mut x, mut y, mut out, mut pw) = (*x, *y, 0u64, 1u64);
                    for _ in 0..*k {
                        out += ((x % p + y % p) % p) * pw;
                        x /= p;
                        y /= p;
                        pw *= p;
                    }
                    Scalar::Int(out)
                }
                _ => unreachable!(),
            },
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Poly(x), Scalar::Poly(y)) => Scalar::Poly(mpoly::add(x, y, self.poly_p())),
            (Scalar::Frac(x), Scalar::Frac(y)) => {
                let p = self.characteristic();
                if x.den == y.den {
                    return self.normalize_frac(fpoly::add(&x.num, &y.num, p), x.den.clone());
                }
                let num = fpoly::add(&fpoly::mul(&x.num, &y.den, p), &fpoly::mul(&y.num, &x.den, p), p);
                self.normalize_frac(num, fpoly::mul(&x.den, &y.den, p))
            }
            _ => panic!("scalar kinds do not match ring {}", self.name()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Int(x) => match self.kind() {
                ScalarKind::PrimeField { p } => Scalar::Int((p - x) % p),
                ScalarKind::ResidueRing { n } => Scalar::Int((n - x) % n),
                ScalarKind::GaloisField { p, k, .. } => {
                    let digits: Vec<u64> = {
                        let mut d = unpack(*x, *p, *k as usize);
                        d.iter_mut().for_each(|c| *c = (p - *c) % p);
                        d
                    };
                    Scalar::Int(pack(&digits, *p))
                }
                _ => unreachable!(),
            },
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Poly(x) => Scalar::Poly(mpoly::neg(x, self.poly_p())),
            Scalar::Frac(x) => {
                Scalar::Frac(RatFn { num: fpoly::neg(&x.num, self.characteristic()), den: x.den.clone() })
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => match self.kind() {
                ScalarKind::PrimeField { p } => Scalar::Int(mulmod(*x, *y, *p)),
                ScalarKind::ResidueRing { n } => Scalar::Int(mulmod(*x, *y, *n)),
                ScalarKind::GaloisField { .. } => {
                    let g = self.inner.gf.as_ref().expect("gf data");
                    match &g.mul {
                        Some(t) => Scalar::Int(t[(x * g.q + y) as usize] as u64),
                        None => Scalar::Int(self.gf_mul_slow(*x, *y)),
                    }
                }
                _ => unreachable!(),
            },
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Poly(x), Scalar::Poly(y)) => Scalar::Poly(mpoly::mul(x, y, self.poly_p())),
            (Scalar::Frac(x), Scalar::Frac(y)) => {
                let p = self.characteristic();
                self.normalize_frac(fpoly::mul(&x.num, &y.num, p), fpoly::mul(&x.den, &y.den, p))
            }
            _ => panic!("scalar kinds do not match ring {}", self.name()),
        }
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn invert(&self, a: &Scalar) -> Result<Scalar> {
        let fail = || Error::NotAUnit(self.format(a));
        match a {
            Scalar::Int(x) => match self.kind() {
                ScalarKind::PrimeField { p } => inv_mod(*x, *p).map(Scalar::Int).ok_or_else(fail),
                ScalarKind::ResidueRing { n } => inv_mod(*x, *n).map(Scalar::Int).ok_or_else(fail),
                ScalarKind::GaloisField { p, k, modulus, .. } => {
                    if *x == 0 {
                        return Err(fail());
                    }
                    let inv = fpoly::inverse_mod_poly(&unpack(*x, *p, *k as usize), modulus, *p)
                        .ok_or_else(fail)?;
                    Ok(Scalar::Int(pack(&inv, *p)))
                }
                _ => unreachable!(),
            },
            Scalar::Rat(x) => {
                if x.is_zero() {
                    Err(fail())
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            Scalar::Poly(m) => {
                let p = self.poly_p();
                if m.len() == 1 {
                    if let Some(c) = m.get(&[0, 0]) {
                        if c.abs().is_one() && p == 0 {
                            return Ok(a.clone());
                        }
                        if p != 0 {
                            let c = c.mod_floor(&BigInt::from(p)).to_u64().unwrap_or(0);
                            if let Some(i) = inv_mod(c, p) {
                                return Ok(self.from_int(i as i64));
                            }
                        }
                    }
                }
                Err(fail())
            }
            Scalar::Frac(f) => {
                if f.num.is_empty() {
                    Err(fail())
                } else {
                    Ok(self.normalize_frac(f.den.clone(), f.num.clone()))
                }
            }
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        self.invert(a).is_ok()
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.invert(b)?))
    }

    /// Applies the named derivation.
    pub fn derive(&self, x: &Scalar, name: &str) -> Result<Scalar> {
        let d = self
            .spec()
            .derivations
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| Error::NoSuchDerivation(name.into()))?;
        match (self.kind(), x) {
            (ScalarKind::PolynomialRing { vars, .. }, Scalar::Poly(m)) => {
                let idx = vars.iter().position(|v| *v == d.var).expect("validated");
                Ok(Scalar::Poly(mpoly::derivative(m, idx, self.poly_p())))
            }
            (ScalarKind::RationalFunctionField { p, .. }, Scalar::Frac(f)) => {
                let num = fpoly::sub(
                    &fpoly::mul(&fpoly::derivative(&f.num, *p), &f.den, *p),
                    &fpoly::mul(&f.num, &fpoly::derivative(&f.den, *p), *p),
                    *p,
                );
                Ok(self.normalize_frac(num, fpoly::mul(&f.den, &f.den, *p)))
            }
            (ScalarKind::GaloisField { .. }, _) => Ok(self.zero()),
            _ => Err(Error::NoSuchDerivation(name.into())),
        }
    }

    /// x ↦ x^p for prime characteristic p.
    pub fn frobenius(&self, x: &Scalar) -> Result<Scalar> {
        let c = self.characteristic();
        if c == 0 {
            return Err(Error::CharacteristicZero);
        }
        if !is_prime(c) {
            return Err(Error::UnsupportedScalars(format!(
                "{} has composite characteristic {c}",
                self.name()
            )));
        }
        Ok(self.pow(x, c))
    }

    /// All elements in a deterministic order.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        let q = self.order().ok_or(Error::InfiniteRing)?;
        if q as u128 > enumeration_cap() {
            return Err(Error::EnumerationTooLarge { size: q.to_string(), cap: enumeration_cap() });
        }
        Ok((0..q).map(Scalar::Int).collect())
    }

    /// A random element: uniform for finite rings, small height otherwise.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        if let Some(q) = self.order() {
            return Scalar::Int(rng.gen_range(0..q));
        }
        match self.kind() {
            ScalarKind::Rationals => {
                let n: i64 = rng.gen_range(-9..=9);
                let d: i64 = rng.gen_range(1..=5);
                Scalar::Rat(BigRational::new(n.into(), d.into()))
            }
            ScalarKind::PolynomialRing { vars, .. } => {
                let p = self.poly_p();
                let mut m = MPoly::new();
                for _ in 0..rng.gen_range(0..5) {
                    let mut e = [rng.gen_range(0..4u32), rng.gen_range(0..4u32)];
                    if vars.len() == 1 {
                        e[1] = 0;
                    }
                    let c = BigInt::from(rng.gen_range(-5i64..=5));
                    m = mpoly::add(&m, &MPoly::from([(e, c)]), p);
                    m.retain(|_, c| !c.is_zero());
                }
                Scalar::Poly(m)
            }
            ScalarKind::RationalFunctionField { p, .. } => {
                let num: FPoly = (0..rng.gen_range(0..4)).map(|_| rng.gen_range(0..*p)).collect();
                let mut den: FPoly = (0..rng.gen_range(0..3)).map(|_| rng.gen_range(0..*p)).collect();
                den.push(1);
                self.normalize_frac(num, den)
            }
            _ => unreachable!(),
        }
    }

    /// Canonical textual form, accepted back by [`ScalarRing::parse`].
    pub fn format(&self, x: &Scalar) -> String {
        match (self.kind(), x) {
            (ScalarKind::GaloisField { p, k, var, .. }, Scalar::Int(v)) => {
                fmt_upoly(&unpack(*v, *p, *k as usize), var)
            }
            (_, Scalar::Int(v)) => v.to_string(),
            (_, Scalar::Rat(r)) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            (ScalarKind::PolynomialRing { vars, .. }, Scalar::Poly(m)) => mpoly::format(m, vars),
            (ScalarKind::RationalFunctionField { var, .. }, Scalar::Frac(f)) => {
                let wrap = |a: &[u64]| {
                    let s = fmt_upoly(a, var);
                    if a.iter().filter(|c| **c != 0).count() > 1 {
                        format!("({s})")
                    } else {
                        s
                    }
                };
                if f.den == [1] {
                    fmt_upoly(&f.num, var)
                } else {
                    format!("{}/{}", wrap(&f.num), wrap(&f.den))
                }
            }
            _ => format!("{x:?}"),
        }
    }

    pub fn parse(&self, s: &str) -> Result<Scalar> {
        parse::parse(self, s)
    }
}
