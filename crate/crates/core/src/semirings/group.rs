use super::analysis::{SemiringPredicates, SemiringReport, SemiringWitness};
use super::{boolean_group_semiring, is_ce_semiring, semiring_predicates, FiniteSemiring, MAX_POWERSET_BASE};
use crate::analyzers::Verdict;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;
use crate::scalars::{Scalar, ScalarRing};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Boolean,
    /// ℚ⁺ ∪ {0}.
    NonNegativeRationals,
}

/// Coefficients over the group basis, indexed by group element.
pub type GroupSemiringElement = Vec<BigRational>;

/// The group semiring S[G] for S the Boolean semiring or ℚ⁺ ∪ {0}.
#[derive(Clone, Debug)]
pub struct GroupSemiring {
    coefficients: Coefficients,
    group: FiniteGroup,
}

impl GroupSemiring {
    pub fn new(coefficients: Coefficients, group: FiniteGroup) -> Self {
        GroupSemiring { coefficients, group }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    fn normalize(&self, mut x: GroupSemiringElement) -> GroupSemiringElement {
        if self.coefficients == Coefficients::Boolean {
            for c in &mut x {
                if !c.is_zero() {
                    *c = BigRational::one();
                }
            }
        }
        x
    }

    pub fn zero(&self) -> GroupSemiringElement {
        vec![BigRational::zero(); self.group.order()]
    }

    pub fn basis(&self, g: usize) -> GroupSemiringElement {
        let mut x = self.zero();
        x[g] = BigRational::one();
        x
    }

    pub fn one(&self) -> GroupSemiringElement {
        self.basis(self.group.identity())
    }

    /// Validates nonnegativity (and 0/1 entries for Boolean coefficients).
    pub fn element(&self, coeffs: Vec<BigRational>) -> Result<GroupSemiringElement> {
        if coeffs.len() != self.group.order() {
            return Err(Error::DimensionMismatch { expected: self.group.order(), found: coeffs.len() });
        }
        if let Some(c) = coeffs.iter().find(|c| c.is_negative()) {
            return Err(Error::UnsupportedParameter(format!("negative coefficient {c}")));
        }
        if self.coefficients == Coefficients::Boolean && coeffs.iter().any(|c| !c.is_zero() && !c.is_one()) {
            return Err(Error::UnsupportedParameter("Boolean coefficients must be 0 or 1".into()));
        }
        Ok(coeffs)
    }

    pub fn add(&self, x: &[BigRational], y: &[BigRational]) -> GroupSemiringElement {
        self.normalize(x.iter().zip(y).map(|(a, b)| a + b).collect())
    }

    pub fn mul(&self, x: &[BigRational], y: &[BigRational]) -> GroupSemiringElement {
        let mut out = self.zero();
        for (g, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (h, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[self.group.mul(g, h)] += a * b;
            }
        }
        self.normalize(out)
    }

    pub fn is_zero(&self, x: &[BigRational]) -> bool {
        x.iter().all(Zero::is_zero)
    }

    /// Exact: x commutes with every group basis element.
    pub fn is_central(&self, x: &[BigRational]) -> bool {
        (0..self.group.order()).all(|g| {
            let b = self.basis(g);
            self.mul(&b, x) == self.mul(x, &b)
        })
    }

    pub fn class_sum(&self, set: &[usize]) -> GroupSemiringElement {
        let mut x = self.zero();
        for &g in set {
            x[g] = BigRational::one();
        }
        x
    }

    pub fn format(&self, x: &[BigRational]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| {
                let l = self.group.label(g);
                if c.is_one() {
                    l.to_string()
                } else {
                    format!("{c}*{l}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// 𝔹[G] as a table semiring.
    pub fn to_finite(&self) -> Result<FiniteSemiring> {
        if self.coefficients != Coefficients::Boolean {
            return Err(Error::InfiniteRing);
        }
        boolean_group_semiring(&self.group)
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupSemiringElement {
        let n = self.group.order();
        let mut x: GroupSemiringElement = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    BigRational::zero()
                } else {
                    match self.coefficients {
                        Coefficients::Boolean => BigRational::one(),
                        Coefficients::NonNegativeRationals => {
                            BigRational::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=9).into())
                        }
                    }
                }
            })
            .collect();
        if self.is_zero(&x) {
            x[rng.gen_range(0..n)] = BigRational::one();
        }
        x
    }

    /// Nonzero elements: group basis, sums of two basis elements, then seeded random elements.
    pub fn sample_elements(&self, count: usize, seed: u64) -> Vec<GroupSemiringElement> {
        let n = self.group.order();
        let mut out: Vec<GroupSemiringElement> = (0..n).map(|g| self.basis(g)).collect();
        for g in 0..n {
            for h in g..n {
                out.push(self.add(&self.basis(g), &self.basis(h)));
            }
        }
        out.truncate(count);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while out.len() < count {
            out.push(self.random_element(&mut rng));
        }
        out
    }

    /// a·Σ_{Z(G)} when it is nonzero and central.
    pub fn class_sum_witness(&self, a: &[BigRational]) -> Option<GroupSemiringElement> {
        let y = self.mul(a, &self.class_sum(&self.group.center()));
        (!self.is_zero(&y) && self.is_central(&y)).then_some(y)
    }

    /// Exhaustive for 𝔹[G] with |G| ≤ 8; otherwise sampled, trying Σ_{Z(G)} before the other class sums.
    pub fn is_ce(&self, samples: usize, seed: u64) -> Result<SemiringReport> {
        if self.coefficients == Coefficients::Boolean {
            if self.group.order() > MAX_POWERSET_BASE {
                return Err(Error::EnumerationTooLarge { size: format!("2^{}", self.group.order()), cap: 1 << MAX_POWERSET_BASE });
            }
            return Ok(is_ce_semiring(&self.to_finite()?));
        }
        let start = Instant::now();
        if self.group.is_abelian() {
            let mut rep = SemiringReport::new("ce", Verdict::True, "commutative");
            rep.millis = start.elapsed().as_millis();
            return Ok(rep);
        }
        let z = self.class_sum(&self.group.center());
        let mut candidates = vec![z.clone()];
        candidates.extend(self.group.conjugacy_classes().iter().map(|k| self.class_sum(k)).filter(|k| *k != z));
        let mut hits = 0;
        let mut witness = None;
        let mut failure = None;
        for a in self.sample_elements(samples, seed) {
            let found = candidates.iter().enumerate().find_map(|(i, x)| {
                let y = self.mul(&a, x);
                (!self.is_zero(&y) && self.is_central(&y)).then_some((i, x, y))
            });
            match found {
                Some((i, x, y)) => {
                    hits += usize::from(i == 0);
                    if witness.is_none() && !self.is_central(&a) {
                        witness = Some(SemiringWitness { element: self.format(&a), multiplier: self.format(x), product: self.format(&y) });
                    }
                }
                None => {
                    failure = Some(self.format(&a));
                    break;
                }
            }
        }
        let mut rep = SemiringReport::new("ce", if failure.is_some() { Verdict::Unknown } else { Verdict::True }, "sampled");
        rep.samples = Some(samples);
        rep.witness = witness;
        rep.counterexample = failure;
        rep.notes.push(format!("Σ_Z(G) witness succeeded on {hits} of {samples} samples"));
        rep.millis = start.elapsed().as_millis();
        Ok(rep)
    }

    fn to_matrix(&self, x: &[BigRational], left: bool) -> Result<Matrix> {
        let q = ScalarRing::rationals();
        let n = self.group.order();
        let mut m = Matrix::zeros(&q, n, n);
        for h in 0..n {
            for (g, c) in x.iter().enumerate() {
                let target = if left { self.group.mul(g, h) } else { self.group.mul(h, g) };
                m.set(target, h, Scalar::Rat(c.clone()));
            }
        }
        Ok(m)
    }

    /// Some (y, z) with y ≠ z and xy = xz (or yx = zx), from a rational kernel vector split into signs.
    fn cancellation_failure(&self, x: &[BigRational]) -> Result<Option<(GroupSemiringElement, GroupSemiringElement)>> {
        for left in [true, false] {
            let ker = self.to_matrix(x, left)?.kernel()?;
            if let Some(v) = ker.basis().first() {
                let coords: Vec<BigRational> = v
                    .iter()
                    .map(|s| match s {
                        Scalar::Rat(r) => r.clone(),
                        _ => unreachable!("rational kernel"),
                    })
                    .collect();
                let pos = coords.iter().map(|c| if c.is_positive() { c.clone() } else { BigRational::zero() }).collect();
                let neg = coords.iter().map(|c| if c.is_negative() { -c } else { BigRational::zero() }).collect();
                return Ok(Some((pos, neg)));
            }
        }
        Ok(None)
    }

    /// Whether x² + y² = xy + yx forces x = y, over sampled pairs.
    pub fn reduced_sampled(&self, samples: usize, seed: u64) -> Option<(GroupSemiringElement, GroupSemiringElement)> {
        let a = self.sample_elements(samples, seed);
        let b = self.sample_elements(samples, seed.wrapping_add(1));
        a.into_iter().zip(b.into_iter().rev()).find(|(x, y)| {
            x != y && self.add(&self.mul(x, x), &self.mul(y, y)) == self.add(&self.mul(x, y), &self.mul(y, x))
        })
    }

    /// Exhaustive for 𝔹[G]; each quantifier over `samples` sampled elements for ℚ⁺[G].
    pub fn predicates(&self, samples: usize, seed: u64) -> Result<SemiringPredicates> {
        if self.coefficients == Coefficients::Boolean {
            return Ok(semiring_predicates(&self.to_finite()?));
        }
        let a = self.sample_elements(samples, seed);
        let b = self.sample_elements(samples, seed.wrapping_add(1));
        let c = self.sample_elements(samples, seed.wrapping_add(2));
        let triples = || a.iter().zip(b.iter().rev()).zip(&c).map(|((x, y), z)| (x, y, z));
        let nonneg = |v: &[BigRational]| v.iter().all(|c| !c.is_negative());
        let diff = |x: &[BigRational], y: &[BigRational]| -> Vec<BigRational> { x.iter().zip(y).map(|(p, q)| p - q).collect() };
        let one = self.one();
        let mut mult = true;
        for x in &a {
            if self.cancellation_failure(x)?.is_some() {
                mult = false;
                break;
            }
        }
        Ok(SemiringPredicates {
            additively_cancellative: triples().all(|(x, y, z)| x == y || self.add(x, z) != self.add(y, z)),
            zero_sum_free: triples().all(|(x, y, _)| !self.is_zero(&self.add(x, y))),
            reduced: self.reduced_sampled(samples, seed).is_none(),
            semisubtractive: triples().all(|(x, y, _)| x == y || nonneg(&diff(x, y)) || nonneg(&diff(y, x))),
            multiplicatively_cancellative: mult,
            complemented_idempotents_central: a.iter().all(|e| {
                let f = diff(&one, e);
                !(self.mul(e, e) == *e && nonneg(&f) && self.mul(&f, &f) == f) || self.is_central(e)
            }),
            sampled: Some(samples),
        })
    }

    /// The failure of multiplicative cancellation at x, formatted, if any.
    pub fn cancellation_counterexample(&self, x: &[BigRational]) -> Result<Option<(String, String)>> {
        Ok(self.cancellation_failure(x)?.map(|(y, z)| (self.format(&y), self.format(&z))))
    }
}
