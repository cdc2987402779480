use super::radical::{nilradical_supported, socle_with};
use super::report::{timed, CEWitness, Flavor, Multiplier, Report, Strategy, Verdict};
use super::structure::{associative_center, center, centroid, commutative_center};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{combination, vec_is_zero, zero_vec, Matrix, Subspace, Vector};
use crate::scalars::{enumeration_cap, Scalar, ScalarRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashSet;

/// Largest |A| for which `auto` prefers brute-force enumeration.
pub const AUTO_ENUMERATION_LIMIT: u128 = 1 << 16;

/// Number of random elements tried over infinite scalar fields.
pub const SAMPLE_COUNT: usize = 200;

/// Some λ with y = Σ λ_k images_k a nonzero element of `target`.
pub(crate) fn meet_witness(ring: &ScalarRing, images: &[Vector], target: &Subspace) -> Result<Option<(Vector, Vector)>> {
    let n = target.ambient();
    if images.is_empty() || target.is_zero() {
        return Ok(None);
    }
    let k = images.len();
    let mut cols = images.to_vec();
    cols.extend(target.basis().iter().map(|t| crate::linalg::vec_neg(ring, t)));
    let ker = Matrix::from_columns(ring, &cols, n)?.kernel()?;
    for v in ker.basis() {
        let y = combination(ring, &v[..k], images, n);
        if !vec_is_zero(ring, &y) {
            return Ok(Some((v[..k].to_vec(), y)));
        }
    }
    Ok(None)
}

/// Definitional CE test at one element: some central x (plus a scalar multiple of 1
/// when A has no unit) with 0 ≠ a·x ∈ C.
pub fn ce_witness_at(alg: &Algebra, c: &Subspace, a: &[Scalar]) -> Result<Option<CEWitness>> {
    let ring = alg.ring();
    let mut images: Vec<Vector> = c.basis().iter().map(|x| alg.mul(a, x)).collect();
    let unital = alg.is_unital();
    if !unital {
        images.push(a.to_vec());
    }
    let Some((lam, y)) = meet_witness(ring, &images, c)? else {
        return Ok(None);
    };
    let m = c.rank();
    let x = combination(ring, &lam[..m], c.basis(), alg.dim());
    let multiplier = if unital { Multiplier::Element(x) } else { Multiplier::ElementPlusScalar(x, lam[m].clone()) };
    Ok(Some(CEWitness { element: a.to_vec(), multiplier, product: y, flavor: Flavor::Ce }))
}

/// Nonzero elements to test: projective representatives over finite fields, every nonzero
/// element over other finite rings.
pub(crate) struct ElementRange {
    ring: ScalarRing,
    dim: usize,
    digits: Vec<Scalar>,
    projective: bool,
    pub count: u128,
}

impl ElementRange {
    pub fn new(ring: &ScalarRing, dim: usize) -> Result<Self> {
        let q = ring.order().ok_or(Error::InfiniteRing)? as u128;
        let digits: Vec<Scalar> = (0..q as u64).map(Scalar::Int).collect();
        let projective = ring.is_field() && q > 2;
        let total = q.checked_pow(dim as u32);
        let count = match (total, projective) {
            (Some(t), true) => (t - 1) / (q - 1),
            (Some(t), false) => t - 1,
            (None, _) => u128::MAX,
        };
        Ok(ElementRange { ring: ring.clone(), dim, digits, projective, count })
    }

    fn check_cap(&self) -> Result<()> {
        if self.count > enumeration_cap() {
            return Err(Error::EnumerationTooLarge { size: self.count.to_string(), cap: enumeration_cap() });
        }
        Ok(())
    }

    fn fill(&self, mut idx: u128, out: &mut [Scalar]) {
        let q = self.digits.len() as u128;
        for slot in out.iter_mut().rev() {
            *slot = self.digits[(idx % q) as usize].clone();
            idx /= q;
        }
    }

    pub fn get(&self, idx: u128) -> Vector {
        let mut v = zero_vec(&self.ring, self.dim);
        if !self.projective {
            self.fill(idx + 1, &mut v);
            return v;
        }
        let q = self.digits.len() as u128;
        let mut idx = idx;
        for lead in 0..self.dim {
            let block = q.pow((self.dim - lead - 1) as u32);
            if idx < block {
                v[lead] = self.ring.one();
                self.fill(idx, &mut v[lead + 1..]);
                return v;
            }
            idx -= block;
        }
        unreachable!("index out of range")
    }

    /// First element (by index) on which `test` reports failure.
    pub fn find_failure(&self, test: impl Fn(&[Scalar]) -> Result<bool> + Sync) -> Result<Option<Vector>> {
        self.check_cap()?;
        let found = (0..self.count as u64).into_par_iter().find_map_first(|i| {
            let v = self.get(i as u128);
            match test(&v) {
                Ok(true) => None,
                Ok(false) => Some(Ok(v)),
                Err(e) => Some(Err(e)),
            }
        });
        found.transpose()
    }
}

/// Deterministic sample for infinite scalar rings: basis vectors, pairwise sums and random elements.
pub(crate) fn sample_elements(alg: &Algebra, count: usize, seed: u64) -> Vec<Vector> {
    let n = alg.dim();
    let mut out: Vec<Vector> = (0..n).map(|i| alg.basis(i)).collect();
    for i in 0..n {
        for j in 0..i {
            out.push(alg.add(&alg.basis(i), &alg.basis(j)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < n + n * n.saturating_sub(1) / 2 + count {
        let v: Vector = (0..n).map(|_| alg.ring().random(&mut rng)).collect();
        if !alg.is_zero(&v) {
            out.push(v);
        }
    }
    out
}

fn representative_witness(alg: &Algebra, c: &Subspace) -> Result<Option<CEWitness>> {
    let pick = (0..alg.dim()).map(|i| alg.basis(i)).find(|e| !c.contains(e)).unwrap_or_else(|| alg.basis(0));
    if alg.dim() == 0 {
        return Ok(None);
    }
    ce_witness_at(alg, c, &pick)
}

/// Whether A is centrally essential, by the requested strategy.
pub fn is_centrally_essential(alg: &Algebra, strategy: Strategy) -> Result<Report> {
    timed(|| {
        let c = center(alg)?;
        let chosen = match strategy {
            Strategy::Auto => auto_strategy(alg, &c)?,
            s => s,
        };
        match chosen {
            Strategy::Enumerate => ce_by_enumeration(alg),
            Strategy::Socle => ce_by_socle(alg, &c),
            Strategy::PerElementLinear => ce_by_linear_test(alg, &c),
            Strategy::Auto => unreachable!(),
        }
    })
}

fn auto_strategy(alg: &Algebra, c: &Subspace) -> Result<Strategy> {
    if alg.is_unital() && nilradical_supported(alg, c) {
        return Ok(Strategy::Socle);
    }
    if alg.cardinality().is_some_and(|s| s <= AUTO_ENUMERATION_LIMIT) {
        return Ok(Strategy::Enumerate);
    }
    if alg.ring().is_field() || alg.ring().is_finite() {
        return Ok(Strategy::PerElementLinear);
    }
    Err(Error::StrategyInapplicable("auto".into(), format!("no CE strategy over {}", alg.ring().name())))
}

fn ce_by_socle(alg: &Algebra, c: &Subspace) -> Result<Report> {
    if !alg.is_unital() {
        return Err(Error::StrategyInapplicable("socle".into(), "algebra has no unit".into()));
    }
    if !nilradical_supported(alg, c) {
        return Err(Error::StrategyInapplicable(
            "socle".into(),
            format!("nilradical of the center not computable over {}", alg.ring().name()),
        ));
    }
    let soc = socle_with(alg, c)?;
    let holds = soc.is_subspace_of(c)?;
    let mut rep = Report::new("ce", Verdict::from_bool(holds), "socle");
    rep.notes.push(format!("dim Soc(A_C) = {}, dim Z(A) = {}", soc.rank(), c.rank()));
    if holds {
        rep.witness = representative_witness(alg, c)?;
    } else {
        rep.notes.push("Soc(A_C) is not contained in Z(A)".into());
        rep.counterexample = socle_counterexample(alg, c, &soc)?;
    }
    Ok(rep)
}

fn socle_counterexample(alg: &Algebra, c: &Subspace, soc: &Subspace) -> Result<Option<Vector>> {
    for b in soc.basis() {
        if ce_witness_at(alg, c, b)?.is_none() {
            return Ok(Some(b.clone()));
        }
    }
    let candidates = match soc.cardinality() {
        Some(s) if s <= enumeration_cap() => soc.elements()?,
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            (0..SAMPLE_COUNT)
                .map(|_| {
                    let coeffs: Vector = soc.basis().iter().map(|_| alg.ring().random(&mut rng)).collect();
                    combination(alg.ring(), &coeffs, soc.basis(), alg.dim())
                })
                .collect()
        }
    };
    for v in candidates {
        if !alg.is_zero(&v) && ce_witness_at(alg, c, &v)?.is_none() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

fn ce_by_linear_test(alg: &Algebra, c: &Subspace) -> Result<Report> {
    let ring = alg.ring();
    if !ring.is_field() && !ring.is_finite() {
        return Err(Error::StrategyInapplicable("per-element-linear".into(), format!("{} is not a field", ring.name())));
    }
    let (failure, strategy) = if ring.is_finite() {
        let range = ElementRange::new(ring, alg.dim())?;
        (range.find_failure(|a| Ok(ce_witness_at(alg, c, a)?.is_some()))?, "per-element-linear")
    } else {
        let mut found = None;
        for a in sample_elements(alg, SAMPLE_COUNT, 0) {
            if ce_witness_at(alg, c, &a)?.is_none() {
                found = Some(a);
                break;
            }
        }
        (found, "per-element-linear-sampled")
    };
    let mut rep = Report::new("ce", Verdict::from_bool(failure.is_none()), strategy);
    match failure {
        Some(a) => rep.counterexample = Some(a),
        None => rep.witness = representative_witness(alg, c)?,
    }
    Ok(rep)
}

/// Mixed-radix decoding of every element of a finite algebra.
fn all_elements_decoder(alg: &Algebra) -> Result<(u128, impl Fn(u128) -> Vector + Sync + '_)> {
    let size = alg.cardinality().ok_or(Error::InfiniteRing)?;
    if size > enumeration_cap() {
        return Err(Error::EnumerationTooLarge { size: size.to_string(), cap: enumeration_cap() });
    }
    let q = alg.ring().order().expect("finite") as u128;
    let n = alg.dim();
    Ok((size, move |mut idx: u128| {
        let mut v = vec![Scalar::Int(0); n];
        for slot in v.iter_mut().rev() {
            *slot = Scalar::Int((idx % q) as u64);
            idx /= q;
        }
        v
    }))
}

/// Brute-force center: every element commuting (and associating) with all basis vectors.
pub fn center_by_enumeration(alg: &Algebra) -> Result<Vec<Vector>> {
    let (size, decode) = all_elements_decoder(alg)?;
    let basis: Vec<Vector> = (0..alg.dim()).map(|i| alg.basis(i)).collect();
    let assoc = alg.is_associative();
    Ok((0..size as u64)
        .into_par_iter()
        .map(|i| decode(i as u128))
        .filter(|x| {
            basis.iter().all(|e| {
                alg.is_zero(&alg.commutator(x, e))
                    && (assoc
                        || basis.iter().all(|f| {
                            alg.is_zero(&alg.associator(x, e, f))
                                && alg.is_zero(&alg.associator(e, x, f))
                                && alg.is_zero(&alg.associator(e, f, x))
                        }))
            })
        })
        .collect())
}

/// The definitional search over all elements, independent of any linear algebra.
fn ce_by_enumeration(alg: &Algebra) -> Result<Report> {
    let (size, decode) = all_elements_decoder(alg)?;
    let central = center_by_enumeration(alg)?;
    let central_set: HashSet<&Vector> = central.iter().collect();
    let ring = alg.ring();
    let scalars = if alg.is_unital() { vec![ring.zero()] } else { ring.elements()? };
    let search = |a: &Vector| -> Option<CEWitness> {
        for x in &central {
            for nu in &scalars {
                let y = alg.add(&alg.mul(a, x), &alg.scale(nu, a));
                if !alg.is_zero(&y) && central_set.contains(&y) {
                    let multiplier = if alg.is_unital() {
                        Multiplier::Element(x.clone())
                    } else {
                        Multiplier::ElementPlusScalar(x.clone(), nu.clone())
                    };
                    return Some(CEWitness { element: a.clone(), multiplier, product: y, flavor: Flavor::Ce });
                }
            }
        }
        None
    };
    let failure = (1..size as u64).into_par_iter().find_map_first(|i| {
        let a = decode(i as u128);
        search(&a).is_none().then_some(a)
    });
    let mut rep = Report::new("ce", Verdict::from_bool(failure.is_none()), "enumerate");
    rep.notes.push(format!("|A| = {size}, |Z(A)| = {}", central.len()));
    match failure {
        Some(a) => rep.counterexample = Some(a),
        None => {
            let pick = (0..alg.dim()).map(|i| alg.basis(i)).find(|e| !central_set.contains(e));
            rep.witness = pick.or_else(|| (alg.dim() > 0).then(|| alg.basis(0))).and_then(|a| search(&a));
        }
    }
    Ok(rep)
}

/// Linear data for one essentiality flavor.
struct FlavorData {
    target: Subspace,
    multipliers: FlavorMultipliers,
}

enum FlavorMultipliers {
    Elements(Vec<Vector>),
    Maps(Vec<Matrix>),
}

fn flavor_data(alg: &Algebra, flavor: Flavor) -> Result<FlavorData> {
    Ok(match flavor {
        Flavor::Ce | Flavor::Strong => {
            let c = center(alg)?;
            FlavorData { multipliers: FlavorMultipliers::Elements(c.basis().to_vec()), target: c }
        }
        Flavor::Weak => FlavorData { target: center(alg)?, multipliers: FlavorMultipliers::Maps(centroid(alg)?.basis) },
        Flavor::NEssential => {
            let nuc = associative_center(alg)?;
            FlavorData { multipliers: FlavorMultipliers::Elements(nuc.basis().to_vec()), target: nuc }
        }
        Flavor::KEssential => {
            let k = commutative_center(alg)?;
            FlavorData { multipliers: FlavorMultipliers::Elements(k.basis().to_vec()), target: k }
        }
    })
}

fn flavor_witness(alg: &Algebra, flavor: Flavor, data: &FlavorData, r: &[Scalar]) -> Result<Option<CEWitness>> {
    let ring = alg.ring();
    if flavor == Flavor::Ce {
        return ce_witness_at(alg, &data.target, r);
    }
    let images: Vec<Vector> = match &data.multipliers {
        FlavorMultipliers::Elements(xs) if flavor == Flavor::Strong => xs.iter().map(|x| alg.mul(r, x)).collect(),
        FlavorMultipliers::Elements(xs) => xs.iter().map(|x| alg.mul(x, r)).collect(),
        FlavorMultipliers::Maps(ms) => ms.iter().map(|m| m.mul_vec(r)).collect::<Result<_>>()?,
    };
    let Some((lam, y)) = meet_witness(ring, &images, &data.target)? else {
        return Ok(None);
    };
    let multiplier = match &data.multipliers {
        FlavorMultipliers::Elements(xs) => Multiplier::Element(combination(ring, &lam, xs, alg.dim())),
        FlavorMultipliers::Maps(ms) => {
            let mut acc = Matrix::zeros(ring, alg.dim(), alg.dim());
            for (l, m) in lam.iter().zip(ms) {
                for i in 0..alg.dim() {
                    for j in 0..alg.dim() {
                        acc.set(i, j, ring.add(acc.get(i, j), &ring.mul(l, m.get(i, j))));
                    }
                }
            }
            Multiplier::Endomorphism(acc)
        }
    };
    Ok(Some(CEWitness { element: r.to_vec(), multiplier, product: y, flavor }))
}

/// Checks one flavor over every nonzero element of a finite algebra.
pub fn essentiality(alg: &Algebra, flavor: Flavor) -> Result<Report> {
    timed(|| {
        let data = flavor_data(alg, flavor)?;
        let range = ElementRange::new(alg.ring(), alg.dim())?;
        let failure = range.find_failure(|r| Ok(flavor_witness(alg, flavor, &data, r)?.is_some()))?;
        let mut rep = Report::new(flavor.name(), Verdict::from_bool(failure.is_none()), "per-element-linear");
        match failure {
            Some(r) => rep.counterexample = Some(r),
            None if alg.dim() > 0 => {
                let pick = (0..alg.dim()).map(|i| alg.basis(i)).find(|e| !data.target.contains(e)).unwrap_or_else(|| alg.basis(0));
                rep.witness = flavor_witness(alg, flavor, &data, &pick)?;
            }
            None => {}
        }
        Ok(rep)
    })
}

/// Cr ∩ C ≠ 0 for every nonzero r.
pub fn is_strongly_ce(alg: &Algebra) -> Result<Report> {
    essentiality(alg, Flavor::Strong)
}

/// Ẑ(R)r ∩ C ≠ 0 for every nonzero r, with Ẑ(R) the centroid.
pub fn is_weakly_ce(alg: &Algebra) -> Result<Report> {
    essentiality(alg, Flavor::Weak)
}

/// N(R)r ∩ N(R) ≠ 0 for every nonzero r.
pub fn is_n_essential(alg: &Algebra) -> Result<Report> {
    essentiality(alg, Flavor::NEssential)
}

/// K(R)r ∩ K(R) ≠ 0 for every nonzero r.
pub fn is_k_essential(alg: &Algebra) -> Result<Report> {
    essentiality(alg, Flavor::KEssential)
}

/// Whether every nonzero x ∈ M has (B x + ring·x) ∩ N ≠ 0, for B a set of central elements.
pub fn is_essential_over(alg: &Algebra, b: &Subspace, m: &Subspace, n: &Subspace) -> Result<bool> {
    let ring = alg.ring();
    let test = |x: &[Scalar]| -> Result<bool> {
        let mut images: Vec<Vector> = b.basis().iter().map(|c| alg.mul(c, x)).collect();
        images.push(x.to_vec());
        Ok(meet_witness(ring, &images, n)?.is_some())
    };
    if m.is_zero() {
        return Ok(true);
    }
    if ring.is_finite() {
        let size = m.cardinality().unwrap_or(u128::MAX);
        if size > enumeration_cap() {
            return Err(Error::EnumerationTooLarge { size: size.to_string(), cap: enumeration_cap() });
        }
        let els = m.elements()?;
        let fail = els.par_iter().filter(|x| !vec_is_zero(ring, x)).find_map_first(|x| match test(x) {
            Ok(true) => None,
            Ok(false) => Some(Ok(())),
            Err(e) => Some(Err(e)),
        });
        return Ok(fail.transpose()?.is_none());
    }
    Err(Error::StrategyInapplicable("enumerate".into(), format!("{} is infinite", ring.name())))
}

/// Whether N is an essential submodule of A over its center.
pub fn is_essential_submodule(alg: &Algebra, n: &Subspace) -> Result<bool> {
    let c = center(alg)?;
    if alg.is_unital() && nilradical_supported(alg, &c) {
        return socle_with(alg, &c)?.is_subspace_of(n);
    }
    if alg.ring().is_finite() {
        return is_essential_over(alg, &c, &Subspace::full(alg.ring(), alg.dim()), n);
    }
    Err(Error::StrategyInapplicable(
        "essential-submodule".into(),
        format!("neither the socle nor enumeration applies over {}", alg.ring().name()),
    ))
}
