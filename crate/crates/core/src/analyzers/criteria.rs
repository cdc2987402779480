use super::essential::{ce_witness_at, is_centrally_essential, is_essential_over, is_essential_submodule, sample_elements};
use super::report::{timed, Report, Strategy, Verdict};
use super::structure::{annihilator, center, commutator_ideal, integer_annihilator, solve_columns, Side};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{Subspace, Vector};
use crate::scalars::{is_prime, Scalar, ScalarRing};

/// Λ(Aⁿ) is CE iff A is CE and either n is odd or Ann_A(2) is essential in A_C; Λ(A⁰) = A.
pub fn grassmann_ce_predicate(a: &Algebra, n: usize) -> Result<bool> {
    if !is_centrally_essential(a, Strategy::Auto)?.holds() {
        return Ok(false);
    }
    if n == 0 || n % 2 == 1 {
        return Ok(true);
    }
    is_essential_submodule(a, &integer_annihilator(a, 2)?)
}

/// Verdict for FG from the structure of G: a direct Sylow decomposition with commutative
/// complement is necessary, and nilpotence class at most 2 of the Sylow factor is sufficient.
pub fn group_algebra_ce_predicate(ring: &ScalarRing, g: &FiniteGroup) -> Result<Report> {
    let p = ring.characteristic();
    if p == 0 || !is_prime(p) || !ring.is_field() {
        return Err(Error::UnsupportedScalars(format!("{} is not a field of prime characteristic", ring.name())));
    }
    let Some(split) = g.sylow_direct_decomposition(p as usize) else {
        return Ok(Report::new("group-ce", Verdict::False, "group-theory")
            .with_note(format!("G is not a direct product of its Sylow {p}-subgroup and a complement")));
    };
    let h = &split.complement;
    if !h.iter().all(|&x| h.iter().all(|&y| g.mul(x, y) == g.mul(y, x))) {
        return Ok(Report::new("group-ce", Verdict::False, "group-theory").with_note("the p'-complement is not commutative"));
    }
    let nc = g.subgroup(&split.p_part)?.nilpotence_class().expect("p-groups are nilpotent");
    let rep = if nc <= 2 {
        Report::new("group-ce", Verdict::True, "group-theory")
    } else {
        Report::new("group-ce", Verdict::Unknown, "group-theory")
    };
    Ok(rep.with_note(format!("G = P × H with H commutative, NC(P) = {nc}")))
}

/// The subspaces C, I, B, J and J' ∩ I of an algebra with involution.
#[derive(Clone, Debug, PartialEq)]
pub struct DoublingParts {
    /// Z(A).
    pub c: Subspace,
    /// Ann_C([A, A]).
    pub i: Subspace,
    /// Symmetric central elements.
    pub b: Subspace,
    /// Ann_B({a − a*}).
    pub j: Subspace,
    /// J ∩ I.
    pub j_prime: Subspace,
}

pub fn doubling_parts(a: &Algebra) -> Result<DoublingParts> {
    let inv = a.involution().ok_or(Error::NoInvolution)?;
    let c = center(a)?;
    let i = c.intersect(&annihilator(a, &commutator_ideal(a)?, Side::Left)?)?;
    let symmetric = solve_columns(a, a.dim(), |k| a.sub(&inv[k], &a.basis(k)))?;
    let b = c.intersect(&symmetric)?;
    let skew = a.span((0..a.dim()).map(|k| a.sub(&a.basis(k), &inv[k])).collect())?;
    let j = b.intersect(&annihilator(a, &skew, Side::Left)?)?;
    let j_prime = j.intersect(&i)?;
    Ok(DoublingParts { c, i, b, j, j_prime })
}

fn pairs(r: &Algebra, a: &Algebra, first: &Subspace, second: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    if r.dim() != 2 * n || r.ring() != a.ring() {
        return Err(Error::DimensionMismatch { expected: 2 * n, found: r.dim() });
    }
    let zero = a.zero();
    let mut rows: Vec<Vector> = first.basis().iter().map(|x| x.iter().chain(&zero).cloned().collect()).collect();
    rows.extend(second.basis().iter().map(|y| zero.iter().chain(y).cloned().collect()));
    r.span(rows)
}

/// N(R) = {(x, y) : x ∈ C, y ∈ I} for the doubling R of A.
pub fn cd_nucleus_by_formula(r: &Algebra, a: &Algebra) -> Result<Subspace> {
    let parts = doubling_parts(a)?;
    pairs(r, a, &parts.c, &parts.i)
}

/// Z(R) = {(x, y) : x ∈ B, y ∈ I ∩ J} for the doubling R of A.
pub fn cd_center_by_formula(r: &Algebra, a: &Algebra) -> Result<Subspace> {
    let parts = doubling_parts(a)?;
    pairs(r, a, &parts.b, &parts.j_prime)
}

/// (A, α) is CE iff B is essential in _B A and J ∩ I is an essential ideal of B.
pub fn cd_ce_criterion(a: &Algebra, alpha: &[Scalar]) -> Result<bool> {
    crate::builders::cayley_dickson(a, alpha)?;
    let parts = doubling_parts(a)?;
    let full = Subspace::full(a.ring(), a.dim());
    Ok(is_essential_over(a, &parts.b, &full, &parts.b)? && is_essential_over(a, &parts.b, &parts.b, &parts.j_prime)?)
}

/// (A, α) is N-essential iff A is CE and I is an essential ideal of C.
pub fn cd_n_essential_criterion(a: &Algebra, alpha: &[Scalar]) -> Result<bool> {
    crate::builders::cayley_dickson(a, alpha)?;
    let parts = doubling_parts(a)?;
    Ok(is_centrally_essential(a, Strategy::Auto)?.holds() && is_essential_over(a, &parts.c, &parts.c, &parts.i)?)
}

/// Certifies CE for a left uniserial algebra with radical J of nilpotency index n by checking
/// J^[n/2] ⊆ Z(A), then confirms definitional witnesses on `samples` random elements.
pub fn certify_uniserial_ce(a: &Algebra, j: &Subspace, samples: usize, seed: u64) -> Result<Report> {
    timed(|| {
        if !a.is_unital() {
            return Err(Error::NotUnital);
        }
        if !a.is_ideal(j)? {
            return Err(Error::NotAnIdeal);
        }
        let n = a.nilpotency_index(j)?.ok_or(Error::NotNilpotent)?;
        if n < 2 {
            return Ok(Report::new("ce", Verdict::Unknown, "certified-by-sufficient-criterion").with_note("J = 0"));
        }
        let powers = a.subspace_powers(j, n)?;
        let c = center(a)?;
        let mut notes = vec![format!("nilpotency index of J: {n}")];
        let residue = a.dim() - j.rank();
        let full = Subspace::full(a.ring(), a.dim());
        let mut chain = vec![full];
        chain.extend(powers.iter().cloned());
        let uniserial = chain.windows(2).all(|w| {
            w[0].rank() - w[1].rank() == residue
                && w[0].basis().iter().any(|g| {
                    let left: Vec<Vector> = (0..a.dim()).map(|i| a.mul(&a.basis(i), g)).collect();
                    a.span(left).and_then(|s| s.sum(&w[1])).is_ok_and(|s| s == w[0])
                })
        });
        notes.push(format!("J-adic layers cyclic of dimension {residue}: {uniserial}"));
        let half = &powers[n / 2 - 1];
        let half_central = half.is_subspace_of(&c)?;
        notes.push(format!("J^{} ⊆ Z(A): {half_central}", n / 2));
        if !(uniserial && half_central) {
            let mut rep = Report::new("ce", Verdict::Unknown, "certified-by-sufficient-criterion");
            rep.notes = notes;
            return Ok(rep);
        }
        let mut witness = None;
        let mut failure = None;
        for x in sample_elements(a, samples, seed).into_iter().skip(a.dim() * (a.dim() + 1) / 2).take(samples) {
            match ce_witness_at(a, &c, &x)? {
                Some(w) => {
                    witness.get_or_insert(w);
                }
                None => {
                    failure = Some(x);
                    break;
                }
            }
        }
        notes.push(format!("{samples} sampled elements checked for definitional witnesses"));
        let mut rep = Report::new(
            "ce",
            if failure.is_some() { Verdict::False } else { Verdict::True },
            "certified-by-sufficient-criterion",
        );
        rep.notes = notes;
        rep.witness = witness;
        rep.counterexample = failure;
        Ok(rep)
    })
}
