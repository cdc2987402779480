//! Group algebras over small fields: which are centrally essential, and why.

use ce_lab::analyzers::{center, group_algebra_ce_predicate, is_centrally_essential, Strategy};
use ce_lab::builders::group_algebra;
use ce_lab::groups::{dihedral, generalized_quaternion, order32_example, quaternion_q8, semidihedral, symmetric, FiniteGroup};
use ce_lab::{Result, ScalarRing};

fn show(name: &str, ring: &ScalarRing, g: &FiniteGroup) -> Result<()> {
    let info = group_algebra(ring, g)?;
    let a = &info.algebra;
    let rep = is_centrally_essential(a, Strategy::Auto)?;
    let predicate = group_algebra_ce_predicate(ring, g)?;
    println!(
        "{name:<10} |G| = {:<3} class {:?}  dim Z = {:<3} CE = {} via {}, structural predicate = {}",
        g.order(),
        g.nilpotence_class(),
        center(a)?.rank(),
        rep.verdict,
        rep.strategy,
        predicate.verdict,
    );
    if let Some(w) = &rep.witness {
        println!("           witness {}", w.to_json(a));
    }
    Ok(())
}

fn main() -> Result<()> {
    let f2 = ScalarRing::prime_field(2)?;
    let f3 = ScalarRing::prime_field(3)?;
    show("F2[Q8]", &f2, &quaternion_q8())?;
    show("F2[D8]", &f2, &dihedral(8)?)?;
    show("F2[D16]", &f2, &dihedral(16)?)?;
    show("F2[Q16]", &f2, &generalized_quaternion(16)?)?;
    show("F2[SD16]", &f2, &semidihedral(16)?)?;
    show("F3[S3]", &f3, &symmetric(3)?)?;

    let g = order32_example();
    let series = g.upper_central_series();
    println!("order 32: |Z1| = {}, |Z2| = {}", series[1].len(), series[2].len());
    show("F2[G32]", &f2, &g)
}
