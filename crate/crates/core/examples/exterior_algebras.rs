//! Exterior algebras of F3^n: centrally essential exactly for odd n.

use ce_lab::analyzers::{center, grassmann_ce_predicate, is_centrally_essential, Strategy};
use ce_lab::builders::{grassmann, scalar_algebra};
use ce_lab::{Result, ScalarRing};

fn main() -> Result<()> {
    let f3 = ScalarRing::prime_field(3)?;
    for n in 0..=6 {
        let a = grassmann(&f3, n)?;
        let rep = is_centrally_essential(&a, Strategy::Auto)?;
        println!(
            "n = {n}: dim {:<3} dim Z = {:<3} CE = {:<5} ({}), coefficient criterion = {}",
            a.dim(),
            center(&a)?.rank(),
            rep.verdict,
            rep.strategy,
            grassmann_ce_predicate(&scalar_algebra(&f3), n)?,
        );
    }
    let a = grassmann(&f3, 3)?;
    let z = center(&a)?;
    let basis: Vec<String> = z.basis().iter().map(|v| a.format_element(v)).collect();
    println!("Z(Λ(F3^3)) = span {{{}}}", basis.join(", "));
    Ok(())
}
