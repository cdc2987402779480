//! Rings built from derivations: the uniserial ring over F2(u) and the triangular ring over Z[x,y].

use ce_lab::analyzers::{center, certify_uniserial_ce};
use ce_lab::builders::{jelonek_triangular, uniserial_derivation_ring};
use ce_lab::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let a = uniserial_derivation_ring(2)?;
    let x = a.element_by_label("x").expect("x");
    let t = a.element_by_label("t").expect("t");
    println!("uniserial ring over {}: dim {}", a.ring().name(), a.dim());
    println!("  [x, t] = {}", a.format_element(&a.commutator(&x, &t)));
    let j = a.ideal_generated_by(&[x])?;
    println!("  J nilpotent of index {:?}, dim Z = {}", a.nilpotency_index(&j)?, center(&a)?.rank());
    let rep = certify_uniserial_ce(&a, &j, 100, 1)?;
    println!("  CE {} ({}), notes {:?}", rep.verdict, rep.strategy, rep.notes);

    let r = jelonek_triangular(None)?;
    let (fx, fy) = (r.elem("x", "0")?, r.elem("y", "0")?);
    println!("triangular ring over {}:", r.ring().name());
    println!("  [(x,0), (y,0)] = {}", r.format(&r.commutator(&fx, &fy)));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = r.random(&mut rng);
    let y = r.mul(&a, &r.elem("0", "1")?);
    println!("  a = {}\n  a·(0,1) = {}", r.format(&a), r.format(&y));
    Ok(())
}
