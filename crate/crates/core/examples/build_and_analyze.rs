//! Writes an algebra to JSON, reads it back and runs the analyzers the CLI uses.

use ce_lab::algebra::Algebra;
use ce_lab::analyzers::{idempotents, is_centrally_essential, socle_over_center, verify_local_radical, Strategy};
use ce_lab::builders::group_algebra;
use ce_lab::groups::quaternion_q8;
use ce_lab::{Result, ScalarRing};

fn main() -> Result<()> {
    let info = group_algebra(&ScalarRing::prime_field(2)?, &quaternion_q8())?;
    let text = info.algebra.to_json();
    let a = Algebra::from_json(&text)?;
    assert_eq!(a.to_json(), text);
    println!("{} bytes of JSON, dim {}, {} elements", text.len(), a.dim(), a.cardinality().unwrap_or(0));
    for s in [Strategy::Enumerate, Strategy::Socle, Strategy::PerElementLinear] {
        let r = is_centrally_essential(&a, s)?;
        println!("{:<20} {} in {} ms", s.name(), r.verdict, r.millis);
    }
    let soc = socle_over_center(&a)?;
    println!("socle: {:?}", soc.basis().iter().map(|v| a.format_element(v)).collect::<Vec<_>>());
    println!("idempotents: {:?}", idempotents(&a)?.iter().map(|v| a.format_element(v)).collect::<Vec<_>>());
    let local = verify_local_radical(&a, &info.augmentation)?;
    println!("A/J has dim {}, J^{} = 0", local.quotient.dim(), local.nilpotency_index);
    Ok(())
}
