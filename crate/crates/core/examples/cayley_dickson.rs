//! Cayley-Dickson doubling over Z4, Z3, Z2: alternativity, nucleus and center formulas.

use ce_lab::analyzers::{
    associative_center, cd_center_by_formula, cd_nucleus_by_formula, center, is_alternative, is_centrally_essential,
    is_right_alternative, Strategy,
};
use ce_lab::builders::{cayley_dickson_scalar, scalar_algebra};
use ce_lab::{Result, ScalarRing};

fn main() -> Result<()> {
    for n in [4, 3, 2] {
        let ring = ScalarRing::residue_ring(n)?;
        let one = ring.one();
        let mut a = scalar_algebra(&ring);
        for name in ["complex", "quaternion", "octonion", "sedenion"] {
            let r = cayley_dickson_scalar(&a, &one)?;
            let formulas = associative_center(&r)? == cd_nucleus_by_formula(&r, &a)? && center(&r)? == cd_center_by_formula(&r, &a)?;
            let ce = if r.cardinality().is_some_and(|c| c <= 1 << 16) {
                is_centrally_essential(&r, Strategy::Enumerate)?.verdict.to_string()
            } else {
                is_centrally_essential(&r, Strategy::Auto)?.verdict.to_string()
            };
            println!(
                "Z{n} {name:<10} dim {:<2} assoc {:<5} alt {:<5} right-alt {:<5} comm {:<5} CE {:<5} formulas agree {}",
                r.dim(),
                r.is_associative(),
                is_alternative(&r),
                is_right_alternative(&r),
                r.is_commutative(),
                ce,
                formulas,
            );
            a = r;
        }
    }
    Ok(())
}
