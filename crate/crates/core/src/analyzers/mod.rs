//! Centers, radicals, socles and the centrally essential predicates.

mod criteria;
mod essential;
mod radical;
mod report;
mod structure;
#[cfg(test)]
mod tests;

pub use criteria::{
    cd_ce_criterion, cd_center_by_formula, cd_n_essential_criterion, cd_nucleus_by_formula, certify_uniserial_ce,
    doubling_parts, grassmann_ce_predicate, group_algebra_ce_predicate, DoublingParts,
};
pub use essential::{
    ce_witness_at, center_by_enumeration, essentiality, is_centrally_essential, is_essential_over, is_essential_submodule,
    is_k_essential, is_n_essential, is_strongly_ce, is_weakly_ce, AUTO_ENUMERATION_LIMIT, SAMPLE_COUNT,
};
pub use radical::{
    center_nilradical, nilradical_commutative, nilradical_supported, socle_over_center, verify_local_radical, LocalRadical,
};
pub use report::{CEWitness, Flavor, Multiplier, Report, Strategy, Verdict};
pub use structure::{
    all_idempotents_central, annihilator, associative_center, center, centroid, commutative_center, commutator_ideal,
    idempotents, integer_annihilator, is_alternative, is_left_alternative, is_left_zero_divisor, is_right_alternative,
    is_right_zero_divisor, zero_divisors_symmetric, EndoSpace, Side,
};
