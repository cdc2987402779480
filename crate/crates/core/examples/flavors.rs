//! CE, strongly CE and weakly CE on unital and non-unital algebras.

use ce_lab::algebra::Algebra;
use ce_lab::analyzers::{essentiality, is_centrally_essential, Flavor, Strategy};
use ce_lab::builders::{ce_matrix_family, grassmann, grassmann_positive_part, skew_poly_quotient};
use ce_lab::{Result, ScalarRing};

fn row(name: &str, a: &Algebra) -> Result<()> {
    let ce = is_centrally_essential(a, Strategy::Auto)?.verdict;
    let strong = essentiality(a, Flavor::Strong)?.verdict;
    let weak = essentiality(a, Flavor::Weak)?.verdict;
    println!("{name:<28} unital {:<5} CE {ce:<5} strong {strong:<5} weak {weak}", a.is_unital());
    Ok(())
}

fn main() -> Result<()> {
    let f3 = ScalarRing::prime_field(3)?;
    row("zero product on F3", &Algebra::zero_product(&f3, 1))?;
    row("positive part of Λ(F3^2)", &grassmann_positive_part(&f3, 2)?)?;
    row("matrix family F3, n = 7", &ce_matrix_family(&f3, 7, false)?)?;
    row("matrix family F3, n = 7, +1", &ce_matrix_family(&f3, 7, true)?)?;
    row("Λ(F3^3)", &grassmann(&f3, 3)?)?;
    row("GF(4)[X; Frob]/(X^3)", &skew_poly_quotient(4, 3)?)
}
