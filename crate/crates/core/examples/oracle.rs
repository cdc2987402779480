//! Seeded random unital algebras checked against brute force.

use ce_lab::oracle::{run_oracle, OracleConfig};
use ce_lab::{Result, ScalarRing};

fn main() -> Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for (p, dim) in [(2, 3), (3, 2), (2, 4)] {
        let out = run_oracle(&OracleConfig { count: 200, dim, scalar: ScalarRing::prime_field(p)?, seed })?;
        let ce = out.cases.iter().filter(|c| c.ce).count();
        let assoc = out.cases.iter().filter(|c| c.associative).count();
        println!("F{p}, dim ≤ {dim}: {} algebras, {assoc} associative, {ce} CE, {} disagreements", out.cases.len(), out.failures.len());
        for f in &out.failures {
            println!("  #{}: {}\n{}", f.index, f.reason, f.minimized.to_json());
        }
    }
    Ok(())
}
