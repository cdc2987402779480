//! Acceptance criteria: each runs its reference cases sequentially and must pass within its time limit.

use ce_lab::suite::{cases, run_case, CaseOutcome};
use std::time::{Duration, Instant};

struct Criterion {
    id: &'static str,
    what: &'static str,
    cases: &'static [&'static str],
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: "AC01", what: "F2[Q8]: dim, size, CE under both strategies, idempotents, local radical", cases: &["intro-ex1"], limit: secs(1) },
    Criterion { id: "AC02", what: "exterior algebras of F3^n: CE iff n odd; n = 3 center and size", cases: &["intro-ex2", "grassmann-parity"], limit: secs(5) },
    Criterion { id: "AC03", what: "F2[D4] CE with witness 1 + b", cases: &["group-d8"], limit: secs(1) },
    Criterion { id: "AC04", what: "order-32 group invariants; group algebra not CE", cases: &["group-order32"], limit: secs(10) },
    Criterion { id: "AC05", what: "class-3 groups of order 16 give CE group algebras", cases: &["group-class3-16"], limit: secs(5) },
    Criterion { id: "AC06", what: "F3[S3] not CE, structural predicate agrees", cases: &["group-s3"], limit: secs(2) },
    Criterion { id: "AC07", what: "matrix family over F3 (n = 7) and F5 (n = 8)", cases: &["matrix-f3-7", "matrix-f5-8"], limit: secs(2) },
    Criterion { id: "AC08", what: "K, R, S commutative; T not CE with socle outside the center", cases: &["t-algebras"], limit: secs(1) },
    Criterion { id: "AC09", what: "skew polynomial quotient: center, not CE, J^2 central", cases: &["skew-poly-4-3"], limit: secs(1) },
    Criterion {
        id: "AC10",
        what: "Cayley-Dickson doubles over Z4, Z2, Z3 and the nucleus/center formulas",
        cases: &["cd-quaternion-z4", "cd-octonion-z4", "cd-sedenion-z4", "cd-quaternion-z2", "cd-quaternion-z3"],
        limit: secs(20),
    },
    Criterion {
        id: "AC11",
        what: "CE, strongly CE and weakly CE separations",
        cases: &["flavors-zero-product", "flavors-positive-exterior", "flavors-unital"],
        limit: secs(2),
    },
    Criterion {
        id: "AC12",
        what: "powerset, Boolean and nonnegative rational group semirings",
        cases: &["semiring-powerset", "semiring-boolean-q8", "semiring-rational-q8"],
        limit: secs(5),
    },
    Criterion { id: "AC13", what: "uniserial derivation ring, p = 2", cases: &["uniserial-p2"], limit: secs(3) },
    Criterion {
        id: "AC14",
        what: "truncation, tensor and direct products preserve CE",
        cases: &["preserve-truncated", "preserve-tensor", "preserve-products"],
        limit: secs(5),
    },
    Criterion { id: "AC15", what: "oracle batch of 200 random unital algebras", cases: &["oracle-batch"], limit: secs(20) },
];

fn describe(o: &CaseOutcome) -> String {
    let mut parts: Vec<String> = o
        .failed_checks()
        .iter()
        .map(|c| format!("{}: {} expected {}, got {}", o.id, c.name, c.expected, c.actual))
        .collect();
    parts.extend(o.error.iter().map(|e| format!("{}: error: {e}", o.id)));
    parts.join("; ")
}

fn main() {
    let all = cases();
    let total = Instant::now();
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let mut problems = Vec::new();
        for id in c.cases {
            match all.iter().find(|s| s.id == *id) {
                Some(case) => {
                    let o = run_case(case);
                    if !o.ok() {
                        problems.push(describe(&o));
                    }
                }
                None => problems.push(format!("missing case {id}")),
            }
        }
        let elapsed = start.elapsed();
        if elapsed > c.limit {
            problems.push(format!("took {} ms, limit {} ms", elapsed.as_millis(), c.limit.as_millis()));
        }
        let tag = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("[{tag}] {} {} ({} ms, limit {} ms)", c.id, c.what, elapsed.as_millis(), c.limit.as_millis());
        for p in &problems {
            println!("       {p}");
        }
        failed += usize::from(!problems.is_empty());
    }
    println!("{} of {} criteria passed in {} ms", CRITERIA.len() - failed, CRITERIA.len(), total.elapsed().as_millis());
    if failed > 0 {
        std::process::exit(1);
    }
}
