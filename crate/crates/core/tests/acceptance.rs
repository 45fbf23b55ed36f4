//! The acceptance battery: one line per criterion, all driven through the
//! verification suites with the canonical seed.

use std::time::{Duration, Instant};

use limweight::verify::run_suite;

const SEED: u64 = 7;

// (criterion number, suite, time budget)
const CRITERIA: &[(u32, &str, u64)] = &[
    (1, "bracket", 60),
    (2, "support", 120),
    (3, "hw", 600),
    (4, "gt", 60),
    (5, "degree-lemmas", 600),
    (6, "branching", 300),
    (7, "limit-coherence", 120),
    (8, "paper-examples", 10),
    (9, "annihilator", 10),
    (10, "properties", 120),
];

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for &(num, suite, budget_s) in CRITERIA {
        let budget = Duration::from_secs(budget_s);
        let start = Instant::now();
        let outcome = run_suite(suite, SEED);
        let elapsed = start.elapsed();
        let (pass, detail) = match &outcome {
            Ok(r) if !r.ok() => (false, format!("{} failures / {} checks", r.failures.len(), r.checked)),
            Ok(_) if elapsed > budget => (false, format!("over budget: {:.1?} > {}s", elapsed, budget_s)),
            Ok(r) => (true, format!("{} checks in {:.1?}", r.checked, elapsed)),
            Err(e) => (false, format!("error: {}", e)),
        };
        println!(
            "criterion {:>2} [{}]: {} ({})",
            num,
            suite,
            if pass { "PASS" } else { "FAIL" },
            detail
        );
        if let Ok(r) = &outcome {
            for f in &r.failures {
                println!("    counterexample: {}", f);
            }
        }
        if !pass {
            failed.push(num);
        }
    }
    assert!(failed.is_empty(), "failed acceptance criteria: {:?}", failed);
}
