//! Runs without the libtest harness so the verdict lines are always shown.

use std::process::ExitCode;

use trialgebra::acceptance::{Acceptance, CRITERIA};

fn main() -> ExitCode {
    let acceptance = Acceptance::new();
    let mut failed = 0;
    for id in 1..=CRITERIA.len() {
        match acceptance.run(id) {
            Ok(c) => {
                println!("{} criterion {}: {}", c.verdict(), c.id, c.name);
                for check in c.checks.iter().filter(|k| !k.passed) {
                    println!("    failed: {}", check.name);
                }
                failed += usize::from(!c.passed);
            }
            Err(e) => {
                println!("FAIL criterion {id}: {} ({e})", CRITERIA[id - 1]);
                failed += 1;
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", CRITERIA.len());
        ExitCode::FAILURE
    }
}
