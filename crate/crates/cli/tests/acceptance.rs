//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use sgb::fixtures::FixtureSet;
use sgb::verify::{run, Group};
use sgb_core::Limits;

fn main() -> ExitCode {
    let fixtures = match FixtureSet::load_default() {
        Ok(f) => f,
        Err(e) => {
            println!("FAIL fixtures could not be loaded: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut failed = 0;
    for group in Group::ALL {
        let start = Instant::now();
        let report = run(&fixtures, &[group], Limits::default());
        let label = match group.criterion() {
            Some(c) => format!("criterion {c:>2} ({})", group.name()),
            None => format!("checksums    ({})", group.name()),
        };
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} {label}: {} checks in {:.2?}",
            report.checks.len(),
            start.elapsed()
        );
        for c in report.failures() {
            println!("     {c}");
        }
        for n in &report.notes {
            println!("     note: {n}");
        }
        if !report.passed() || report.checks.is_empty() {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} group(s) failed");
        ExitCode::FAILURE
    }
}
