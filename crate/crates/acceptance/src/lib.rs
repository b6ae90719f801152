//! A minimal runner for the acceptance suite.
//!
//! Each criterion is a closure that panics on failure. [`run_criteria`] runs them in
//! order, isolates panics, and prints one line per criterion with its verdict and
//! wall-clock time, followed by a summary line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

/// One acceptance criterion.
pub struct Criterion {
    /// Criterion number, as printed.
    pub number: usize,
    /// Short description.
    pub name: &'static str,
    /// The check; panics on failure.
    pub check: fn(),
}

/// The outcome of one criterion.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    /// Criterion number.
    pub number: usize,
    /// Whether the check completed without panicking.
    pub pass: bool,
    /// Wall-clock seconds.
    pub seconds: f64,
}

/// Runs every criterion whose number is accepted by `filter`, printing one line each.
pub fn run_criteria(criteria: &[Criterion], filter: impl Fn(usize) -> bool) -> Vec<Outcome> {
    let mut outcomes = Vec::new();
    for c in criteria.iter().filter(|c| filter(c.number)) {
        let start = Instant::now();
        let pass = catch_unwind(AssertUnwindSafe(c.check)).is_ok();
        let seconds = start.elapsed().as_secs_f64();
        println!(
            "criterion {:>2}: {}  {} ({seconds:.2}s)",
            c.number,
            if pass { "PASS" } else { "FAIL" },
            c.name
        );
        outcomes.push(Outcome {
            number: c.number,
            pass,
            seconds,
        });
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("acceptance: {passed}/{} criteria passed", outcomes.len());
    outcomes
}
