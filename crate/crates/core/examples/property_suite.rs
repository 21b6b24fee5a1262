//! Runs the quick property suite and prints a summary.

use quiverpaths::verify::{run_all, Bounds};

fn main() {
    for r in run_all(&Bounds::quick()) {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!(
            "{:<24} {status} {:>8} cases {}",
            r.name,
            r.cases,
            r.note.unwrap_or_default()
        );
    }
}
