//! Runs every verification suite and prints one PASS/FAIL line per criterion.

use og4_core::verify::{run_suite, SUITES};

#[test]
fn all_criteria() {
    let mut failed = Vec::new();
    for (i, name) in SUITES.iter().enumerate() {
        let report = run_suite(name).expect("suite exists");
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!("{status} {:>2}. {name} ({} ms)", i + 1, report.millis);
        for c in &report.claims {
            println!("     {} {} [{} ms]: {}", if c.passed { "ok " } else { "ERR" }, c.name, c.millis, c.detail);
        }
        if !report.passed() {
            failed.push(*name);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
