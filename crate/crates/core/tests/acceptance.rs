//! Runs the twelve acceptance criteria and prints one line per criterion.

use std::process::ExitCode;

fn main() -> ExitCode {
    let results = qcgroups::suite::run_all(|r| {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        println!("[{mark}] {:>2} {} ({} ms): {}", r.id, r.name, r.millis, r.detail);
    });
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
