// Runs a few of the quick end-to-end checks; the CLI runs all twelve.

use qcgroups::suite::run_criterion;

fn main() {
    for id in [3, 5, 7, 8] {
        let r = run_criterion(id).unwrap();
        println!("[{}] {} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.detail);
    }
}
