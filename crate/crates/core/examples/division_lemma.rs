// The scaling lemma on grids: if `kY` is quasi-convex for a small
// symmetric `Y`, so is `Y`.

use qcgroups::polar::check_division_lemma;

fn main() {
    for n in [16, 24, 32, 48] {
        match check_division_lemma(n) {
            Ok(s) => println!("N={n}: {} cases, (a) triggered {}, (b) triggered {}", s.cases, s.triggered_a, s.triggered_b),
            Err(e) => println!("N={n}: {e}"),
        }
    }
}
