// Truncated 3-adic integers `Z(3^M)`: balanced digits, the index sets
// `J_m`, and the set cut out by `J_1 ∩ J_2` compared with `Σ ε_n x_n`.

use qcgroups::padic::{compute_jm, epsilon_forms, q12_set, BalancedDigits, Carrier, PadicTruncGroup, PruferChar};
use qcgroups::GapSequence;

fn main() {
    let g = PadicTruncGroup::ternary(4).unwrap();
    for x in [5, -7, 40] {
        let d = BalancedDigits::of_cyclic(x, 4).unwrap();
        println!("{x} in Z(81): residue {}, digits {d}", g.element(x));
    }
    let y = "8/27".parse().unwrap();
    println!("8/27 has digits {}", BalancedDigits::of_unit(&y).unwrap());

    let chi = PruferChar::new(-7, 3);
    println!("{chi} at 8: {}", chi.eval(8));

    let a: GapSequence = "0,2,4".parse().unwrap();
    for carrier in [Carrier::Grid { exponent: 5 }, Carrier::Cyclic { level: 6 }] {
        let j1 = compute_jm(&a, 1, 5, &carrier).unwrap();
        let j2 = compute_jm(&a, 2, 5, &carrier).unwrap();
        let q = q12_set(&a, &carrier).unwrap();
        let e = epsilon_forms(&a, &carrier).unwrap();
        println!("{carrier:?}: J1 {j1:?}, J2 {j2:?}, |Q12| = {}, equals epsilon forms: {}", q.len(), q == e);
    }
}
