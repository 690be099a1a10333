// Hulls in finite cyclic groups `Z(n)`, with the character that excludes
// each outside element.

use qcgroups::polar::{check_two_x_equivalence, hull_cyclic, in_hull};
use qcgroups::witnesses::{membership_demo, DemoCase};
use qcgroups::{CyclicSet, ResidueSet};

fn main() {
    let set = CyclicSet::new(24, [1, 3, 6]).unwrap();
    let report = hull_cyclic(&set).unwrap();
    println!("hull of {{1,3,6}} in Z(24): {:?}", report.hull.signed_elements());
    for (x, k) in report.witnesses.iter().take(4) {
        println!("  {x} excluded by character {k}");
    }

    for case in ["h12-a:1,5", "h12-a:1,5,-", "h12-b:1", "h12-c:1", "two-x:1"] {
        let c: DemoCase = case.parse().unwrap();
        let (set, target) = membership_demo(c, 40).unwrap();
        println!("{case}: {target} in hull of {:?} in Z(40): {}", set.signed_elements(), in_hull(&set, target).unwrap());
    }

    // 2x in Q({x,3x}) exactly when ±1/4 is not a value of a character at x
    for n in [8, 12, 15] {
        let r = check_two_x_equivalence(1, n).unwrap();
        println!("x=1 in Z({n}): {r:?}");
    }
    println!("set size {}", set.len());
}
