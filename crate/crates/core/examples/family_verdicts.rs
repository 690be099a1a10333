// Quasi-convexity verdicts for the four null-sequence families, with the
// hull point that breaks quasi-convexity when a condition fails.

use qcgroups::families::{points_k3, verdict};
use qcgroups::polar::hull_grid;
use qcgroups::{FamilyKind, GapSequence, ResidueSet};

fn main() {
    let cases = [
        ("T2", "1,3,5"),
        ("T2", "0,2,4"),
        ("T2", "1,2,3"),
        ("R2", "1,2,4"),
        ("R2", "-3,-1,2"),
        ("T3", "1,3,5"),
        ("T3", "1,2"),
        ("J3", "0,2,4"),
        ("J3", "0,1"),
    ];
    for (kind, seq) in cases {
        let k: FamilyKind = kind.parse().unwrap();
        let a: GapSequence = seq.parse().unwrap();
        let v = verdict(k, &a).unwrap();
        let point = v.witness_recipe.and_then(|w| w.point(k, &a).ok());
        println!(
            "{kind} {a}: {:?} {} {}",
            v.outcome,
            v.violated.map(|c| c.id()).unwrap_or(""),
            point.map(|p| format!("(hull point {p})")).unwrap_or_default()
        );
    }

    let a: GapSequence = "1,3,5".parse().unwrap();
    let set = points_k3(&a, a.len()).unwrap();
    println!("K(1,3,5) on grid {}: quasi-convex {}", set.modulus(), hull_grid(&set).unwrap().is_quasi_convex());
}
