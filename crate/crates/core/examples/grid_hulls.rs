// Quasi-convex hulls of finite subsets of `T`. A set annihilated by `N`
// has its hull on the grid `(1/N)Z/Z`, so the computation is finite.

use qcgroups::polar::{hull_grid, polar_grid, CharacterTable};
use qcgroups::{GridSet, ResidueSet, UnitRational};

fn show(label: &str, points: &[&str]) {
    let pts: Vec<UnitRational> = points.iter().map(|p| p.parse().unwrap()).collect();
    let set = GridSet::from_points(&pts, None).unwrap();
    let report = hull_grid(&set).unwrap();
    let mut pts = report.hull.points_t();
    pts.sort();
    let hull: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
    println!("{label}: grid {}, hull {{{}}}", set.modulus(), hull.join(", "));
    println!("  quasi-convex: {}, witnesses verify: {}", report.is_quasi_convex(), report.witnesses_verify());
}

fn main() {
    show("{0, ±1/4, ±1/16}", &["0", "1/4", "-1/4", "1/16", "-1/16"]);
    show("{0, ±1/9, ±1/27}", &["0", "1/9", "-1/9", "1/27", "-1/27"]);
    show("{1/3}", &["1/3"]);

    let set = GridSet::new(16, [0, 4, -4, 1, -1]).unwrap();
    let polar = polar_grid(&set).unwrap();
    println!("polar of {{0,±1/4,±1/16}} mod 16: {:?}", polar.residues);

    // the bitset path gives the same answer
    let table = CharacterTable::new(16).unwrap();
    let bits = table.bits_of(set.residues().iter().copied());
    println!("table says quasi-convex: {}", table.is_quasi_convex_bits(&bits));
}
