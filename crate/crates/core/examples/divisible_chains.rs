// Necessary conditions for `{0} ∪ {±1/b_n}` to be quasi-convex, checked
// against brute-force hulls.

use qcgroups::families::{chain_violation, necessary_report_r, necessary_report_t};
use qcgroups::polar::{in_hull, unit_fraction_chain_check};
use qcgroups::real_line::member_hull_r;
use qcgroups::{DivisibleChain, GridSet, ResidueSet, UnitRational};

fn main() {
    for terms in ["2,8", "9,27,81", "4,8,16", "8,16,48", "4,16,64"] {
        let b: DivisibleChain = terms.parse().unwrap();
        let t = necessary_report_t(&b);
        let r = necessary_report_r(&b);
        println!("({terms}) ratios {:?}: T fails {:?}, R ok {}", b.ratios(), t.failures(), r.all_pass());
        if let Some(v) = chain_violation(&b, true) {
            let x = b.points_t();
            let p = GridSet::from_points(&[UnitRational::from_rational(&v.point)], Some(x.modulus())).unwrap();
            let j = *p.residues().iter().next().unwrap();
            println!("  {} ({}) in hull on T: {}", v.point, v.rule, in_hull(&x, j).unwrap());
        }
        if let Some(v) = chain_violation(&b, false) {
            println!("  {} in hull on R: {}", v.point, member_hull_r(&b.points_r(), &v.point).unwrap().is_in());
        }
        println!("  unit fractions distinct: {}", unit_fraction_chain_check(&b));
    }
}
