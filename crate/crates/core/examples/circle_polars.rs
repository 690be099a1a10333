// Polars in the circle group: the set of points that a finite family of
// integer characters keeps inside `T_+ = [-1/4, 1/4]`.

use num_bigint::BigInt;
use qcgroups::circle::{rat, t_plus_preimage, t_polar_of_characters};
use qcgroups::{RationalIntervalUnion, UnitRational};

fn main() {
    for k in [1, 3, 4] {
        println!("preimage of T_+ under x -> {k}x: {}", t_plus_preimage(&BigInt::from(k)));
    }

    let chars: Vec<BigInt> = [1, 4, 8].map(BigInt::from).to_vec();
    let polar = t_polar_of_characters(&chars);
    println!("{{1,4,8}} polar: {polar}");
    println!("measure: {}", polar.measure());

    // the two side pieces are 15/64 + T_16 and its mirror
    let side = RationalIntervalUnion::t_m(16).translate(&rat(15, 64));
    assert_eq!(side.intersect(&polar), side);

    let x: UnitRational = "7/32".parse().unwrap();
    println!("{x} in polar: {}, norm {}", polar.contains_t(&x), x.norm());
    let y = UnitRational::new(3, 4).unwrap();
    println!("3/4 reduces to {y}, order {}", y.order());
}
