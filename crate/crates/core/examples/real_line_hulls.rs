// Polars and hulls of finite subsets of the real line. The polar is a
// periodic union of closed intervals; the hull is finite and is found
// through the circle after scaling into `(-1/2, 1/2)`.

use qcgroups::circle::rat;
use qcgroups::real_line::{hull_r, member_hull_r, polar_r, scale_into_half, HullMembership, RealFiniteSet};

fn main() {
    let s = RealFiniteSet::new([rat(1, 6), rat(1, 2), rat(1, 1)]);
    let p = polar_r(&s).unwrap();
    println!("polar of {{1/6, 1/2, 1}}: period {}, {}", p.period, p.one_period);
    for z in [rat(2, 3), rat(5, 4), rat(-1, 3)] {
        match member_hull_r(&s, &z).unwrap() {
            HullMembership::In => println!("  {z} in hull"),
            HullMembership::Out { witness } => println!("  {z} outside, witness {witness}"),
        }
    }

    let t = RealFiniteSet::new([rat(0, 1), rat(1, 2), rat(-1, 2), rat(1, 4), rat(-1, 4)]);
    println!("alpha for {{0,±1/2,±1/4}}: {}", scale_into_half(&t));
    let h = hull_r(&t).unwrap();
    println!("hull: {:?}", h.points().iter().map(|x| x.to_string()).collect::<Vec<_>>());
}
