// Hulls are carried into hulls by homomorphisms: `f(Q(E)) ⊆ Q(f(E))`.

use qcgroups::polar::{hull, pushforward_check, Homomorphism};
use qcgroups::{CyclicSet, ResidueSet};

fn main() {
    let e = CyclicSet::new(81, [1, 10]).unwrap();
    println!("hull of {{1,10}} in Z(81): {:?}", hull(&e).unwrap().hull.signed_elements());
    let maps = [
        Homomorphism::Quotient { from: 81, to: 9 },
        Homomorphism::Quotient { from: 81, to: 27 },
        Homomorphism::Multiply { modulus: 81, factor: 2 },
        Homomorphism::Multiply { modulus: 81, factor: 3 },
    ];
    for f in maps {
        println!("{f:?}: {}", pushforward_check(&f, &e).unwrap());
    }
    println!("{} elements", e.len());
}
