// Exclusion certificates: a character in the polar of a family and a point
// it pushes out of `T_+`, serialized as JSON and re-checked.

use qcgroups::circle::rat;
use qcgroups::witnesses::{check_certificate, exclusion_j3, exclusion_r2, exclusion_t3, ExclusionCertificate};

fn main() {
    let a = "1,3,5,7".parse().unwrap();
    let cert = exclusion_t3(&a, &[1, 0, -1, 1]).unwrap();
    let json = cert.to_json();
    println!("{json}");
    let back = ExclusionCertificate::from_json(&json).unwrap();
    println!("T3 check: {:?}", check_certificate(&back, 4).unwrap());

    let b = "0,2,4".parse().unwrap();
    let cert = exclusion_j3(&b, &[1, -1, 0]).unwrap();
    println!("J3 target {} value {}: {:?}", cert.target, cert.evaluation, check_certificate(&cert, 7).unwrap());

    let c = "1,3".parse().unwrap();
    let cert = exclusion_r2(&c, &rat(3, 16)).unwrap();
    println!("R2 target {} value {}: {}", cert.target, cert.evaluation, check_certificate(&cert, 2).unwrap().passed());

    // a tampered evaluation is caught
    let mut bad = back.clone();
    bad.evaluation = "1/81".into();
    println!("tampered passes: {}", check_certificate(&bad, 4).unwrap().passed());
}
