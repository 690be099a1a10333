use qcgroups::circle::rat;
use qcgroups::witnesses::{
    check_certificate, exclusion_j3, exclusion_r2, exclusion_t3, verify_certificate, CertCharacter,
    ExclusionCertificate,
};
use qcgroups::GapSequence;

fn seq(s: &str) -> GapSequence {
    s.parse().unwrap()
}

fn all_certs() -> Vec<(ExclusionCertificate, u64)> {
    let mut out = Vec::new();
    let a = seq("2,4,7");
    for eps in [[1i8, 1, 0], [1, -1, 1], [0, -1, 1], [-1, 0, -1]] {
        out.push((exclusion_t3(&a, &eps).unwrap(), 3));
    }
    let b = seq("0,3,5");
    for eps in [[1i8, 1, 0], [-1, 1, 1], [0, 1, -1]] {
        out.push((exclusion_j3(&b, &eps).unwrap(), 7));
    }
    out.push((exclusion_r2(&seq("1,3"), &rat(3, 16)).unwrap(), 2));
    out
}

#[test]
fn certificates_verify_and_round_trip() {
    for (cert, t) in all_certs() {
        assert!(verify_certificate(&cert, t).unwrap(), "{}", cert.to_json());
        let back = ExclusionCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
    }
}

#[test]
fn tampered_fields_are_rejected() {
    for (cert, t) in all_certs() {
        let mut c = cert.clone();
        c.evaluation = "0".into();
        assert!(!check_certificate(&c, t).unwrap().evaluation_matches);

        let mut c = cert.clone();
        c.target = match cert.family.kind {
            qcgroups::FamilyKind::J3 => "1".into(),
            _ => "0".into(),
        };
        assert!(!verify_certificate(&c, t).unwrap_or(false));

        let mut c = cert.clone();
        c.character = match &cert.character {
            CertCharacter::Integer { value } => CertCharacter::Integer { value: format!("{value}1") },
            CertCharacter::Prufer { multiplier, index } => {
                CertCharacter::Prufer { multiplier: multiplier + 3, index: *index }
            }
            CertCharacter::Real { .. } => CertCharacter::Real { value: "7/1".into() },
        };
        assert!(!verify_certificate(&c, t).unwrap_or(false), "{}", c.to_json());

        let mut c = cert.clone();
        c.schema = "other/9".into();
        assert!(check_certificate(&c, t).is_err());
    }
}

#[test]
fn malformed_json_is_a_parse_error() {
    assert!(ExclusionCertificate::from_json("{").is_err());
    assert!(ExclusionCertificate::from_json(r#"{"schema":"qcgroups/1"}"#).is_err());
}

#[test]
fn short_truncation_is_reported() {
    let cert = exclusion_j3(&seq("0,3,5"), &[1, 1, 0]).unwrap();
    assert!(check_certificate(&cert, 3).is_err());
    let cert = exclusion_t3(&seq("2,4,7"), &[1, 1, 0]).unwrap();
    assert!(check_certificate(&cert, 0).is_err());
}
