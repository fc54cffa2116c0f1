//! Frozen outputs. A change here is a change in the reproducibility contract.

use facering::catalog;
use facering::lefschetz::{certify_g, replay_certificate, Certificate, CheckConfig};
use facering::scalar::FieldKind;

const ICOSAHEDRON_SEED7: &str = include_str!("golden/icosahedron_seed7.cert.json");

#[test]
fn icosahedron_certificate_is_frozen() {
    let cert = certify_g(&catalog::icosahedron(), &CheckConfig::with_seed(7), FieldKind::Prime);
    assert_eq!(cert.to_json().trim_end(), ICOSAHEDRON_SEED7.trim_end());
}

#[test]
fn frozen_certificate_replays() {
    let cert: Certificate = serde_json::from_str(ICOSAHEDRON_SEED7).unwrap();
    assert_eq!(cert.g, vec![1, 8]);
    assert_eq!(cert.f, vec![1, 12, 30, 20]);
    replay_certificate(&catalog::icosahedron(), &cert).unwrap();
}

#[test]
fn tampered_certificate_is_rejected() {
    let mut cert: Certificate = serde_json::from_str(ICOSAHEDRON_SEED7).unwrap();
    cert.degrees[1].rank -= 1;
    assert!(replay_certificate(&catalog::icosahedron(), &cert).is_err());
    let mut cert: Certificate = serde_json::from_str(ICOSAHEDRON_SEED7).unwrap();
    cert.seeds.iter_mut().for_each(|s| s.index += 1);
    assert!(replay_certificate(&catalog::icosahedron(), &cert).is_err());
}
