//! The g-certificate pipeline: validation, face numbers, and a hard Lefschetz witness.

use serde::{Deserialize, Serialize};

use crate::artinian::{ArtinianRing, LinearForm};
use crate::io::content_hash;
use crate::rng::{purpose, SeedStream};
use crate::scalar::{FieldKind, Fp, Rational, Scalar};
use crate::simplicial::{
    classify, dehn_sommerville_check, f_vector, g_vector, h_vector, is_m_sequence, reduced_homology, Complex, Topology,
};

use super::{check_hard_lefschetz, format_form, hard_lefschetz_ranks, trial_realization, CheckConfig, DegreeRecord, Verdict};

/// A pipeline stage that could not complete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageError {
    pub stage: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    /// Whether homology was checked (strict mode) or assumed (trust mode).
    pub checked: bool,
    pub topology: Topology,
    pub reduced_betti: Vec<usize>,
}

/// One random stream consumed by the witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedRecord {
    pub purpose: String,
    pub index: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub input_sha: String,
    pub field: String,
    pub prime: Option<u64>,
    pub mode: String,
    pub seed: u64,
    pub trials: usize,
    pub seeds: Vec<SeedRecord>,
    pub validation: Option<Validation>,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub g: Vec<i64>,
    pub dehn_sommerville: Option<bool>,
    pub m_sequence: Option<bool>,
    /// Ranks of `·ℓ^{d-2k} : A^k → A^{d-k}`.
    pub degrees: Vec<DegreeRecord>,
    pub ell: Vec<String>,
    pub verdict: String,
    /// How the top-degree isomorphism to the field is normalized.
    pub normalization: String,
    pub error: Option<StageError>,
}

const NORMALIZATION: &str = "last spanning monomial of the top degree with nonzero class evaluates to 1";

impl Certificate {
    /// 0 when the witness was found, 2 when every trial failed, 1 on any stage error.
    pub fn exit_code(&self) -> i32 {
        match self.verdict.as_str() {
            "HOLDS" => 0,
            "LIKELY_FAILS" => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    fn fail(mut self, stage: &str, message: impl Into<String>) -> Self {
        self.verdict = "ERROR".into();
        self.error = Some(StageError { stage: stage.into(), message: message.into() });
        self
    }
}

/// Runs the full pipeline on a claimed sphere. Failures are recorded, never raised.
pub fn certify_g(c: &Complex, cfg: &CheckConfig, field: FieldKind) -> Certificate {
    let mut cert = Certificate {
        name: c.name().to_string(),
        input_sha: content_hash(c),
        field: field.to_string(),
        prime: field.prime(),
        mode: if cfg.strict { "strict" } else { "trust" }.into(),
        seed: cfg.seed,
        trials: cfg.trials,
        seeds: Vec::new(),
        validation: None,
        f: Vec::new(),
        h: Vec::new(),
        g: Vec::new(),
        dehn_sommerville: None,
        m_sequence: None,
        degrees: Vec::new(),
        ell: Vec::new(),
        verdict: "ERROR".into(),
        normalization: NORMALIZATION.into(),
        error: None,
    };

    if c.dim() < 0 {
        return cert.fail("validation", "the complex has no vertices");
    }
    let topology = if cfg.strict { classify(c) } else { Topology::Other };
    let betti = if cfg.strict { reduced_homology::<Fp>(c) } else { Vec::new() };
    cert.validation = Some(Validation { checked: cfg.strict, topology, reduced_betti: betti.clone() });
    if cfg.strict && !matches!(topology, Topology::Sphere(_)) {
        return cert.fail("validation", format!("not a homology sphere (reduced Betti numbers {betti:?})"));
    }
    if !c.is_pure() {
        return cert.fail("validation", "the complex is not pure");
    }

    let d = (c.dim() + 1) as usize;
    let f = f_vector(c);
    let h = h_vector(&f, d);
    let g = g_vector(&h);
    let ds = dehn_sommerville_check(&h);
    cert.f = f.0;
    cert.h = h.0;
    cert.g = g.0.clone();
    cert.dehn_sommerville = Some(ds);
    cert.m_sequence = Some(is_m_sequence(&g));
    if !ds {
        return cert.fail("vectors", "the h-vector is not symmetric");
    }

    let cfg = CheckConfig { degrees: None, ..cfg.clone() };
    let verdict = match field {
        FieldKind::Prime => check_hard_lefschetz::<Fp>(c, &cfg),
        FieldKind::Rational => check_hard_lefschetz::<Rational>(c, &cfg),
    };
    if let Some(w) = verdict.witness() {
        cert.degrees = w.degrees.clone();
        cert.ell = w.ell.clone();
        cert.seeds = vec![
            SeedRecord { purpose: "coordinates".into(), index: w.coordinate_draw.unwrap_or(0) },
            SeedRecord { purpose: "linear_form".into(), index: w.trial },
        ];
        if w.coordinate_draw.is_none() {
            cert.seeds.remove(0);
        }
    }
    match verdict {
        Verdict::Error { reason } => cert.fail("lefschetz", reason),
        v => {
            cert.verdict = v.label().into();
            cert
        }
    }
}

/// Recomputes the witness of a certificate from its seeds; `Ok` when every rank and every
/// coefficient of `ℓ` matches.
pub fn replay_certificate(c: &Complex, cert: &Certificate) -> Result<(), String> {
    if content_hash(c) != cert.input_sha {
        return Err("input hash differs from the certificate".into());
    }
    let field: FieldKind = cert.field.parse().map_err(|e| format!("{e}"))?;
    match field {
        FieldKind::Prime => replay::<Fp>(c, cert),
        FieldKind::Rational => replay::<Rational>(c, cert),
    }
}

fn replay<S: Scalar>(c: &Complex, cert: &Certificate) -> Result<(), String> {
    let trial = cert
        .seeds
        .iter()
        .find(|s| s.purpose == "linear_form")
        .map(|s| s.index)
        .ok_or("the certificate records no witness")?;
    let cfg = CheckConfig { seed: cert.seed, trials: cert.trials, strict: cert.mode == "strict", ..Default::default() };
    let d = (c.dim() + 1) as usize;
    let (real, draw) = trial_realization::<S>(c, d, &cfg, trial)?;
    let recorded_draw = cert.seeds.iter().find(|s| s.purpose == "coordinates").map(|s| s.index);
    if draw != recorded_draw {
        return Err(format!("coordinate draw {draw:?} differs from recorded {recorded_draw:?}"));
    }
    let ring = ArtinianRing::new(c.clone(), real).map_err(|e| e.to_string())?;
    let ell = LinearForm::random(c.universe_len(), None, &mut SeedStream::new(cert.seed).rng(purpose::LINEAR_FORM, trial));
    if format_form(&ell) != cert.ell {
        return Err("linear form differs from the certificate".into());
    }
    let degrees = hard_lefschetz_ranks(&ring, &ell, 0..=d / 2).map_err(|e| e.to_string())?;
    if degrees != cert.degrees {
        return Err(format!("ranks differ: recomputed {degrees:?}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn icosahedron_certificate() {
        let cert = certify_g(&catalog::icosahedron(), &CheckConfig::with_seed(7), FieldKind::Prime);
        assert_eq!(cert.verdict, "HOLDS", "{cert:?}");
        assert_eq!(cert.g, vec![1, 8]);
        assert_eq!(cert.m_sequence, Some(true));
        assert_eq!(cert.exit_code(), 0);
        assert!(!cert.degrees.is_empty());
        replay_certificate(&catalog::icosahedron(), &cert).unwrap();
        let again = certify_g(&catalog::icosahedron(), &CheckConfig::with_seed(7), FieldKind::Prime);
        assert_eq!(cert.to_json(), again.to_json());
    }

    #[test]
    fn simplex_boundary_certificate() {
        let cert = certify_g(&catalog::simplex_boundary(4), &CheckConfig::with_seed(1), FieldKind::Rational);
        // h = (1,1,1,1,1)
        assert_eq!(cert.g, vec![1, 0, 0]);
        assert_eq!(cert.verdict, "HOLDS");
        replay_certificate(&catalog::simplex_boundary(4), &cert).unwrap();
    }

    #[test]
    fn torus_fails_validation() {
        let cert = certify_g(&catalog::torus7(), &CheckConfig::default(), FieldKind::Prime);
        assert_eq!(cert.verdict, "ERROR");
        assert_eq!(cert.error.as_ref().unwrap().stage, "validation");
        assert_eq!(cert.validation.as_ref().unwrap().reduced_betti, vec![0, 2, 1]);
        assert_eq!(cert.exit_code(), 1);
    }
}
