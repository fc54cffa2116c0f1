//! Randomized checks of Lefschetz-type properties.
//!
//! Each property is Zariski-open in the coordinates and the linear form, so a single
//! sampled witness proves it ([`Verdict::Holds`]); repeated failures are only evidence
//! ([`Verdict::LikelyFails`]). Every random draw comes from a [`SeedStream`], so a
//! witness is reproducible from `(seed, trial)`.

mod certificate;
mod perturbation;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::artinian::{restriction_matrix, ArtinianError, ArtinianRing, GradedPiece, LinearForm};
use crate::linalg::{kernel_basis, rank, subspace_intersect, Matrix, Subspace};
use crate::rng::{purpose, SeedStream};
use crate::scalar::Scalar;
use crate::simplicial::{classify, Complex, Face, Realization, Topology, Vertex};

pub use certificate::{certify_g, replay_certificate, Certificate, StageError, Validation};
pub use perturbation::{generic_combine, CombineReport};

/// Per-degree rank record of a tested map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub k: usize,
    pub rank: usize,
    pub dim_src: usize,
    pub dim_dst: usize,
}

/// Everything needed to reproduce one trial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub seed: u64,
    pub trial: u64,
    /// Stream index of the sampled coordinates; `None` for explicit coordinates.
    pub coordinate_draw: Option<u64>,
    /// Coefficients of the linear form, when the check uses one.
    pub ell: Vec<String>,
    pub degrees: Vec<DegreeRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds { witness: Witness },
    LikelyFails { trials: usize, last: Option<Witness> },
    Error { reason: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn is_error(&self) -> bool {
        matches!(self, Verdict::Error { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds { witness } => Some(witness),
            Verdict::LikelyFails { last, .. } => last.as_ref(),
            Verdict::Error { .. } => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds { .. } => "HOLDS",
            Verdict::LikelyFails { .. } => "LIKELY_FAILS",
            Verdict::Error { .. } => "ERROR",
        }
    }

    /// 0 for HOLDS, 2 for LIKELY_FAILS, 1 for ERROR.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Holds { .. } => 0,
            Verdict::LikelyFails { .. } => 2,
            Verdict::Error { .. } => 1,
        }
    }

    fn error(reason: impl Into<String>) -> Verdict {
        Verdict::Error { reason: reason.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub trials: usize,
    /// Verify sphere/ball preconditions by homology before checking.
    pub strict: bool,
    /// Restricts the tested degrees where a check supports it.
    pub degrees: Option<Vec<usize>>,
    /// Deliberately degenerate coordinates: the third vertex is placed in the span of the
    /// first two, so the three points lie in a hyperplane through the origin.
    pub degenerate: Option<[Vertex; 3]>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 0, trials: 3, strict: true, degrees: None, degenerate: None }
    }
}

impl CheckConfig {
    pub fn with_seed(seed: u64) -> Self {
        CheckConfig { seed, ..Default::default() }
    }

    fn wants(&self, k: usize) -> bool {
        self.degrees.as_ref().is_none_or(|ds| ds.contains(&k))
    }
}

/// Resampling attempts for improper sampled coordinates within one trial.
const RESAMPLES: u64 = 8;

/// Coordinates for a trial: the complex's own, or a fresh sample in `S^d`.
///
/// Improper explicit coordinates are an error; improper samples are redrawn.
pub fn trial_realization<S: Scalar>(
    c: &Complex,
    d: usize,
    cfg: &CheckConfig,
    trial: u64,
) -> Result<(Realization<S>, Option<u64>), String> {
    let stream = SeedStream::new(cfg.seed);
    if let Some(explicit) = Realization::<S>::from_complex(c) {
        let r = explicit.map_err(|e| e.to_string())?;
        if r.dim() != d {
            return Err(format!("coordinates live in dimension {}, expected {d}", r.dim()));
        }
        let r = degenerate(r, cfg, &stream, trial);
        r.check_proper(c).map_err(|e| e.to_string())?;
        return Ok((r, None));
    }
    for attempt in 0..RESAMPLES {
        let draw = trial * RESAMPLES + attempt;
        let r = Realization::sample(c.universe_len(), d, &mut stream.rng(purpose::COORDINATES, draw));
        let r = degenerate(r, cfg, &stream, draw);
        match r.check_proper(c) {
            Ok(()) => return Ok((r, Some(draw))),
            Err(e) if cfg.degenerate.is_some() => return Err(e.to_string()),
            Err(_) => continue,
        }
    }
    Err(format!("no proper coordinates found in {RESAMPLES} samples"))
}

fn degenerate<S: Scalar>(r: Realization<S>, cfg: &CheckConfig, stream: &SeedStream, draw: u64) -> Realization<S> {
    let Some([a, b, c]) = cfg.degenerate else { return r };
    let mut rng = stream.rng(purpose::COMBINATION, draw);
    let (s, t) = (S::random(&mut rng), S::random(&mut rng));
    let p: Vec<S> = r
        .point(a)
        .iter()
        .zip(r.point(b))
        .map(|(x, y)| s.clone() * x.clone() + t.clone() * y.clone())
        .collect();
    r.with_point_at(c, p)
}

/// Result of one trial.
struct Outcome {
    pass: bool,
    ell: Vec<String>,
    degrees: Vec<DegreeRecord>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, degrees: Vec<DegreeRecord>) -> Self {
        Outcome { pass, ell: Vec::new(), degrees, notes: Vec::new() }
    }
}

fn format_form<S: Scalar>(l: &LinearForm<S>) -> Vec<String> {
    l.coeffs().iter().map(ToString::to_string).collect()
}

/// Runs up to `cfg.trials` trials; the first passing trial wins.
fn run_trials<S: Scalar>(
    c: &Complex,
    d: usize,
    cfg: &CheckConfig,
    mut body: impl FnMut(ArtinianRing<S>, &SeedStream, u64) -> Result<Outcome, ArtinianError>,
) -> Verdict {
    let stream = SeedStream::new(cfg.seed);
    let mut last = None;
    for trial in 0..cfg.trials.max(1) as u64 {
        let (real, draw) = match trial_realization::<S>(c, d, cfg, trial) {
            Ok(x) => x,
            Err(e) => return Verdict::error(e),
        };
        let ring = match ArtinianRing::new(c.clone(), real) {
            Ok(r) => r,
            Err(e) => return Verdict::error(e.to_string()),
        };
        let outcome = match body(ring, &stream, trial) {
            Ok(o) => o,
            Err(e) => return Verdict::error(e.to_string()),
        };
        let witness = Witness {
            seed: cfg.seed,
            trial,
            coordinate_draw: draw,
            ell: outcome.ell,
            degrees: outcome.degrees,
            notes: outcome.notes,
        };
        if outcome.pass {
            return Verdict::Holds { witness };
        }
        last = Some(witness);
    }
    Verdict::LikelyFails { trials: cfg.trials.max(1), last }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Expect {
    Sphere,
    Ball,
    SphereOrBall,
}

/// Homology gate; in trust mode only purity is assumed.
fn gate(c: &Complex, cfg: &CheckConfig, expect: Expect) -> Result<Topology, String> {
    if c.is_void() || c.dim() < 0 {
        return Err("the complex has no vertices".into());
    }
    if !cfg.strict {
        return Ok(Topology::Other);
    }
    let t = classify(c);
    let ok = match (expect, t) {
        (Expect::Sphere, Topology::Sphere(_)) => true,
        (Expect::Ball, Topology::Ball(_)) => true,
        (Expect::SphereOrBall, Topology::Sphere(_) | Topology::Ball(_)) => true,
        _ => false,
    };
    if ok {
        Ok(t)
    } else {
        let want = match expect {
            Expect::Sphere => "a homology sphere",
            Expect::Ball => "a homology ball",
            Expect::SphereOrBall => "a homology sphere or ball",
        };
        let betti = crate::simplicial::reduced_homology::<crate::scalar::Fp>(c);
        Err(format!("homology gate: {} is not {want} (reduced Betti numbers {betti:?})", c.name()))
    }
}

fn record<S: Scalar>(k: usize, m: &Matrix<S>) -> DegreeRecord {
    DegreeRecord { k, rank: rank(m), dim_src: m.cols(), dim_dst: m.rows() }
}

/// `·ℓ : A^i → A^{i+1}` injective for every `i < d/2`.
pub fn check_weak_lefschetz<S: Scalar>(c: &Complex, cfg: &CheckConfig) -> Verdict {
    if let Err(e) = gate(c, cfg, Expect::Sphere) {
        return Verdict::error(e);
    }
    let d = (c.dim() + 1) as usize;
    let void = c.void_like();
    run_trials::<S>(c, d, cfg, |ring, stream, trial| {
        let ell = LinearForm::random(c.universe_len(), None, &mut stream.rng(purpose::LINEAR_FORM, trial));
        let mut degrees = Vec::new();
        let mut pass = true;
        for i in (0..d).filter(|&i| 2 * i < d && cfg.wants(i)) {
            let src = ring.piece(&void, i)?;
            let dst = ring.piece(&void, i + 1)?;
            let r = record(i, &ring.multiplication_matrix(&ell, &src, &dst)?);
            pass &= r.rank == r.dim_src;
            degrees.push(r);
        }
        Ok(Outcome { ell: format_form(&ell), ..Outcome::new(pass, degrees) })
    })
}

/// Ranks of `·ℓ^{d-2k} : A^k(Δ, ∂Δ) → A^{d-k}(Δ)` for the requested `k ≤ d/2`.
pub fn hard_lefschetz_ranks<S: Scalar>(
    ring: &ArtinianRing<S>,
    ell: &LinearForm<S>,
    degrees: impl Iterator<Item = usize>,
) -> Result<Vec<DegreeRecord>, ArtinianError> {
    let c = ring.complex();
    let d = ring.d();
    let bd = c.boundary_complex()?;
    let void = c.void_like();
    degrees
        .filter(|&k| 2 * k <= d)
        .map(|k| Ok(record(k, &ring.power_map_matrix(ell, k, d - 2 * k, &bd, &void)?)))
        .collect()
}

/// `·ℓ^{d-2k} : A^k(Δ, ∂Δ) → A^{d-k}(Δ)` bijective for every `k ≤ d/2`.
pub fn check_hard_lefschetz<S: Scalar>(c: &Complex, cfg: &CheckConfig) -> Verdict {
    if let Err(e) = gate(c, cfg, Expect::SphereOrBall) {
        return Verdict::error(e);
    }
    let d = (c.dim() + 1) as usize;
    run_trials::<S>(c, d, cfg, |ring, stream, trial| {
        let ell = LinearForm::random(c.universe_len(), None, &mut stream.rng(purpose::LINEAR_FORM, trial));
        let degrees = hard_lefschetz_ranks(&ring, &ell, (0..=d / 2).filter(|&k| cfg.wants(k)))?;
        let pass = degrees.iter().all(|r| r.dim_src == r.dim_dst && r.rank == r.dim_src);
        Ok(Outcome { ell: format_form(&ell), ..Outcome::new(pass, degrees) })
    })
}

/// Ranks of the inclusion `A^k(Δ, ∂Δ) → A^k(Δ)` and of the pairing
/// `A^k(Δ, ∂Δ) × A^{d-k}(Δ, ∂Δ) → S`, for `k ≤ d/2`.
pub fn biased_pairing_ranks<S: Scalar>(
    ring: &ArtinianRing<S>,
    degrees: impl Iterator<Item = usize>,
) -> Result<Vec<(DegreeRecord, usize)>, ArtinianError> {
    let c = ring.complex();
    let d = ring.d();
    let bd = c.boundary_complex()?;
    let void = c.void_like();
    let fc = ring.fundamental_class()?;
    let mut out = Vec::new();
    for k in degrees.filter(|&k| 2 * k <= d) {
        let rel = ring.piece(&bd, k)?;
        let abs = ring.piece(&void, k)?;
        let incl = record(k, &ring.transfer_matrix(&rel, &abs)?);
        let dual = ring.piece(&bd, d - k)?;
        let pairing = rank(&ring.pairing_on(&fc, &rel, &dual)?);
        out.push((incl, pairing));
    }
    Ok(out)
}

/// Injectivity of `A^k(Δ, ∂Δ) → A^k(Δ)` for `k ≤ d/2`, cross-checked against the rank of
/// the pairing on relative classes.
pub fn check_biased_pairing<S: Scalar>(c: &Complex, cfg: &CheckConfig) -> Verdict {
    match c.boundary_complex() {
        Ok(bd) if bd.is_void() => {
            return Verdict::error("the complex has empty boundary; the biased pairing property is trivial for spheres")
        }
        Err(e) => return Verdict::error(e.to_string()),
        _ => {}
    }
    if let Err(e) = gate(c, cfg, Expect::Ball) {
        return Verdict::error(e);
    }
    let d = (c.dim() + 1) as usize;
    run_trials::<S>(c, d, cfg, |ring, _, _| {
        let ranks = biased_pairing_ranks(&ring, (0..=d / 2).filter(|&k| cfg.wants(k)))?;
        let mut pass = true;
        let mut notes = Vec::new();
        for (incl, pairing) in &ranks {
            let injective = incl.rank == incl.dim_src;
            let nondegenerate = *pairing == incl.dim_src;
            if injective != nondegenerate {
                return Err(ArtinianError::DimensionMismatch(format!(
                    "degree {}: inclusion rank {} but pairing rank {} on {} classes",
                    incl.k, incl.rank, pairing, incl.dim_src
                )));
            }
            pass &= injective;
            notes.push(format!("k={}: pairing rank {}", incl.k, pairing));
        }
        let degrees = ranks.into_iter().map(|(r, _)| r).collect();
        Ok(Outcome { notes, ..Outcome::new(pass, degrees) })
    })
}

/// Kernel of the restriction `A^k(Σ) → A^k(X)`, in coordinates of `A^k(Σ)`.
fn restriction_kernel<S: Scalar>(
    ring: &ArtinianRing<S>,
    x_ring: &ArtinianRing<S>,
    k: usize,
) -> Result<Subspace<S>, ArtinianError> {
    Ok(kernel_basis(&restriction_matrix(ring, x_ring, k)?))
}

/// Ranks for biased Poincaré duality at `X`: `(dim I^k, dim I^{d-k}, rank of the pairing on I^k × I^{d-k})`.
pub fn biased_poincare_ranks<S: Scalar>(
    ring: &ArtinianRing<S>,
    x: &Complex,
    k: usize,
) -> Result<(usize, usize, usize), ArtinianError> {
    let d = ring.d();
    let x_ring = ArtinianRing::new(x.clone(), ring.realization().clone())?;
    let ik = restriction_kernel(ring, &x_ring, k)?;
    let idk = restriction_kernel(ring, &x_ring, d - k)?;
    let p = ring.pairing_matrix(k)?;
    let left = ik.basis_matrix().transpose();
    let right = idk.basis_matrix();
    let restricted = left.mul(&p).and_then(|m| m.mul(&right)).expect("shapes agree");
    Ok((ik.dim(), idk.dim(), rank(&restricted)))
}

/// Nondegeneracy of the pairing on `I^k × I^{d-k}` in the first factor (rank `dim I^k`),
/// `I = ker(A(Σ) → A(X))`.
pub fn check_biased_poincare<S: Scalar>(sigma: &Complex, x: &Complex, k: usize, cfg: &CheckConfig) -> Verdict {
    if let Err(e) = gate(sigma, cfg, Expect::Sphere) {
        return Verdict::error(e);
    }
    if !x.is_subcomplex_of(sigma) {
        return Verdict::error(format!("{} is not a subcomplex of {}", x.name(), sigma.name()));
    }
    let d = (sigma.dim() + 1) as usize;
    if 2 * k > d {
        return Verdict::error(format!("degree {k} exceeds d/2 = {}/2", d));
    }
    run_trials::<S>(sigma, d, cfg, |ring, _, _| {
        let (a, b, r) = biased_poincare_ranks(&ring, x, k)?;
        let pass = r == a;
        let rec = DegreeRecord { k, rank: r, dim_src: a, dim_dst: b };
        Ok(Outcome::new(pass, vec![rec]))
    })
}

/// Kernel of `·ℓ'` and the intersection of the kernels of `·x_v`, `v ∈ W`, on `A^k(Δ)`.
pub fn transversal_kernels<S: Scalar>(
    ring: &ArtinianRing<S>,
    w: &[Vertex],
    ell: &LinearForm<S>,
    k: usize,
) -> Result<(Subspace<S>, Subspace<S>), ArtinianError> {
    let c = ring.complex();
    let void = c.void_like();
    let src = ring.piece(&void, k)?;
    let dst = ring.piece(&void, k + 1)?;
    let ker = kernel_basis(&ring.multiplication_matrix(ell, &src, &dst)?);
    let mut meet = Subspace::full(src.dim());
    for &v in w {
        let kv = kernel_basis(&ring.multiplication_matrix(&LinearForm::variable(c.universe_len(), v), &src, &dst)?);
        meet = subspace_intersect(&meet, &kv).expect("same ambient");
    }
    Ok((ker, meet))
}

/// `ker ℓ' = ∩_{v ∈ W} ker x_v` for a random `ℓ'` supported on `W`, in degrees
/// `k ≤ (d-1)/2` (or the configured degrees).
pub fn check_transversal_prime<S: Scalar>(c: &Complex, w: &[Vertex], cfg: &CheckConfig) -> Verdict {
    if w.is_empty() {
        return Verdict::error("the vertex set W is empty");
    }
    let verts = c.vertices();
    if let Some(v) = w.iter().find(|v| !verts.contains(v)) {
        return Verdict::error(format!("vertex {} is not in the complex", c.face_label(&Face::vertex(*v))));
    }
    if let Err(e) = gate(c, cfg, Expect::SphereOrBall) {
        return Verdict::error(e);
    }
    let d = (c.dim() + 1) as usize;
    let degrees: Vec<usize> = match &cfg.degrees {
        Some(ds) => ds.clone(),
        None => (0..d).filter(|&k| 2 * k < d).collect(),
    };
    run_trials::<S>(c, d, cfg, |ring, stream, trial| {
        let ell = LinearForm::random(c.universe_len(), Some(w), &mut stream.rng(purpose::LINEAR_FORM, trial));
        let mut pass = true;
        let mut records = Vec::new();
        for &k in &degrees {
            let (ker, meet) = transversal_kernels(&ring, w, &ell, k)?;
            pass &= ker.is_subspace_of(&meet) && meet.is_subspace_of(&ker);
            records.push(DegreeRecord { k, rank: ker.dim(), dim_src: ker.ambient(), dim_dst: meet.dim() });
        }
        let notes = vec!["rank = dim ker ℓ', dim_dst = dim of the kernel intersection".into()];
        Ok(Outcome { pass, ell: format_form(&ell), degrees: records, notes })
    })
}

/// Cone lemmas at `v`: `dim A^k(Lk_v) = dim A^k(St_v)` for all `k`, and
/// `·x_v : A^k(St_v) → A^{k+1}(St_v, St_v - v)` bijective.
pub fn check_cone_lemma<S: Scalar>(c: &Complex, v: Vertex, cfg: &CheckConfig) -> Verdict {
    let vertex = Face::vertex(v);
    if !c.contains_face(&vertex) {
        return Verdict::error(format!("vertex {} is not in the complex", c.face_label(&vertex)));
    }
    let d = (c.dim() + 1) as usize;
    let (star, link, pair) = match (c.star(&vertex), c.link(&vertex), c.star_pair(&vertex)) {
        (Ok(s), Ok(l), Ok(p)) => (s, l, p),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return Verdict::error(e.to_string()),
    };
    run_trials::<S>(c, d, cfg, |ring, _, _| {
        let real = ring.realization();
        let st = ArtinianRing::new(star.clone(), real.clone())?;
        let lk = ArtinianRing::new(link.clone(), real.project_away(&vertex))?;
        let st_dims = st.dims(&star.void_like())?;
        let mut lk_dims = lk.dims(&link.void_like())?;
        lk_dims.resize(st_dims.len(), 0);
        let mut pass = st_dims == lk_dims;
        let mut degrees = Vec::new();
        let xv = LinearForm::variable(c.universe_len(), v);
        for k in 0..d {
            let src = st.piece(&star.void_like(), k)?;
            let dst = st.piece(&pair.sub, k + 1)?;
            let r = record(k, &st.multiplication_matrix(&xv, &src, &dst)?);
            pass &= r.dim_src == r.dim_dst && r.rank == r.dim_src;
            degrees.push(r);
        }
        let notes = vec![format!("dim A(St) = {st_dims:?}, dim A(Lk) = {lk_dims:?}")];
        Ok(Outcome { notes, ..Outcome::new(pass, degrees) })
    })
}

/// Both sides of the middle-degree reduction square for one realization and heights.
///
/// Left: rank of `·θ^{d-2k} : A^k(Δ, ∂Δ) → A^{d-k}(Δ)` with `θ = Σ h_w x_w`.
/// Right: rank of `·x_n^{d-2k-1} : A^{k+1}(cΔ, ∂cΔ) → A^{d-k}(cΔ)` on the cone with apex `n`,
/// realized by `(p_w, h_w)` and `e_{d+1}`.
pub fn middle_reduction_ranks<S: Scalar>(
    ring: &ArtinianRing<S>,
    heights: &[S],
) -> Result<Vec<(DegreeRecord, DegreeRecord)>, ArtinianError> {
    let c = ring.complex();
    let d = ring.d();
    let apex = c.fresh_label("apex");
    let cone = c.cone(&apex)?;
    let n = c.universe_len();
    let cone_ring = ArtinianRing::new(cone.clone(), ring.realization().cone(heights))?;
    let theta = LinearForm(heights.to_vec());
    let xn = LinearForm::variable(n + 1, n);
    let bd = c.boundary_complex()?;
    let cone_bd = cone.boundary_complex()?;
    let mut out = Vec::new();
    for k in (0..d).filter(|&k| 2 * k < d) {
        let left = record(k, &ring.power_map_matrix(&theta, k, d - 2 * k, &bd, &c.void_like())?);
        let right = record(
            k + 1,
            &cone_ring.power_map_matrix(&xn, k + 1, d - 2 * k - 1, &cone_bd, &cone.void_like())?,
        );
        out.push((left, right));
    }
    Ok(out)
}

pub fn check_middle_reduction<S: Scalar>(c: &Complex, cfg: &CheckConfig) -> Verdict {
    if let Err(e) = gate(c, cfg, Expect::SphereOrBall) {
        return Verdict::error(e);
    }
    let d = (c.dim() + 1) as usize;
    run_trials::<S>(c, d, cfg, |ring, stream, trial| {
        let mut rng = stream.rng(purpose::HEIGHTS, trial);
        let heights: Vec<S> = (0..c.universe_len()).map(|_| S::random(&mut rng)).collect();
        let pairs = middle_reduction_ranks(&ring, &heights)?;
        let pass = pairs.iter().all(|(l, r)| l.rank == r.rank);
        let notes = pairs
            .iter()
            .map(|(l, r)| format!("k={}: θ^{} rank {}, x_n^{} rank {}", l.k, d - 2 * l.k, l.rank, d - 2 * l.k - 1, r.rank))
            .collect();
        let degrees = pairs.into_iter().flat_map(|(l, r)| [l, r]).collect();
        Ok(Outcome { pass, ell: format_form(&LinearForm(heights)), degrees, notes })
    })
}

/// Stellar subdivision of a ball at an interior face `σ` leaves the biased pairing verdict unchanged.
pub fn check_stellar_invariance<S: Scalar>(c: &Complex, sigma: &Face, cfg: &CheckConfig) -> Verdict {
    if sigma.len() < 2 {
        return Verdict::error("stellar subdivision at a vertex is not a subdivision");
    }
    let bd = match c.boundary_complex() {
        Ok(b) => b,
        Err(e) => return Verdict::error(e.to_string()),
    };
    if !c.contains_face(sigma) {
        return Verdict::error(format!("{} is not a face", c.face_label(sigma)));
    }
    if bd.contains_face(sigma) {
        return Verdict::error(format!("{} lies on the boundary", c.face_label(sigma)));
    }
    let stream = SeedStream::new(cfg.seed);
    let center = c.fresh_label("c");
    let sub = match c.stellar_subdivision(sigma, &center, &mut stream.rng(purpose::SUBDIVISION, 0)) {
        Ok(s) => s,
        Err(e) => return Verdict::error(e.to_string()),
    };
    let before = check_biased_pairing::<S>(c, cfg);
    let after = check_biased_pairing::<S>(&sub, cfg);
    if before.is_error() || after.is_error() {
        let reason = [&before, &after]
            .iter()
            .find_map(|v| match v {
                Verdict::Error { reason } => Some(reason.clone()),
                _ => None,
            })
            .unwrap_or_default();
        return Verdict::error(reason);
    }
    let mut witness = after.witness().cloned().unwrap_or(Witness {
        seed: cfg.seed,
        trial: 0,
        coordinate_draw: None,
        ell: Vec::new(),
        degrees: Vec::new(),
        notes: Vec::new(),
    });
    witness.notes.push(format!("before: {}, after: {}", before.label(), after.label()));
    if before.label() == after.label() {
        Verdict::Holds { witness }
    } else {
        Verdict::LikelyFails { trials: cfg.trials, last: Some(witness) }
    }
}

/// For `k ≤ d/2`: the kernel of `·ℓ^{d-2k}` on `A^k` and its image in `A^{d-k}` are orthogonal
/// complements. Returns `(dim ker, dim im, dim A^k, pairing of ker against im is zero)`.
pub fn orthogonal_complement_check<S: Scalar>(
    ring: &ArtinianRing<S>,
    ell: &LinearForm<S>,
    k: usize,
) -> Result<(usize, usize, usize, bool), ArtinianError> {
    let c = ring.complex();
    let d = ring.d();
    let void = c.void_like();
    let bd = c.boundary_complex()?;
    let m = ring.power_map_matrix(ell, k, d - 2 * k, &bd, &void)?;
    let ker = kernel_basis(&m);
    let im = m.column_space();
    let p = ring.pairing_matrix(k)?;
    let block = ker.basis_matrix().transpose().mul(&p).and_then(|x| x.mul(&im.basis_matrix())).expect("shapes agree");
    Ok((ker.dim(), im.dim(), m.cols(), block.is_zero()))
}

/// Pieces `A^k(Δ, Γ)` for `k = 0..=d`, convenient for reports.
pub fn pieces<S: Scalar>(ring: &ArtinianRing<S>, sub: &Complex) -> Result<Vec<GradedPiece<S>>, ArtinianError> {
    (0..=ring.d()).map(|k| ring.piece(sub, k)).collect()
}

/// Draws a random element of `S` from the combination stream.
pub(crate) fn combination_scalar<S: Scalar>(rng: &mut impl Rng) -> S {
    loop {
        let t = S::random(rng);
        if !t.is_zero() {
            return t;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{Fp, Rational};

    fn cfg() -> CheckConfig {
        CheckConfig::with_seed(11)
    }

    #[test]
    fn weak_lefschetz_on_simplex_boundary_and_icosahedron() {
        let v = check_weak_lefschetz::<Fp>(&catalog::simplex_boundary(4), &cfg());
        assert!(v.holds(), "{v:?}");
        assert!(v.witness().unwrap().degrees.iter().all(|r| r.rank == 1 && r.dim_src == 1));
        let v = check_weak_lefschetz::<Fp>(&catalog::icosahedron(), &cfg());
        let w = v.witness().unwrap();
        assert!(v.holds());
        assert_eq!(w.degrees[1], DegreeRecord { k: 1, rank: 9, dim_src: 9, dim_dst: 9 });
        assert!(check_weak_lefschetz::<Fp>(&catalog::wedge_of_spheres(), &cfg()).is_error());
    }

    #[test]
    fn hard_lefschetz_on_octahedron_and_balls() {
        let v = check_hard_lefschetz::<Fp>(&catalog::octahedron(), &cfg());
        let ranks: Vec<usize> = v.witness().unwrap().degrees.iter().map(|r| r.rank).collect();
        assert!(v.holds());
        assert_eq!(ranks, vec![1, 3]);
        assert!(check_hard_lefschetz::<Fp>(&catalog::simplex(2), &cfg()).holds());
        assert!(check_hard_lefschetz::<Fp>(&catalog::cone_over_octahedron(), &cfg()).holds());
        assert!(check_hard_lefschetz::<Rational>(&catalog::octahedron(), &cfg()).holds());
    }

    #[test]
    fn biased_pairing_examples() {
        assert!(check_biased_pairing::<Fp>(&catalog::simplex(2), &cfg()).holds());
        assert!(check_biased_pairing::<Fp>(&catalog::cone_over_cycle4(), &cfg()).holds());
        let v = check_biased_pairing::<Fp>(&catalog::octahedron(), &cfg());
        assert!(matches!(&v, Verdict::Error { reason } if reason.contains("trivial for spheres")));
    }

    #[test]
    fn transversal_prime_single_vertex() {
        let o = catalog::octahedron();
        assert!(check_transversal_prime::<Fp>(&o, &[0], &cfg()).holds());
        assert!(check_transversal_prime::<Fp>(&o, &[], &cfg()).is_error());
    }

    #[test]
    fn cone_lemmas_on_octahedron() {
        let o = catalog::octahedron();
        for v in o.vertices() {
            assert!(check_cone_lemma::<Fp>(&o, v, &cfg()).holds());
        }
        assert!(check_cone_lemma::<Fp>(&catalog::simplex(2), 0, &cfg()).holds());
    }

    #[test]
    fn middle_reduction_on_tetrahedron() {
        let v = check_middle_reduction::<Fp>(&catalog::simplex_boundary(3), &cfg());
        assert!(v.holds(), "{v:?}");
    }

    #[test]
    fn stellar_invariance_rejects_vertices_and_boundary_faces() {
        let b = catalog::cone_over_cycle4();
        assert!(check_stellar_invariance::<Fp>(&b, &Face::vertex(0), &cfg()).is_error());
        assert!(check_stellar_invariance::<Fp>(&b, &Face::new(vec![0, 1]), &cfg()).is_error());
        let apex = b.vertex("a").unwrap();
        assert!(check_stellar_invariance::<Fp>(&b, &Face::new(vec![0, apex]), &cfg()).holds());
    }

    #[test]
    fn explicit_improper_coordinates_are_an_error() {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        let t = catalog::simplex(2)
            .with_coords(vec![vec![q(1), q(0), q(0)], vec![q(2), q(0), q(0)], vec![q(0), q(0), q(1)]])
            .unwrap();
        assert!(check_hard_lefschetz::<Fp>(&t, &cfg()).is_error());
    }
}
