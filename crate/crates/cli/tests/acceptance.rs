//! Acceptance suite: one line per criterion, each timed against its limit.
//!
//! Runs as a plain binary (`harness = false`) so the lines are always printed.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use facering::artinian::{ArtinianRing, LinearForm};
use facering::catalog;
use facering::decompose::contractible_edges;
use facering::lefschetz::{
    certify_g, check_biased_pairing, check_biased_poincare, check_cone_lemma, check_hard_lefschetz,
    check_middle_reduction, check_stellar_invariance, generic_combine, hard_lefschetz_ranks,
    orthogonal_complement_check, replay_certificate, trial_realization, CheckConfig, Verdict,
};
use facering::linalg::{inverse, rank, Matrix};
use facering::rng::{purpose, SeedStream};
use facering::scalar::{FieldKind, Fp, Scalar};
use facering::simplicial::{
    dehn_sommerville_check, f_vector, h_vector, is_homology_sphere, reduced_homology, Complex, Face, Realization,
};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn stacked(d: usize, vertices: usize, seed: u64) -> Complex {
    catalog::random_stacked_sphere(d, vertices, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn proper_sample(c: &Complex, seed: u64) -> Result<Realization<Fp>, String> {
    let stream = SeedStream::new(seed);
    let d = (c.dim() + 1) as usize;
    (0..8)
        .map(|i| Realization::<Fp>::sample(c.universe_len(), d, &mut stream.rng(purpose::COORDINATES, i)))
        .find(|r| r.check_proper(c).is_ok())
        .ok_or_else(|| format!("{}: no proper sample", c.name()))
}

fn ring(c: &Complex, seed: u64) -> Result<ArtinianRing<Fp>, String> {
    ArtinianRing::new(c.clone(), proper_sample(c, seed)?).map_err(|e| e.to_string())
}

fn holds(v: &Verdict, what: &str) -> Result<(), String> {
    match v {
        Verdict::Holds { .. } => Ok(()),
        Verdict::LikelyFails { .. } => Err(format!("{what}: LIKELY_FAILS")),
        Verdict::Error { reason } => Err(format!("{what}: ERROR {reason}")),
    }
}

fn f_vectors() -> Outcome {
    let t = f_vector(&catalog::simplex_boundary(3)).0;
    ensure(t == [1, 4, 6, 4], || format!("∂tetrahedron f = {t:?}"))?;
    let i = f_vector(&catalog::icosahedron()).0;
    ensure(i == [1, 12, 30, 20], || format!("icosahedron f = {i:?}"))?;
    Ok("(1,4,6,4) and (1,12,30,20)".into())
}

fn dehn_sommerville() -> Outcome {
    let mut spheres = catalog::named_spheres();
    for i in 0..20 {
        spheres.push(stacked(3, 5 + i % 7, 100 + i as u64));
        spheres.push(stacked(4, 6 + i % 7, 200 + i as u64));
    }
    for s in &spheres {
        ensure(is_homology_sphere(s), || format!("{} is not a homology sphere", s.name()))?;
        let h = h_vector(&f_vector(s), (s.dim() + 1) as usize);
        ensure(dehn_sommerville_check(&h), || format!("{}: h = {h} is not palindromic", s.name()))?;
    }
    Ok(format!("{} spheres palindromic", spheres.len()))
}

fn dims_equal_h() -> Outcome {
    let spheres = catalog::named_spheres();
    let mut largest = 0;
    for s in &spheres {
        largest = largest.max(s.vertices().len());
        let h = h_vector(&f_vector(s), (s.dim() + 1) as usize);
        for seed in [11, 12, 13] {
            let dims = ring(s, seed)?.dims(&s.void_like()).map_err(|e| e.to_string())?;
            let dims: Vec<i64> = dims.iter().map(|&x| x as i64).collect();
            ensure(dims == h.0, || format!("{} seed {seed}: dims {dims:?} vs h {h}", s.name()))?;
        }
    }
    Ok(format!("{} spheres × 3 samples, up to {largest} vertices", spheres.len()))
}

fn graebe_pairing() -> Outcome {
    let spheres = catalog::named_spheres();
    for s in &spheres {
        let r = ring(s, 21)?;
        for k in 0..=r.d() {
            let p = r.pairing_matrix(k).map_err(|e| e.to_string())?;
            ensure(p.rows() == p.cols() && rank(&p) == p.rows(), || {
                format!("{} degree {k}: {}×{} pairing of rank {}", s.name(), p.rows(), p.cols(), rank(&p))
            })?;
        }
    }
    let balls = catalog::named_balls();
    for b in &balls {
        let r = ring(b, 22)?;
        let bd = b.boundary_complex().map_err(|e| e.to_string())?;
        let top = r.piece(&bd, r.d()).map_err(|e| e.to_string())?.dim();
        ensure(top == 1, || format!("{}: dim A^d(Δ,∂Δ) = {top}", b.name()))?;
    }
    Ok(format!("{} spheres nonsingular, {} balls with 1-dimensional top piece", spheres.len(), balls.len()))
}

fn hard_lefschetz() -> Outcome {
    let cfg = CheckConfig::with_seed(5);
    let spheres: Vec<Complex> = catalog::named_spheres().into_iter().filter(|s| s.dim() <= 3).collect();
    for s in &spheres {
        let cert = certify_g(s, &cfg, FieldKind::Prime);
        ensure(cert.verdict == "HOLDS" && !cert.degrees.is_empty(), || format!("{}: {}", s.name(), cert.verdict))?;
        replay_certificate(s, &cert).map_err(|e| format!("{}: replay: {e}", s.name()))?;
    }
    let balls: Vec<Complex> = catalog::named_balls().into_iter().filter(|b| b.dim() <= 3).collect();
    for b in &balls {
        let v = check_hard_lefschetz::<Fp>(b, &cfg);
        holds(&v, b.name())?;
        let w = v.witness().expect("HOLDS carries a witness");
        let d = (b.dim() + 1) as usize;
        let (real, draw) = trial_realization::<Fp>(b, d, &cfg, w.trial)?;
        ensure(draw == w.coordinate_draw, || format!("{}: coordinate draw differs", b.name()))?;
        let r = ArtinianRing::new(b.clone(), real).map_err(|e| e.to_string())?;
        let ell = LinearForm::<Fp>::random(
            b.universe_len(),
            None,
            &mut SeedStream::new(cfg.seed).rng(purpose::LINEAR_FORM, w.trial),
        );
        let coeffs: Vec<String> = ell.coeffs().iter().map(ToString::to_string).collect();
        ensure(coeffs == w.ell, || format!("{}: linear form differs", b.name()))?;
        let degrees = hard_lefschetz_ranks(&r, &ell, 0..=d / 2).map_err(|e| e.to_string())?;
        ensure(degrees == w.degrees, || format!("{}: replayed ranks {degrees:?}", b.name()))?;
    }
    Ok(format!("{} spheres certified and replayed, {} balls replayed", spheres.len(), balls.len()))
}

fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix<Fp> {
    Matrix::from_fn(rows, cols, |_, _| Fp::random(rng))
}

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> Matrix<Fp> {
    loop {
        let m = random_matrix(n, n, rng);
        if let Some(inv) = inverse(&m) {
            return inv;
        }
    }
}

/// `A = Q [I 0; 0 0] P`, `B = Q [X 0; W Z] P`: `B` sends `ker A` into a complement of `im A`.
fn hypothesis_pair(rng: &mut ChaCha8Rng) -> (Matrix<Fp>, Matrix<Fp>) {
    let rows = rng.gen_range(1..=7);
    let cols = rng.gen_range(1..=7);
    let r = rng.gen_range(0..=rows.min(cols));
    let q = random_invertible(rows, rng);
    let p = random_invertible(cols, rng);
    let da = Matrix::from_fn(rows, cols, |i, j| if i == j && i < r { Fp::one() } else { Fp::zero() });
    let db = Matrix::from_fn(rows, cols, |i, j| if i < r && j >= r { Fp::zero() } else { Fp::random(rng) });
    (q.mul(&da).unwrap().mul(&p).unwrap(), q.mul(&db).unwrap().mul(&p).unwrap())
}

fn perturbation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..100 {
        let (a, b) = hypothesis_pair(&mut rng);
        let rep = generic_combine(&a, &b, 8, &mut rng).map_err(|e| e.to_string())?;
        ensure(rep.hypothesis, || format!("constructed pair {i} violates the hypothesis"))?;
        ensure(rep.kernel_equal, || format!("constructed pair {i}: ker(A+tB) ≠ ker A ∩ ker B"))?;
    }
    let mut with_hypothesis = 0;
    for i in 0..100 {
        let n = rng.gen_range(1..=6);
        let (ra, rb) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let a = random_matrix(n, ra, &mut rng).mul(&random_matrix(ra, n, &mut rng)).unwrap();
        let mut b = random_matrix(n, rb, &mut rng).mul(&random_matrix(rb, n, &mut rng)).unwrap();
        if i % 2 == 1 {
            // generic pairs always meet the hypothesis; folding A into B usually breaks it
            b = a.mul(&random_matrix(n, n, &mut rng)).unwrap().add(&b).unwrap();
        }
        let rep = generic_combine(&a, &b, 8, &mut rng).map_err(|e| e.to_string())?;
        if rep.hypothesis {
            with_hypothesis += 1;
            ensure(rep.kernel_equal, || format!("random pair {i}: hypothesis holds but kernels differ"))?;
        }
    }
    ensure(with_hypothesis < 100, || "no random pair violated the hypothesis".into())?;
    Ok(format!("100 constructed pairs; {with_hypothesis}/100 random pairs met the hypothesis, all with equal kernels"))
}

fn cone_lemmas() -> Outcome {
    let mut complexes = vec![catalog::octahedron(), catalog::icosahedron()];
    for i in 0..10 {
        complexes.push(if i % 2 == 0 { stacked(3, 6 + i, 300 + i as u64) } else { stacked(4, 7 + i, 300 + i as u64) });
    }
    let mut checked = 0;
    for c in &complexes {
        for v in c.vertices() {
            holds(&check_cone_lemma::<Fp>(c, v, &CheckConfig::with_seed(7)), &format!("{} at {}", c.name(), c.label(v)))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} vertex stars over {} spheres", complexes.len()))
}

fn middle_reduction() -> Outcome {
    let cs = [catalog::simplex_boundary(3), catalog::simplex_boundary(4), catalog::octahedron()];
    for c in &cs {
        holds(&check_middle_reduction::<Fp>(c, &CheckConfig::with_seed(8)), c.name())?;
    }
    Ok("∂simplex (d = 3, 4) and octahedron".into())
}

fn biased_consistency() -> Outcome {
    let sigma = catalog::octahedron();
    let v = Face::vertex(sigma.vertices()[0]);
    let delta = sigma.star(&v).map_err(|e| e.to_string())?;
    let gamma = sigma.deletion(&v);
    let d = (sigma.dim() + 1) as usize;
    let mut labels = Vec::new();
    for k in 0..=d / 2 {
        let cfg = CheckConfig { degrees: Some(vec![k]), ..CheckConfig::with_seed(9) };
        let poincare = check_biased_poincare::<Fp>(&sigma, &gamma, k, &cfg);
        let pairing = check_biased_pairing::<Fp>(&delta, &cfg);
        ensure(!poincare.is_error() && !pairing.is_error(), || format!("k={k}: {poincare:?} / {pairing:?}"))?;
        ensure(poincare.label() == pairing.label(), || {
            format!("k={k}: biased Poincaré {} but biased pairing {}", poincare.label(), pairing.label())
        })?;
        labels.push(format!("k={k} {}", pairing.label()));
    }
    for s in catalog::named_spheres() {
        let r = ring(&s, 10)?;
        let ell = LinearForm::<Fp>::random(s.universe_len(), None, &mut SeedStream::new(10).rng(purpose::LINEAR_FORM, 0));
        for k in 0..=r.d() / 2 {
            let (ker, im, dim, zero) = orthogonal_complement_check(&r, &ell, k).map_err(|e| e.to_string())?;
            ensure(ker + im == dim && zero, || format!("{} k={k}: ker {ker} + im {im} vs {dim}, zero block {zero}", s.name()))?;
        }
    }
    Ok(format!("hemispheres agree ({}); orthogonal complements on all spheres", labels.join(", ")))
}

fn edge_contraction() -> Outcome {
    let o = catalog::octahedron();
    let edges = contractible_edges(&o);
    ensure(edges.len() == 12 && edges.iter().all(|e| e.contractible()), || "an octahedron edge is not contractible".into())?;
    let t = contractible_edges(&catalog::simplex_boundary(3));
    let n = t.iter().filter(|e| e.contractible()).count();
    ensure(n == 0, || format!("∂tetrahedron has {n} contractible edges"))?;
    let e = o.faces_of_size(2)[0].clone();
    let merged = o.contract_edge(&e, &mut SeedStream::new(0).rng(purpose::CONTRACTION, 0)).map_err(|e| e.to_string())?.complex;
    ensure(merged.vertices().len() == 5 && is_homology_sphere(&merged) && merged.dim() == 2, || {
        format!("contraction gives {} vertices, Betti {:?}", merged.vertices().len(), reduced_homology::<Fp>(&merged))
    })?;
    Ok("12/12 octahedron edges, 0/6 tetrahedron edges, 5-vertex 2-sphere".into())
}

fn interior_faces(c: &Complex) -> Vec<Face> {
    let bd = c.boundary_complex().expect("a ball");
    c.faces_by_size().iter().skip(2).flatten().filter(|f| !bd.contains_face(f)).cloned().collect()
}

fn stellar_invariance() -> Outcome {
    let balls: Vec<Complex> = catalog::named_balls().into_iter().filter(|b| (2..=3).contains(&b.dim())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut count = 0;
    for b in &balls {
        let mut current = b.clone();
        for step in 0..10u64 {
            let faces = interior_faces(&current);
            let sigma = faces[rng.gen_range(0..faces.len())].clone();
            let cfg = CheckConfig::with_seed(step);
            let what = format!("{} step {step} at {}", b.name(), current.face_label(&sigma));
            holds(&check_stellar_invariance::<Fp>(&current, &sigma, &cfg), &what)?;
            let center = current.fresh_label("c");
            current = current
                .stellar_subdivision(&sigma, &center, &mut SeedStream::new(step).rng(purpose::SUBDIVISION, 0))
                .map_err(|e| e.to_string())?;
            count += 1;
        }
    }
    Ok(format!("{count} subdivisions over {} balls", balls.len()))
}

fn run_certify(path: &std::path::Path) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_facering"))
        .args(["certify", "builtin:icosahedron", "--seed", "7", "--json"])
        .arg(path)
        .output()
        .map_err(|e| e.to_string())?;
    let json = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), json))
}

fn full_pipeline() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (code, first) = run_certify(&dir.path().join("a.json"))?;
    let (code2, second) = run_certify(&dir.path().join("b.json"))?;
    ensure(code == 0 && code2 == 0, || format!("exit codes {code}, {code2}"))?;
    ensure(first == second, || "certificates differ between runs".into())?;
    let v: serde_json::Value = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    ensure(v["g"] == serde_json::json!([1, 8]), || format!("g = {}", v["g"]))?;
    ensure(v["m_sequence"] == serde_json::json!(true), || "M-sequence not true".into())?;
    ensure(v["verdict"] == "HOLDS", || format!("verdict {}", v["verdict"]))?;
    let degrees = v["degrees"].as_array().cloned().unwrap_or_default();
    ensure(
        !degrees.is_empty() && degrees.iter().all(|r| r["rank"] == r["dim_src"] && r["rank"] == r["dim_dst"]),
        || "missing or deficient witness".into(),
    )?;
    Ok("g = (1,8), M-sequence, witness, exit 0, identical on rerun".into())
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "f-vectors", limit: s(1), run: f_vectors },
        Criterion { id: 2, name: "Dehn-Sommerville", limit: s(5), run: dehn_sommerville },
        Criterion { id: 3, name: "h_i = dim A^i", limit: s(30), run: dims_equal_h },
        Criterion { id: 4, name: "pairing nondegeneracy", limit: s(30), run: graebe_pairing },
        Criterion { id: 5, name: "hard Lefschetz", limit: s(60), run: hard_lefschetz },
        Criterion { id: 6, name: "perturbation", limit: s(10), run: perturbation },
        Criterion { id: 7, name: "cone lemmas", limit: s(60), run: cone_lemmas },
        Criterion { id: 8, name: "middle reduction", limit: s(30), run: middle_reduction },
        Criterion { id: 9, name: "biased pairing / Poincaré", limit: s(30), run: biased_consistency },
        Criterion { id: 10, name: "edge contraction", limit: s(5), run: edge_contraction },
        Criterion { id: 11, name: "stellar invariance", limit: s(60), run: stellar_invariance },
        Criterion { id: 12, name: "certify pipeline", limit: s(10), run: full_pipeline },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; too slow")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {status} {:<26} {:>7.2}s / {:>3}s  {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
