//! `facering`: face rings, Artinian reductions and Lefschetz checks from the command line.
//!
//! Exit codes: 0 when the checked property holds, 2 when every trial failed, 1 on errors.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use facering::artinian::ArtinianRing;
use facering::catalog;
use facering::decompose::{
    contractible_edges, find_a_decomposition, find_b_decomposition, verify_c_order, COrder, DEFAULT_BUDGET,
};
use facering::io::{load_complex, to_json};
use facering::lefschetz::{
    certify_g, check_biased_pairing, check_biased_poincare, check_cone_lemma, check_hard_lefschetz,
    check_middle_reduction, check_transversal_prime, check_weak_lefschetz, trial_realization, CheckConfig, Verdict,
};
use facering::rng::{purpose, SeedStream};
use facering::scalar::{FieldKind, Fp, Rational, Scalar};
use facering::simplicial::{
    classify, dehn_sommerville_check, f_vector, g_vector, h_vector, is_m_sequence, reduced_homology, Complex, Face,
    Vertex,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "facering", version, about = "Face rings, Artinian reductions and Lefschetz checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Complex file (JSON or facet list), or `builtin:<name>`.
    input: String,
    /// Also write the result as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, value_enum, default_value_t = Mode::Prime)]
    mode: Mode,
    /// Check sphere/ball preconditions by homology (default).
    #[arg(long, overrides_with = "trust")]
    strict: bool,
    /// Skip homology preconditions.
    #[arg(long, overrides_with = "strict")]
    trust: bool,
    /// Restrict checks to these degrees (repeatable).
    #[arg(long = "degree")]
    degrees: Vec<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Prime,
    Rational,
}

impl Mode {
    fn field(self) -> FieldKind {
        match self {
            Mode::Prime => FieldKind::Prime,
            Mode::Rational => FieldKind::Rational,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Hard,
    Weak,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecompositionKind {
    A,
    B,
}

#[derive(Subcommand)]
enum Command {
    /// f-, h- and g-vectors, Dehn-Sommerville and the M-sequence test.
    Vectors(Common),
    /// Reduced Betti numbers and sphere/ball classification.
    Homology(Common),
    /// Dimensions of the graded pieces A^k(Δ, Γ) at sampled coordinates.
    Artinian {
        #[command(flatten)]
        common: Common,
        /// Subcomplex Γ (defaults to the void complex).
        #[arg(long)]
        subcomplex: Option<String>,
    },
    /// Weak or hard Lefschetz property.
    Lefschetz {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Property::Hard)]
        property: Property,
    },
    /// Ranks of the pairing A^k(Δ, ∂Δ) × A^{d-k}(Δ) → A^d(Δ, ∂Δ).
    Pairing(Common),
    /// Biased pairing of a ball, or biased Poincaré duality at `--subcomplex`.
    Biased {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        subcomplex: Option<String>,
    },
    /// Transversal prime property for a vertex set.
    Transversal {
        #[command(flatten)]
        common: Common,
        /// Comma-separated vertex labels.
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<String>,
    },
    /// Cone lemmas at one vertex, or at every vertex.
    ConeCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Middle-degree reduction through the cone.
    MiddleCheck(Common),
    /// Search for an A- or B-decomposition, or verify a star-union order.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = DecompositionKind::B)]
        kind: DecompositionKind,
        /// Comma-separated interior vertices; switches to order verification.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
        /// JSON file with a full order including nested link orders.
        #[arg(long, conflicts_with = "order")]
        order_file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// List edges with their link condition, or contract one edge.
    Contract {
        #[command(flatten)]
        common: Common,
        /// Comma-separated endpoints of the edge to contract.
        #[arg(long, value_delimiter = ',')]
        edge: Option<Vec<String>>,
        /// Where to write the contracted complex.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Full g-certificate pipeline; writes the certificate to `--json` (default `<name>.cert.json`).
    Certify(Common),
}

fn main() -> ExitCode {
    // die quietly when the reader of a pipe goes away, like other Unix tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load(input: &str) -> Result<Complex> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return catalog::by_name(name)
            .ok_or_else(|| anyhow!("unknown builtin `{name}`; known: {}", catalog::NAMES.join(", ")));
    }
    load_complex(Path::new(input)).with_context(|| format!("cannot load {input}"))
}

/// Loads `path` and places it in the universe of `total` by label.
fn load_sub(path: &str, total: &Complex) -> Result<Complex> {
    let raw = load(path)?;
    let faces = raw
        .facets()
        .iter()
        .map(|f| {
            let labels: Vec<&str> = f.vertices().iter().map(|&v| raw.label(v)).collect();
            total.face_from_labels(&labels)
        })
        .collect::<Result<Vec<Face>, _>>()
        .with_context(|| format!("{path} uses vertices outside {}", total.name()))?;
    if raw.is_void() {
        return Ok(total.void_like());
    }
    Ok(total.derive(raw.name().to_string(), faces))
}

fn vertex(c: &Complex, label: &str) -> Result<Vertex> {
    c.vertex(label).ok_or_else(|| anyhow!("unknown vertex `{label}`"))
}

impl Common {
    fn config(&self) -> CheckConfig {
        CheckConfig {
            seed: self.seed,
            trials: self.trials,
            strict: self.strict || !self.trust,
            degrees: (!self.degrees.is_empty()).then(|| self.degrees.clone()),
            degenerate: None,
        }
    }

    fn emit(&self, value: serde_json::Value) -> Result<()> {
        if let Some(path) = &self.json {
            let text = serde_json::to_string_pretty(&value)?;
            fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))?;
        }
        Ok(())
    }

    fn header(&self, command: &str, c: &Complex) -> serde_json::Value {
        json!({
            "command": command,
            "input": self.input,
            "complex": c.name(),
            "seed": self.seed,
            "mode": self.mode.field().to_string(),
            "prime": self.mode.field().prime(),
            "strict": !self.trust,
        })
    }
}

/// Runs a generic check in the selected field.
macro_rules! in_field {
    ($mode:expr, $f:ident ( $($arg:expr),* )) => {
        match $mode {
            Mode::Prime => $f::<Fp>($($arg),*),
            Mode::Rational => $f::<Rational>($($arg),*),
        }
    };
}

fn finish_verdict(common: &Common, command: &str, c: &Complex, verdict: &Verdict) -> Result<i32> {
    report::verdict(command, c, verdict);
    let mut out = common.header(command, c);
    out["verdict"] = serde_json::to_value(verdict)?;
    common.emit(out)?;
    Ok(verdict.exit_code())
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Vectors(common) => {
            let c = load(&common.input)?;
            if c.dim() < 0 {
                bail!("{} has no vertices", c.name());
            }
            let d = (c.dim() + 1) as usize;
            let f = f_vector(&c);
            let h = h_vector(&f, d);
            let g = g_vector(&h);
            let ds = dehn_sommerville_check(&h);
            let m = is_m_sequence(&g);
            println!("{}: d = {d}", c.name());
            println!("f = {f}");
            println!("h = {h}");
            println!("g = {g}");
            println!("DS: {ds}");
            println!("M-sequence: {m}");
            let mut out = common.header("vectors", &c);
            out["f"] = json!(f.0);
            out["h"] = json!(h.0);
            out["g"] = json!(g.0);
            out["dehn_sommerville"] = json!(ds);
            out["m_sequence"] = json!(m);
            common.emit(out)?;
            Ok(0)
        }
        Command::Homology(common) => {
            let c = load(&common.input)?;
            let betti = reduced_homology::<Fp>(&c);
            let topology = classify(&c);
            println!("{}: reduced Betti numbers {betti:?}", c.name());
            println!("classification: {}", report::topology(topology));
            let mut out = common.header("homology", &c);
            out["reduced_betti"] = json!(betti);
            out["topology"] = serde_json::to_value(topology)?;
            common.emit(out)?;
            Ok(0)
        }
        Command::Artinian { common, subcomplex } => {
            let c = load(&common.input)?;
            let sub = match &subcomplex {
                Some(p) => load_sub(p, &c)?,
                None => c.void_like(),
            };
            let dims = in_field!(common.mode, artinian_dims(&c, &sub, &common.config()))?;
            let d = (c.dim() + 1) as usize;
            let h = h_vector(&f_vector(&c), d);
            report::dims(&c, &sub, &dims, subcomplex.is_none().then_some(&h.0[..]));
            let mut out = common.header("artinian", &c);
            out["subcomplex"] = json!(sub.name());
            out["dims"] = json!(dims);
            common.emit(out)?;
            Ok(0)
        }
        Command::Lefschetz { common, property } => {
            let c = load(&common.input)?;
            let cfg = common.config();
            let (name, v) = match property {
                Property::Hard => ("hard Lefschetz", in_field!(common.mode, check_hard_lefschetz(&c, &cfg))),
                Property::Weak => ("weak Lefschetz", in_field!(common.mode, check_weak_lefschetz(&c, &cfg))),
            };
            finish_verdict(&common, name, &c, &v)
        }
        Command::Pairing(common) => {
            let c = load(&common.input)?;
            let ranks = in_field!(common.mode, pairing_ranks(&c, &common.config()))?;
            report::pairing(&c, &ranks);
            let perfect = ranks.iter().all(|&(_, r, rows, cols)| r == rows && r == cols);
            let mut out = common.header("pairing", &c);
            out["degrees"] = json!(ranks
                .iter()
                .map(|&(k, rank, rows, cols)| json!({"k": k, "rank": rank, "rows": rows, "cols": cols}))
                .collect::<Vec<_>>());
            out["perfect"] = json!(perfect);
            common.emit(out)?;
            Ok(if perfect { 0 } else { 2 })
        }
        Command::Biased { common, subcomplex } => {
            let c = load(&common.input)?;
            let cfg = common.config();
            match subcomplex {
                None => {
                    let v = in_field!(common.mode, check_biased_pairing(&c, &cfg));
                    finish_verdict(&common, "biased pairing", &c, &v)
                }
                Some(p) => {
                    let x = load_sub(&p, &c)?;
                    let d = (c.dim() + 1).max(0) as usize;
                    let ks: Vec<usize> = match &cfg.degrees {
                        Some(ks) => ks.clone(),
                        None => (0..=d / 2).collect(),
                    };
                    let mut worst = 0;
                    let mut verdicts = Vec::new();
                    for k in ks {
                        let v = in_field!(common.mode, check_biased_poincare(&c, &x, k, &cfg));
                        report::verdict(&format!("biased Poincaré duality at {} (k = {k})", x.name()), &c, &v);
                        worst = worst.max(match v.exit_code() {
                            0 => 0,
                            2 => 1,
                            _ => 2,
                        });
                        verdicts.push(json!({"k": k, "verdict": v}));
                    }
                    let mut out = common.header("biased", &c);
                    out["subcomplex"] = json!(x.name());
                    out["verdicts"] = json!(verdicts);
                    common.emit(out)?;
                    Ok([0, 2, 1][worst])
                }
            }
        }
        Command::Transversal { common, vertices } => {
            let c = load(&common.input)?;
            let w = vertices.iter().map(|l| vertex(&c, l)).collect::<Result<Vec<_>>>()?;
            let v = in_field!(common.mode, check_transversal_prime(&c, &w, &common.config()));
            finish_verdict(&common, "transversal prime", &c, &v)
        }
        Command::ConeCheck { common, vertex: label } => {
            let c = load(&common.input)?;
            let targets = match &label {
                Some(l) => vec![vertex(&c, l)?],
                None => c.vertices(),
            };
            let mut verdicts = Vec::new();
            let mut code = 0;
            for v in targets {
                let verdict = in_field!(common.mode, check_cone_lemma(&c, v, &common.config()));
                report::verdict(&format!("cone lemmas at {}", c.label(v)), &c, &verdict);
                code = match (code, verdict.exit_code()) {
                    (1, _) | (_, 1) => 1,
                    (2, _) | (_, 2) => 2,
                    _ => 0,
                };
                verdicts.push(json!({"vertex": c.label(v), "verdict": verdict}));
            }
            let mut out = common.header("cone-check", &c);
            out["verdicts"] = json!(verdicts);
            common.emit(out)?;
            Ok(code)
        }
        Command::MiddleCheck(common) => {
            let c = load(&common.input)?;
            let v = in_field!(common.mode, check_middle_reduction(&c, &common.config()));
            finish_verdict(&common, "middle reduction", &c, &v)
        }
        Command::Decompose { common, kind, order, order_file, budget } => {
            let c = load(&common.input)?;
            let order = match (order, order_file) {
                (Some(o), _) => Some(COrder::new(&o)),
                (None, Some(p)) => {
                    let text = fs::read_to_string(&p).with_context(|| format!("cannot read {}", p.display()))?;
                    Some(serde_json::from_str(&text).with_context(|| format!("malformed order in {}", p.display()))?)
                }
                (None, None) => None,
            };
            if let Some(order) = order {
                let r = verify_c_order(&c, &order)?;
                report::c_order(&c, &r);
                let mut out = common.header("decompose", &c);
                out["report"] = serde_json::to_value(&r)?;
                common.emit(out)?;
                return Ok(if r.holds() { 0 } else { 2 });
            }
            let t = match kind {
                DecompositionKind::A => find_a_decomposition(&c, budget)?,
                DecompositionKind::B => find_b_decomposition(&c, budget)?,
            };
            report::trace(&t);
            let mut out = common.header("decompose", &c);
            out["trace"] = serde_json::to_value(&t)?;
            common.emit(out)?;
            Ok(if t.success() { 0 } else { 2 })
        }
        Command::Contract { common, edge, output } => {
            let c = load(&common.input)?;
            let Some(edge) = edge else {
                let edges = contractible_edges(&c);
                report::edges(&c, &edges);
                let mut out = common.header("contract", &c);
                out["edges"] = serde_json::to_value(&edges)?;
                common.emit(out)?;
                return Ok(0);
            };
            if edge.len() != 2 {
                bail!("--edge takes exactly two vertex labels");
            }
            let e = c.face_from_labels(&edge)?;
            let mut rng = SeedStream::new(common.seed).rng(purpose::CONTRACTION, 0);
            match c.contract_edge(&e, &mut rng) {
                Ok(r) => {
                    let before = reduced_homology::<Fp>(&c);
                    let after = reduced_homology::<Fp>(&r.complex);
                    println!(
                        "contracted {} into {}: f = {}, reduced Betti numbers {after:?} (before {before:?})",
                        r.removed,
                        r.kept,
                        f_vector(&r.complex)
                    );
                    if let Some(path) = &output {
                        fs::write(path, to_json(&r.complex) + "\n")
                            .with_context(|| format!("cannot write {}", path.display()))?;
                    }
                    let mut out = common.header("contract", &c);
                    out["kept"] = json!(r.kept);
                    out["removed"] = json!(r.removed);
                    out["f"] = json!(f_vector(&r.complex).0);
                    out["reduced_betti"] = json!(after);
                    common.emit(out)?;
                    Ok(0)
                }
                Err(refusal) => {
                    println!("refused: {refusal}");
                    Ok(2)
                }
            }
        }
        Command::Certify(common) => {
            let c = load(&common.input)?;
            let cert = certify_g(&c, &common.config(), common.mode.field());
            let path = common.json.clone().unwrap_or_else(|| PathBuf::from(format!("{}.cert.json", c.name())));
            fs::write(&path, cert.to_json() + "\n").with_context(|| format!("cannot write {}", path.display()))?;
            report::certificate(&cert);
            println!("certificate written to {}", path.display());
            Ok(cert.exit_code())
        }
    }
}

fn artinian_dims<S: Scalar>(c: &Complex, sub: &Complex, cfg: &CheckConfig) -> Result<Vec<usize>> {
    if c.dim() < 0 {
        bail!("{} has no vertices", c.name());
    }
    let d = (c.dim() + 1) as usize;
    let (real, _) = trial_realization::<S>(c, d, cfg, 0).map_err(|e| anyhow!(e))?;
    let ring = ArtinianRing::new(c.clone(), real)?;
    Ok(ring.dims(sub)?)
}

/// `(k, rank, rows, cols)` of the pairing matrix in each degree.
fn pairing_ranks<S: Scalar>(c: &Complex, cfg: &CheckConfig) -> Result<Vec<(usize, usize, usize, usize)>> {
    if c.dim() < 0 {
        bail!("{} has no vertices", c.name());
    }
    let d = (c.dim() + 1) as usize;
    let (real, _) = trial_realization::<S>(c, d, cfg, 0).map_err(|e| anyhow!(e))?;
    let ring = ArtinianRing::new(c.clone(), real)?;
    (0..=d)
        .filter(|k| cfg.degrees.as_ref().is_none_or(|ks| ks.contains(k)))
        .map(|k| {
            let m = ring.pairing_matrix(k)?;
            Ok((k, facering::linalg::rank(&m), m.rows(), m.cols()))
        })
        .collect()
}
