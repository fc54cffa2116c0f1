//! Human-readable reports.

use facering::decompose::{CReport, DecompositionTrace, EdgeReport, LinkCheck};
use facering::lefschetz::{Certificate, Verdict};
use facering::simplicial::{Complex, Topology};

pub fn topology(t: Topology) -> String {
    match t {
        Topology::Sphere(d) => format!("homology {d}-sphere"),
        Topology::Ball(d) => format!("homology {d}-ball"),
        Topology::Other => "neither a homology sphere nor a homology ball".into(),
    }
}

pub fn verdict(property: &str, c: &Complex, v: &Verdict) {
    println!("{property} on {}: {}", c.name(), v.label());
    match v {
        Verdict::Error { reason } => println!("  reason: {reason}"),
        Verdict::LikelyFails { trials, .. } => println!("  failed in all {trials} trials"),
        Verdict::Holds { .. } => {}
    }
    let Some(w) = v.witness() else { return };
    let coords = match w.coordinate_draw {
        Some(i) => format!("sampled (draw {i})"),
        None => "explicit".into(),
    };
    println!("  seed {} trial {}, coordinates {coords}", w.seed, w.trial);
    if !w.ell.is_empty() {
        println!("  ℓ = ({})", w.ell.join(", "));
    }
    if !w.degrees.is_empty() {
        println!("  {:>3}  {:>8}  {:>8}  {:>6}", "k", "dim src", "dim dst", "rank");
        for r in &w.degrees {
            println!("  {:>3}  {:>8}  {:>8}  {:>6}", r.k, r.dim_src, r.dim_dst, r.rank);
        }
    }
    for n in &w.notes {
        println!("  {n}");
    }
}

pub fn dims(c: &Complex, sub: &Complex, dims: &[usize], h: Option<&[i64]>) {
    let pair = if sub.is_void() { c.name().to_string() } else { format!("{}, {}", c.name(), sub.name()) };
    println!("graded pieces of A({pair}):");
    for (k, d) in dims.iter().enumerate() {
        match h {
            Some(h) => println!("  dim A^{k} = {d:<6} h_{k} = {}", h[k]),
            None => println!("  dim A^{k} = {d}"),
        }
    }
}

pub fn pairing(c: &Complex, ranks: &[(usize, usize, usize, usize)]) {
    println!("pairing A^k(Δ,∂Δ) × A^(d-k)(Δ) on {}:", c.name());
    println!("  {:>3}  {:>10}  {:>6}", "k", "shape", "rank");
    for &(k, rank, rows, cols) in ranks {
        let mark = if rank == rows && rank == cols { "" } else { "  (degenerate)" };
        println!("  {:>3}  {:>10}  {:>6}{mark}", k, format!("{rows}×{cols}"), rank);
    }
}

pub fn trace(t: &DecompositionTrace) {
    println!("{:?}-decomposition of {}: {:?} after {} nodes", t.kind, t.complex, t.outcome, t.nodes);
    for (i, s) in t.steps.iter().enumerate() {
        let link = match &s.link {
            Some(l) => format!(", boundary link {} in {} steps", l.complex, l.steps.len()),
            None => String::new(),
        };
        println!("  {:>2}. delete {:<6} f = {:?}{link}", i + 1, s.vertex, s.f);
    }
    for line in &t.frontier {
        println!("  tried {line}");
    }
}

fn link_status(l: &LinkCheck) -> String {
    match l {
        LinkCheck::Empty => "empty".into(),
        LinkCheck::ByDefault => "vertex set".into(),
        LinkCheck::Verified { .. } => "verified".into(),
        LinkCheck::Failed { reason, .. } => format!("FAILS ({reason})"),
    }
}

pub fn c_order(c: &Complex, r: &CReport) {
    println!("order {:?} on {}: {}", r.order, c.name(), if r.holds() { "HOLDS" } else { "VIOLATED" });
    for s in &r.steps {
        println!(
            "  {:<6} (1) {}  (3a) {}  (3b) {}",
            s.vertex,
            if s.submanifold { "ok" } else { "FAILS" },
            link_status(&s.boundary_link),
            link_status(&s.union_link)
        );
    }
    println!("  (2) stars cover: {}", r.covers);
    if let Some(v) = &r.first_violation {
        println!("  first violation: condition {:?} at step {}: {}", v.condition, v.step, v.detail);
    }
}

pub fn edges(c: &Complex, edges: &[EdgeReport]) {
    let n = edges.iter().filter(|e| e.contractible()).count();
    println!("{}: {n} of {} edges contractible", c.name(), edges.len());
    for e in edges {
        let status = match (&e.violation, e.homology_preserved) {
            (Some(face), _) => format!("link condition fails at {face}"),
            (None, Some(true)) => "contractible".into(),
            (None, _) => "link condition holds, homology changes".into(),
        };
        println!("  {{{},{}}}  {status}", e.edge[0], e.edge[1]);
    }
}

pub fn certificate(cert: &Certificate) {
    println!("certificate for {} ({})", cert.name, cert.input_sha);
    println!("  field {}{}", cert.field, cert.prime.map(|p| format!(" (p = {p})")).unwrap_or_default());
    if !cert.f.is_empty() {
        let tuple = |v: &[String]| format!("({})", v.join(","));
        let s = |v: &[u64]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let t = |v: &[i64]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        println!("  f = {}", tuple(&s(&cert.f)));
        println!("  h = {}", tuple(&t(&cert.h)));
        println!("  g = {}", tuple(&t(&cert.g)));
    }
    if let Some(ds) = cert.dehn_sommerville {
        println!("  Dehn-Sommerville: {ds}");
    }
    if let Some(m) = cert.m_sequence {
        println!("  M-sequence: {m}");
    }
    if !cert.degrees.is_empty() {
        let d = cert.h.len().saturating_sub(1);
        println!("  {:>3}  {:>6}  {:>9}  {:>9}  {:>6}", "k", "map", "dim A^k", "dim A^d-k", "rank");
        for r in &cert.degrees {
            let map = format!("ℓ^{}", d - 2 * r.k);
            println!("  {:>3}  {:>6}  {:>9}  {:>9}  {:>6}", r.k, map, r.dim_src, r.dim_dst, r.rank);
        }
    }
    println!("  verdict: {}", cert.verdict);
    if let Some(e) = &cert.error {
        println!("  error at stage {}: {}", e.stage, e.message);
    }
}
