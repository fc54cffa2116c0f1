//! Vertex-deletion decompositions of spheres and balls, star-union orders on manifolds,
//! and edge contractions.
//!
//! "Ball" and "sphere" mean homology balls and spheres (pure, plus the boundary test);
//! PL-ness is not decided.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::artinian::{ArtinianError, ArtinianRing};
use crate::rng::{purpose, SeedStream};
use crate::scalar::Scalar;
use crate::simplicial::{
    classify, f_vector, is_homology_ball, label_cmp, is_homology_sphere, reduced_homology, Complex, ComplexError, Face,
    Realization, Topology, Vertex,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("topology precondition: {0}")]
    Topology(String),
    #[error("vertex `{0}` is not an interior vertex")]
    NotInterior(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Artinian(#[from] ArtinianError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchOutcome {
    Success,
    Failure,
    BudgetExceeded,
}

/// One deletion: the vertex removed and the complex that remains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub vertex: String,
    /// f-vector of the deletion.
    pub f: Vec<u64>,
    pub topology: Topology,
    /// A-decompositions only: the trace of the boundary link at the vertex, `None` when
    /// that link is empty.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link: Option<Box<DecompositionTrace>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTrace {
    pub kind: Kind,
    pub complex: String,
    pub f: Vec<u64>,
    pub steps: Vec<Step>,
    pub outcome: SearchOutcome,
    /// Intermediate complexes examined.
    pub nodes: usize,
    /// On failure: each top-level candidate with the reason it was abandoned.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub frontier: Vec<String>,
}

impl DecompositionTrace {
    pub fn success(&self) -> bool {
        self.outcome == SearchOutcome::Success
    }

    /// The same deletion sequence without boundary-link data.
    pub fn as_b(&self) -> DecompositionTrace {
        let steps = self.steps.iter().map(|s| Step { link: None, ..s.clone() }).collect();
        DecompositionTrace { kind: Kind::B, steps, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("traces always serialize")
    }
}

/// Default cap on intermediate complexes per search.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Vertices by ascending degree, ties by label.
fn search_order(c: &Complex) -> Vec<Vertex> {
    let mut vs = c.vertices();
    vs.sort_by(|&a, &b| c.vertex_degree(a).cmp(&c.vertex_degree(b)).then_with(|| label_cmp(c.label(a), c.label(b))));
    vs
}

fn is_simplex(c: &Complex) -> bool {
    c.facets().len() == 1
}

/// `{∅}` or the void complex.
fn is_empty_complex(c: &Complex) -> bool {
    c.dim() < 0
}

struct BudgetExceeded;

struct Search {
    kind: Kind,
    budget: usize,
    nodes: usize,
    failed: HashSet<Vec<Face>>,
}

impl Search {
    fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(BudgetExceeded)
        } else {
            Ok(())
        }
    }

    /// Why deleting `w` does not start a decomposition, or the resulting step.
    fn try_vertex(&mut self, c: &Complex, w: Vertex) -> Result<Result<(Step, Complex), String>, BudgetExceeded> {
        self.tick()?;
        let del = c.delete_vertices(&[w]);
        if del.dim() != c.dim() || !is_homology_ball(&del) {
            return Ok(Err("deletion is not a ball of the same dimension".into()));
        }
        let link = if self.kind == Kind::A {
            let bd = c.boundary_complex().expect("balls and spheres are pure");
            let l = if bd.contains_face(&Face::vertex(w)) { bd.link(&Face::vertex(w)).expect("w is in ∂") } else { bd };
            let l = if is_empty_complex(&l) { None } else { Some(l) };
            match l {
                None => None,
                Some(l) => match self.run(&l)? {
                    Some(steps) => Some(Box::new(self.trace_of(&l, steps, Vec::new()))),
                    None => return Ok(Err("boundary link is not A-decomposable".into())),
                },
            }
        } else {
            None
        };
        let step = Step { vertex: c.label(w).to_string(), f: f_vector(&del).0, topology: classify(&del), link };
        Ok(Ok((step, del)))
    }

    fn run(&mut self, c: &Complex) -> Result<Option<Vec<Step>>, BudgetExceeded> {
        if is_simplex(c) {
            return Ok(Some(Vec::new()));
        }
        if self.failed.contains(c.facets()) {
            return Ok(None);
        }
        for w in search_order(c) {
            if let Ok((step, del)) = self.try_vertex(c, w)? {
                if let Some(rest) = self.run(&del)? {
                    let mut steps = vec![step];
                    steps.extend(rest);
                    return Ok(Some(steps));
                }
            }
        }
        self.failed.insert(c.facets().to_vec());
        Ok(None)
    }

    fn trace_of(&self, c: &Complex, steps: Vec<Step>, frontier: Vec<String>) -> DecompositionTrace {
        DecompositionTrace {
            kind: self.kind,
            complex: c.name().to_string(),
            f: f_vector(c).0,
            steps,
            outcome: SearchOutcome::Success,
            nodes: self.nodes,
            frontier,
        }
    }
}

fn require_sphere_or_ball(c: &Complex) -> Result<(), DecomposeError> {
    match classify(c) {
        Topology::Sphere(d) | Topology::Ball(d) if d >= 0 => Ok(()),
        _ => Err(DecomposeError::Topology(format!(
            "{} is not a homology sphere or ball (reduced Betti numbers {:?})",
            c.name(),
            reduced_homology::<crate::scalar::Fp>(c)
        ))),
    }
}

fn find(c: &Complex, kind: Kind, budget: usize) -> Result<DecompositionTrace, DecomposeError> {
    require_sphere_or_ball(c)?;
    let mut search = Search { kind, budget, nodes: 0, failed: HashSet::new() };
    if is_simplex(c) {
        return Ok(search.trace_of(c, Vec::new(), Vec::new()));
    }
    // the top level is unrolled so that failures can report their frontier
    let mut frontier = Vec::new();
    for w in search_order(c) {
        let label = c.label(w).to_string();
        let attempt = match search.try_vertex(c, w) {
            Ok(Ok((step, del))) => search.run(&del).map(|r| r.map(|rest| (step, rest))),
            Ok(Err(reason)) => {
                frontier.push(format!("{label}: {reason}"));
                continue;
            }
            Err(b) => Err(b),
        };
        match attempt {
            Ok(Some((step, rest))) => {
                let mut steps = vec![step];
                steps.extend(rest);
                return Ok(search.trace_of(c, steps, Vec::new()));
            }
            Ok(None) => frontier.push(format!("{label}: deletion is not decomposable")),
            Err(BudgetExceeded) => {
                frontier.push(format!("{label}: budget exhausted"));
                let mut t = search.trace_of(c, Vec::new(), frontier);
                t.outcome = SearchOutcome::BudgetExceeded;
                t.nodes = budget;
                return Ok(t);
            }
        }
    }
    let mut t = search.trace_of(c, Vec::new(), frontier);
    t.outcome = SearchOutcome::Failure;
    Ok(t)
}

/// Depth-first search for a sequence of deletions through balls of the same dimension
/// ending in a simplex.
pub fn find_b_decomposition(c: &Complex, budget: usize) -> Result<DecompositionTrace, DecomposeError> {
    find(c, Kind::B, budget)
}

/// As [`find_b_decomposition`], additionally requiring the link of each deleted vertex in
/// the boundary to be A-decomposable (an empty link passes).
pub fn find_a_decomposition(c: &Complex, budget: usize) -> Result<DecompositionTrace, DecomposeError> {
    find(c, Kind::A, budget)
}

/// Re-applies the deletions of a successful trace, checking every recorded f-vector,
/// every intermediate's topology and (for A-traces) every nested link trace.
pub fn replay_trace(c: &Complex, trace: &DecompositionTrace) -> Result<(), String> {
    if f_vector(c).0 != trace.f {
        return Err(format!("input f-vector {:?} differs from the trace", f_vector(c).0));
    }
    let mut current = c.clone();
    for (i, step) in trace.steps.iter().enumerate() {
        let w = current.vertex(&step.vertex).ok_or_else(|| format!("step {i}: unknown vertex {}", step.vertex))?;
        if trace.kind == Kind::A {
            let bd = current.boundary_complex().map_err(|e| e.to_string())?;
            let w_face = Face::vertex(w);
            let l = if bd.contains_face(&w_face) { bd.link(&w_face).map_err(|e| e.to_string())? } else { bd };
            match (&step.link, is_empty_complex(&l)) {
                (None, true) => {}
                (Some(sub), false) => replay_trace(&l, sub).map_err(|e| format!("step {i} link: {e}"))?,
                _ => return Err(format!("step {i}: boundary link presence does not match")),
            }
        }
        let del = current.delete_vertices(&[w]);
        if f_vector(&del).0 != step.f {
            return Err(format!("step {i}: f-vector {:?} differs from {:?}", f_vector(&del).0, step.f));
        }
        if del.dim() != current.dim() || !is_homology_ball(&del) {
            return Err(format!("step {i}: deletion of {} is not a ball of the same dimension", step.vertex));
        }
        current = del;
    }
    if trace.success() && !is_simplex(&current) {
        return Err("the final complex is not a simplex".into());
    }
    Ok(())
}

/// A vertex order for star-union decompositions, with orders for the link complexes
/// met along the way, keyed by the vertex at which they arise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct COrder {
    pub order: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub nested: BTreeMap<String, NestedOrders>,
}

impl COrder {
    pub fn new<S: AsRef<str>>(order: &[S]) -> Self {
        COrder { order: order.iter().map(|s| s.as_ref().to_string()).collect(), nested: BTreeMap::new() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedOrders {
    /// For `Lk_w M ∩ (∂M ∪ U_W)`.
    #[serde(default)]
    pub boundary: Option<COrder>,
    /// For `Lk_w U_W`.
    #[serde(default)]
    pub union: Option<COrder>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    /// The union of stars over an initial segment is a submanifold.
    #[serde(rename = "1")]
    Submanifold,
    /// The stars of the whole order cover the manifold.
    #[serde(rename = "2")]
    Cover,
    /// `Lk_w M ∩ (∂M ∪ U_W)` is decomposable of codimension one, or empty.
    #[serde(rename = "3a")]
    BoundaryLink,
    /// `Lk_w U_W` is decomposable of codimension one, or empty.
    #[serde(rename = "3b")]
    UnionLink,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LinkCheck {
    Empty,
    /// A vertex set, decomposable by default.
    ByDefault,
    Verified { report: Box<CReport> },
    Failed { reason: String, report: Option<Box<CReport>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CStep {
    pub vertex: String,
    /// Condition (1) for the segment ending with this vertex.
    pub submanifold: bool,
    /// Conditions (3a)/(3b) with `W` the vertices before this one.
    pub boundary_link: LinkCheck,
    pub union_link: LinkCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Index into the order (the order's length for the cover condition).
    pub step: usize,
    pub condition: Condition,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CReport {
    pub kind: Kind,
    pub complex: String,
    pub order: Vec<String>,
    pub steps: Vec<CStep>,
    pub covers: bool,
    /// Lowest-numbered violated condition, earliest step first.
    pub first_violation: Option<Violation>,
    pub violations: Vec<Violation>,
}

impl CReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Pure of the right dimension, and every vertex link a homology ball or sphere of one
/// dimension less.
fn is_homology_submanifold(u: &Complex, dim: isize) -> bool {
    if u.is_void() {
        return true;
    }
    u.is_pure()
        && u.dim() == dim
        && u.vertices().into_iter().all(|v| {
            let l = u.link(&Face::vertex(v)).expect("v is a vertex");
            l.dim() == dim - 1 && (is_homology_sphere(&l) || is_homology_ball(&l))
        })
}

fn union_of_stars(m: &Complex, ws: &[Vertex]) -> Complex {
    let faces: Vec<Face> = m.facets().iter().filter(|f| ws.iter().any(|&w| f.contains(w))).cloned().collect();
    m.derive(format!("U{}", ws.len()), faces)
}

/// Checks the three star-union conditions along `order`, recursing into link complexes
/// with the nested orders (a missing nested order is the empty order).
pub fn verify_c_order(m: &Complex, order: &COrder) -> Result<CReport, DecomposeError> {
    let mut report = CReport {
        kind: Kind::C,
        complex: m.name().to_string(),
        order: order.order.clone(),
        steps: Vec::new(),
        covers: true,
        first_violation: None,
        violations: Vec::new(),
    };
    if m.dim() <= 0 {
        return Ok(report);
    }
    let interior: HashSet<Vertex> = m.interior_vertices()?.into_iter().collect();
    let mut ws = Vec::with_capacity(order.order.len());
    for label in &order.order {
        let v = m.vertex(label).ok_or_else(|| DecomposeError::UnknownVertex(label.clone()))?;
        if !interior.contains(&v) {
            return Err(DecomposeError::NotInterior(label.clone()));
        }
        ws.push(v);
    }
    let dim = m.dim();
    let bd = m.boundary_complex()?;
    let violate = |report: &mut CReport, step, condition, detail: String| {
        report.violations.push(Violation { step, condition, detail });
    };
    for (j, &w) in ws.iter().enumerate() {
        let label = m.label(w).to_string();
        let before = union_of_stars(m, &ws[..j]);
        let w_face = Face::vertex(w);
        let boundary_part = bd.union(&before)?;
        let l1 = m.link(&w_face)?.intersection(&boundary_part)?;
        let l2 = if before.contains_face(&w_face) { before.link(&w_face)? } else { m.void_like() };
        let nested = order.nested.get(&label).cloned().unwrap_or_default();
        let boundary_link = check_link(&l1, dim - 1, nested.boundary.as_ref());
        let union_link = check_link(&l2, dim - 1, nested.union.as_ref());
        let submanifold = is_homology_submanifold(&union_of_stars(m, &ws[..=j]), dim);
        if !submanifold {
            violate(&mut report, j, Condition::Submanifold, format!("the union of stars up to {label} is not a homology submanifold"));
        }
        for (check, cond) in [(&boundary_link, Condition::BoundaryLink), (&union_link, Condition::UnionLink)] {
            if let LinkCheck::Failed { reason, .. } = check {
                violate(&mut report, j, cond, format!("at {label}: {reason}"));
            }
        }
        report.steps.push(CStep { vertex: label, submanifold, boundary_link, union_link });
    }
    let all = union_of_stars(m, &ws);
    report.covers = all.facets().len() == m.facets().len();
    if !report.covers {
        let missing = m.facets().iter().find(|f| !all.contains_face(f)).expect("something is uncovered");
        violate(&mut report, ws.len(), Condition::Cover, format!("facet {} is not covered", m.face_label(missing)));
    }
    report.first_violation = report.violations.iter().min_by_key(|v| (v.condition, v.step)).cloned();
    Ok(report)
}

fn check_link(l: &Complex, dim: isize, order: Option<&COrder>) -> LinkCheck {
    if is_empty_complex(l) {
        return LinkCheck::Empty;
    }
    if l.dim() != dim {
        return LinkCheck::Failed { reason: format!("{} has dimension {}, expected {dim}", l.name(), l.dim()), report: None };
    }
    if dim == 0 {
        return LinkCheck::ByDefault;
    }
    let empty = COrder::default();
    match verify_c_order(l, order.unwrap_or(&empty)) {
        Ok(r) if r.holds() => LinkCheck::Verified { report: Box::new(r) },
        Ok(r) => LinkCheck::Failed { reason: "nested order fails".into(), report: Some(Box::new(r)) },
        Err(e) => LinkCheck::Failed { reason: format!("nested order: {e}"), report: None },
    }
}

/// Link-condition and homology verdict for one edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub edge: [String; 2],
    pub link_condition: bool,
    /// A face of `Lk u ∩ Lk v` missing from `Lk uv`.
    pub violation: Option<String>,
    /// Whether contracting preserves reduced homology (only when the link condition holds).
    pub homology_preserved: Option<bool>,
}

impl EdgeReport {
    pub fn contractible(&self) -> bool {
        self.link_condition && self.homology_preserved == Some(true)
    }
}

pub fn contractible_edges(c: &Complex) -> Vec<EdgeReport> {
    let before = reduced_homology::<crate::scalar::Fp>(c);
    let mut rng = SeedStream::new(0).rng(purpose::CONTRACTION, 0);
    c.faces_of_size(2)
        .iter()
        .map(|e| {
            let edge = [c.label(e.vertices()[0]).to_string(), c.label(e.vertices()[1]).to_string()];
            let violation = c.link_condition_violation(e).expect("an edge of the complex");
            let homology_preserved = match violation {
                Some(_) => None,
                None => {
                    let after = c.contract_edge(e, &mut rng).expect("link condition holds");
                    Some(reduced_homology::<crate::scalar::Fp>(&after.complex) == before)
                }
            };
            EdgeReport {
                edge,
                link_condition: violation.is_none(),
                violation: violation.map(|f| c.face_label(&f)),
                homology_preserved,
            }
        })
        .collect()
}

/// One contraction in a D-contraction sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DStep {
    pub edge: [String; 2],
    /// `dim A^d` of the contracted envelope and of the contracted target.
    pub dim_envelope: usize,
    pub dim_target: usize,
    pub target_dim: isize,
    pub envelope: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DReport {
    pub degree: usize,
    pub initial: (usize, usize),
    pub steps: Vec<DStep>,
    /// The contracted target dropped below dimension `d - 1`.
    pub target_collapsed: bool,
    pub holds: bool,
    pub failure: Option<String>,
}

/// Image of `x` in the contracted universe: `removed` is renamed to `kept`.
fn contract_image(x: &Complex, into: &Complex, kept: &str, removed: &str) -> Complex {
    let faces: Vec<Face> = x
        .facets()
        .iter()
        .map(|f| {
            f.vertices()
                .iter()
                .map(|&v| {
                    let l = x.label(v);
                    let l = if l == removed { kept } else { l };
                    into.vertex(l).expect("contracted universe keeps every other label")
                })
                .collect()
        })
        .collect();
    into.derive(format!("{} / {removed}", x.name()), faces)
}

fn degree_dims<S: Scalar>(e: &Complex, x: &Complex, d: usize, stream: &SeedStream, index: u64) -> Result<(usize, usize), DecomposeError> {
    let real = loop_proper::<S>(e, stream, index)?;
    let ring_e = ArtinianRing::new(e.clone(), real.clone())?;
    let ring_x = ArtinianRing::new(x.clone(), real)?;
    Ok((ring_e.piece(&e.void_like(), d)?.dim(), ring_x.piece(&x.void_like(), d)?.dim()))
}

fn loop_proper<S: Scalar>(e: &Complex, stream: &SeedStream, index: u64) -> Result<Realization<S>, DecomposeError> {
    let dim = (e.dim() + 1) as usize;
    for attempt in 0..8 {
        let r = Realization::sample(e.universe_len(), dim, &mut stream.rng(purpose::COORDINATES, index * 8 + attempt));
        if r.check_proper(e).is_ok() {
            return Ok(r);
        }
    }
    Err(DecomposeError::Topology("no proper coordinates found".into()))
}

/// Verifies a supplied contraction sequence for an envelope pair `(E, X)`: every
/// contraction must satisfy the link condition in the current envelope and keep
/// `dim A^d(E') = dim A^d(X')`, `d = dim X + 1`, until the sequence ends or `X'` drops
/// below dimension `d - 1`.
pub fn verify_d_contraction<S: Scalar>(
    e: &Complex,
    x: &Complex,
    edges: &[[String; 2]],
    seed: u64,
) -> Result<DReport, DecomposeError> {
    if !x.is_subcomplex_of(e) {
        return Err(ComplexError::NotSubcomplex(x.name().to_string()).into());
    }
    let d = (x.dim() + 1) as usize;
    let stream = SeedStream::new(seed);
    let initial = degree_dims::<S>(e, x, d, &stream, 0)?;
    let mut report = DReport { degree: d, initial, steps: Vec::new(), target_collapsed: false, holds: true, failure: None };
    if initial.0 != initial.1 {
        report.holds = false;
        report.failure = Some(format!("initial pair: dim A^{d} is {} vs {}", initial.0, initial.1));
        return Ok(report);
    }
    let (mut e, mut x) = (e.clone(), x.clone());
    for (i, [a, b]) in edges.iter().enumerate() {
        let edge = e.face_from_labels(&[a, b])?;
        let contracted = match e.contract_edge(&edge, &mut stream.rng(purpose::CONTRACTION, i as u64)) {
            Ok(c) => c,
            Err(refusal) => {
                report.holds = false;
                report.failure = Some(format!("step {i}: {refusal}"));
                return Ok(report);
            }
        };
        let x_next = contract_image(&x, &contracted.complex, &contracted.kept, &contracted.removed);
        e = contracted.complex;
        x = x_next;
        if x.dim() < d as isize - 1 {
            report.target_collapsed = true;
            report.steps.push(DStep { edge: [a.clone(), b.clone()], dim_envelope: 0, dim_target: 0, target_dim: x.dim(), envelope: true });
            break;
        }
        let (de, dx) = degree_dims::<S>(&e, &x, d, &stream, i as u64 + 1)?;
        let ok = de == dx;
        report.steps.push(DStep { edge: [a.clone(), b.clone()], dim_envelope: de, dim_target: dx, target_dim: x.dim(), envelope: ok });
        if !ok {
            report.holds = false;
            report.failure = Some(format!("step {i}: dim A^{d} is {de} vs {dx}"));
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::Fp;

    #[test]
    fn simplex_boundary_is_b_decomposable_in_one_step() {
        let c = catalog::simplex_boundary(3);
        let t = find_b_decomposition(&c, DEFAULT_BUDGET).unwrap();
        assert!(t.success());
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].f, vec![1, 3, 3, 1]);
        replay_trace(&c, &t).unwrap();
    }

    #[test]
    fn octahedron_decompositions() {
        let o = catalog::octahedron();
        let b = find_b_decomposition(&o, DEFAULT_BUDGET).unwrap();
        assert!(b.success());
        assert_eq!(b.steps[0].vertex, "1");
        assert_eq!(b.steps[0].f, vec![1, 5, 8, 4]);
        replay_trace(&o, &b).unwrap();
        let a = find_a_decomposition(&o, DEFAULT_BUDGET).unwrap();
        assert!(a.success());
        replay_trace(&o, &a).unwrap();
        replay_trace(&o, &a.as_b()).unwrap();
    }

    #[test]
    fn cone_over_cycle_is_a_decomposable() {
        let c = catalog::cone_over_cycle4();
        let t = find_a_decomposition(&c, DEFAULT_BUDGET).unwrap();
        assert!(t.success(), "{t:?}");
        assert!(t.steps.iter().any(|s| s.link.is_some()));
        replay_trace(&c, &t).unwrap();
    }

    #[test]
    fn gates_and_budget() {
        assert!(matches!(find_b_decomposition(&catalog::wedge_of_spheres(), 10), Err(DecomposeError::Topology(_))));
        let t = find_b_decomposition(&catalog::icosahedron(), 2).unwrap();
        assert_eq!(t.outcome, SearchOutcome::BudgetExceeded);
        let s = find_a_decomposition(&catalog::simplex(3), 10).unwrap();
        assert!(s.success() && s.steps.is_empty());
    }

    #[test]
    fn tampered_trace_is_rejected() {
        let o = catalog::octahedron();
        let mut t = find_b_decomposition(&o, DEFAULT_BUDGET).unwrap();
        t.steps[0].f[1] += 1;
        assert!(replay_trace(&o, &t).is_err());
    }

    #[test]
    fn contractible_edges_examples() {
        let o = catalog::octahedron();
        let r = contractible_edges(&o);
        assert_eq!(r.len(), 12);
        assert!(r.iter().all(EdgeReport::contractible));
        let t = contractible_edges(&catalog::simplex_boundary(3));
        assert_eq!(t.len(), 6);
        assert!(t.iter().all(|e| !e.link_condition));
        assert!(contractible_edges(&catalog::cycle(4)).iter().all(EdgeReport::contractible));
    }

    #[test]
    fn c_order_base_cases() {
        let pts = Complex::from_labeled_facets("pts", &[vec!["a"], vec!["b"]]).unwrap();
        assert!(verify_c_order(&pts, &COrder::new(&["a", "b"])).unwrap().holds());
        let cone = catalog::cone_over_octahedron();
        let r = verify_c_order(&cone, &COrder::new(&["a"])).unwrap();
        assert!(r.covers);
        // the boundary link is the whole octahedron, which needs its own order
        assert_eq!(r.first_violation.as_ref().unwrap().condition, Condition::BoundaryLink);
        let mut order = COrder::new(&["a"]);
        let mut octa = COrder::new(&["1", "2"]);
        octa.nested.insert("2".into(), NestedOrders { boundary: Some(COrder::new(&["3", "4"])), union: None });
        order.nested.insert("a".into(), NestedOrders { boundary: Some(octa), union: None });
        let r = verify_c_order(&cone, &order).unwrap();
        assert!(r.holds(), "{}", r.to_json());
        assert!(matches!(verify_c_order(&cone, &COrder::new(&["1"])), Err(DecomposeError::NotInterior(_))));
    }

    /// A 7×3 grid of squares cut by `\` diagonals; stars of (1,1) and (1,3) meet in one vertex.
    fn grid() -> Complex {
        let id = |r: usize, c: usize| format!("{r}_{c}");
        let mut facets = Vec::new();
        for r in 0..2 {
            for c in 0..6 {
                facets.push(vec![id(r, c), id(r + 1, c), id(r + 1, c + 1)]);
                facets.push(vec![id(r, c), id(r, c + 1), id(r + 1, c + 1)]);
            }
        }
        Complex::from_labeled_facets("grid", &facets).unwrap()
    }

    #[test]
    fn pinched_star_union_violates_submanifold_condition() {
        let g = grid();
        assert!(is_homology_ball(&g));
        let r = verify_c_order(&g, &COrder::new(&["1_1", "1_3", "1_5"])).unwrap();
        let v = r.first_violation.unwrap();
        assert_eq!((v.step, v.condition), (1, Condition::Submanifold));
    }

    #[test]
    fn d_contraction_on_octahedron_skeleton() {
        let o = catalog::octahedron();
        let x = o.skeleton(1);
        let r = verify_d_contraction::<Fp>(&o, &x, &[["1".into(), "3".into()]], 5).unwrap();
        assert_eq!(r.degree, 2);
        assert_eq!(r.steps.len(), 1);
        // h_2 of the octahedron is 3; the contracted 5-vertex sphere has h = (1,2,2,1)
        assert_eq!(r.initial, (3, 3));
        assert_eq!((r.steps[0].dim_envelope, r.steps[0].dim_target), (2, 2));
        assert!(r.holds);
    }
}
