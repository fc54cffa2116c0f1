//! Abstract simplicial complexes with optional rational vertex coordinates.
//!
//! A [`Complex`] lives over a *universe* of vertex labels shared with every
//! complex derived from it (stars, links, deletions, restrictions), so vertex
//! indices and coordinates never need remapping between a complex and its
//! subcomplexes. Operations that introduce vertices extend the universe.

mod geometry;
mod homology;
mod ops;
mod vectors;

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use thiserror::Error;

pub use geometry::{ProperError, Realization};
pub use homology::{classify, is_homology_ball, is_homology_sphere, reduced_homology, Topology};
pub use ops::{ContractionRefusal, EdgeContraction};
pub use vectors::{
    dehn_sommerville_check, f_vector, g_vector, h_vector, is_m_sequence, macaulay_bound,
    FaceVector, GVector, HVector,
};

/// Natural label order: numeric labels numerically and before the others, which compare
/// lexicographically.
pub fn label_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        _ => a.cmp(b),
    }
}

/// Vertex index into a complex's label universe.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` repeated inside facet {1}")]
    RepeatedVertex(String, String),
    #[error("duplicate facet {0}")]
    DuplicateFacet(String),
    #[error("facet {0} is contained in facet {1}")]
    ContainedFacet(String, String),
    #[error("face {0} not found")]
    FaceNotFound(String),
    #[error("label `{0}` already in use")]
    LabelClash(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("ragged coordinates: {0}")]
    RaggedCoordinates(String),
    #[error("complexes live over different vertex universes")]
    UniverseMismatch,
    #[error("not a subcomplex: face {0} missing from the ambient complex")]
    NotSubcomplex(String),
    #[error("not a ball: {0}")]
    NotABall(String),
    #[error("result is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("{0}")]
    Invalid(String),
}

/// A simplex, stored as its sorted vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(Vec<Vertex>);

impl Face {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertex(v: Vertex) -> Self {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with(&self, v: Vertex) -> Face {
        let mut f = self.0.clone();
        if let Err(at) = f.binary_search(&v) {
            f.insert(at, v);
        }
        Face(f)
    }

    pub fn without(&self, v: Vertex) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// All subsets, the empty face and the face itself included.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        (0u64..(1u64 << n)).map(move |mask| {
            Face((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect())
        })
    }

    /// All subsets of size `size`.
    pub fn subfaces_of_size(&self, size: usize) -> Vec<Face> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(size);
        fn rec(src: &[Vertex], size: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Face>) {
            if cur.len() == size {
                out.push(Face(cur.clone()));
                return;
            }
            for i in start..src.len() {
                if src.len() - i < size - cur.len() {
                    break;
                }
                cur.push(src[i]);
                rec(src, size, i + 1, cur, out);
                cur.pop();
            }
        }
        if size <= self.0.len() {
            rec(&self.0, size, 0, &mut current, &mut out);
        }
        out
    }
}

impl FromIterator<Vertex> for Face {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Face::new(iter.into_iter().collect())
    }
}

#[derive(Clone, Debug)]
struct FaceIndex {
    by_size: Vec<Vec<Face>>,
    all: HashSet<Face>,
}

/// A finite abstract simplicial complex, stored by its facets.
#[derive(Clone)]
pub struct Complex {
    name: String,
    labels: Arc<Vec<String>>,
    facets: Vec<Face>,
    coords: Option<Arc<Vec<Vec<BigRational>>>>,
    index: OnceLock<FaceIndex>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.labels == other.labels
            && self.facets == other.facets
            && self.coords == other.coords
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|x| self.face_label(x)).collect();
        write!(f, "Complex({:?}: {})", self.name, facets.join(" "))
    }
}

fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl Complex {
    /// Validating constructor: facets must be distinct, non-repeating and mutually non-contained.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        facets: Vec<Vec<Vertex>>,
    ) -> Result<Self, ComplexError> {
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ComplexError::DuplicateLabel(l.clone()));
            }
        }
        let mut normalized: Vec<Face> = Vec::with_capacity(facets.len());
        for raw in facets {
            let names = || {
                format!(
                    "{{{}}}",
                    raw.iter()
                        .map(|&v| labels.get(v).cloned().unwrap_or_else(|| v.to_string()))
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            if let Some(&bad) = raw.iter().find(|&&v| v >= labels.len()) {
                return Err(ComplexError::UnknownVertex(bad.to_string()));
            }
            let face = Face::new(raw.clone());
            if face.len() != raw.len() {
                let mut sorted = raw.clone();
                sorted.sort_unstable();
                let dup = sorted.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]).unwrap();
                return Err(ComplexError::RepeatedVertex(labels[dup].clone(), names()));
            }
            normalized.push(face);
        }
        let label_of = |f: &Face| {
            format!("{{{}}}", f.0.iter().map(|&v| labels[v].as_str()).collect::<Vec<_>>().join(","))
        };
        for (i, a) in normalized.iter().enumerate() {
            for b in &normalized[i + 1..] {
                if a == b {
                    return Err(ComplexError::DuplicateFacet(label_of(a)));
                }
                if a.is_subset(b) {
                    return Err(ComplexError::ContainedFacet(label_of(a), label_of(b)));
                }
                if b.is_subset(a) {
                    return Err(ComplexError::ContainedFacet(label_of(b), label_of(a)));
                }
            }
        }
        normalized.sort();
        Ok(Complex {
            name: name.into(),
            labels: Arc::new(labels),
            facets: normalized,
            coords: None,
            index: OnceLock::new(),
        })
    }

    /// Builds a complex from facets given by label; labels are numbered in order of first appearance.
    pub fn from_labeled_facets<S: AsRef<str>>(
        name: impl Into<String>,
        facets: &[Vec<S>],
    ) -> Result<Self, ComplexError> {
        let mut labels: Vec<String> = Vec::new();
        let mut raw = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut f = Vec::with_capacity(facet.len());
            for l in facet {
                let l = l.as_ref();
                let idx = match labels.iter().position(|x| x == l) {
                    Some(i) => i,
                    None => {
                        labels.push(l.to_string());
                        labels.len() - 1
                    }
                };
                f.push(idx);
            }
            raw.push(f);
        }
        Complex::new(name, labels, raw)
    }

    /// Complex generated by arbitrary faces over an existing universe (non-maximal faces are absorbed).
    pub fn generated_by(
        name: impl Into<String>,
        labels: Arc<Vec<String>>,
        faces: impl IntoIterator<Item = Face>,
    ) -> Self {
        Complex {
            name: name.into(),
            labels,
            facets: maximal_faces(faces.into_iter().collect()),
            coords: None,
            index: OnceLock::new(),
        }
    }

    /// A complex over the same universe and coordinates, generated by `faces`.
    pub fn derive(&self, name: impl Into<String>, faces: impl IntoIterator<Item = Face>) -> Self {
        let mut c = Complex::generated_by(name, self.labels.clone(), faces);
        c.coords = self.coords.clone();
        c
    }

    /// The complex with no faces at all, not even the empty face.
    pub fn void_like(&self) -> Self {
        self.derive("void", std::iter::empty())
    }

    /// The complex `{∅}`, the sphere of dimension -1.
    pub fn empty_face_like(&self) -> Self {
        self.derive("{∅}", std::iter::once(Face::empty()))
    }

    pub fn with_coords(mut self, coords: Vec<Vec<BigRational>>) -> Result<Self, ComplexError> {
        if coords.len() != self.labels.len() {
            return Err(ComplexError::RaggedCoordinates(format!(
                "{} coordinate vectors for {} vertices",
                coords.len(),
                self.labels.len()
            )));
        }
        if let Some(first) = coords.first() {
            let l = first.len();
            if let Some(i) = coords.iter().position(|c| c.len() != l) {
                return Err(ComplexError::RaggedCoordinates(format!(
                    "vertex `{}` has {} coordinates, expected {l}",
                    self.labels[i],
                    coords[i].len()
                )));
            }
        }
        self.coords = Some(Arc::new(coords));
        Ok(self)
    }

    pub fn without_coords(mut self) -> Self {
        self.coords = None;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &Arc<Vec<String>> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn universe_len(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face, ComplexError> {
        labels
            .iter()
            .map(|l| self.vertex(l.as_ref()).ok_or_else(|| ComplexError::UnknownVertex(l.as_ref().into())))
            .collect::<Result<Vec<_>, _>>()
            .map(Face::new)
    }

    pub fn face_label(&self, f: &Face) -> String {
        let names: Vec<String> = f
            .0
            .iter()
            .map(|&v| self.labels.get(v).cloned().unwrap_or_else(|| format!("#{v}")))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn coords(&self) -> Option<&Vec<Vec<BigRational>>> {
        self.coords.as_deref()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// No faces at all.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Void, or `{∅}`.
    pub fn has_no_vertices(&self) -> bool {
        self.facets.iter().all(Face::is_empty)
    }

    /// Dimension; `-1` for both the void complex and `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn index(&self) -> &FaceIndex {
        self.index.get_or_init(|| {
            let mut all = HashSet::new();
            for f in &self.facets {
                for s in f.subfaces() {
                    all.insert(s);
                }
            }
            let max = self.facets.iter().map(Face::len).max().map_or(0, |m| m + 1);
            let mut by_size = vec![Vec::new(); max];
            for f in &all {
                by_size[f.len()].push(f.clone());
            }
            for v in by_size.iter_mut() {
                v.sort();
            }
            FaceIndex { by_size, all }
        })
    }

    /// All faces with `size` vertices, sorted.
    pub fn faces_of_size(&self, size: usize) -> &[Face] {
        self.index().by_size.get(size).map_or(&[], Vec::as_slice)
    }

    /// Faces grouped by size, index 0 holding the empty face when present.
    pub fn faces_by_size(&self) -> &[Vec<Face>] {
        &self.index().by_size
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        self.index().all.contains(f)
    }

    pub fn num_faces(&self) -> usize {
        self.index().all.len()
    }

    pub fn same_universe(&self, other: &Complex) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.same_universe(other) && self.facets.iter().all(|f| other.contains_face(f))
    }

    /// Number of vertices adjacent to `v`.
    pub fn vertex_degree(&self, v: Vertex) -> usize {
        let mut nbrs: HashSet<Vertex> = HashSet::new();
        for f in self.facets.iter().filter(|f| f.contains(v)) {
            nbrs.extend(f.0.iter().copied().filter(|&w| w != v));
        }
        nbrs.len()
    }

    /// Complex generated by the faces of `self` and `other`.
    pub fn union(&self, other: &Complex) -> Result<Complex, ComplexError> {
        if !self.same_universe(other) {
            return Err(ComplexError::UniverseMismatch);
        }
        Ok(self.derive(
            format!("{} ∪ {}", self.name, other.name),
            self.facets.iter().chain(other.facets.iter()).cloned(),
        ))
    }

    /// Faces common to both complexes.
    pub fn intersection(&self, other: &Complex) -> Result<Complex, ComplexError> {
        if !self.same_universe(other) {
            return Err(ComplexError::UniverseMismatch);
        }
        let faces: Vec<Face> = self
            .index()
            .all
            .iter()
            .filter(|f| other.contains_face(f))
            .cloned()
            .collect();
        Ok(self.derive(format!("{} ∩ {}", self.name, other.name), faces))
    }

    /// Fresh label derived from `base` that is not yet in the universe.
    pub fn fresh_label(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        while self.vertex(&candidate).is_some() {
            candidate.push('\'');
        }
        candidate
    }

    pub(crate) fn with_universe(
        &self,
        name: impl Into<String>,
        labels: Vec<String>,
        facets: impl IntoIterator<Item = Face>,
        coords: Option<Vec<Vec<BigRational>>>,
    ) -> Complex {
        let mut c = Complex::generated_by(name, Arc::new(labels), facets);
        c.coords = coords.map(Arc::new);
        c
    }
}

/// A pair `(Δ, Γ)` with `Γ ⊆ Δ`, sharing one vertex universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativePair {
    pub total: Complex,
    pub sub: Complex,
}

impl RelativePair {
    pub fn new(total: Complex, sub: Complex) -> Result<Self, ComplexError> {
        if !total.same_universe(&sub) {
            return Err(ComplexError::UniverseMismatch);
        }
        if let Some(f) = sub.facets().iter().find(|f| !total.contains_face(f)) {
            return Err(ComplexError::NotSubcomplex(sub.face_label(f)));
        }
        Ok(RelativePair { total, sub })
    }

    /// `(Δ, ∅)` with `∅` the void complex.
    pub fn absolute(total: Complex) -> Self {
        let sub = total.void_like();
        RelativePair { total, sub }
    }

    /// `(Δ, ∂Δ)`.
    pub fn with_boundary(total: Complex) -> Result<Self, ComplexError> {
        let sub = total.boundary_complex()?;
        Ok(RelativePair { total, sub })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra_boundary() -> Complex {
        Complex::from_labeled_facets(
            "tetra",
            &[vec!["1", "2", "3"], vec!["1", "2", "4"], vec!["1", "3", "4"], vec!["2", "3", "4"]],
        )
        .unwrap()
    }

    #[test]
    fn face_set_operations() {
        let a = Face::new(vec![3, 1, 2]);
        assert_eq!(a.vertices(), &[1, 2, 3]);
        assert!(Face::new(vec![1, 3]).is_subset(&a));
        assert!(!Face::new(vec![1, 4]).is_subset(&a));
        assert_eq!(a.subfaces().count(), 8);
        assert_eq!(a.subfaces_of_size(2).len(), 3);
        assert_eq!(a.minus(&Face::vertex(2)), Face::new(vec![1, 3]));
        assert_eq!(a.with(0).len(), 4);
    }

    #[test]
    fn constructor_rejects_bad_facets() {
        let dup = Complex::from_labeled_facets("x", &[vec!["1", "2"], vec!["2", "1"]]);
        assert!(matches!(dup, Err(ComplexError::DuplicateFacet(_))));
        let contained = Complex::from_labeled_facets("x", &[vec!["1", "2", "3"], vec!["1", "2"]]);
        assert!(matches!(contained, Err(ComplexError::ContainedFacet(_, _))));
        let repeated = Complex::from_labeled_facets("x", &[vec!["1", "1", "2"]]);
        assert!(matches!(repeated, Err(ComplexError::RepeatedVertex(_, _))));
    }

    #[test]
    fn faces_are_enumerated() {
        let t = tetra_boundary();
        assert_eq!(t.faces_of_size(0).len(), 1);
        assert_eq!(t.faces_of_size(1).len(), 4);
        assert_eq!(t.faces_of_size(2).len(), 6);
        assert_eq!(t.faces_of_size(3).len(), 4);
        assert!(t.faces_of_size(4).is_empty());
        assert_eq!(t.dim(), 2);
        assert!(t.is_pure());
        assert_eq!(t.vertex_degree(0), 3);
    }

    #[test]
    fn void_and_empty_face_complexes() {
        let t = tetra_boundary();
        let void = t.void_like();
        let e = t.empty_face_like();
        assert!(void.is_void() && void.num_faces() == 0);
        assert!(!e.is_void() && e.num_faces() == 1);
        assert_eq!(e.dim(), -1);
        assert!(e.contains_face(&Face::empty()));
        assert!(!void.contains_face(&Face::empty()));
    }

    #[test]
    fn relative_pair_requires_subcomplex() {
        let t = tetra_boundary();
        let other = Complex::from_labeled_facets("y", &[vec!["1", "2"]]).unwrap();
        assert!(RelativePair::new(t.clone(), other).is_err());
        let edge = t.derive("edge", [Face::new(vec![0, 1])]);
        assert!(RelativePair::new(t, edge).is_ok());
    }
}
