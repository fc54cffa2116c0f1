use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use thiserror::Error;

use super::{Complex, ComplexError, Face, RelativePair, Vertex};

/// Outcome of a successful edge contraction.
#[derive(Clone, Debug)]
pub struct EdgeContraction {
    pub complex: Complex,
    /// Label of the merged vertex (the first endpoint's label).
    pub kept: String,
    pub removed: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContractionRefusal {
    #[error("{0} is not an edge of the complex")]
    NotAnEdge(String),
    #[error("link condition fails: {face} lies in Lk u ∩ Lk v but not in Lk uv")]
    LinkCondition { face: String },
}

fn small_positive(rng: &mut impl Rng) -> BigRational {
    BigRational::from_integer(BigInt::from(rng.gen_range(1..=9)))
}

impl Complex {
    fn require_face(&self, sigma: &Face) -> Result<(), ComplexError> {
        if self.contains_face(sigma) {
            Ok(())
        } else {
            Err(ComplexError::FaceNotFound(self.face_label(sigma)))
        }
    }

    /// Closed star: faces of facets containing `sigma`.
    pub fn star(&self, sigma: &Face) -> Result<Complex, ComplexError> {
        self.require_face(sigma)?;
        Ok(self.derive(
            format!("st {}", self.face_label(sigma)),
            self.facets().iter().filter(|f| sigma.is_subset(f)).cloned(),
        ))
    }

    pub fn link(&self, sigma: &Face) -> Result<Complex, ComplexError> {
        self.require_face(sigma)?;
        Ok(self.derive(
            format!("lk {}", self.face_label(sigma)),
            self.facets().iter().filter(|f| sigma.is_subset(f)).map(|f| f.minus(sigma)),
        ))
    }

    /// Faces not containing `sigma`.
    pub fn deletion(&self, sigma: &Face) -> Complex {
        let mut gens = Vec::new();
        for f in self.facets() {
            if sigma.is_subset(f) {
                gens.extend(sigma.vertices().iter().map(|&u| f.without(u)));
            } else {
                gens.push(f.clone());
            }
        }
        self.derive(format!("{} - {}", self.name(), self.face_label(sigma)), gens)
    }

    /// `(St σ, St σ - σ)`.
    pub fn star_pair(&self, sigma: &Face) -> Result<RelativePair, ComplexError> {
        let st = self.star(sigma)?;
        let sub = st.deletion(sigma);
        Ok(RelativePair { total: st, sub })
    }

    /// Removes the given vertices together with every face touching them.
    pub fn delete_vertices(&self, vertices: &[Vertex]) -> Complex {
        let drop: HashSet<Vertex> = vertices.iter().copied().collect();
        let faces: Vec<Face> = self
            .facets()
            .iter()
            .map(|f| f.vertices().iter().copied().filter(|v| !drop.contains(v)).collect())
            .collect();
        self.derive(self.name().to_string(), faces)
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Complex {
        let size = (k + 1).max(0) as usize;
        let mut faces = Vec::new();
        for f in self.facets() {
            if f.len() <= size {
                faces.push(f.clone());
            } else {
                faces.extend(f.subfaces_of_size(size));
            }
        }
        self.derive(format!("{}^({k})", self.name()), faces)
    }

    /// Complex generated by the ridges lying in exactly one facet.
    pub fn boundary_complex(&self) -> Result<Complex, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let mut count: BTreeMap<Face, usize> = BTreeMap::new();
        for f in self.facets().iter().filter(|f| !f.is_empty()) {
            for &v in f.vertices() {
                *count.entry(f.without(v)).or_default() += 1;
            }
        }
        Ok(self.derive(
            format!("∂{}", self.name()),
            count.into_iter().filter(|&(_, c)| c == 1).map(|(f, _)| f),
        ))
    }

    /// Vertices of `self` not on the boundary complex.
    pub fn interior_vertices(&self) -> Result<Vec<Vertex>, ComplexError> {
        let bd = self.boundary_complex()?;
        let on_bd: HashSet<Vertex> = bd.vertices().into_iter().collect();
        Ok(self.vertices().into_iter().filter(|v| !on_bd.contains(v)).collect())
    }

    /// Restricts the universe to the vertices actually used, preserving their order.
    pub fn compacted(&self) -> Complex {
        let used = self.vertices();
        let remap: BTreeMap<Vertex, Vertex> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = used.iter().map(|&v| self.label(v).to_string()).collect();
        let coords = self.coords().map(|c| used.iter().map(|&v| c[v].clone()).collect());
        let facets = self.facets().iter().map(|f| f.vertices().iter().map(|v| remap[v]).collect());
        self.with_universe(self.name().to_string(), labels, facets, coords)
    }

    /// Cone with a fresh apex; coordinates `(p, 0)` and apex `e_{l+1}`.
    pub fn cone(&self, apex: &str) -> Result<Complex, ComplexError> {
        if self.vertex(apex).is_some() {
            return Err(ComplexError::LabelClash(apex.to_string()));
        }
        let n = self.universe_len();
        let mut labels: Vec<String> = self.labels().to_vec();
        labels.push(apex.to_string());
        let coords = self.coords().map(|c| extend_coords(c, &[1]));
        Ok(self.with_universe(
            format!("cone {}", self.name()),
            labels,
            self.facets().iter().map(|f| f.with(n)),
            coords,
        ))
    }

    /// Two cones glued along `self`; apexes at `±e_{l+1}`.
    pub fn suspension(&self, north: &str, south: &str) -> Result<Complex, ComplexError> {
        for l in [north, south] {
            if self.vertex(l).is_some() {
                return Err(ComplexError::LabelClash(l.to_string()));
            }
        }
        if north == south {
            return Err(ComplexError::LabelClash(north.to_string()));
        }
        let n = self.universe_len();
        let mut labels: Vec<String> = self.labels().to_vec();
        labels.push(north.to_string());
        labels.push(south.to_string());
        let coords = self.coords().map(|c| extend_coords(c, &[1, -1]));
        let facets = self.facets().iter().flat_map(|f| [f.with(n), f.with(n + 1)]);
        Ok(self.with_universe(format!("susp {}", self.name()), labels, facets, coords))
    }

    /// Stellar subdivision at `sigma` (a face with at least two vertices).
    ///
    /// A new vertex `center` replaces `sigma`; with coordinates it lands at a random
    /// positive combination of the points of `sigma`.
    pub fn stellar_subdivision(
        &self,
        sigma: &Face,
        center: &str,
        rng: &mut impl Rng,
    ) -> Result<Complex, ComplexError> {
        self.require_face(sigma)?;
        if sigma.len() < 2 {
            return Err(ComplexError::Invalid(
                "stellar subdivision at a vertex (or the empty face) is not a subdivision".into(),
            ));
        }
        if self.vertex(center).is_some() {
            return Err(ComplexError::LabelClash(center.to_string()));
        }
        let c = self.universe_len();
        let mut labels: Vec<String> = self.labels().to_vec();
        labels.push(center.to_string());
        let mut facets = Vec::new();
        for f in self.facets() {
            if sigma.is_subset(f) {
                facets.extend(sigma.vertices().iter().map(|&u| f.without(u).with(c)));
            } else {
                facets.push(f.clone());
            }
        }
        let coords = self.coords().map(|pts| {
            let l = pts.first().map_or(0, Vec::len);
            let mut p = vec![BigRational::zero(); l];
            for &u in sigma.vertices() {
                let w = small_positive(rng);
                for (pi, x) in p.iter_mut().zip(&pts[u]) {
                    *pi += &w * x;
                }
            }
            let mut all = pts.clone();
            all.push(p);
            all
        });
        Ok(self.with_universe(
            format!("{} * {}", self.name(), self.face_label(sigma)),
            labels,
            facets,
            coords,
        ))
    }

    /// First face of `Lk u ∩ Lk v` missing from `Lk uv`, if any.
    pub fn link_condition_violation(&self, edge: &Face) -> Result<Option<Face>, ComplexError> {
        if edge.len() != 2 || !self.contains_face(edge) {
            return Err(ComplexError::FaceNotFound(self.face_label(edge)));
        }
        let (u, v) = (edge.vertices()[0], edge.vertices()[1]);
        let lu = self.link(&Face::vertex(u))?;
        let lv = self.link(&Face::vertex(v))?;
        let le = self.link(edge)?;
        for faces in lu.faces_by_size() {
            for f in faces {
                if lv.contains_face(f) && !le.contains_face(f) {
                    return Ok(Some(f.clone()));
                }
            }
        }
        Ok(None)
    }

    /// Identifies the endpoints of `edge` when the link condition holds.
    ///
    /// The merged vertex keeps the first endpoint's label; with coordinates it is
    /// placed at a random combination `a·p_u + b·p_v` with nonzero `a`, `b`.
    pub fn contract_edge(
        &self,
        edge: &Face,
        rng: &mut impl Rng,
    ) -> Result<EdgeContraction, ContractionRefusal> {
        let violation = self
            .link_condition_violation(edge)
            .map_err(|_| ContractionRefusal::NotAnEdge(self.face_label(edge)))?;
        if let Some(face) = violation {
            return Err(ContractionRefusal::LinkCondition { face: self.face_label(&face) });
        }
        let (u, v) = (edge.vertices()[0], edge.vertices()[1]);
        let facets: Vec<Face> = self
            .facets()
            .iter()
            .map(|f| if f.contains(v) { f.without(v).with(u) } else { f.clone() })
            .collect();
        let mut merged = self.derive(
            format!("{} / {}", self.name(), self.face_label(edge)),
            facets,
        );
        if let Some(pts) = self.coords() {
            let a = small_positive(rng);
            let b = small_positive(rng);
            let mut pts = pts.clone();
            pts[u] = pts[u].iter().zip(&pts[v]).map(|(x, y)| &a * x + &b * y).collect();
            merged = merged
                .with_coords(pts)
                .expect("coordinate shape is preserved");
        }
        Ok(EdgeContraction {
            complex: merged.compacted(),
            kept: self.label(u).to_string(),
            removed: self.label(v).to_string(),
        })
    }

    /// Two copies of a ball glued along the boundary; interior vertices get primed twins.
    ///
    /// Refused when the boundary is empty, or when some interior face has all of its
    /// vertices on the boundary (its two copies would coincide).
    pub fn double(&self) -> Result<Complex, ComplexError> {
        let bd = self.boundary_complex()?;
        if bd.is_void() {
            return Err(ComplexError::NotABall("boundary is empty".into()));
        }
        let on_bd: HashSet<Vertex> = bd.vertices().into_iter().collect();
        for faces in self.faces_by_size().iter().skip(1) {
            for f in faces {
                if !bd.contains_face(f) && f.vertices().iter().all(|v| on_bd.contains(v)) {
                    return Err(ComplexError::NotSimplicial(format!(
                        "interior face {} has all vertices on the boundary",
                        self.face_label(f)
                    )));
                }
            }
        }
        let mut labels: Vec<String> = self.labels().to_vec();
        let mut twin: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for v in self.vertices().into_iter().filter(|v| !on_bd.contains(v)) {
            let mut name = format!("{}'", self.label(v));
            while labels.contains(&name) {
                name.push('\'');
            }
            twin.insert(v, labels.len());
            labels.push(name);
        }
        let mut facets: Vec<Face> = self.facets().to_vec();
        facets.extend(
            self.facets()
                .iter()
                .map(|f| f.vertices().iter().map(|v| *twin.get(v).unwrap_or(v)).collect()),
        );
        Ok(self.with_universe(format!("double {}", self.name()), labels, facets, None))
    }
}

fn extend_coords(c: &[Vec<BigRational>], new_points: &[i64]) -> Vec<Vec<BigRational>> {
    let mut out: Vec<Vec<BigRational>> = c
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(BigRational::zero());
            q
        })
        .collect();
    let l = c.first().map_or(0, Vec::len);
    for &s in new_points {
        let mut q = vec![BigRational::zero(); l];
        q.push(BigRational::from_integer(BigInt::from(s)));
        out.push(q);
    }
    out
}
