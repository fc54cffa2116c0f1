//! Graded pieces of face rings and relative face modules modulo the linear system of
//! parameters induced by vertex coordinates.
//!
//! Every monomial is first rewritten, modulo `Θ`, as a combination of squarefree face
//! monomials of the same degree (see [`ArtinianRing::normal_form`]). A graded piece
//! `A^k(Δ, Γ)` is then the span of the squarefree monomials `x_τ`, `τ ∈ Δ ∖ Γ`,
//! `|τ| = k`, modulo the normal forms of `Θ · R^{k-1}[Δ, Γ]`. All maps between pieces are
//! explicit matrices on coset representatives.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::Rng;
use thiserror::Error;

use crate::linalg::{solve, Matrix, Subspace};
use crate::scalar::Scalar;
use crate::simplicial::{Complex, ComplexError, Face, ProperError, Realization, RelativePair, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArtinianError {
    #[error(transparent)]
    Improper(#[from] ProperError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("incompatible pairs: {0}")]
    IncompatiblePairs(String),
    #[error("top relative piece has dimension {0}, expected 1 (not a homology ball/sphere, or degenerate coordinates)")]
    NotOneDimensional(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A monomial `Π x_v^{e_v}`, stored as sorted `(vertex, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Vertex, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(mut exps: Vec<(Vertex, u32)>) -> Self {
        exps.sort_unstable();
        let mut out: Vec<(Vertex, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|&(_, e)| e > 0);
        Monomial(out)
    }

    /// The squarefree monomial `x_τ`.
    pub fn squarefree(face: &Face) -> Self {
        Monomial(face.vertices().iter().map(|&v| (v, 1)).collect())
    }

    pub fn exponents(&self) -> &[(Vertex, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Vertex) -> u32 {
        self.0.binary_search_by_key(&v, |&(w, _)| w).map_or(0, |i| self.0[i].1)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn support(&self) -> Face {
        Face::new(self.0.iter().map(|&(v, _)| v).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        Monomial::from_exponents(e)
    }

    pub fn times_var(&self, v: Vertex) -> Monomial {
        self.times(&Monomial(vec![(v, 1)]))
    }

    /// `self / x_v`; `None` if `x_v` does not divide.
    pub fn divide_var(&self, v: Vertex) -> Option<Monomial> {
        let i = self.0.binary_search_by_key(&v, |&(w, _)| w).ok()?;
        let mut e = self.0.clone();
        e[i].1 -= 1;
        if e[i].1 == 0 {
            e.remove(i);
        }
        Some(Monomial(e))
    }

    pub fn display(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(v, e)| if e == 1 { format!("x{}", labels[v]) } else { format!("x{}^{e}", labels[v]) })
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// Graded reverse lexicographic order, vertex order = universe order; `Less` means larger.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| {
        // the monomial with the smaller exponent at the last differing variable is larger
        let mut ia = a.0.iter().rev().peekable();
        let mut ib = b.0.iter().rev().peekable();
        loop {
            match (ia.peek(), ib.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va != vb {
                        // the larger variable index is absent from the other monomial
                        return if va > vb { Ordering::Greater } else { Ordering::Less };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    ia.next();
                    ib.next();
                }
            }
        }
    })
}

fn face_grevlex_cmp(a: &Face, b: &Face) -> Ordering {
    grevlex_cmp(&Monomial::squarefree(a), &Monomial::squarefree(b))
}

/// A linear form `Σ c_v x_v`, dense over the vertex universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm<S>(pub Vec<S>);

impl<S: Scalar> LinearForm<S> {
    pub fn zero(universe: usize) -> Self {
        LinearForm(vec![S::zero(); universe])
    }

    pub fn variable(universe: usize, v: Vertex) -> Self {
        let mut c = vec![S::zero(); universe];
        c[v] = S::one();
        LinearForm(c)
    }

    /// Random coefficients on `support` (all vertices when `None`), zero elsewhere.
    pub fn random(universe: usize, support: Option<&[Vertex]>, rng: &mut impl Rng) -> Self {
        let mut c = vec![S::zero(); universe];
        match support {
            Some(vs) => {
                for &v in vs {
                    c[v] = S::random(rng);
                }
            }
            None => {
                for x in c.iter_mut() {
                    *x = S::random(rng);
                }
            }
        }
        LinearForm(c)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    fn terms(&self) -> impl Iterator<Item = (Vertex, &S)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// A polynomial as a list of `(monomial, coefficient)` terms.
pub type Poly<S> = Vec<(Monomial, S)>;

type Normal<S> = Arc<Vec<(Face, S)>>;

/// `R[Δ] / Θ` for a complex `Δ` with a proper realization in `S^d`.
pub struct ArtinianRing<S> {
    complex: Complex,
    real: Realization<S>,
    cache: Mutex<HashMap<Monomial, Normal<S>>>,
}

impl<S: Scalar> fmt::Debug for ArtinianRing<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArtinianRing({:?} in dimension {})", self.complex.name(), self.real.dim())
    }
}

/// Degree-`k` piece of `A(Δ, Γ)`, presented on squarefree face monomials.
#[derive(Clone)]
pub struct GradedPiece<S> {
    pub degree: usize,
    total: Complex,
    sub: Complex,
    faces: Vec<Face>,
    index: HashMap<Face, usize>,
    relations: Subspace<S>,
    reps: Vec<usize>,
}

impl<S: Scalar> fmt::Debug for GradedPiece<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let reps: Vec<String> = self.representatives().iter().map(|t| self.total.face_label(t)).collect();
        write!(
            f,
            "A^{}({}, {}): {} monomials, reps [{}]",
            self.degree,
            self.total.name(),
            self.sub.name(),
            self.faces.len(),
            reps.join(" ")
        )
    }
}

impl<S: Scalar> GradedPiece<S> {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Squarefree spanning monomials, largest first.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn relations(&self) -> &Subspace<S> {
        &self.relations
    }

    /// Faces whose monomials form the coset basis.
    pub fn representatives(&self) -> Vec<Face> {
        self.reps.iter().map(|&i| self.faces[i].clone()).collect()
    }

    pub fn total(&self) -> &Complex {
        &self.total
    }

    pub fn sub(&self) -> &Complex {
        &self.sub
    }

    /// Coordinates (over the representatives) of a vector in the squarefree span.
    pub fn coordinates(&self, v: &[S]) -> Vec<S> {
        let r = self.relations.reduce(v);
        self.reps.iter().map(|&i| r[i].clone()).collect()
    }

    /// The polynomial `Σ c_i x_{rep_i}` of a coordinate vector.
    pub fn polynomial(&self, coords: &[S]) -> Poly<S> {
        self.reps
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&i, c)| (Monomial::squarefree(&self.faces[i]), c.clone()))
            .collect()
    }
}

/// All degree-`k` monomials of the relative face module `R[Δ, Γ]`, largest first in grevlex.
pub fn monomial_basis(pair: &RelativePair, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for faces in pair.total.faces_by_size().iter().take(k + 1) {
        for sigma in faces {
            if pair.sub.contains_face(sigma) || (sigma.is_empty() && k > 0) {
                continue;
            }
            compositions(sigma.vertices(), k, &mut out);
        }
    }
    out.sort_by(grevlex_cmp);
    out
}

/// Monomials of degree `k` with support exactly `vertices`.
fn compositions(vertices: &[Vertex], k: usize, out: &mut Vec<Monomial>) {
    fn rec(vs: &[Vertex], left: usize, cur: &mut Vec<(Vertex, u32)>, out: &mut Vec<Monomial>) {
        match vs {
            [] => {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
            }
            [v, rest @ ..] => {
                let max = left.saturating_sub(rest.len());
                for e in 1..=max {
                    cur.push((*v, e as u32));
                    rec(rest, left - e, cur, out);
                    cur.pop();
                }
            }
        }
    }
    if vertices.len() <= k {
        rec(vertices, k, &mut Vec::new(), out);
    }
}

impl<S: Scalar> ArtinianRing<S> {
    /// Fails, naming the offending face, when the realization is not proper.
    pub fn new(complex: Complex, real: Realization<S>) -> Result<Self, ArtinianError> {
        real.check_proper(&complex)?;
        Ok(ArtinianRing { complex, real, cache: Mutex::new(HashMap::new()) })
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn realization(&self) -> &Realization<S> {
        &self.real
    }

    /// Number of parameters `θ_1, …, θ_d`.
    pub fn d(&self) -> usize {
        self.real.dim()
    }

    fn link_vertices(&self, sigma: &Face) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self
            .complex
            .facets()
            .iter()
            .filter(|f| sigma.is_subset(f))
            .flat_map(|f| f.vertices().iter().copied().filter(|v| !sigma.contains(*v)))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Squarefree representative of `μ` modulo `Θ`: a combination of `x_τ` with
    /// `τ ⊇ supp μ`, `τ ∈ Δ`, `|τ| = deg μ`.
    ///
    /// For a non-squarefree `μ` with support `σ`, let `v` be its first vertex of exponent
    /// at least two and `λ` a functional with `λ(p_u) = δ_{uv}` on `σ`. Then
    /// `(μ/x_v)·Σ_w λ(p_w) x_w ∈ Θ`, and every term other than `μ` has larger support.
    pub fn normal_form(&self, mu: &Monomial) -> Normal<S> {
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(mu) {
            return hit.clone();
        }
        let sigma = mu.support();
        let result: Vec<(Face, S)> = if !self.complex.contains_face(&sigma) {
            Vec::new()
        } else if mu.is_squarefree() {
            vec![(sigma, S::one())]
        } else {
            let v = mu.0.iter().find(|&&(_, e)| e >= 2).map(|&(v, _)| v).expect("not squarefree");
            let m = mu.divide_var(v).expect("x_v divides");
            let rows: Vec<Vec<S>> = sigma.vertices().iter().map(|&u| self.real.point(u).to_vec()).collect();
            let rhs: Vec<S> = sigma.vertices().iter().map(|&u| if u == v { S::one() } else { S::zero() }).collect();
            let p = Matrix::from_rows(rows).expect("points share one length");
            let lambda = solve(&p, &rhs).expect("proper realization: face points are independent");
            let mut acc: HashMap<Face, S> = HashMap::new();
            for w in self.link_vertices(&sigma) {
                let c = crate::linalg::dot(&lambda, self.real.point(w));
                if c.is_zero() {
                    continue;
                }
                for (f, a) in self.normal_form(&m.times_var(w)).iter() {
                    let e = acc.entry(f.clone()).or_insert_with(S::zero);
                    *e = e.clone() - c.clone() * a.clone();
                }
            }
            let mut v: Vec<(Face, S)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            v.sort_by(|a, b| a.0.cmp(&b.0));
            v
        };
        let result = Arc::new(result);
        self.cache.lock().expect("cache poisoned").insert(mu.clone(), result.clone());
        result
    }

    fn check_sub(&self, sub: &Complex) -> Result<(), ArtinianError> {
        if !sub.same_universe(&self.complex) {
            return Err(ComplexError::UniverseMismatch.into());
        }
        if let Some(f) = sub.facets().iter().find(|f| !self.complex.contains_face(f)) {
            return Err(ComplexError::NotSubcomplex(sub.face_label(f)).into());
        }
        Ok(())
    }

    /// The piece `A^k(Δ, Γ)`; pass the void complex for `Γ = ∅`.
    pub fn piece(&self, sub: &Complex, k: usize) -> Result<GradedPiece<S>, ArtinianError> {
        self.check_sub(sub)?;
        let mut faces: Vec<Face> = self
            .complex
            .faces_of_size(k)
            .iter()
            .filter(|f| !sub.contains_face(f))
            .cloned()
            .collect();
        faces.sort_by(face_grevlex_cmp);
        let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        let mut relations = Subspace::zero(faces.len());
        if k > 0 && !faces.is_empty() {
            let pair = RelativePair { total: self.complex.clone(), sub: sub.clone() };
            'outer: for m in monomial_basis(&pair, k - 1) {
                // normal forms of m·x_v, shared by all θ_j
                let products: Vec<(Vertex, Normal<S>)> = (0..self.complex.universe_len())
                    .filter(|&v| self.complex.contains_face(&m.support().with(v)))
                    .map(|v| (v, self.normal_form(&m.times_var(v))))
                    .collect();
                for j in 0..self.d() {
                    let mut vec = vec![S::zero(); faces.len()];
                    for (v, nf) in &products {
                        let p = self.real.point(*v)[j].clone();
                        if p.is_zero() {
                            continue;
                        }
                        for (f, c) in nf.iter() {
                            let i = index[f];
                            vec[i] = vec[i].clone() + p.clone() * c.clone();
                        }
                    }
                    relations.insert(vec).expect("lengths agree");
                    if relations.dim() == faces.len() {
                        break 'outer;
                    }
                }
            }
        }
        let pivots = relations.pivots();
        let reps = (0..faces.len()).filter(|i| !pivots.contains(i)).collect();
        Ok(GradedPiece { degree: k, total: self.complex.clone(), sub: sub.clone(), faces, index, relations, reps })
    }

    /// `dim A^k(Δ, Γ)` for `k = 0..=d`.
    pub fn dims(&self, sub: &Complex) -> Result<Vec<usize>, ArtinianError> {
        (0..=self.d()).map(|k| self.piece(sub, k).map(|p| p.dim())).collect()
    }

    /// Coordinates in `piece` (which must belong to this ring) of a polynomial.
    ///
    /// Terms supported outside `Δ` vanish; terms supported in `Γ` are not elements of the
    /// module and are rejected.
    pub fn class_of(&self, piece: &GradedPiece<S>, poly: &[(Monomial, S)]) -> Result<Vec<S>, ArtinianError> {
        let mut v = vec![S::zero(); piece.faces.len()];
        for (m, c) in poly {
            if c.is_zero() {
                continue;
            }
            if m.degree() != piece.degree {
                return Err(ArtinianError::DegreeMismatch(format!(
                    "degree-{} term in a degree-{} piece",
                    m.degree(),
                    piece.degree
                )));
            }
            let s = m.support();
            if !self.complex.contains_face(&s) {
                continue;
            }
            if piece.sub.contains_face(&s) {
                return Err(ArtinianError::IncompatiblePairs(format!(
                    "term {} is supported on the subcomplex",
                    m.display(self.complex.labels())
                )));
            }
            for (f, a) in self.normal_form(m).iter() {
                let i = piece.index[f];
                v[i] = v[i].clone() + c.clone() * a.clone();
            }
        }
        Ok(piece.coordinates(&v))
    }

    /// Matrix (rows: `dst` representatives, columns: `src` representatives) of the map
    /// sending `x_τ` to `image(τ)`, reduced in `dst` (a piece of this ring).
    pub fn map_matrix(
        &self,
        src: &GradedPiece<S>,
        dst: &GradedPiece<S>,
        image: impl Fn(&Face) -> Poly<S>,
    ) -> Result<Matrix<S>, ArtinianError> {
        if !src.total.same_universe(&self.complex) {
            return Err(ArtinianError::IncompatiblePairs("different vertex universes".into()));
        }
        let cols: Vec<Vec<S>> = src
            .representatives()
            .iter()
            .map(|t| self.class_of(dst, &image(t)))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_columns(dst.dim(), &cols).expect("column lengths agree"))
    }

    /// `·ℓ : src → dst` with `deg dst = deg src + 1`.
    pub fn multiplication_matrix(
        &self,
        ell: &LinearForm<S>,
        src: &GradedPiece<S>,
        dst: &GradedPiece<S>,
    ) -> Result<Matrix<S>, ArtinianError> {
        if src.degree + 1 != dst.degree {
            return Err(ArtinianError::DegreeMismatch(format!(
                "multiplication by a linear form maps degree {} to {}, not {}",
                src.degree,
                src.degree + 1,
                dst.degree
            )));
        }
        self.map_matrix(src, dst, |t| {
            let m = Monomial::squarefree(t);
            ell.terms().map(|(v, c)| (m.times_var(v), c.clone())).collect()
        })
    }

    /// Map induced by the identity on monomials (inclusion of pairs, restriction to a
    /// subcomplex living in this ring).
    pub fn transfer_matrix(&self, src: &GradedPiece<S>, dst: &GradedPiece<S>) -> Result<Matrix<S>, ArtinianError> {
        if src.degree != dst.degree {
            return Err(ArtinianError::DegreeMismatch(format!("degree {} vs {}", src.degree, dst.degree)));
        }
        self.map_matrix(src, dst, |t| vec![(Monomial::squarefree(t), S::one())])
    }

    /// `·ℓ^m : A^k(src pair) → A^{k+m}(dst pair)`, composing single steps inside the source
    /// pair and applying the inclusion into the destination pair last.
    pub fn power_map_matrix(
        &self,
        ell: &LinearForm<S>,
        k: usize,
        m: usize,
        src_sub: &Complex,
        dst_sub: &Complex,
    ) -> Result<Matrix<S>, ArtinianError> {
        let mut piece = self.piece(src_sub, k)?;
        let mut acc = Matrix::identity(piece.dim());
        for _ in 0..m {
            let next = self.piece(src_sub, piece.degree + 1)?;
            let step = self.multiplication_matrix(ell, &piece, &next)?;
            acc = step.mul(&acc).expect("shapes chain");
            piece = next;
        }
        let dst = self.piece(dst_sub, k + m)?;
        let incl = self.transfer_matrix(&piece, &dst)?;
        Ok(incl.mul(&acc).expect("shapes chain"))
    }

    /// Same map, with the inclusion applied first and the powers taken in the destination pair.
    pub fn power_map_matrix_inclusion_first(
        &self,
        ell: &LinearForm<S>,
        k: usize,
        m: usize,
        src_sub: &Complex,
        dst_sub: &Complex,
    ) -> Result<Matrix<S>, ArtinianError> {
        let src = self.piece(src_sub, k)?;
        let mut piece = self.piece(dst_sub, k)?;
        let mut acc = self.transfer_matrix(&src, &piece)?;
        for _ in 0..m {
            let next = self.piece(dst_sub, piece.degree + 1)?;
            acc = self.multiplication_matrix(ell, &piece, &next)?.mul(&acc).expect("shapes chain");
            piece = next;
        }
        Ok(acc)
    }

    /// Product of two classes, as coordinates in `dst`.
    pub fn multiply_classes(
        &self,
        a_piece: &GradedPiece<S>,
        a: &[S],
        b_piece: &GradedPiece<S>,
        b: &[S],
        dst: &GradedPiece<S>,
    ) -> Result<Vec<S>, ArtinianError> {
        let pa = a_piece.polynomial(a);
        let pb = b_piece.polynomial(b);
        let mut prod: Poly<S> = Vec::with_capacity(pa.len() * pb.len());
        for (ma, ca) in &pa {
            for (mb, cb) in &pb {
                prod.push((ma.times(mb), ca.clone() * cb.clone()));
            }
        }
        self.class_of(dst, &prod)
    }

    /// Normalized functional on the one-dimensional top piece `A^d(Δ, ∂Δ)`.
    pub fn fundamental_class(&self) -> Result<FundamentalClass<S>, ArtinianError> {
        let boundary = self.complex.boundary_complex()?;
        let top = self.piece(&boundary, self.d())?;
        if top.dim() != 1 {
            return Err(ArtinianError::NotOneDimensional(top.dim()));
        }
        // the last spanning monomial with a nonzero class takes the value 1
        let (anchor, scale) = (0..top.faces.len())
            .rev()
            .find_map(|i| {
                let mut e = vec![S::zero(); top.faces.len()];
                e[i] = S::one();
                let c = top.coordinates(&e).pop().expect("one coordinate");
                (!c.is_zero()).then(|| (top.faces[i].clone(), c.inv().expect("nonzero")))
            })
            .expect("a nonzero class exists");
        Ok(FundamentalClass { boundary, piece: top, anchor, scale })
    }

    /// `P[i][j] = ∫ m_i · n_j`, with `m_i` the representatives of `A^k(Δ, ∂Δ)` and `n_j`
    /// those of `A^{d-k}(Δ)`.
    pub fn pairing_matrix(&self, k: usize) -> Result<Matrix<S>, ArtinianError> {
        let fc = self.fundamental_class()?;
        if k > self.d() {
            return Err(ArtinianError::DegreeMismatch(format!("degree {k} exceeds {}", self.d())));
        }
        let rel = self.piece(&fc.boundary, k)?;
        let abs = self.piece(&self.complex.void_like(), self.d() - k)?;
        self.pairing_on(&fc, &rel, &abs)
    }

    /// Pairing matrix between two pieces whose degrees add up to `d`.
    pub fn pairing_on(
        &self,
        fc: &FundamentalClass<S>,
        left: &GradedPiece<S>,
        right: &GradedPiece<S>,
    ) -> Result<Matrix<S>, ArtinianError> {
        if left.degree + right.degree != self.d() {
            return Err(ArtinianError::DegreeMismatch(format!(
                "degrees {} + {} do not add to {}",
                left.degree,
                right.degree,
                self.d()
            )));
        }
        let lr = left.representatives();
        let rr = right.representatives();
        let mut m = Matrix::zeros(lr.len(), rr.len());
        for (i, a) in lr.iter().enumerate() {
            for (j, b) in rr.iter().enumerate() {
                let prod = Monomial::squarefree(a).times(&Monomial::squarefree(b));
                m[(i, j)] = fc.evaluate(self, &[(prod, S::one())])?;
            }
        }
        Ok(m)
    }
}

/// The normalized isomorphism `A^d(Δ, ∂Δ) ≅ S`.
#[derive(Clone)]
pub struct FundamentalClass<S> {
    boundary: Complex,
    piece: GradedPiece<S>,
    anchor: Face,
    scale: S,
}

impl<S: Scalar> fmt::Debug for FundamentalClass<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FundamentalClass(anchor {:?}, scale {})", self.anchor, self.scale)
    }
}

impl<S: Scalar> FundamentalClass<S> {
    pub fn piece(&self) -> &GradedPiece<S> {
        &self.piece
    }

    /// The monomial normalized to 1.
    pub fn anchor(&self) -> &Face {
        &self.anchor
    }

    pub fn evaluate(&self, ring: &ArtinianRing<S>, poly: &[(Monomial, S)]) -> Result<S, ArtinianError> {
        let c = ring.class_of(&self.piece, poly)?;
        Ok(c[0].clone() * self.scale.clone())
    }
}

/// Restriction `A^k(Δ) → A^k(X)` for a subcomplex `X` carrying the same coordinates.
pub fn restriction_matrix<S: Scalar>(
    ring: &ArtinianRing<S>,
    x_ring: &ArtinianRing<S>,
    k: usize,
) -> Result<Matrix<S>, ArtinianError> {
    let x = x_ring.complex();
    if !x.is_subcomplex_of(ring.complex()) {
        let missing = x
            .facets()
            .iter()
            .find(|f| !ring.complex().contains_face(f))
            .map(|f| x.face_label(f))
            .unwrap_or_else(|| "(universe)".into());
        return Err(ComplexError::NotSubcomplex(missing).into());
    }
    let src = ring.piece(&ring.complex().void_like(), k)?;
    let dst = x_ring.piece(&x.void_like(), k)?;
    x_ring.map_matrix(&src, &dst, |t| vec![(Monomial::squarefree(t), S::one())])
}
