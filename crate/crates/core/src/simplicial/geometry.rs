use rand::Rng;
use thiserror::Error;

use super::{Complex, Face, Vertex};
use crate::linalg::{dot, kernel_basis, rank, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProperError {
    #[error("improper coordinates: the points of face {0} are linearly dependent")]
    Improper(String),
    #[error("coordinate shape: {0}")]
    Shape(String),
}

/// Vertex coordinates in `S^dim`, indexed by the vertex universe of a complex.
///
/// The point of vertex `v` is the `v`-th column of the linear system of parameters:
/// `θ_j = Σ_v points[v][j] · x_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization<S> {
    dim: usize,
    points: Vec<Vec<S>>,
}

impl<S: Scalar> Realization<S> {
    pub fn new(dim: usize, points: Vec<Vec<S>>) -> Result<Self, ProperError> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(ProperError::Shape(format!("point of length {} in dimension {dim}", p.len())));
        }
        Ok(Realization { dim, points })
    }

    /// Independent random points, one per universe vertex.
    pub fn sample(count: usize, dim: usize, rng: &mut impl Rng) -> Self {
        let points = (0..count).map(|_| (0..dim).map(|_| S::random(rng)).collect()).collect();
        Realization { dim, points }
    }

    /// Converts the explicit rational coordinates of `c`, if it has any.
    pub fn from_complex(c: &Complex) -> Option<Result<Self, ProperError>> {
        let coords = c.coords()?;
        let dim = coords.first().map_or(0, Vec::len);
        let converted: Option<Vec<Vec<S>>> = coords
            .iter()
            .map(|p| p.iter().map(S::from_rational).collect::<Option<Vec<S>>>())
            .collect();
        Some(match converted {
            Some(points) => Realization::new(dim, points),
            None => Err(ProperError::Shape(
                "a coordinate denominator vanishes in the prime field".into(),
            )),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<S>] {
        &self.points
    }

    pub fn point(&self, v: Vertex) -> &[S] {
        &self.points[v]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The `j`-th coordinate of every point: the coefficients of `θ_j`.
    pub fn theta(&self, j: usize) -> Vec<S> {
        self.points.iter().map(|p| p[j].clone()).collect()
    }

    /// Every face of `c` must map to linearly independent points.
    pub fn check_proper(&self, c: &Complex) -> Result<(), ProperError> {
        if self.points.len() < c.universe_len() {
            return Err(ProperError::Shape(format!(
                "{} points for {} vertices",
                self.points.len(),
                c.universe_len()
            )));
        }
        for f in c.facets() {
            if !self.independent(f) {
                // report the smallest dependent face
                let culprit = c
                    .faces_by_size()
                    .iter()
                    .flatten()
                    .find(|g| g.is_subset(f) && !self.independent(g))
                    .cloned()
                    .unwrap_or_else(|| f.clone());
                return Err(ProperError::Improper(c.face_label(&culprit)));
            }
        }
        Ok(())
    }

    fn independent(&self, f: &Face) -> bool {
        if f.len() > self.dim {
            return false;
        }
        let m = Matrix::from_rows(f.vertices().iter().map(|&v| self.points[v].clone()).collect())
            .unwrap_or_else(|_| Matrix::zeros(0, self.dim));
        rank(&m) == f.len()
    }

    /// Linear projection to `S^{dim - |σ|}` whose kernel is the span of the points of `σ`.
    ///
    /// The new coordinates are the values of an echelon basis of the annihilator of that span.
    pub fn project_away(&self, sigma: &Face) -> Realization<S> {
        let rows: Vec<Vec<S>> = sigma.vertices().iter().map(|&v| self.points[v].clone()).collect();
        let m = if rows.is_empty() {
            Matrix::zeros(0, self.dim)
        } else {
            Matrix::from_rows(rows).expect("points share one length")
        };
        let functionals = kernel_basis(&m).basis();
        let points = self
            .points
            .iter()
            .map(|p| functionals.iter().map(|l| dot(l, p)).collect())
            .collect();
        Realization { dim: functionals.len(), points }
    }

    /// Lifts to `S^{dim+1}` with `p ↦ (p, h)`, appending an apex at `e_{dim+1}`.
    pub fn cone(&self, heights: &[S]) -> Realization<S> {
        let mut points: Vec<Vec<S>> = self
            .points
            .iter()
            .zip(heights)
            .map(|(p, h)| {
                let mut q = p.clone();
                q.push(h.clone());
                q
            })
            .collect();
        let mut apex = vec![S::zero(); self.dim];
        apex.push(S::one());
        points.push(apex);
        Realization { dim: self.dim + 1, points }
    }

    /// Appends one point (for a vertex added to the universe).
    pub fn with_point(&self, p: Vec<S>) -> Realization<S> {
        let mut points = self.points.clone();
        points.push(p);
        Realization { dim: self.dim, points }
    }

    /// Replaces the point of `v`.
    pub fn with_point_at(&self, v: Vertex, p: Vec<S>) -> Realization<S> {
        let mut points = self.points.clone();
        points[v] = p;
        Realization { dim: self.dim, points }
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::scalar::{Fp, Rational};

    fn tri() -> Complex {
        Complex::from_labeled_facets("t", &[vec!["1", "2", "3"]]).unwrap()
    }

    #[test]
    fn sampled_points_are_proper() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = Realization::<Fp>::sample(3, 3, &mut rng);
        assert!(r.check_proper(&tri()).is_ok());
    }

    #[test]
    fn dependent_points_are_named() {
        let pts = vec![
            vec![Rational::from_i64(1), Rational::from_i64(0), Rational::from_i64(0)],
            vec![Rational::from_i64(2), Rational::from_i64(0), Rational::from_i64(0)],
            vec![Rational::from_i64(0), Rational::from_i64(0), Rational::from_i64(1)],
        ];
        let r = Realization::new(3, pts).unwrap();
        assert_eq!(r.check_proper(&tri()), Err(ProperError::Improper("{1,2}".into())));
    }

    #[test]
    fn projection_kills_the_face() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = Realization::<Fp>::sample(3, 3, &mut rng);
        let p = r.project_away(&Face::vertex(0));
        assert_eq!(p.dim(), 2);
        assert!(p.point(0).iter().all(Scalar::is_zero));
        let edge = Complex::from_labeled_facets("e", &[vec!["2", "3"]]).unwrap();
        // universe of `edge` differs, but indices 0,1 ↔ points 1,2 of the projection
        let shifted = Realization::new(2, p.points()[1..].to_vec()).unwrap();
        assert!(shifted.check_proper(&edge).is_ok());
    }

    #[test]
    fn cone_adds_apex() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = Realization::<Fp>::sample(2, 2, &mut rng);
        let c = r.cone(&[Fp::from_i64(5), Fp::from_i64(7)]);
        assert_eq!(c.len(), 3);
        assert_eq!(c.dim(), 3);
        assert_eq!(c.point(2), &[Fp::zero(), Fp::zero(), Fp::one()]);
    }
}
