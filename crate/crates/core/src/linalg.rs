//! Dense exact linear algebra: matrices, reduced row echelon forms, kernels
//! and subspaces.
//!
//! Pivots are always the first nonzero entry in natural column order. Since
//! the reduced row echelon form of a row space is unique, every subspace has
//! exactly one stored basis regardless of how it was generated.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::Dimension(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Result<Matrix<S>, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::<S>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Result<Matrix<S>, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::Dimension("shape mismatch in addition".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn scale(&self, t: &S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * t.clone()).collect(),
        }
    }

    /// Reduced row echelon form of the row space.
    pub fn row_space(&self) -> Subspace<S> {
        Subspace::spanned_by(self.cols, (0..self.rows).map(|i| self.row(i).to_vec()))
            .expect("rows have matrix width")
    }

    /// Span of the columns, as a subspace of the target.
    pub fn column_space(&self) -> Subspace<S> {
        Subspace::spanned_by(self.rows, (0..self.cols).map(|j| self.column(j)))
            .expect("columns have matrix height")
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `v -= c * w`, touching only the nonzero entries of `w`.
fn axpy_neg<S: Scalar>(v: &mut [S], c: &S, w: &[S]) {
    for (a, b) in v.iter_mut().zip(w) {
        if !b.is_zero() {
            *a = a.clone() - c.clone() * b.clone();
        }
    }
}

/// A linear subspace of `S^ambient`, stored as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<S> {
    ambient: usize,
    /// `(pivot column, row)` pairs sorted by pivot; rows vanish on every other pivot.
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Self::zero(ambient);
        for i in 0..ambient {
            let mut e = vec![S::zero(); ambient];
            e[i] = S::one();
            s.insert(e).expect("unit vector has ambient length");
        }
        s
    }

    pub fn spanned_by<I>(ambient: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<S>>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn basis(&self) -> Vec<Vec<S>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<S> {
        Matrix::from_columns(self.ambient, &self.basis()).expect("basis rows have ambient length")
    }

    /// `v` minus its projection along the pivots; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut out = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if !c.is_zero() {
                axpy_neg(&mut out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<S>) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let mut v = self.reduce(&v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[pivot].inv().expect("pivot is nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if !c.is_zero() {
                axpy_neg(row, &c, &v);
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        Ok(true)
    }

    pub fn is_subspace_of(&self, other: &Subspace<S>) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|(_, r)| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace<S>) -> Result<Subspace<S>, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::Dimension(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        let mut s = self.clone();
        for (_, r) in &other.rows {
            s.insert(r.clone())?;
        }
        Ok(s)
    }

    /// Image of the subspace under a matrix with `ambient` columns.
    pub fn image_under(&self, m: &Matrix<S>) -> Result<Subspace<S>, LinalgError> {
        let mut s = Subspace::zero(m.rows());
        for (_, r) in &self.rows {
            s.insert(m.mul_vec(r)?)?;
        }
        Ok(s)
    }
}

impl<S: fmt::Display> fmt::Debug for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}", self.rows.len(), self.ambient)?;
        for (p, r) in &self.rows {
            let row: Vec<String> = r.iter().map(ToString::to_string).collect();
            write!(f, "; pivot {p}: [{}]", row.join(", "))?;
        }
        write!(f, ")")
    }
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    m.row_space().dim()
}

/// Basis of the right null space `{v : M v = 0}`, one vector per free column.
pub fn kernel_basis<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    let rref = m.row_space();
    let pivots = rref.pivots();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut kernel = Subspace::zero(m.cols());
    for free in (0..m.cols()).filter(|&j| !is_pivot[j]) {
        let mut v = vec![S::zero(); m.cols()];
        v[free] = S::one();
        for (p, row) in &rref.rows {
            if !row[free].is_zero() {
                v[*p] = -row[free].clone();
            }
        }
        kernel.insert(v).expect("kernel vector has column length");
    }
    kernel
}

/// `U ∩ V`, computed from the kernel of `[U^T | -V^T]`.
pub fn subspace_intersect<S: Scalar>(
    u: &Subspace<S>,
    v: &Subspace<S>,
) -> Result<Subspace<S>, LinalgError> {
    if u.ambient() != v.ambient() {
        return Err(LinalgError::Dimension(format!(
            "ambient dimensions {} and {} differ",
            u.ambient(),
            v.ambient()
        )));
    }
    let ub = u.basis();
    let vb = v.basis();
    let mut columns: Vec<Vec<S>> = ub.clone();
    columns.extend(vb.iter().map(|c| c.iter().map(|x| -x.clone()).collect()));
    let stacked = Matrix::from_columns(u.ambient(), &columns)?;
    let kernel = kernel_basis(&stacked);
    let mut out = Subspace::zero(u.ambient());
    for coeffs in kernel.basis() {
        let mut x = vec![S::zero(); u.ambient()];
        for (c, b) in coeffs.iter().zip(&ub) {
            if !c.is_zero() {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi = xi.clone() + c.clone() * bi.clone();
                }
            }
        }
        out.insert(x)?;
    }
    Ok(out)
}

/// Solves `M x = b` for some `x`, with free variables set to zero.
pub fn solve<S: Scalar>(m: &Matrix<S>, b: &[S]) -> Option<Vec<S>> {
    let mut augmented = Matrix::zeros(m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            augmented[(i, j)] = m[(i, j)].clone();
        }
        augmented[(i, m.cols())] = b[i].clone();
    }
    let rref = augmented.row_space();
    let mut x = vec![S::zero(); m.cols()];
    for (p, row) in &rref.rows {
        if *p == m.cols() {
            return None;
        }
        x[*p] = row[m.cols()].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if it exists.
pub fn inverse<S: Scalar>(m: &Matrix<S>) -> Option<Matrix<S>> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![S::zero(); n];
        e[j] = S::one();
        columns.push(solve(m, &e)?);
    }
    let inv = Matrix::from_columns(n, &columns).ok()?;
    if inv.mul(m).ok()? == Matrix::identity(n) {
        Some(inv)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::scalar::{Fp, Rational};

    fn random_matrix<S: Scalar>(rng: &mut ChaCha8Rng, r: usize, c: usize) -> Matrix<S> {
        Matrix::from_fn(r, c, |_, _| S::random(rng))
    }

    fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
        let mut e = vec![S::zero(); n];
        e[i] = S::one();
        e
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::<Fp>::zeros(3, 3)), 0);
        assert_eq!(rank(&Matrix::<Fp>::identity(4)), 4);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a: Matrix<Fp> = random_matrix(&mut rng, 5, 3);
            let b: Matrix<Fp> = random_matrix(&mut rng, 3, 7);
            // Full-rank factors by definition of rank.
            assert_eq!(rank(&a), 3);
            assert_eq!(rank(&b), 3);
            assert_eq!(rank(&a.mul(&b).unwrap()), 3);
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::<Fp>::identity(3)).is_zero());
        let m = Matrix::from_rows(vec![vec![Fp::one(), Fp::one()]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Fp::one(), -Fp::one()]));
    }

    #[test]
    fn kernel_vectors_multiply_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let r = rng.gen_range(1..6);
            let c = rng.gen_range(1..8);
            let inner = rng.gen_range(1..4);
            let m = random_matrix::<Fp>(&mut rng, r, inner)
                .mul(&random_matrix(&mut rng, inner, c))
                .unwrap();
            let k = kernel_basis(&m);
            assert_eq!(rank(&m) + k.dim(), c);
            for v in k.basis() {
                assert!(m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let u = Subspace::<Fp>::spanned_by(4, [unit(4, 0), unit(4, 1)]).unwrap();
        let v = Subspace::<Fp>::spanned_by(4, [unit(4, 2), unit(4, 3)]).unwrap();
        assert!(subspace_intersect(&u, &v).unwrap().is_zero());
        assert_eq!(subspace_intersect(&u, &u).unwrap(), u);
        let w = Subspace::<Fp>::zero(3);
        assert!(subspace_intersect(&u, &w).is_err());
    }

    #[test]
    fn random_intersection_dimension_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let n = rng.gen_range(1..7);
            let a = rng.gen_range(0..=n);
            let b = rng.gen_range(0..=n);
            // Share a common random part so intersections are often nontrivial.
            let shared = rng.gen_range(0..=a.min(b));
            let common: Vec<Vec<Fp>> =
                (0..shared).map(|_| (0..n).map(|_| Fp::random(&mut rng)).collect()).collect();
            let mut ua = common.clone();
            ua.extend((shared..a).map(|_| (0..n).map(|_| Fp::random(&mut rng)).collect()));
            let mut vb = common;
            vb.extend((shared..b).map(|_| (0..n).map(|_| Fp::random(&mut rng)).collect()));
            let u = Subspace::spanned_by(n, ua).unwrap();
            let v = Subspace::spanned_by(n, vb).unwrap();
            let i = subspace_intersect(&u, &v).unwrap();
            let s = u.sum(&v).unwrap();
            assert_eq!(i.dim(), u.dim() + v.dim() - s.dim());
            assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        }
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::<Fp>::spanned_by(
            3,
            [vec![Fp::new(2), Fp::new(4), Fp::new(6)], vec![Fp::new(1), Fp::new(0), Fp::new(1)]],
        )
        .unwrap();
        let b = Subspace::<Fp>::spanned_by(
            3,
            [vec![Fp::new(1), Fp::new(0), Fp::new(1)], vec![Fp::new(3), Fp::new(4), Fp::new(7)]],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pivots(), vec![0, 1]);
    }

    #[test]
    fn inverse_and_solve() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let m: Matrix<Fp> = random_matrix(&mut rng, 4, 4);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(4));
        let singular = Matrix::from_rows(vec![vec![Fp::one(), Fp::one()], vec![Fp::one(), Fp::one()]]).unwrap();
        assert!(inverse(&singular).is_none());
        assert!(solve(&singular, &[Fp::one(), Fp::zero()]).is_none());
    }

    #[test]
    fn prime_and_rational_ranks_agree_on_small_integers() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let r = rng.gen_range(1..6);
            let c = rng.gen_range(1..6);
            let ints: Vec<Vec<i64>> =
                (0..r).map(|_| (0..c).map(|_| rng.gen_range(-2..=2)).collect()).collect();
            let fp = Matrix::from_rows(
                ints.iter().map(|row| row.iter().map(|&x| Fp::from_i64(x)).collect()).collect(),
            )
            .unwrap();
            let q = Matrix::from_rows(
                ints.iter().map(|row| row.iter().map(|&x| Rational::from_i64(x)).collect()).collect(),
            )
            .unwrap();
            assert_eq!(rank(&fp), rank(&q));
        }
    }

    mod props {
        use proptest::prelude::*;

        use super::*;

        fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
            (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
            })
        }

        proptest! {
            #[test]
            fn rank_is_transpose_invariant(rows in small_matrix()) {
                let m = Matrix::from_rows(
                    rows.iter().map(|r| r.iter().map(|&x| Fp::from_i64(x)).collect()).collect(),
                ).unwrap();
                prop_assert_eq!(rank(&m), rank(&m.transpose()));
            }

            #[test]
            fn rank_nullity(rows in small_matrix()) {
                let m = Matrix::from_rows(
                    rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect(),
                ).unwrap();
                prop_assert_eq!(rank(&m) + kernel_basis(&m).dim(), m.cols());
            }
        }
    }
}
