#![allow(dead_code)]

use facering::artinian::ArtinianRing;
use facering::linalg::{inverse, Matrix};
use facering::rng::{purpose, SeedStream};
use facering::scalar::Scalar;
use facering::simplicial::{Complex, Realization};
use rand::Rng;

/// First proper coordinate draw for `c` under `seed`.
pub fn proper_sample<S: Scalar>(c: &Complex, seed: u64) -> Realization<S> {
    let stream = SeedStream::new(seed);
    let d = (c.dim() + 1) as usize;
    (0..8)
        .map(|i| Realization::<S>::sample(c.universe_len(), d, &mut stream.rng(purpose::COORDINATES, i)))
        .find(|r| r.check_proper(c).is_ok())
        .expect("a proper sample")
}

pub fn ring<S: Scalar>(c: &Complex, seed: u64) -> ArtinianRing<S> {
    ArtinianRing::new(c.clone(), proper_sample(c, seed)).unwrap()
}

fn random_matrix<S: Scalar>(rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix<S> {
    Matrix::from_fn(rows, cols, |_, _| S::random(rng))
}

fn random_invertible<S: Scalar>(n: usize, rng: &mut impl Rng) -> (Matrix<S>, Matrix<S>) {
    loop {
        let m = random_matrix(n, n, rng);
        if let Some(inv) = inverse(&m) {
            return (m, inv);
        }
    }
}

/// A pair `(A, B)` of `rows × cols` maps with `B(ker A) ∩ im A = 0`, built from the block form
/// `A = Q [I 0; 0 0] P⁻¹`, `B = Q [X 0; W Z] P⁻¹` in bases adapted to `im A` and `ker A`.
pub fn hypothesis_pair<S: Scalar>(rows: usize, cols: usize, r: usize, rng: &mut impl Rng) -> (Matrix<S>, Matrix<S>) {
    let r = r.min(rows).min(cols);
    let (q, _) = random_invertible::<S>(rows, rng);
    let (_, p_inv) = random_invertible::<S>(cols, rng);
    let block_a = Matrix::from_fn(rows, cols, |i, j| if i == j && i < r { S::one() } else { S::zero() });
    let block_b = Matrix::from_fn(rows, cols, |i, j| {
        // B maps the kernel coordinates (j ≥ r) into the complement of im A (i ≥ r)
        if i < r && j >= r {
            S::zero()
        } else {
            S::random(rng)
        }
    });
    let a = q.mul(&block_a).unwrap().mul(&p_inv).unwrap();
    let b = q.mul(&block_b).unwrap().mul(&p_inv).unwrap();
    (a, b)
}

/// Unconstrained pair with prescribed ranks, so the hypothesis sometimes fails.
pub fn low_rank_pair<S: Scalar>(rows: usize, cols: usize, ra: usize, rb: usize, rng: &mut impl Rng) -> (Matrix<S>, Matrix<S>) {
    let a = random_matrix::<S>(rows, ra, rng).mul(&random_matrix(ra, cols, rng)).unwrap();
    let b = random_matrix::<S>(rows, rb, rng).mul(&random_matrix(rb, cols, rng)).unwrap();
    (a, b)
}
