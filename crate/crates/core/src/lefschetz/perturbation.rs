//! Generic combinations of two maps with a common source and target.

use rand::Rng;

use crate::linalg::{kernel_basis, subspace_intersect, LinalgError, Matrix, Subspace};
use crate::scalar::Scalar;

use super::combination_scalar;

#[derive(Clone)]
pub struct CombineReport<S> {
    /// `A + tB` for the accepted `t`.
    pub combined: Matrix<S>,
    pub t: S,
    /// `B(ker A) ∩ im A = 0`.
    pub hypothesis: bool,
    /// `ker(A + tB) = ker A ∩ ker B`.
    pub kernel_equal: bool,
    /// Values of `t` rejected before `t` (only when the hypothesis holds).
    pub resamples: usize,
    pub kernel_dim: usize,
    pub expected_kernel_dim: usize,
}

fn same<S: Scalar>(a: &Subspace<S>, b: &Subspace<S>) -> bool {
    a.dim() == b.dim() && a.basis() == b.basis()
}

/// Samples `t ≠ 0` and compares `ker(A + tB)` with `ker A ∩ ker B`.
///
/// When the hypothesis holds, a `t` failing the equality lies on a proper algebraic subset;
/// up to `trials` draws are made before giving up. When it does not hold, the first draw is
/// reported as is: a mismatch there is a counterexample to dropping the hypothesis.
pub fn generic_combine<S: Scalar>(
    a: &Matrix<S>,
    b: &Matrix<S>,
    trials: usize,
    rng: &mut impl Rng,
) -> Result<CombineReport<S>, LinalgError> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(LinalgError::Dimension(format!(
            "{}×{} and {}×{} differ",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let ker_a = kernel_basis(a);
    let ker_b = kernel_basis(b);
    let b_ker_a = ker_a.image_under(b)?;
    let im_a = a.column_space();
    let hypothesis = subspace_intersect(&b_ker_a, &im_a)?.is_zero();
    let expected = subspace_intersect(&ker_a, &ker_b)?;
    let mut resamples = 0;
    loop {
        let t: S = combination_scalar(rng);
        let combined = a.add(&b.scale(&t))?;
        let ker = kernel_basis(&combined);
        let kernel_equal = same(&ker, &expected);
        if kernel_equal || !hypothesis || resamples + 1 >= trials.max(1) {
            return Ok(CombineReport {
                combined,
                t,
                hypothesis,
                kernel_equal,
                resamples,
                kernel_dim: ker.dim(),
                expected_kernel_dim: expected.dim(),
            });
        }
        resamples += 1;
    }
}
