//! Recovery of joint-eigencomponent vectors from iterated operator moments.
//!
//! Given pairwise distinct scalars `beta_0, ..., beta_{m-1}` and the moment
//! vectors `mom_r = sum_q beta_q^r v_q` for `r = 0, ..., m-1` (so `mom_0` is
//! the plain sum and `mom_r` is the image under the r-th power of an operator
//! with those eigenvalues), the `v_q` are determined by a Vandermonde system
//! and can be solved for exactly.

use crate::matrix::Matrix;
use crate::scalar::GaussianRational;
use crate::LinalgError;

/// Solves for the component vectors `v_q`.
///
/// `moments[r]` is the r-th moment vector; all must share one length. Returns
/// one component per eigenvalue, in eigenvalue order. Errors on repeated
/// eigenvalues (the system is singular) or mismatched moment counts/lengths.
pub fn solve_vandermonde(
    eigenvalues: &[GaussianRational],
    moments: &[Vec<GaussianRational>],
) -> Result<Vec<Vec<GaussianRational>>, LinalgError> {
    let m = eigenvalues.len();
    if moments.len() != m {
        return Err(LinalgError::MomentCount {
            eigenvalues: m,
            moments: moments.len(),
        });
    }
    for (i, a) in eigenvalues.iter().enumerate() {
        for (j, b) in eigenvalues.iter().enumerate().skip(i + 1) {
            if a == b {
                return Err(LinalgError::RepeatedEigenvalue { first: i, second: j });
            }
        }
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let len = moments[0].len();
    if let Some(bad) = moments.iter().position(|v| v.len() != len) {
        return Err(LinalgError::RaggedRows {
            expected: len,
            found: moments[bad].len(),
        });
    }

    // A[r][q] = beta_q^r; unknown X is m x len with row q = v_q; rows of the
    // right-hand side are the moments. A is invertible because the
    // eigenvalues are distinct.
    let vandermonde = Matrix::from_fn(m, m, |r, q| {
        let mut power = GaussianRational::one();
        for _ in 0..r {
            power = &power * &eigenvalues[q];
        }
        power
    });
    let rhs = Matrix::from_fn(m, len, |r, c| moments[r][c].clone());
    let solution = vandermonde
        .solve(&rhs)
        .expect("distinct eigenvalues give an invertible Vandermonde matrix");
    Ok((0..m).map(|q| solution.row(q)).collect())
}
