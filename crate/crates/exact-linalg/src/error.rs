//! Error type shared by the exact linear algebra layer.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ragged rows: expected length {expected}, found {found}")]
    RaggedRows { expected: usize, found: usize },

    #[error("shape mismatch in {op}: left is {}x{}, right is {}x{}", lhs.0, lhs.1, rhs.0, rhs.1)]
    ShapeMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },

    #[error("ambient dimension mismatch in {op}: {lhs} vs {rhs}")]
    AmbientMismatch {
        op: &'static str,
        lhs: usize,
        rhs: usize,
    },

    #[error("{op} requires the second argument to be a subspace of the first")]
    NotASubspace { op: &'static str },

    #[error("repeated eigenvalue at positions {first} and {second} makes the Vandermonde system singular")]
    RepeatedEigenvalue { first: usize, second: usize },

    #[error("got {moments} moment vectors for {eigenvalues} eigenvalues")]
    MomentCount { eigenvalues: usize, moments: usize },
}
