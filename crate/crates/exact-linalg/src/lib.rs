//! Exact linear algebra over the field Q(i) of Gaussian rationals.
//!
//! Everything downstream (cohomology of double complexes, spinor gradings,
//! harmonic decompositions) reduces to rank and span computations that must
//! be exact: a dimension that flips by one changes the mathematical answer.
//! So there are no floats here. Scalars are pairs of arbitrary-precision
//! rationals, matrices are dense with deterministic Gaussian elimination, and
//! subspaces are kept in a canonical echelon form that makes equality,
//! membership, and quotient bookkeeping cheap and reproducible.

mod error;
mod matrix;
mod scalar;
mod subspace;
mod vandermonde;

pub use error::LinalgError;
pub use matrix::Matrix;
pub use scalar::{GaussianRational, ParseScalarError};
pub use subspace::Subspace;
pub use vandermonde::solve_vandermonde;
