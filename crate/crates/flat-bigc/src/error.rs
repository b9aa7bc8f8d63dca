//! Failure modes for model validation and the mode-level reports.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    /// The pair of structures or the metric breaks one of the defining
    /// axioms; every broken axiom is listed.
    #[error("not a bi-generalized Hermitian structure: {}", violations.join("; "))]
    Invalid { violations: Vec<String> },

    /// The textual description of a model could not be read.
    #[error("could not read the model description: {0}")]
    Parse(String),

    /// A mode vector had the wrong number of entries for the torus.
    #[error("the mode must list {expected} integers, found {found}")]
    ModeLength { expected: usize, found: usize },

    /// A graded component of the differential moved a piece somewhere no
    /// component is allowed to reach.
    #[error("a graded component moved ({from_p},{from_q}) to ({to_p},{to_q})")]
    UnexpectedBidegree {
        from_p: i64,
        from_q: i64,
        to_p: i64,
        to_q: i64,
    },

    /// The inner product matrix failed its conjugate symmetry check.
    #[error("the inner product is not Hermitian")]
    NotHermitian,

    /// The inner product failed positivity on one graded piece.
    #[error("the inner product is not positive on the ({p},{q}) slice")]
    NotPositiveOnSlice { p: i64, q: i64 },

    /// The inner product or the volume element it is built from vanished.
    #[error("the inner product is degenerate")]
    Degenerate,

    /// A slice descriptor that the solvability check does not cover.
    #[error("unsupported slice descriptor {descriptor}: {reason}")]
    UnsupportedDescriptor { descriptor: String, reason: String },

    #[error(transparent)]
    Spinor(#[from] spinor_clifford::SpinorError),

    #[error(transparent)]
    Linalg(#[from] exact_linalg::LinalgError),
}
