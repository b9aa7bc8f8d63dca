//! Failure modes of the spinor-space constructions.

use exact_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinorError {
    #[error("a generalized vector here needs {expected} coordinates, got {found}")]
    CoordinateCount { expected: usize, found: usize },

    #[error("operands live over different half-dimensions {left} and {right}")]
    HalfDimensionMismatch { left: usize, right: usize },

    #[error("spinor has {found} coordinates, the space needs {expected}")]
    SpinorLength { expected: usize, found: usize },

    #[error("a {found}x{found} matrix does not act on any doubled coordinate space")]
    AmbientDimension { found: usize },

    #[error("not a generalized complex structure: {identity} fails")]
    NotAComplexStructure { identity: String },

    #[error("the +i eigenbundle has dimension {found}, expected {expected}")]
    EigenbundleDimension { expected: usize, found: usize },

    #[error("the +i eigenbundle is not isotropic for the natural pairing")]
    EigenbundleNotIsotropic,

    #[error("the annihilator of the eigenbundle has dimension {found}, expected 1")]
    CanonicalLineDimension { found: usize },

    #[error("grading piece at level {level} has dimension {found}, expected {expected}")]
    GradingPieceDimension {
        level: i64,
        expected: usize,
        found: usize,
    },

    #[error("the grading pieces do not decompose the spinor space")]
    GradingNotADirectSum,

    #[error("the two structures do not commute")]
    NonCommutingStructures,

    #[error("the joint grading failed its moment cross-check: {detail}")]
    GradingCrossCheckFailed { detail: String },

    #[error("not a compatible metric: {identity} fails")]
    NotAMetric { identity: String },

    #[error("the metric pairing is not positive definite")]
    MetricNotPositive,

    #[error("orthonormalization needs a square root of {norm}, which is not rational")]
    IrrationalNormalization { norm: String },

    #[error("not a real orthonormal frame: {detail}")]
    FrameNotOrthonormal { detail: String },

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
