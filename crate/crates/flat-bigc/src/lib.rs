//! Constant bi-generalized Hermitian structures on flat tori, worked mode
//! by mode in exact arithmetic.
//!
//! A model is a commuting pair of generalized complex structures on the
//! doubled torus with a compatible generalized metric. The crate validates
//! such models, grades the spinor space by the joint eigenvalues of the
//! pair, splits each Fourier mode of the exterior differential into its
//! four graded components, and derives everything downstream of that split:
//! double complexes for each anticommuting component pair, the Hermitian
//! inner product with its adjoints and star conjugation formulas, single
//! and joint Laplacians, harmonic decompositions, combined cohomology
//! tables over a box of modes, and the holomorphicity systems cutting out
//! the canonical slices of the four torus.

mod error;
mod harmonic;
mod hodge;
mod laplacian;
mod mode;
mod model;
mod pde;
mod reindex;
mod torus;

pub use error::ModelError;
pub use harmonic::HarmonicReport;
pub use hodge::{AdjointFormulaReport, HodgeForm, StarConvention};
pub use laplacian::Laplacians;
pub use mode::{DeltaKind, ModeComplex};
pub use model::{
    probe_compatible_metric, standard_four_torus, standard_two_torus, FlatBiGcModel, MetricProbe,
};
pub use pde::PdeSliceReport;
pub use reindex::{DeltaPair, ReindexedComplex};
pub use torus::{DegreeEntry, DimEntry, ModeContribution, TheoryTable, TorusReport};
