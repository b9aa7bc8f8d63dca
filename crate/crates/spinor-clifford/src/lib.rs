//! Spinor-space constructions over an exact scalar field: the Clifford
//! action of the doubled space on the exterior algebra, eigenbundles of
//! generalized complex structures and their annihilator lines, the integer
//! gradings one or a commuting pair of structures induce, a top-degree
//! pairing with its sign involutions, and the generalized Hodge star of a
//! compatible metric.
//!
//! Everything is computed over Gaussian rationals, so every claimed
//! decomposition is verified exactly: gradings are checked to be direct
//! sums and re-derived from operator power moments, stars are checked
//! against the orthonormality of the frames that build them.

mod error;
mod grading;
mod pairing;
mod space;
mod star;
mod vector;

pub use error::SpinorError;
pub use grading::{
    canonical_line, grading_operator, i_eigenbundle, joint_grading, u_grading, JointGrading,
    UGrading,
};
pub use pairing::{
    chevalley_matrix, chevalley_pairing, sigma, sigma_matrix, tilde_sigma, tilde_sigma_matrix,
};
pub use space::SpinorSpace;
pub use star::{hodge_star, star_from_orthonormal_basis, Orientation};
pub use vector::{natural_pairing, pairing_matrix, GeneralizedVector};
