//! Finite double complexes over the Gaussian rationals and their five
//! cohomology theories.
//!
//! A double complex here is a finitely supported grid of exact vector
//! spaces with anticommuting differentials d' (bidegree (1,0)) and d''
//! (bidegree (0,1)). The crate computes de Rham cohomology of the total
//! complex, row and column cohomology, Bott-Chern and Aeppli cohomology,
//! the twelve lattice invariants of the two inclusion towers, the natural
//! comparison maps between the theories, and the d'd''-lemma decision
//! procedure, plus generators for the elementary shapes (dots, squares,
//! zigzags) that every bounded double complex decomposes into.

mod cohomology;
mod complex;
mod generate;
mod lattice;
mod maps;
mod theorems;

pub use cohomology::{
    CohomologyGroup, CohomologyReport, GradedDims, RepresentativeTable, Theory,
};
pub use complex::{Bidegree, DoubleComplex, TotalComplex, Violation};
pub use generate::{
    direct_sum, generate_elementary, random_complex, scramble_basis, CorpusKind,
    ElementaryShape, ZigzagOrientation,
};
pub use lattice::LatticeInvariants;
pub use maps::{MapReport, NaturalMaps};
pub use theorems::TheoremEquivalences;
