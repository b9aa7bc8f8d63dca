//! The Hermitian inner product a compatible metric induces on spinors, its
//! adjoints, and the star conjugation formulas for them.
//!
//! The form pairs alpha with beta as the top coefficient of the signed
//! reversal of alpha wedged with the star of the conjugate of beta, divided
//! by the top coefficient of the star of 1 so that the constant spinor has
//! unit norm regardless of the metric's volume.

use exact_linalg::{GaussianRational, Matrix};
use spinor_clifford::{hodge_star, tilde_sigma_matrix, Orientation};

use crate::error::ModelError;
use crate::mode::DeltaKind;
use crate::model::FlatBiGcModel;

/// The inner product data of one model: the star operator, the Gram matrix
/// of the monomial basis, and the pieces needed to take adjoints.
#[derive(Clone, Debug)]
pub struct HodgeForm {
    star: Matrix,
    gram: Matrix,
    conj_gram: Matrix,
    conj_gram_inv: Matrix,
}

impl HodgeForm {
    pub fn star(&self) -> &Matrix {
        &self.star
    }

    /// Gram matrix of the monomial basis: entry (s, t) pairs basis spinor s
    /// against basis spinor t.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// The inner product of two spinors, conjugate linear in the second.
    pub fn inner(&self, a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
        let b_conj: Vec<GaussianRational> = b.iter().map(|x| x.conj()).collect();
        let hb = self.gram.mul_vec(&b_conj);
        a.iter()
            .zip(hb.iter())
            .fold(GaussianRational::zero(), |acc, (x, y)| &acc + &(x * y))
    }

    /// The adjoint of an operator with respect to the form.
    pub fn adjoint(&self, op: &Matrix) -> Matrix {
        &(&self.conj_gram_inv * &op.conj_transpose()) * &self.conj_gram
    }
}

/// One candidate formula for the component adjoints, conjugating by the
/// twisted star that composes the star with coordinate conjugation. The
/// candidates differ in whether the outer factor is the inverse of the
/// twisted star and in the overall sign.
///
/// The twisted star squares to a sign depending on the half dimension, so
/// at any one mode the inverted and plain candidates of equal sign either
/// coincide or differ by that sign; which signed candidate is the true
/// adjoint is an empirical question the report answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarConvention {
    MinusInverted,
    MinusPlain,
    PlusInverted,
    PlusPlain,
}

impl StarConvention {
    pub const ALL: [StarConvention; 4] = [
        StarConvention::MinusInverted,
        StarConvention::MinusPlain,
        StarConvention::PlusInverted,
        StarConvention::PlusPlain,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            StarConvention::MinusInverted => "minus inverted star",
            StarConvention::MinusPlain => "minus plain star",
            StarConvention::PlusInverted => "plus inverted star",
            StarConvention::PlusPlain => "plus plain star",
        }
    }
}

/// Whether each star conjugation candidate reproduces the true adjoints of
/// all four components at one mode.
#[derive(Clone, Copy, Debug)]
pub struct AdjointFormulaReport {
    matches: [bool; 4],
}

impl AdjointFormulaReport {
    pub fn matches(&self, convention: StarConvention) -> bool {
        self.matches[convention as usize]
    }

    /// The conventions that match at this mode, in declaration order.
    pub fn matching(&self) -> Vec<StarConvention> {
        StarConvention::ALL
            .into_iter()
            .filter(|c| self.matches(*c))
            .collect()
    }
}

impl FlatBiGcModel {
    /// Builds the inner product of this model's metric and checks it is
    /// Hermitian and positive on every graded piece.
    pub fn hodge_form(&self) -> Result<HodgeForm, ModelError> {
        let space = &self.frame.space;
        let dim = space.dim();
        let star = hodge_star(space, &self.metric, Orientation::Standard)?;

        let volume = space.top_coefficient(&star.column(0));
        if volume.is_zero() {
            return Err(ModelError::Degenerate);
        }

        let mut tops = Matrix::zeros(dim, dim);
        for s in 0..dim {
            let es = space.basis_spinor(s);
            for t in 0..dim {
                let wedge = space.wedge(&es, &space.basis_spinor(t));
                tops.set(s, t, space.top_coefficient(&wedge));
            }
        }
        let signed = &tilde_sigma_matrix(space) * &tops;
        let gram = (&signed * &star).scale(&volume.inv());

        if gram.conj_transpose() != gram {
            return Err(ModelError::NotHermitian);
        }
        for (&(p, q), basis) in &self.frame.bases {
            let slice_gram = &(&basis.transpose() * &gram) * &basis.conj();
            for k in 1..=slice_gram.rows() {
                if !slice_gram
                    .submatrix(0..k, 0..k)
                    .determinant()
                    .is_positive_real()
                {
                    return Err(ModelError::NotPositiveOnSlice { p, q });
                }
            }
        }

        let conj_gram = gram.conj();
        let conj_gram_inv = conj_gram.inverse().ok_or(ModelError::Degenerate)?;
        Ok(HodgeForm {
            star,
            gram,
            conj_gram,
            conj_gram_inv,
        })
    }

    /// Tests the star conjugation candidates for the component adjoints at
    /// one mode. Conjugation sends the mode to its negative, so each
    /// candidate conjugates the component matrix taken at the opposite
    /// mode.
    pub fn check_adjoint_formulas(&self, k: &[i64]) -> Result<AdjointFormulaReport, ModelError> {
        let form = self.hodge_form()?;
        let here = self.mode_complex(k)?;
        let neg: Vec<i64> = k.iter().map(|x| -x).collect();
        let there = self.mode_complex(&neg)?;

        let star = form.star();
        let star_conj = star.conj();
        let star_inv_conj = star
            .inverse()
            .ok_or(ModelError::Degenerate)?
            .conj();

        let mut matches = [true; 4];
        for kind in DeltaKind::ALL {
            let truth = form.adjoint(here.delta(kind));
            let carried = there.delta(kind).conj();
            let inverted = &(&star_inv_conj * &carried) * &star_conj;
            let plain = &(star * &carried) * &star_conj;
            matches[StarConvention::MinusInverted as usize] &= -&inverted == truth;
            matches[StarConvention::MinusPlain as usize] &= -&plain == truth;
            matches[StarConvention::PlusInverted as usize] &= inverted == truth;
            matches[StarConvention::PlusPlain as usize] &= plain == truth;
        }
        Ok(AdjointFormulaReport { matches })
    }
}
