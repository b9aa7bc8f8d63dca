//! One Fourier mode of the exterior differential, split into the four
//! graded components singled out by the joint grading.
//!
//! On a flat torus the exterior derivative acts on the mode with covector k
//! as wedging by i times k. Conjugating into graded coordinates breaks this
//! operator into blocks; each block moves a piece by one of four fixed
//! bidegree shifts, and the four masked operators are the components.

use std::collections::BTreeMap;

use exact_linalg::Matrix;

use crate::error::ModelError;
use crate::model::Frame;
use crate::reindex::{DeltaPair, ReindexedComplex};

/// The four graded components of the differential, named by how they move
/// the two grading levels: the raising component adds one to both, the
/// lowering component trades one for the other, and the barred components
/// are their conjugates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DeltaKind {
    Plus,
    Minus,
    BarPlus,
    BarMinus,
}

impl DeltaKind {
    pub const ALL: [DeltaKind; 4] = [
        DeltaKind::Plus,
        DeltaKind::Minus,
        DeltaKind::BarPlus,
        DeltaKind::BarMinus,
    ];

    /// How the component shifts the joint bidegree.
    pub fn bidegree(self) -> (i64, i64) {
        match self {
            DeltaKind::Plus => (1, 1),
            DeltaKind::Minus => (1, -1),
            DeltaKind::BarPlus => (-1, -1),
            DeltaKind::BarMinus => (-1, 1),
        }
    }

    /// The component paired with this one under complex conjugation.
    pub fn conj(self) -> DeltaKind {
        match self {
            DeltaKind::Plus => DeltaKind::BarPlus,
            DeltaKind::BarPlus => DeltaKind::Plus,
            DeltaKind::Minus => DeltaKind::BarMinus,
            DeltaKind::BarMinus => DeltaKind::Minus,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DeltaKind::Plus => "delta+",
            DeltaKind::Minus => "delta-",
            DeltaKind::BarPlus => "deltabar+",
            DeltaKind::BarMinus => "deltabar-",
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            DeltaKind::Plus => 0,
            DeltaKind::Minus => 1,
            DeltaKind::BarPlus => 2,
            DeltaKind::BarMinus => 3,
        }
    }

    fn of_shift(shift: (i64, i64)) -> Option<DeltaKind> {
        DeltaKind::ALL.into_iter().find(|k| k.bidegree() == shift)
    }
}

/// The differential of one mode with its four components, in both monomial
/// and graded coordinates.
#[derive(Clone, Debug)]
pub struct ModeComplex {
    k: Vec<i64>,
    support: BTreeMap<(i64, i64), usize>,
    bases: BTreeMap<(i64, i64), Matrix>,
    offsets: BTreeMap<(i64, i64), usize>,
    operator: Matrix,
    graded: [Matrix; 4],
    deltas: [Matrix; 4],
    c2: i64,
}

impl ModeComplex {
    pub(crate) fn build(
        frame: &Frame,
        k: Vec<i64>,
        operator: Matrix,
    ) -> Result<ModeComplex, ModelError> {
        let dim = frame.space.dim();
        let conjugated = &(&frame.to_graded * &operator) * &frame.to_monomial;
        let pieces: Vec<((i64, i64), usize, usize)> = frame
            .support
            .iter()
            .map(|(&pq, &d)| (pq, frame.offsets[&pq], d))
            .collect();
        let mut graded = [
            Matrix::zeros(dim, dim),
            Matrix::zeros(dim, dim),
            Matrix::zeros(dim, dim),
            Matrix::zeros(dim, dim),
        ];
        for &((sp, sq), soff, sdim) in &pieces {
            for &((tp, tq), toff, tdim) in &pieces {
                let block = conjugated.submatrix(toff..toff + tdim, soff..soff + sdim);
                if block.is_zero() {
                    continue;
                }
                match DeltaKind::of_shift((tp - sp, tq - sq)) {
                    Some(kind) => {
                        let g = &mut graded[kind.index()];
                        for r in 0..tdim {
                            for c in 0..sdim {
                                g.set(toff + r, soff + c, block.get(r, c).clone());
                            }
                        }
                    }
                    None => {
                        return Err(ModelError::UnexpectedBidegree {
                            from_p: sp,
                            from_q: sq,
                            to_p: tp,
                            to_q: tq,
                        })
                    }
                }
            }
        }
        let deltas = [0, 1, 2, 3].map(|i| &(&frame.to_monomial * &graded[i]) * &frame.to_graded);
        Ok(ModeComplex {
            k,
            support: frame.support.clone(),
            bases: frame.bases.clone(),
            offsets: frame.offsets.clone(),
            operator,
            graded,
            deltas,
            c2: (frame.space.half_dim() % 2) as i64,
        })
    }

    pub fn mode(&self) -> &[i64] {
        &self.k
    }

    /// Dimensions of the graded pieces.
    pub fn support(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.support
    }

    /// Columns spanning one graded piece in monomial coordinates.
    pub fn piece_basis(&self, p: i64, q: i64) -> Option<&Matrix> {
        self.bases.get(&(p, q))
    }

    /// The whole differential of this mode in monomial coordinates.
    pub fn operator(&self) -> &Matrix {
        &self.operator
    }

    /// One graded component in monomial coordinates.
    pub fn delta(&self, kind: DeltaKind) -> &Matrix {
        &self.deltas[kind.index()]
    }

    /// The block of a component out of the piece at (p, q), sized by the
    /// target piece; absent pieces give empty matrices.
    pub fn block(&self, kind: DeltaKind, p: i64, q: i64) -> Matrix {
        let (dp, dq) = kind.bidegree();
        let sdim = self.support.get(&(p, q)).copied().unwrap_or(0);
        let tdim = self.support.get(&(p + dp, q + dq)).copied().unwrap_or(0);
        if sdim == 0 || tdim == 0 {
            return Matrix::zeros(tdim, sdim);
        }
        let soff = self.offsets[&(p, q)];
        let toff = self.offsets[&(p + dp, q + dq)];
        self.graded[kind.index()].submatrix(toff..toff + tdim, soff..soff + sdim)
    }

    /// Rebuilds this mode as a double complex under one choice of commuting
    /// component pair, relabeling the pieces so that the chosen components
    /// become the two unit shifts.
    pub fn reindex(&self, pair: DeltaPair) -> ReindexedComplex {
        ReindexedComplex::build(self, pair, self.c2)
    }
}
