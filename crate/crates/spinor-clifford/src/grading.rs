//! Eigenbundles of generalized complex structures, their annihilator lines
//! in the spinor space, and the induced integer gradings, singly and for a
//! commuting pair.

use std::collections::BTreeMap;

use exact_linalg::{solve_vandermonde, GaussianRational, Matrix, Subspace};

use crate::error::SpinorError;
use crate::space::SpinorSpace;
use crate::vector::{natural_pairing, pairing_matrix, GeneralizedVector};

/// Half-dimension encoded by a square matrix acting on `V + V*`.
fn half_dim_of(m: &Matrix) -> Result<usize, SpinorError> {
    if m.rows() != m.cols() || m.rows() == 0 || m.rows() % 4 != 0 {
        return Err(SpinorError::AmbientDimension { found: m.rows() });
    }
    Ok(m.rows() / 4)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut value = 1usize;
    for i in 0..k {
        value = value * (n - i) / (i + 1);
    }
    value
}

/// The +i eigenbundle of a generalized complex structure.
///
/// Validates that the matrix squares to minus the identity and preserves the
/// natural pairing, then returns the kernel of `J - iI`, which must have
/// half the ambient dimension and be isotropic.
pub fn i_eigenbundle(structure: &Matrix) -> Result<Subspace, SpinorError> {
    let half_dim = half_dim_of(structure)?;
    let ambient = 4 * half_dim;
    let minus_identity = Matrix::identity(ambient).scale(&-GaussianRational::one());
    if &(structure * structure) != &minus_identity {
        return Err(SpinorError::NotAComplexStructure {
            identity: "squaring to minus the identity".to_string(),
        });
    }
    let pairing = pairing_matrix(half_dim);
    if &(&structure.transpose() * &pairing) * structure != pairing {
        return Err(SpinorError::NotAComplexStructure {
            identity: "preserving the natural pairing".to_string(),
        });
    }
    let i_shift = structure - &Matrix::identity(ambient).scale(&GaussianRational::i());
    let bundle = Subspace::kernel(&i_shift);
    if bundle.dim() != 2 * half_dim {
        return Err(SpinorError::EigenbundleDimension {
            expected: 2 * half_dim,
            found: bundle.dim(),
        });
    }
    for a in 0..bundle.dim() {
        let u = GeneralizedVector::new(half_dim, bundle.basis_column(a))?;
        for b in a..bundle.dim() {
            let v = GeneralizedVector::new(half_dim, bundle.basis_column(b))?;
            if !natural_pairing(&u, &v)?.is_zero() {
                return Err(SpinorError::EigenbundleNotIsotropic);
            }
        }
    }
    Ok(bundle)
}

fn check_space(space: &SpinorSpace, half_dim: usize) -> Result<(), SpinorError> {
    if space.half_dim() != half_dim {
        return Err(SpinorError::HalfDimensionMismatch {
            left: space.half_dim(),
            right: half_dim,
        });
    }
    Ok(())
}

fn annihilator_line(space: &SpinorSpace, bundle: &Subspace) -> Result<Subspace, SpinorError> {
    let half_dim = space.half_dim();
    let mut actions = Vec::with_capacity(bundle.dim());
    for c in 0..bundle.dim() {
        let e = GeneralizedVector::new(half_dim, bundle.basis_column(c))?;
        actions.push(space.clifford_matrix(&e)?);
    }
    let refs: Vec<&Matrix> = actions.iter().collect();
    let stacked = Matrix::vstack(&refs)?;
    let line = Subspace::kernel(&stacked);
    if line.dim() != 1 {
        return Err(SpinorError::CanonicalLineDimension { found: line.dim() });
    }
    Ok(line)
}

/// The line of spinors annihilated by the +i eigenbundle of `structure`.
pub fn canonical_line(space: &SpinorSpace, structure: &Matrix) -> Result<Subspace, SpinorError> {
    check_space(space, half_dim_of(structure)?)?;
    let bundle = i_eigenbundle(structure)?;
    annihilator_line(space, &bundle)
}

/// The integer grading of the spinor space induced by one structure: the
/// top level is the canonical line and each step down applies one more
/// conjugated eigenbundle direction.
#[derive(Debug, Clone)]
pub struct UGrading {
    pieces: BTreeMap<i64, Subspace>,
}

impl UGrading {
    pub fn piece(&self, level: i64) -> Option<&Subspace> {
        self.pieces.get(&level)
    }

    /// Levels and dimensions, in increasing level order.
    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.pieces.iter().map(|(l, s)| (*l, s.dim())).collect()
    }

    pub fn pieces(&self) -> &BTreeMap<i64, Subspace> {
        &self.pieces
    }

    pub fn levels(&self) -> Vec<i64> {
        self.pieces.keys().copied().collect()
    }
}

fn u_grading_from(
    space: &SpinorSpace,
    bundle: &Subspace,
    line: &Subspace,
) -> Result<UGrading, SpinorError> {
    let half_dim = space.half_dim();
    let directions = 2 * half_dim;
    let mut conj_basis = Vec::with_capacity(directions);
    for c in 0..directions {
        let e = GeneralizedVector::new(half_dim, bundle.basis_column(c))?;
        conj_basis.push(e.conj());
    }
    let generator = line.basis_column(0);
    let mut pieces = BTreeMap::new();
    for k in 0..=directions {
        let mut vectors = Vec::new();
        for mask in 0u32..(1 << directions) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut w = generator.clone();
            // Apply the highest index first so the subset acts in a fixed
            // order; the span does not depend on the choice.
            for j in (0..directions).rev() {
                if mask & (1 << j) != 0 {
                    w = space.clifford_act(&conj_basis[j], &w)?;
                }
            }
            vectors.push(w);
        }
        let piece = Subspace::from_vectors(space.dim(), &vectors)?;
        let level = half_dim as i64 - k as i64;
        let expected = binomial(directions, k);
        if piece.dim() != expected {
            return Err(SpinorError::GradingPieceDimension {
                level,
                expected,
                found: piece.dim(),
            });
        }
        pieces.insert(level, piece);
    }
    let bases: Vec<&Matrix> = pieces.values().map(|s| s.basis()).collect();
    if Matrix::hstack(&bases)?.rank() != space.dim() {
        return Err(SpinorError::GradingNotADirectSum);
    }
    Ok(UGrading { pieces })
}

/// The full integer grading induced by one structure.
pub fn u_grading(space: &SpinorSpace, structure: &Matrix) -> Result<UGrading, SpinorError> {
    check_space(space, half_dim_of(structure)?)?;
    let bundle = i_eigenbundle(structure)?;
    let line = annihilator_line(space, &bundle)?;
    u_grading_from(space, &bundle, &line)
}

/// The operator whose eigenspaces are the grading pieces, with eigenvalue
/// `i * level` on the piece at `level`.
pub fn grading_operator(grading: &UGrading) -> Matrix {
    let bases: Vec<&Matrix> = grading.pieces.values().map(|s| s.basis()).collect();
    let change = Matrix::hstack(&bases).expect("grading pieces share one ambient dimension");
    let mut column_levels = Vec::with_capacity(change.cols());
    for (level, piece) in &grading.pieces {
        column_levels.extend(std::iter::repeat(*level).take(piece.dim()));
    }
    let diagonal = Matrix::from_fn(change.cols(), change.cols(), |r, c| {
        if r == c {
            &GaussianRational::from_int(column_levels[r]) * &GaussianRational::i()
        } else {
            GaussianRational::zero()
        }
    });
    let inverse = change
        .inverse()
        .expect("grading pieces were verified to decompose the space");
    &(&change * &diagonal) * &inverse
}

/// The common refinement of the gradings of two commuting structures.
#[derive(Debug, Clone)]
pub struct JointGrading {
    pieces: BTreeMap<(i64, i64), Subspace>,
}

impl JointGrading {
    pub fn piece(&self, p: i64, q: i64) -> Option<&Subspace> {
        self.pieces.get(&(p, q))
    }

    /// Bidegrees and dimensions of the nonzero pieces, ordered by bidegree.
    pub fn dims(&self) -> Vec<((i64, i64), usize)> {
        self.pieces.iter().map(|(pq, s)| (*pq, s.dim())).collect()
    }

    pub fn pieces(&self) -> &BTreeMap<(i64, i64), Subspace> {
        &self.pieces
    }
}

/// Intersects the two gradings of a commuting pair and cross-checks the
/// result by recovering each piece from operator moments.
pub fn joint_grading(
    space: &SpinorSpace,
    first: &Matrix,
    second: &Matrix,
) -> Result<JointGrading, SpinorError> {
    let half_first = half_dim_of(first)?;
    let half_second = half_dim_of(second)?;
    if half_first != half_second {
        return Err(SpinorError::HalfDimensionMismatch {
            left: half_first,
            right: half_second,
        });
    }
    check_space(space, half_first)?;
    if first * second != second * first {
        return Err(SpinorError::NonCommutingStructures);
    }
    let grading_first = u_grading(space, first)?;
    let grading_second = u_grading(space, second)?;
    let mut pieces = BTreeMap::new();
    let mut total = 0;
    for (p, up) in grading_first.pieces() {
        for (q, uq) in grading_second.pieces() {
            let piece = up.intersect(uq)?;
            if !piece.is_zero() {
                total += piece.dim();
                pieces.insert((*p, *q), piece);
            }
        }
    }
    if total != space.dim() {
        return Err(SpinorError::GradingNotADirectSum);
    }
    let joint = JointGrading { pieces };
    moment_cross_check(space, &grading_first, &grading_second, &joint)?;
    Ok(joint)
}

/// Splits `vector` into eigencomponents of `operator` by solving the
/// Vandermonde system of its power moments.
fn eigencomponents(
    operator: &Matrix,
    levels: &[i64],
    vector: &[GaussianRational],
) -> Result<Vec<Vec<GaussianRational>>, SpinorError> {
    let eigenvalues: Vec<GaussianRational> = levels
        .iter()
        .map(|l| &GaussianRational::from_int(*l) * &GaussianRational::i())
        .collect();
    let mut moments = Vec::with_capacity(levels.len());
    let mut current = vector.to_vec();
    for _ in 0..levels.len() {
        moments.push(current.clone());
        current = operator.mul_vec(&current);
    }
    Ok(solve_vandermonde(&eigenvalues, &moments)?)
}

fn moment_cross_check(
    space: &SpinorSpace,
    grading_first: &UGrading,
    grading_second: &UGrading,
    joint: &JointGrading,
) -> Result<(), SpinorError> {
    let op_first = grading_operator(grading_first);
    let op_second = grading_operator(grading_second);

    // Every claimed piece must consist of joint eigenvectors.
    for ((p, q), piece) in joint.pieces() {
        for c in 0..piece.dim() {
            let v = piece.basis_column(c);
            for (op, level) in [(&op_first, *p), (&op_second, *q)] {
                let image = op.mul_vec(&v);
                let eigenvalue = &GaussianRational::from_int(level) * &GaussianRational::i();
                let scaled: Vec<GaussianRational> =
                    v.iter().map(|x| x * &eigenvalue).collect();
                if image != scaled {
                    return Err(SpinorError::GradingCrossCheckFailed {
                        detail: format!(
                            "piece at ({p}, {q}) is not in the claimed eigenspace"
                        ),
                    });
                }
            }
        }
    }

    // Independently decompose every basis spinor through power moments and
    // compare the recovered components against the claimed pieces.
    let levels_first = grading_first.levels();
    let levels_second = grading_second.levels();
    let mut collected: BTreeMap<(i64, i64), Vec<Vec<GaussianRational>>> = BTreeMap::new();
    for s in 0..space.dim() {
        let by_second = eigencomponents(&op_second, &levels_second, &space.basis_spinor(s))?;
        for (qi, part) in by_second.iter().enumerate() {
            if part.iter().all(|c| c.is_zero()) {
                continue;
            }
            let q = levels_second[qi];
            let by_first = eigencomponents(&op_first, &levels_first, part)?;
            for (pi, component) in by_first.iter().enumerate() {
                if component.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let p = levels_first[pi];
                match joint.piece(p, q) {
                    None => {
                        return Err(SpinorError::GradingCrossCheckFailed {
                            detail: format!(
                                "a moment component appears at ({p}, {q}) outside the \
                                 claimed support"
                            ),
                        });
                    }
                    Some(piece) if !piece.contains_vector(component) => {
                        return Err(SpinorError::GradingCrossCheckFailed {
                            detail: format!(
                                "a moment component at ({p}, {q}) lies outside the \
                                 claimed piece"
                            ),
                        });
                    }
                    Some(_) => {}
                }
                collected.entry((p, q)).or_default().push(component.clone());
            }
        }
    }
    for ((p, q), piece) in joint.pieces() {
        let vectors = collected.remove(&(*p, *q)).unwrap_or_default();
        let span = Subspace::from_vectors(space.dim(), &vectors)?;
        if span != *piece {
            return Err(SpinorError::GradingCrossCheckFailed {
                detail: format!("moment components span a proper subspace at ({p}, {q})"),
            });
        }
    }
    Ok(())
}
