//! The generalized Hodge star: the Clifford product over an oriented
//! orthonormal frame of the positive eigenspace of a compatible metric.

use exact_linalg::{GaussianRational, Matrix, Subspace};

use crate::error::SpinorError;
use crate::space::SpinorSpace;
use crate::vector::{natural_pairing, pairing_matrix, GeneralizedVector};

/// Which orientation of the positive eigenspace the star is built over,
/// measured by the sign of its projection onto the tangent directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Standard,
    Reversed,
}

/// Minus the Clifford product of the frame vectors, first vector applied
/// first. The frame must be real and orthonormal for the natural pairing;
/// its order fixes the orientation.
pub fn star_from_orthonormal_basis(
    space: &SpinorSpace,
    frame: &[GeneralizedVector],
) -> Result<Matrix, SpinorError> {
    let expected = space.coordinates();
    if frame.len() != expected {
        return Err(SpinorError::FrameNotOrthonormal {
            detail: format!("{} vectors for half-dimension {}", frame.len(), space.half_dim()),
        });
    }
    for (a, e) in frame.iter().enumerate() {
        if !e.is_real() {
            return Err(SpinorError::FrameNotOrthonormal {
                detail: format!("vector {a} has complex coordinates"),
            });
        }
    }
    for a in 0..frame.len() {
        for b in a..frame.len() {
            let value = natural_pairing(&frame[a], &frame[b])?;
            let expected = if a == b {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            };
            if value != expected {
                return Err(SpinorError::FrameNotOrthonormal {
                    detail: format!("vectors {a} and {b} pair to {value}"),
                });
            }
        }
    }
    let mut product = Matrix::identity(space.dim());
    for e in frame {
        product = &space.clifford_matrix(e)? * &product;
    }
    Ok(-&product)
}

/// Builds the star of a compatible metric: validates the metric, extracts
/// and orthonormalizes its positive eigenspace, orients it, and takes the
/// Clifford product.
pub fn hodge_star(
    space: &SpinorSpace,
    metric: &Matrix,
    orientation: Orientation,
) -> Result<Matrix, SpinorError> {
    let half_dim = space.half_dim();
    let ambient = 4 * half_dim;
    if metric.rows() != ambient || metric.cols() != ambient {
        return Err(SpinorError::NotAMetric {
            identity: "acting on the doubled space".to_string(),
        });
    }
    for r in 0..ambient {
        for c in 0..ambient {
            if !metric.get(r, c).is_real() {
                return Err(SpinorError::NotAMetric {
                    identity: "having real entries".to_string(),
                });
            }
        }
    }
    let pairing = pairing_matrix(half_dim);
    if &(&metric.transpose() * &pairing) * metric != pairing {
        return Err(SpinorError::NotAMetric {
            identity: "preserving the natural pairing".to_string(),
        });
    }
    let gram = &pairing * metric;
    if gram.transpose() != gram {
        return Err(SpinorError::NotAMetric {
            identity: "self-adjointness".to_string(),
        });
    }
    // Sylvester's criterion on the pairing-metric Gram form.
    for k in 1..=ambient {
        let minor = gram.submatrix(0..k, 0..k).determinant();
        if !minor.is_positive_real() {
            return Err(SpinorError::MetricNotPositive);
        }
    }

    let positive = Subspace::kernel(&(metric - &Matrix::identity(ambient)));
    if positive.dim() != 2 * half_dim {
        return Err(SpinorError::NotAMetric {
            identity: "splitting off a positive eigenspace of half rank".to_string(),
        });
    }

    // Gram-Schmidt under the natural pairing, which the positivity check
    // has made definite on this eigenspace.
    let mut frame: Vec<GeneralizedVector> = Vec::with_capacity(2 * half_dim);
    for c in 0..positive.dim() {
        let mut w = GeneralizedVector::new(half_dim, positive.basis_column(c))?;
        for u in &frame {
            let coefficient = natural_pairing(&w, u)?;
            w = &w + &u.scale(&-coefficient);
        }
        let norm = natural_pairing(&w, &w)?;
        if !norm.is_positive_real() {
            return Err(SpinorError::MetricNotPositive);
        }
        let root = norm
            .rational_sqrt()
            .ok_or(SpinorError::IrrationalNormalization {
                norm: norm.to_string(),
            })?;
        frame.push(w.scale(&root.inv()));
    }

    // Orient by the determinant of the projection onto tangent directions.
    let projection = Matrix::from_fn(2 * half_dim, 2 * half_dim, |r, i| {
        frame[i].coords()[r].clone()
    });
    let determinant = projection.determinant();
    if determinant.is_zero() {
        return Err(SpinorError::NotAMetric {
            identity: "projecting its eigenspace onto the tangent space".to_string(),
        });
    }
    let is_standard = determinant.is_positive_real();
    let want_standard = orientation == Orientation::Standard;
    if is_standard != want_standard {
        frame[0] = frame[0].scale(&-GaussianRational::one());
    }
    star_from_orthonormal_basis(space, &frame)
}
