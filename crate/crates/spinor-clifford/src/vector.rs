//! Elements of the doubled space `V + V*` and their natural pairing.

use exact_linalg::{GaussianRational, Matrix};

use crate::error::SpinorError;

/// A vector in the sum of a tangent space of dimension `2 * half_dim` and
/// its dual. The first half of the coordinates are tangent components, the
/// second half are form components, in matching coordinate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedVector {
    half_dim: usize,
    coords: Vec<GaussianRational>,
}

impl GeneralizedVector {
    /// Wraps `coords` as a generalized vector over half-dimension `half_dim`.
    pub fn new(half_dim: usize, coords: Vec<GaussianRational>) -> Result<Self, SpinorError> {
        let expected = 4 * half_dim;
        if coords.len() != expected {
            return Err(SpinorError::CoordinateCount {
                expected,
                found: coords.len(),
            });
        }
        Ok(GeneralizedVector { half_dim, coords })
    }

    /// The tangent coordinate direction with index `j`.
    pub fn tangent_unit(half_dim: usize, j: usize) -> Self {
        assert!(j < 2 * half_dim, "tangent index out of range");
        let mut coords = vec![GaussianRational::zero(); 4 * half_dim];
        coords[j] = GaussianRational::one();
        GeneralizedVector { half_dim, coords }
    }

    /// The coordinate one-form with index `j`.
    pub fn form_unit(half_dim: usize, j: usize) -> Self {
        assert!(j < 2 * half_dim, "form index out of range");
        let mut coords = vec![GaussianRational::zero(); 4 * half_dim];
        coords[2 * half_dim + j] = GaussianRational::one();
        GeneralizedVector { half_dim, coords }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.coords
    }

    /// Tangent component along coordinate `j`.
    pub fn tangent_component(&self, j: usize) -> &GaussianRational {
        &self.coords[j]
    }

    /// Form component along coordinate `j`.
    pub fn form_component(&self, j: usize) -> &GaussianRational {
        &self.coords[2 * self.half_dim + j]
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        GeneralizedVector {
            half_dim: self.half_dim,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        GeneralizedVector {
            half_dim: self.half_dim,
            coords: self.coords.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().all(|c| c.is_real())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl std::ops::Add<&GeneralizedVector> for &GeneralizedVector {
    type Output = GeneralizedVector;

    fn add(self, rhs: &GeneralizedVector) -> GeneralizedVector {
        assert_eq!(self.half_dim, rhs.half_dim, "half-dimension mismatch");
        GeneralizedVector {
            half_dim: self.half_dim,
            coords: self
                .coords
                .iter()
                .zip(rhs.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// The symmetric pairing `<X + xi, Y + eta> = (xi(Y) + eta(X)) / 2` that
/// makes tangent and form directions mutually dual and each half isotropic.
pub fn natural_pairing(
    u: &GeneralizedVector,
    v: &GeneralizedVector,
) -> Result<GaussianRational, SpinorError> {
    if u.half_dim() != v.half_dim() {
        return Err(SpinorError::HalfDimensionMismatch {
            left: u.half_dim(),
            right: v.half_dim(),
        });
    }
    let mut sum = GaussianRational::zero();
    for j in 0..2 * u.half_dim() {
        sum += &(u.tangent_component(j) * v.form_component(j));
        sum += &(u.form_component(j) * v.tangent_component(j));
    }
    Ok(&sum * &GaussianRational::from_int(2).inv())
}

/// The Gram matrix of the natural pairing in coordinate order.
pub fn pairing_matrix(half_dim: usize) -> Matrix {
    let half = GaussianRational::from_int(2).inv();
    Matrix::from_fn(4 * half_dim, 4 * half_dim, |r, c| {
        if r + 2 * half_dim == c || c + 2 * half_dim == r {
            half.clone()
        } else {
            GaussianRational::zero()
        }
    })
}
