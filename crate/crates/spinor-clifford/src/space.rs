//! The exterior algebra of coordinate forms, viewed as the spinor module of
//! the doubled space: tangent directions act by contraction, forms by
//! wedging.

use exact_linalg::{GaussianRational, Matrix};

use crate::error::SpinorError;
use crate::vector::GeneralizedVector;

/// Spinors over `2 * half_dim` coordinates. A spinor is a coefficient vector
/// over the basis of wedge monomials, which are ordered lexicographically by
/// their sorted index lists (so the empty monomial comes first and each
/// monomial precedes its extensions).
#[derive(Clone, Debug)]
pub struct SpinorSpace {
    half_dim: usize,
    masks: Vec<u32>,
    index_by_mask: Vec<usize>,
}

fn emit_masks(cur: u32, start: usize, coords: usize, out: &mut Vec<u32>) {
    out.push(cur);
    for j in start..coords {
        emit_masks(cur | (1 << j), j + 1, coords, out);
    }
}

/// Parity of the number of index pairs `(s, t)` with `s` in `left`, `t` in
/// `right`, and `s > t`: the sign picked up when merging two sorted wedge
/// monomials into one.
pub(crate) fn merge_parity(left: u32, right: u32) -> u32 {
    let mut count = 0;
    let mut rest = left;
    while rest != 0 {
        let s = rest.trailing_zeros();
        count += (right & ((1u32 << s) - 1)).count_ones();
        rest &= rest - 1;
    }
    count
}

fn sign_of_parity(parity: u32) -> GaussianRational {
    if parity % 2 == 0 {
        GaussianRational::one()
    } else {
        -GaussianRational::one()
    }
}

impl SpinorSpace {
    pub fn new(half_dim: usize) -> Self {
        assert!(
            (1..=15).contains(&half_dim),
            "half-dimension must be between 1 and 15"
        );
        let coords = 2 * half_dim;
        let mut masks = Vec::with_capacity(1 << coords);
        emit_masks(0, 0, coords, &mut masks);
        let mut index_by_mask = vec![0; 1 << coords];
        for (idx, &m) in masks.iter().enumerate() {
            index_by_mask[m as usize] = idx;
        }
        SpinorSpace {
            half_dim,
            masks,
            index_by_mask,
        }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    /// Number of underlying coordinates, `2 * half_dim`.
    pub fn coordinates(&self) -> usize {
        2 * self.half_dim
    }

    /// Dimension of the spinor space, `2^(2 * half_dim)`.
    pub fn dim(&self) -> usize {
        self.masks.len()
    }

    pub(crate) fn mask(&self, idx: usize) -> u32 {
        self.masks[idx]
    }

    pub(crate) fn index_of_mask(&self, mask: u32) -> usize {
        self.index_by_mask[mask as usize]
    }

    /// Basis index of the wedge monomial with the given strictly increasing
    /// coordinate indices. Panics on repeated or out-of-range indices.
    pub fn index_of_indices(&self, indices: &[usize]) -> usize {
        let mut mask = 0u32;
        for &j in indices {
            assert!(j < self.coordinates(), "coordinate index out of range");
            assert!(mask & (1 << j) == 0, "repeated coordinate index");
            mask |= 1 << j;
        }
        self.index_of_mask(mask)
    }

    /// Exterior degree of the basis monomial at `idx`.
    pub fn basis_degree(&self, idx: usize) -> usize {
        self.masks[idx].count_ones() as usize
    }

    /// Human-readable name of the basis monomial at `idx`.
    pub fn basis_label(&self, idx: usize) -> String {
        let mask = self.masks[idx];
        if mask == 0 {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for j in 0..self.coordinates() {
            if mask & (1 << j) != 0 {
                parts.push(format!("dx{}", j + 1));
            }
        }
        parts.join("^")
    }

    pub fn zero_spinor(&self) -> Vec<GaussianRational> {
        vec![GaussianRational::zero(); self.dim()]
    }

    pub fn basis_spinor(&self, idx: usize) -> Vec<GaussianRational> {
        let mut v = self.zero_spinor();
        v[idx] = GaussianRational::one();
        v
    }

    /// Wedge product of two spinors.
    pub fn wedge(&self, a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(a.len(), self.dim(), "left wedge factor has the wrong length");
        assert_eq!(b.len(), self.dim(), "right wedge factor has the wrong length");
        let mut out = self.zero_spinor();
        for (s, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let ms = self.masks[s];
            for (t, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let mt = self.masks[t];
                if ms & mt != 0 {
                    continue;
                }
                let sign = sign_of_parity(merge_parity(ms, mt));
                let idx = self.index_of_mask(ms | mt);
                out[idx] += &(&sign * &(ca * cb));
            }
        }
        out
    }

    /// Coefficient of the top-degree monomial.
    pub fn top_coefficient(&self, a: &[GaussianRational]) -> GaussianRational {
        assert_eq!(a.len(), self.dim(), "spinor has the wrong length");
        let full = (1u32 << self.coordinates()) - 1;
        a[self.index_of_mask(full)].clone()
    }

    /// The part of `a` of exterior degree `degree`.
    pub fn degree_component(&self, a: &[GaussianRational], degree: usize) -> Vec<GaussianRational> {
        assert_eq!(a.len(), self.dim(), "spinor has the wrong length");
        let mut out = self.zero_spinor();
        for (s, c) in a.iter().enumerate() {
            if self.basis_degree(s) == degree {
                out[s] = c.clone();
            }
        }
        out
    }

    /// Clifford action of a generalized vector: tangent components contract,
    /// form components wedge.
    pub fn clifford_act(
        &self,
        e: &GeneralizedVector,
        phi: &[GaussianRational],
    ) -> Result<Vec<GaussianRational>, SpinorError> {
        if e.half_dim() != self.half_dim {
            return Err(SpinorError::HalfDimensionMismatch {
                left: self.half_dim,
                right: e.half_dim(),
            });
        }
        if phi.len() != self.dim() {
            return Err(SpinorError::SpinorLength {
                expected: self.dim(),
                found: phi.len(),
            });
        }
        let mut out = self.zero_spinor();
        for (s, c) in phi.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mask = self.masks[s];
            for j in 0..self.coordinates() {
                let bit = 1u32 << j;
                // Moving past the indices below j costs one sign each, both
                // for inserting dx_j and for pulling it out.
                let sign = sign_of_parity((mask & (bit - 1)).count_ones());
                if mask & bit != 0 {
                    let x = e.tangent_component(j);
                    if !x.is_zero() {
                        let idx = self.index_of_mask(mask & !bit);
                        out[idx] += &(&sign * &(x * c));
                    }
                } else {
                    let xi = e.form_component(j);
                    if !xi.is_zero() {
                        let idx = self.index_of_mask(mask | bit);
                        out[idx] += &(&sign * &(xi * c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of the Clifford action of `e` in the monomial basis.
    pub fn clifford_matrix(&self, e: &GeneralizedVector) -> Result<Matrix, SpinorError> {
        let mut columns = Vec::with_capacity(self.dim());
        for t in 0..self.dim() {
            columns.push(self.clifford_act(e, &self.basis_spinor(t))?);
        }
        Ok(Matrix::from_columns(self.dim(), &columns).expect("columns share the spinor length"))
    }

    /// Matrix of wedging by the coordinate one-form with index `j`.
    pub fn coordinate_wedge_matrix(&self, j: usize) -> Matrix {
        assert!(j < self.coordinates(), "coordinate index out of range");
        let mut m = Matrix::zeros(self.dim(), self.dim());
        let bit = 1u32 << j;
        for t in 0..self.dim() {
            let mask = self.masks[t];
            if mask & bit != 0 {
                continue;
            }
            let sign = sign_of_parity((mask & (bit - 1)).count_ones());
            m.set(self.index_of_mask(mask | bit), t, sign);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_come_in_prefix_order() {
        let space = SpinorSpace::new(1);
        let labels: Vec<String> = (0..space.dim()).map(|i| space.basis_label(i)).collect();
        assert_eq!(labels, vec!["1", "dx1", "dx1^dx2", "dx2"]);
        assert_eq!(space.index_of_indices(&[0, 1]), 2);
        assert_eq!(space.basis_degree(2), 2);
    }

    #[test]
    fn wedge_signs_follow_index_merges() {
        let space = SpinorSpace::new(2);
        let dx2 = space.basis_spinor(space.index_of_indices(&[1]));
        let dx1dx3 = space.basis_spinor(space.index_of_indices(&[0, 2]));
        // dx2 ^ (dx1 ^ dx3) = -dx1 ^ dx2 ^ dx3.
        let got = space.wedge(&dx2, &dx1dx3);
        let idx = space.index_of_indices(&[0, 1, 2]);
        assert_eq!(got[idx], -GaussianRational::one());
        assert!(got.iter().enumerate().all(|(i, c)| i == idx || c.is_zero()));
    }

    #[test]
    fn wedge_matrix_matches_the_wedge() {
        let space = SpinorSpace::new(1);
        let m = space.coordinate_wedge_matrix(1);
        let dx1 = space.basis_spinor(1);
        let direct = space.wedge(&space.basis_spinor(3), &dx1);
        assert_eq!(m.mul_vec(&dx1), direct);
    }

    #[test]
    fn degree_components_partition_a_spinor() {
        let space = SpinorSpace::new(2);
        let mut v = space.zero_spinor();
        for (i, c) in v.iter_mut().enumerate() {
            *c = GaussianRational::from_int(i as i64 + 1);
        }
        let mut sum = space.zero_spinor();
        for d in 0..=space.coordinates() {
            for (acc, part) in sum.iter_mut().zip(space.degree_component(&v, d)) {
                *acc += &part;
            }
        }
        assert_eq!(sum, v);
    }
}
