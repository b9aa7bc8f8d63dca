//! Sign involutions on the exterior algebra and the top-degree pairing they
//! induce on spinors.

use exact_linalg::{GaussianRational, Matrix};

use crate::space::{merge_parity, SpinorSpace};

fn sign(parity: usize) -> GaussianRational {
    if parity % 2 == 0 {
        GaussianRational::one()
    } else {
        -GaussianRational::one()
    }
}

/// The involution multiplying degree `a` by `(-1)^(a(a-1)/2)`: plus on
/// degrees 0 and 1, minus on 2 and 3, repeating with period four.
pub fn sigma(space: &SpinorSpace, phi: &[GaussianRational]) -> Vec<GaussianRational> {
    assert_eq!(phi.len(), space.dim(), "spinor has the wrong length");
    phi.iter()
        .enumerate()
        .map(|(s, c)| &sign(space.basis_degree(s) / 2) * c)
        .collect()
}

/// The companion involution multiplying degree `a` by `(-1)^(a(a+1)/2)`:
/// plus on degrees 0 and 3, minus on 1 and 2, repeating with period four.
pub fn tilde_sigma(space: &SpinorSpace, phi: &[GaussianRational]) -> Vec<GaussianRational> {
    assert_eq!(phi.len(), space.dim(), "spinor has the wrong length");
    phi.iter()
        .enumerate()
        .map(|(s, c)| &sign((space.basis_degree(s) + 1) / 2) * c)
        .collect()
}

/// Diagonal matrix of [`sigma`].
pub fn sigma_matrix(space: &SpinorSpace) -> Matrix {
    Matrix::from_fn(space.dim(), space.dim(), |r, c| {
        if r == c {
            sign(space.basis_degree(r) / 2)
        } else {
            GaussianRational::zero()
        }
    })
}

/// Diagonal matrix of [`tilde_sigma`].
pub fn tilde_sigma_matrix(space: &SpinorSpace) -> Matrix {
    Matrix::from_fn(space.dim(), space.dim(), |r, c| {
        if r == c {
            sign((space.basis_degree(r) + 1) / 2)
        } else {
            GaussianRational::zero()
        }
    })
}

/// The alternating top-degree pairing of two spinors: minus the sum over j
/// of `(-1)^j` times the top parts of the degree-(2j) and degree-(2j+1)
/// pieces of the first factor wedged with the complementary pieces of the
/// second.
pub fn chevalley_pairing(
    space: &SpinorSpace,
    a: &[GaussianRational],
    b: &[GaussianRational],
) -> GaussianRational {
    let top = space.coordinates();
    let mut total = GaussianRational::zero();
    for j in 0..=space.half_dim() {
        let j_sign = sign(j);
        let even = 2 * j;
        let wedge = space.wedge(
            &space.degree_component(a, even),
            &space.degree_component(b, top - even),
        );
        total += &(&j_sign * &space.top_coefficient(&wedge));
        let odd = 2 * j + 1;
        if odd <= top {
            let wedge = space.wedge(
                &space.degree_component(a, odd),
                &space.degree_component(b, top - odd),
            );
            total += &(&j_sign * &space.top_coefficient(&wedge));
        }
    }
    -total
}

/// Gram matrix of the pairing over the monomial basis, built directly from
/// index complements: the entry at `(s, t)` is nonzero only when the two
/// monomials are complementary, with the merge sign of their index sets.
pub fn chevalley_matrix(space: &SpinorSpace) -> Matrix {
    let full = (1u32 << space.coordinates()) - 1;
    Matrix::from_fn(space.dim(), space.dim(), |s, t| {
        let ms = space.mask(s);
        let mt = space.mask(t);
        if ms & mt != 0 || ms | mt != full {
            return GaussianRational::zero();
        }
        let parity = 1 + space.basis_degree(s) / 2 + merge_parity(ms, mt) as usize;
        sign(parity)
    })
}
