//! The twelve coimage dimensions of the two inclusion towers at a bidegree.
//!
//! Inside one slice, the kernels and images of d' and d'' generate two
//! chains of inclusions: one descending from ker d' ∩ ker d'' to Im d'd''
//! (whose quotient is Bott-Chern cohomology) and one from ker d'd'' down to
//! Im d' + Im d'' (whose quotient is Aeppli cohomology). Each invariant is
//! the dimension jump across one arrow of a tower, so the tower totals
//! telescope to the cohomology dimensions exactly.

use std::collections::BTreeMap;

use exact_linalg::Subspace;
use serde::{Deserialize, Serialize};

use crate::complex::{Bidegree, DoubleComplex};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInvariants {
    pub p0: usize,
    pub p_plus: usize,
    pub p_minus: usize,
    pub s_plus: usize,
    pub s_minus: usize,
    pub s0: usize,
    pub u0: usize,
    pub u_plus: usize,
    pub u_minus: usize,
    pub v_plus: usize,
    pub v_minus: usize,
    pub v0: usize,
}

impl LatticeInvariants {
    /// Sum along the Bott-Chern tower; equals h_BC by telescoping.
    pub fn bc_total(&self) -> usize {
        self.p0 + self.p_plus + self.s_plus + self.s0
    }

    /// Sum along the Aeppli tower; equals h_A by telescoping.
    pub fn aeppli_total(&self) -> usize {
        self.u0 + self.u_plus + self.v_plus + self.v0
    }
}

fn drop_to(outer: usize, inner: usize, arrow: &'static str) -> usize {
    outer
        .checked_sub(inner)
        .unwrap_or_else(|| panic!("inclusion {arrow} violated: {outer} < {inner}"))
}

impl DoubleComplex {
    pub fn lattice_invariants_at(&self, p: i64, q: i64) -> LatticeInvariants {
        let join = |a: &Subspace, b: &Subspace| a.sum(b).expect("same slice");
        let meet = |a: &Subspace, b: &Subspace| a.intersect(b).expect("same slice");

        let ker_p = Subspace::kernel(&self.dprime_at(p, q));
        let ker_s = Subspace::kernel(&self.dsecond_at(p, q));
        let im_p = Subspace::image(&self.dprime_at(p - 1, q));
        let im_s = Subspace::image(&self.dsecond_at(p, q - 1));
        let im_dd = Subspace::image(&self.dd_at(p - 1, q - 1));
        let ker_dd = Subspace::kernel(&self.dd_at(p, q));

        // Descending tower under ker d' ∩ ker d''.
        let kk = meet(&ker_p, &ker_s);
        let ii = meet(&im_p, &im_s);
        let im_p_ker_s = meet(&im_p, &ker_s);
        let ker_p_im_s = meet(&ker_p, &im_s);
        let mid_bc = meet(&kk, &join(&im_p, &im_s));

        // Ascending tower over Im d' + Im d''.
        let sum_ii = join(&im_p, &im_s);
        let sum_kk = join(&ker_p, &ker_s);
        let ker_p_plus_im_s = join(&ker_p, &im_s);
        let im_p_plus_ker_s = join(&im_p, &ker_s);
        let mid_a = join(&sum_ii, &kk);

        LatticeInvariants {
            p0: drop_to(kk.dim(), mid_bc.dim(), "ker'∩ker'' over its boundary part"),
            p_plus: drop_to(mid_bc.dim(), im_p_ker_s.dim(), "boundary part over Im d'∩ker d''"),
            p_minus: drop_to(mid_bc.dim(), ker_p_im_s.dim(), "boundary part over ker d'∩Im d''"),
            s_plus: drop_to(im_p_ker_s.dim(), ii.dim(), "Im d'∩ker d'' over Im d'∩Im d''"),
            s_minus: drop_to(ker_p_im_s.dim(), ii.dim(), "ker d'∩Im d'' over Im d'∩Im d''"),
            s0: drop_to(ii.dim(), im_dd.dim(), "Im d'∩Im d'' over Im d'd''"),
            u0: drop_to(ker_dd.dim(), sum_kk.dim(), "ker d'd'' over ker d'+ker d''"),
            u_plus: drop_to(sum_kk.dim(), ker_p_plus_im_s.dim(), "ker'+ker'' over ker d'+Im d''"),
            u_minus: drop_to(sum_kk.dim(), im_p_plus_ker_s.dim(), "ker'+ker'' over Im d'+ker d''"),
            v_plus: drop_to(ker_p_plus_im_s.dim(), mid_a.dim(), "ker d'+Im d'' over its kernel part"),
            v_minus: drop_to(im_p_plus_ker_s.dim(), mid_a.dim(), "Im d'+ker d'' over its kernel part"),
            v0: drop_to(mid_a.dim(), sum_ii.dim(), "kernel part over Im d'+Im d''"),
        }
    }

    pub fn lattice_invariants(&self) -> BTreeMap<Bidegree, LatticeInvariants> {
        self.bidegrees()
            .map(|(p, q)| ((p, q), self.lattice_invariants_at(p, q)))
            .collect()
    }
}
