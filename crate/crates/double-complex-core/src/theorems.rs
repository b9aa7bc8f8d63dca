//! The d'd''-lemma decision procedure, the five-way equivalence check, and
//! the identity verifiers used by the randomized suites.

use std::collections::BTreeMap;

use exact_linalg::Subspace;
use serde::{Deserialize, Serialize};

use crate::complex::DoubleComplex;
use crate::maps::NaturalMaps;

impl DoubleComplex {
    /// Whether the d'd''-lemma holds at (p,q): the three subspaces
    /// Im d' ∩ ker d'', ker d' ∩ Im d'', and Im d'd'' of the slice coincide.
    /// Decided by canonical-form equality.
    pub fn ddbar_lemma_at(&self, p: i64, q: i64) -> bool {
        let ker_p = Subspace::kernel(&self.dprime_at(p, q));
        let ker_s = Subspace::kernel(&self.dsecond_at(p, q));
        let im_p = Subspace::image(&self.dprime_at(p - 1, q));
        let im_s = Subspace::image(&self.dsecond_at(p, q - 1));
        let im_dd = Subspace::image(&self.dd_at(p - 1, q - 1));
        let left = im_p.intersect(&ker_s).expect("same slice");
        let right = ker_p.intersect(&im_s).expect("same slice");
        left == im_dd && right == im_dd
    }

    /// The lemma at every supported bidegree. Unsupported bidegrees are zero
    /// slices where the lemma is vacuous.
    pub fn ddbar_lemma_everywhere(&self) -> bool {
        self.bidegrees().all(|(p, q)| self.ddbar_lemma_at(p, q))
    }
}

/// The five equivalent statements, each evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremEquivalences {
    /// The d'd''-lemma holds at every bidegree.
    pub lemma_everywhere: bool,
    /// h_BC = h_{d'} = h_{d''} at every bidegree.
    pub bc_matches_row_column: bool,
    /// h_A = h_{d'} = h_{d''} at every bidegree.
    pub aeppli_matches_row_column: bool,
    /// Summed over antidiagonals, h_BC^k = b^k for every k.
    pub bc_matches_de_rham: bool,
    /// Summed over antidiagonals, h_A^k = b^k for every k.
    pub aeppli_matches_de_rham: bool,
}

impl TheoremEquivalences {
    pub fn all(&self) -> [bool; 5] {
        [
            self.lemma_everywhere,
            self.bc_matches_row_column,
            self.aeppli_matches_row_column,
            self.bc_matches_de_rham,
            self.aeppli_matches_de_rham,
        ]
    }

    /// True when the five statements agree, as the equivalence theorem says
    /// they must on every valid finitely supported complex.
    pub fn consistent(&self) -> bool {
        let all = self.all();
        all.iter().all(|&b| b == all[0])
    }
}

fn tables_agree<K: Ord + Copy>(a: &BTreeMap<K, usize>, b: &BTreeMap<K, usize>) -> bool {
    let keys: std::collections::BTreeSet<K> = a.keys().chain(b.keys()).copied().collect();
    keys.into_iter().all(|k| {
        a.get(&k).copied().unwrap_or(0) == b.get(&k).copied().unwrap_or(0)
    })
}

impl DoubleComplex {
    /// Evaluates the five statements of the equivalence theorem.
    pub fn check_theorem_equivalences(&self) -> TheoremEquivalences {
        use crate::cohomology::Theory;
        let bc = self.cohomology_report(Theory::BottChern, false);
        let aeppli = self.cohomology_report(Theory::Aeppli, false);
        let rows = self.cohomology_report(Theory::Dprime, false);
        let cols = self.cohomology_report(Theory::Dsecond, false);
        let bigraded = |report: &crate::cohomology::CohomologyReport| match &report.dims {
            crate::cohomology::GradedDims::Bigraded(map) => map.clone(),
            crate::cohomology::GradedDims::Total(_) => unreachable!("bigraded theory"),
        };
        let bc_dims = bigraded(&bc);
        let a_dims = bigraded(&aeppli);
        let row_dims = bigraded(&rows);
        let col_dims = bigraded(&cols);
        let de_rham = self.total_dims(Theory::DeRham);

        TheoremEquivalences {
            lemma_everywhere: self.ddbar_lemma_everywhere(),
            bc_matches_row_column: tables_agree(&bc_dims, &row_dims) && tables_agree(&bc_dims, &col_dims),
            aeppli_matches_row_column: tables_agree(&a_dims, &row_dims) && tables_agree(&a_dims, &col_dims),
            bc_matches_de_rham: tables_agree(&self.total_dims(Theory::BottChern), &de_rham),
            aeppli_matches_de_rham: tables_agree(&self.total_dims(Theory::Aeppli), &de_rham),
        }
    }

    /// Checks the tower identities relating the lattice invariants to the
    /// five cohomologies at every supported bidegree. Returns a description
    /// of each failure; empty means all identities hold.
    pub fn lattice_identity_failures(&self) -> Vec<String> {
        use crate::cohomology::Theory;
        let mut failures = Vec::new();
        let bc = self.bigraded_cohomology(Theory::BottChern);
        let aeppli = self.bigraded_cohomology(Theory::Aeppli);
        let rows = self.bigraded_cohomology(Theory::Dprime);
        let cols = self.bigraded_cohomology(Theory::Dsecond);
        for (p, q) in self.bidegrees() {
            let inv = self.lattice_invariants_at(p, q);
            let h_bc = bc[&(p, q)].dim();
            let h_a = aeppli[&(p, q)].dim();
            let h_row = rows[&(p, q)].dim();
            let h_col = cols[&(p, q)].dim();
            let mut check = |name: &str, lhs: usize, rhs: usize| {
                if lhs != rhs {
                    failures.push(format!("({p},{q}): {name}: {lhs} != {rhs}"));
                }
            };
            check("pPlus = sMinus", inv.p_plus, inv.s_minus);
            check("pMinus = sPlus", inv.p_minus, inv.s_plus);
            check("uPlus = vMinus", inv.u_plus, inv.v_minus);
            check("uMinus = vPlus", inv.u_minus, inv.v_plus);
            check("p0 = v0", inv.p0, inv.v0);
            check("h_BC = p0+pPlus+sPlus+s0", h_bc, inv.bc_total());
            check(
                "h_BC = p0+pMinus+sMinus+s0",
                h_bc,
                inv.p0 + inv.p_minus + inv.s_minus + inv.s0,
            );
            check("h_A = u0+uPlus+vPlus+v0", h_a, inv.aeppli_total());
            check(
                "h_A = u0+uMinus+vMinus+v0",
                h_a,
                inv.u0 + inv.u_minus + inv.v_minus + inv.v0,
            );
            check("h_d' = sMinus+vPlus+v0", h_row, inv.s_minus + inv.v_plus + inv.v0);
            check("h_d'' = sPlus+vMinus+v0", h_col, inv.s_plus + inv.v_minus + inv.v0);
            check(
                "h_BC+h_A = h_d'+h_d''+u0+s0",
                h_bc + h_a,
                h_row + h_col + inv.u0 + inv.s0,
            );
        }
        failures
    }

    /// Checks the implication lemmas tying injectivity and surjectivity of
    /// the natural maps to the d'd''-lemma. Empty result means all hold.
    pub fn map_implication_failures(&self, maps: &NaturalMaps) -> Vec<String> {
        let mut failures = Vec::new();
        let Some((lo, hi)) = self.total_range() else {
            return failures;
        };

        for k in (lo - 1)..=(hi + 1) {
            let (phi_inj, _) = NaturalMaps::total_flags(&maps.phi_total, k);
            let (_, phi_prev_surj) = NaturalMaps::total_flags(&maps.phi_total, k - 1);
            let (_, psi_surj) = NaturalMaps::total_flags(&maps.psi_total, k);
            let (psi_next_inj, _) = NaturalMaps::total_flags(&maps.psi_total, k + 1);
            let (_, psi_prev_surj) = NaturalMaps::total_flags(&maps.psi_total, k - 1);
            let lemma_on_antidiagonal = self
                .bidegrees()
                .filter(|&(p, q)| p + q == k)
                .all(|(p, q)| self.ddbar_lemma_at(p, q));

            if phi_inj && !phi_prev_surj {
                failures.push(format!("phi^{k} injective but phi^{} not surjective", k - 1));
            }
            if psi_surj && !psi_next_inj {
                failures.push(format!("psi^{k} surjective but psi^{} not injective", k + 1));
            }
            if phi_inj != psi_prev_surj {
                failures.push(format!(
                    "phi^{k} injective is {phi_inj} but psi^{} surjective is {psi_prev_surj}",
                    k - 1
                ));
            }
            if phi_inj != lemma_on_antidiagonal {
                failures.push(format!(
                    "phi^{k} injective is {phi_inj} but lemma on the antidiagonal is {lemma_on_antidiagonal}"
                ));
            }
        }

        // Walk the support bounding box expanded by one: a vacuous premise at
        // an unsupported bidegree still constrains a supported neighbor.
        let (mut p_lo, mut p_hi, mut q_lo, mut q_hi) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for (p, q) in self.bidegrees() {
            p_lo = p_lo.min(p);
            p_hi = p_hi.max(p);
            q_lo = q_lo.min(q);
            q_hi = q_hi.max(q);
        }
        for p in (p_lo - 1)..=(p_hi + 1) {
            for q in (q_lo - 1)..=(q_hi + 1) {
                let (pp_inj, _) = NaturalMaps::bidegree_flags(&maps.phi_plus, p, q);
                let (pm_inj, _) = NaturalMaps::bidegree_flags(&maps.phi_minus, p, q);
                let (_, pm_left_surj) = NaturalMaps::bidegree_flags(&maps.phi_minus, p - 1, q);
                let (_, pp_below_surj) = NaturalMaps::bidegree_flags(&maps.phi_plus, p, q - 1);
                let (_, sp_surj) = NaturalMaps::bidegree_flags(&maps.psi_plus, p, q);
                let (_, sm_surj) = NaturalMaps::bidegree_flags(&maps.psi_minus, p, q);
                let (sm_right_inj, _) = NaturalMaps::bidegree_flags(&maps.psi_minus, p + 1, q);
                let (sp_above_inj, _) = NaturalMaps::bidegree_flags(&maps.psi_plus, p, q + 1);

                if pp_inj && !pm_left_surj {
                    failures.push(format!(
                        "phi_plus^({p},{q}) injective but phi_minus^({},{q}) not surjective",
                        p - 1
                    ));
                }
                if pm_inj && !pp_below_surj {
                    failures.push(format!(
                        "phi_minus^({p},{q}) injective but phi_plus^({p},{}) not surjective",
                        q - 1
                    ));
                }
                if sp_surj && !sm_right_inj {
                    failures.push(format!(
                        "psi_plus^({p},{q}) surjective but psi_minus^({},{q}) not injective",
                        p + 1
                    ));
                }
                if sm_surj && !sp_above_inj {
                    failures.push(format!(
                        "psi_minus^({p},{q}) surjective but psi_plus^({p},{}) not injective",
                        q + 1
                    ));
                }
            }
        }
        failures
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_elementary, ElementaryShape, ZigzagOrientation};

    #[test]
    fn dot_satisfies_everything() {
        let dot = generate_elementary(ElementaryShape::Dot { p: 0, q: 0 });
        let eq = dot.check_theorem_equivalences();
        assert!(eq.all().iter().all(|&b| b));
        assert!(eq.consistent());
        assert!(dot.lattice_identity_failures().is_empty());
    }

    #[test]
    fn square_satisfies_the_lemma_everywhere() {
        let s = generate_elementary(ElementaryShape::Square { p: 0, q: 0 });
        for (p, q) in s.bidegrees() {
            assert!(s.ddbar_lemma_at(p, q), "({p},{q})");
        }
        let eq = s.check_theorem_equivalences();
        assert!(eq.all().iter().all(|&b| b));
    }

    #[test]
    fn zigzag_fails_everything_consistently() {
        let z = generate_elementary(ElementaryShape::Zigzag {
            p: 0,
            q: 1,
            length: 2,
            orientation: ZigzagOrientation::DprimeFirst,
        });
        assert!(!z.ddbar_lemma_at(1, 1));
        let eq = z.check_theorem_equivalences();
        assert!(eq.all().iter().all(|&b| !b));
        assert!(eq.consistent());
        assert!(z.lattice_identity_failures().is_empty());
        let maps = z.natural_maps();
        assert!(z.map_implication_failures(&maps).is_empty());
    }
}
