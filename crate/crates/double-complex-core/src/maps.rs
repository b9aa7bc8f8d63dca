//! The natural maps between the cohomology theories, realized as matrices
//! in the deterministic representative bases.
//!
//! Bott-Chern maps into everything and everything maps into Aeppli: per
//! bidegree, phi_plus and phi_minus send a Bott-Chern class to its row and
//! column cohomology classes, and psi_plus / psi_minus send those onward to
//! Aeppli. Per total degree, phi sends Bott-Chern classes into de Rham
//! cohomology and psi decomposes a de Rham class into bidegree components,
//! which land in Aeppli. The injectivity and surjectivity of these maps is
//! what the d'd''-lemma controls.

use std::collections::BTreeMap;

use exact_linalg::Matrix;

use crate::cohomology::CohomologyGroup;
use crate::complex::{Bidegree, DoubleComplex};

/// One realized map: its matrix in representative bases plus rank flags.
#[derive(Clone, Debug)]
pub struct MapReport {
    pub matrix: Matrix,
    pub injective: bool,
    pub surjective: bool,
}

impl MapReport {
    fn from_matrix(matrix: Matrix) -> Self {
        let rank = matrix.rank();
        MapReport {
            injective: rank == matrix.cols(),
            surjective: rank == matrix.rows(),
            matrix,
        }
    }
}

/// All seven map families of a complex.
#[derive(Clone, Debug)]
pub struct NaturalMaps {
    /// Bott-Chern at (p,q) into de Rham at p+q.
    pub phi_bidegree: BTreeMap<Bidegree, MapReport>,
    /// Direct sum of the above over one antidiagonal, into de Rham at k.
    pub phi_total: BTreeMap<i64, MapReport>,
    /// de Rham at k into the direct sum of Aeppli over the antidiagonal.
    pub psi_total: BTreeMap<i64, MapReport>,
    /// Bott-Chern into row cohomology at the same bidegree.
    pub phi_plus: BTreeMap<Bidegree, MapReport>,
    /// Bott-Chern into column cohomology at the same bidegree.
    pub phi_minus: BTreeMap<Bidegree, MapReport>,
    /// Row cohomology into Aeppli at the same bidegree.
    pub psi_plus: BTreeMap<Bidegree, MapReport>,
    /// Column cohomology into Aeppli at the same bidegree.
    pub psi_minus: BTreeMap<Bidegree, MapReport>,
}

/// Sends each representative of `source` to its class in `target`, both
/// groups living in the same slice. Panics if a representative is not a
/// cocycle for the target theory, which cannot happen for the inclusions
/// realized here on a valid complex.
fn induced_map(source: &CohomologyGroup, target: &CohomologyGroup) -> MapReport {
    let columns: Vec<Vec<_>> = (0..source.dim())
        .map(|j| {
            let rep = source.representatives.column(j);
            target
                .class_of(&rep)
                .expect("representative must be a cocycle of the target theory")
        })
        .collect();
    let matrix = Matrix::from_fn(target.dim(), source.dim(), |r, c| columns[c][r].clone());
    MapReport::from_matrix(matrix)
}

impl DoubleComplex {
    /// Realizes all natural maps. The complex must be valid.
    pub fn natural_maps(&self) -> NaturalMaps {
        let total = self.total_complex();
        let bc = self.bigraded_cohomology(crate::cohomology::Theory::BottChern);
        let aeppli = self.bigraded_cohomology(crate::cohomology::Theory::Aeppli);
        let rows = self.bigraded_cohomology(crate::cohomology::Theory::Dprime);
        let cols = self.bigraded_cohomology(crate::cohomology::Theory::Dsecond);
        let de_rham = self.de_rham_cohomology();

        let mut phi_bidegree = BTreeMap::new();
        let mut phi_plus = BTreeMap::new();
        let mut phi_minus = BTreeMap::new();
        let mut psi_plus = BTreeMap::new();
        let mut psi_minus = BTreeMap::new();

        for (&(p, q), bc_group) in &bc {
            let k = p + q;
            let dr_group = &de_rham[&k];
            let columns: Vec<Vec<_>> = (0..bc_group.dim())
                .map(|j| {
                    let rep = bc_group.representatives.column(j);
                    let included = total.include(p, q, &rep, self.dim_at(p, q));
                    dr_group
                        .class_of(&included)
                        .expect("a class closed under both differentials is d-closed")
                })
                .collect();
            let matrix = Matrix::from_fn(dr_group.dim(), bc_group.dim(), |r, c| columns[c][r].clone());
            phi_bidegree.insert((p, q), MapReport::from_matrix(matrix));

            phi_plus.insert((p, q), induced_map(bc_group, &rows[&(p, q)]));
            phi_minus.insert((p, q), induced_map(bc_group, &cols[&(p, q)]));
            psi_plus.insert((p, q), induced_map(&rows[&(p, q)], &aeppli[&(p, q)]));
            psi_minus.insert((p, q), induced_map(&cols[&(p, q)], &aeppli[&(p, q)]));
        }

        let mut phi_total = BTreeMap::new();
        let mut psi_total = BTreeMap::new();
        for (&k, dr_group) in &de_rham {
            let slices = total.slices_at(k);

            let phi_blocks: Vec<&Matrix> = slices
                .iter()
                .map(|pq| &phi_bidegree[pq].matrix)
                .collect();
            let phi_matrix = if phi_blocks.is_empty() {
                Matrix::zeros(dr_group.dim(), 0)
            } else {
                Matrix::hstack(&phi_blocks).expect("all blocks target de Rham at k")
            };
            phi_total.insert(k, MapReport::from_matrix(phi_matrix));

            let aeppli_total_dim: usize = slices.iter().map(|pq| aeppli[pq].dim()).sum();
            let mut psi_matrix = Matrix::zeros(aeppli_total_dim, dr_group.dim());
            for j in 0..dr_group.dim() {
                let rep = dr_group.representatives.column(j);
                let mut row_offset = 0;
                for &(p, q) in slices {
                    let slice_dim = self.dim_at(p, q);
                    let component = total.component(&rep, p, q, slice_dim);
                    let coords = aeppli[&(p, q)]
                        .class_of(&component)
                        .expect("components of a d-closed vector are d'd''-closed");
                    for (i, x) in coords.into_iter().enumerate() {
                        psi_matrix.set(row_offset + i, j, x);
                    }
                    row_offset += aeppli[&(p, q)].dim();
                }
            }
            psi_total.insert(k, MapReport::from_matrix(psi_matrix));
        }

        NaturalMaps {
            phi_bidegree,
            phi_total,
            psi_total,
            phi_plus,
            phi_minus,
            psi_plus,
            psi_minus,
        }
    }
}

impl NaturalMaps {
    /// Flags of a total-degree map, treating absent degrees as the map
    /// between zero spaces (vacuously injective and surjective).
    pub fn total_flags(table: &BTreeMap<i64, MapReport>, k: i64) -> (bool, bool) {
        table
            .get(&k)
            .map(|r| (r.injective, r.surjective))
            .unwrap_or((true, true))
    }

    /// Flags of a bidegree map, treating absent bidegrees as vacuous.
    pub fn bidegree_flags(table: &BTreeMap<Bidegree, MapReport>, p: i64, q: i64) -> (bool, bool) {
        table
            .get(&(p, q))
            .map(|r| (r.injective, r.surjective))
            .unwrap_or((true, true))
    }
}
