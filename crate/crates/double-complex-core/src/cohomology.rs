//! The five cohomology theories of a double complex.
//!
//! Per bidegree: row cohomology (d'), column cohomology (d''), Bott-Chern
//! (ker d' ∩ ker d'' over Im d'd''), and Aeppli (ker d'd'' over
//! Im d' + Im d''). Per total degree: de Rham cohomology of the total
//! complex. Every group comes with a deterministic representative basis so
//! maps between theories have reproducible matrices.

use std::collections::BTreeMap;

use exact_linalg::{GaussianRational, Matrix, Subspace};
use serde::{Deserialize, Serialize};

use crate::complex::{Bidegree, DoubleComplex};

/// One cohomology group, presented as numerator/denominator subspaces of a
/// fixed slice together with the chosen representative basis.
///
/// The representatives are the canonical-basis columns of the numerator that
/// greedily extend the denominator, so they are determined by the complex
/// alone, not by traversal order.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub numerator: Subspace,
    pub denominator: Subspace,
    pub representatives: Matrix,
}

impl CohomologyGroup {
    fn from_quotient(numerator: Subspace, denominator: Subspace) -> Self {
        let representatives = numerator
            .quotient_representatives(&denominator)
            .expect("cohomology denominator must sit inside the numerator; run validate first");
        CohomologyGroup {
            numerator,
            denominator,
            representatives,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    /// Coordinates of the class of `v` in the representative basis, or None
    /// if `v` is not in the numerator (not a cocycle of this theory).
    pub fn class_of(&self, v: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        if !self.numerator.contains_vector(v) {
            return None;
        }
        if self.numerator.dim() == 0 {
            return Some(Vec::new());
        }
        let mut blocks: Vec<&Matrix> = vec![&self.representatives];
        let denom_basis = self.denominator.basis();
        if denom_basis.cols() > 0 {
            blocks.push(denom_basis);
        }
        let stacked = Matrix::hstack(&blocks).expect("ambient dimensions agree");
        let rhs = Matrix::from_fn(v.len(), 1, |r, _| v[r].clone());
        let solution = stacked
            .solve(&rhs)
            .expect("numerator membership guarantees solvability");
        Some((0..self.dim()).map(|j| solution.get(j, 0).clone()).collect())
    }

    /// A representative vector of the class with the given coordinates.
    pub fn vector_of(&self, coords: &[GaussianRational]) -> Vec<GaussianRational> {
        self.representatives.mul_vec(coords)
    }
}

/// Which of the five theories a report describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theory {
    #[serde(rename = "BC")]
    BottChern,
    #[serde(rename = "A")]
    Aeppli,
    #[serde(rename = "dprime")]
    Dprime,
    #[serde(rename = "dsecond")]
    Dsecond,
    #[serde(rename = "deRham")]
    DeRham,
}

impl Theory {
    pub const ALL: [Theory; 5] = [
        Theory::BottChern,
        Theory::Aeppli,
        Theory::Dprime,
        Theory::Dsecond,
        Theory::DeRham,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Theory::BottChern => "BC",
            Theory::Aeppli => "A",
            Theory::Dprime => "dprime",
            Theory::Dsecond => "dsecond",
            Theory::DeRham => "deRham",
        }
    }
}

impl std::str::FromStr for Theory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "BC" | "bc" => Ok(Theory::BottChern),
            "A" | "a" | "aeppli" => Ok(Theory::Aeppli),
            "dprime" => Ok(Theory::Dprime),
            "dsecond" => Ok(Theory::Dsecond),
            "deRham" | "derham" => Ok(Theory::DeRham),
            other => Err(format!(
                "unknown theory '{other}' (expected bc, aeppli, dprime, dsecond, or derham)"
            )),
        }
    }
}

/// Dimension tables keyed by bidegree or by total degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GradedDims {
    Bigraded(BTreeMap<Bidegree, usize>),
    Total(BTreeMap<i64, usize>),
}

/// Dimensions of one theory across the support, with optional representative
/// bases (columns of each matrix represent the classes).
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub theory: Theory,
    pub dims: GradedDims,
    pub representatives: Option<RepresentativeTable>,
}

#[derive(Clone, Debug)]
pub enum RepresentativeTable {
    Bigraded(BTreeMap<Bidegree, Matrix>),
    Total(BTreeMap<i64, Matrix>),
}

impl DoubleComplex {
    /// Row cohomology ker d' / Im d' at one bidegree.
    pub fn dprime_cohomology_at(&self, p: i64, q: i64) -> CohomologyGroup {
        let numerator = Subspace::kernel(&self.dprime_at(p, q));
        let denominator = Subspace::image(&self.dprime_at(p - 1, q));
        CohomologyGroup::from_quotient(numerator, denominator)
    }

    /// Column cohomology ker d'' / Im d'' at one bidegree.
    pub fn dsecond_cohomology_at(&self, p: i64, q: i64) -> CohomologyGroup {
        let numerator = Subspace::kernel(&self.dsecond_at(p, q));
        let denominator = Subspace::image(&self.dsecond_at(p, q - 1));
        CohomologyGroup::from_quotient(numerator, denominator)
    }

    /// Bott-Chern cohomology (ker d' ∩ ker d'') / Im d'd'' at one bidegree.
    pub fn bott_chern_at(&self, p: i64, q: i64) -> CohomologyGroup {
        let kp = Subspace::kernel(&self.dprime_at(p, q));
        let ks = Subspace::kernel(&self.dsecond_at(p, q));
        let numerator = kp.intersect(&ks).expect("same slice");
        let denominator = Subspace::image(&self.dd_at(p - 1, q - 1));
        CohomologyGroup::from_quotient(numerator, denominator)
    }

    /// Aeppli cohomology ker d'd'' / (Im d' + Im d'') at one bidegree.
    pub fn aeppli_at(&self, p: i64, q: i64) -> CohomologyGroup {
        let numerator = Subspace::kernel(&self.dd_at(p, q));
        let ip = Subspace::image(&self.dprime_at(p - 1, q));
        let is = Subspace::image(&self.dsecond_at(p, q - 1));
        let denominator = ip.sum(&is).expect("same slice");
        CohomologyGroup::from_quotient(numerator, denominator)
    }

    /// de Rham cohomology ker d / Im d of the total complex at degree k.
    pub fn de_rham_at(&self, k: i64) -> CohomologyGroup {
        let total = self.total_complex();
        let numerator = Subspace::kernel(&total.d_at(k));
        let denominator = Subspace::image(&total.d_at(k - 1));
        CohomologyGroup::from_quotient(numerator, denominator)
    }

    /// All groups of one bigraded theory over the support.
    pub fn bigraded_cohomology(&self, theory: Theory) -> BTreeMap<Bidegree, CohomologyGroup> {
        assert!(theory != Theory::DeRham, "de Rham cohomology is graded by total degree");
        self.bidegrees()
            .map(|(p, q)| {
                let group = match theory {
                    Theory::BottChern => self.bott_chern_at(p, q),
                    Theory::Aeppli => self.aeppli_at(p, q),
                    Theory::Dprime => self.dprime_cohomology_at(p, q),
                    Theory::Dsecond => self.dsecond_cohomology_at(p, q),
                    Theory::DeRham => unreachable!(),
                };
                ((p, q), group)
            })
            .collect()
    }

    /// All de Rham groups over the total-degree range of the support.
    pub fn de_rham_cohomology(&self) -> BTreeMap<i64, CohomologyGroup> {
        let total = self.total_complex();
        let mut out = BTreeMap::new();
        for k in total.degrees() {
            let numerator = Subspace::kernel(&total.d_at(k));
            let denominator = Subspace::image(&total.d_at(k - 1));
            out.insert(k, CohomologyGroup::from_quotient(numerator, denominator));
        }
        out
    }

    /// Dimension summary for one theory, optionally with representatives.
    pub fn cohomology_report(&self, theory: Theory, with_representatives: bool) -> CohomologyReport {
        match theory {
            Theory::DeRham => {
                let groups = self.de_rham_cohomology();
                let dims = groups.iter().map(|(&k, g)| (k, g.dim())).collect();
                let representatives = with_representatives.then(|| {
                    RepresentativeTable::Total(
                        groups
                            .into_iter()
                            .map(|(k, g)| (k, g.representatives))
                            .collect(),
                    )
                });
                CohomologyReport {
                    theory,
                    dims: GradedDims::Total(dims),
                    representatives,
                }
            }
            _ => {
                let groups = self.bigraded_cohomology(theory);
                let dims = groups.iter().map(|(&pq, g)| (pq, g.dim())).collect();
                let representatives = with_representatives.then(|| {
                    RepresentativeTable::Bigraded(
                        groups
                            .into_iter()
                            .map(|(pq, g)| (pq, g.representatives))
                            .collect(),
                    )
                });
                CohomologyReport {
                    theory,
                    dims: GradedDims::Bigraded(dims),
                    representatives,
                }
            }
        }
    }

    /// Total-degree dimensions of a bigraded theory: sums over p+q = k.
    pub fn total_dims(&self, theory: Theory) -> BTreeMap<i64, usize> {
        let mut out: BTreeMap<i64, usize> = BTreeMap::new();
        match theory {
            Theory::DeRham => {
                for (k, group) in self.de_rham_cohomology() {
                    out.insert(k, group.dim());
                }
            }
            _ => {
                for ((p, q), group) in self.bigraded_cohomology(theory) {
                    *out.entry(p + q).or_insert(0) += group.dim();
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_elementary, ElementaryShape};

    #[test]
    fn dot_has_everything_one_dimensional() {
        let dot = generate_elementary(ElementaryShape::Dot { p: 0, q: 0 });
        for theory in [Theory::BottChern, Theory::Aeppli, Theory::Dprime, Theory::Dsecond] {
            let groups = dot.bigraded_cohomology(theory);
            assert_eq!(groups[&(0, 0)].dim(), 1, "{}", theory.label());
        }
        assert_eq!(dot.de_rham_at(0).dim(), 1);
    }

    #[test]
    fn class_of_distinguishes_cocycles_from_non_cocycles() {
        let square = generate_elementary(ElementaryShape::Square { p: 0, q: 0 });
        let group = square.bott_chern_at(0, 0);
        // The generator at (0,0) is not d'-closed, so it is not a BC cocycle.
        assert_eq!(group.dim(), 0);
        assert!(group.class_of(&[GaussianRational::one()]).is_none());
    }
}
