//! Torus-level cohomology: folds the requested theories over every mode in
//! a box, recording which modes contributed and the combined tables.
//!
//! Modes are scanned in lexicographic order and all bookkeeping uses ordered
//! maps, so a report is a deterministic function of the model, the pair,
//! the theories, and the radius.

use std::collections::BTreeMap;

use double_complex_core::Theory;
use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::model::FlatBiGcModel;
use crate::reindex::DeltaPair;

/// One bigraded dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimEntry {
    pub p: i64,
    pub q: i64,
    pub dim: usize,
}

/// One total-degree dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub degree: i64,
    pub dim: usize,
}

/// The nonzero bigraded dimensions of one theory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoryTable {
    pub theory: Theory,
    pub entries: Vec<DimEntry>,
}

/// What one mode contributed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeContribution {
    pub mode: Vec<i64>,
    pub tables: Vec<TheoryTable>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub de_rham: Vec<DegreeEntry>,
}

/// The combined tables over a mode box, with per-mode detail for the modes
/// that contributed anything.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusReport {
    pub label: String,
    pub pair: DeltaPair,
    pub radius: i64,
    pub theories: Vec<Theory>,
    /// Dimensions of the graded pieces, fixing the support diamond.
    pub slice_dims: Vec<DimEntry>,
    pub totals: Vec<TheoryTable>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub de_rham: Vec<DegreeEntry>,
    pub per_mode: Vec<ModeContribution>,
    /// Whether any mode other than zero contributed.
    pub nonzero_mode_contribution: bool,
    /// Whether the box is evidently complete: no nonzero mode inside it
    /// contributed, so enlarging it cannot change the tables.
    pub complete_within_box: bool,
}

impl TorusReport {
    /// A combined bigraded dimension; zero for anything absent.
    pub fn dim(&self, theory: Theory, p: i64, q: i64) -> usize {
        self.totals
            .iter()
            .find(|t| t.theory == theory)
            .and_then(|t| {
                t.entries
                    .iter()
                    .find(|e| e.p == p && e.q == q)
                    .map(|e| e.dim)
            })
            .unwrap_or(0)
    }

    /// The sum of one theory's table.
    pub fn total(&self, theory: Theory) -> usize {
        self.totals
            .iter()
            .find(|t| t.theory == theory)
            .map(|t| t.entries.iter().map(|e| e.dim).sum())
            .unwrap_or(0)
    }

    pub fn de_rham_totals(&self) -> BTreeMap<i64, usize> {
        self.de_rham.iter().map(|e| (e.degree, e.dim)).collect()
    }

    pub fn de_rham_dim(&self, degree: i64) -> usize {
        self.de_rham
            .iter()
            .find(|e| e.degree == degree)
            .map(|e| e.dim)
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("a report always serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<TorusReport, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::Parse(e.to_string()))
    }
}

fn entries_of(map: &BTreeMap<(i64, i64), usize>) -> Vec<DimEntry> {
    map.iter()
        .map(|(&(p, q), &dim)| DimEntry { p, q, dim })
        .collect()
}

fn degree_entries_of(map: &BTreeMap<i64, usize>) -> Vec<DegreeEntry> {
    map.iter()
        .map(|(&degree, &dim)| DegreeEntry { degree, dim })
        .collect()
}

impl FlatBiGcModel {
    /// Folds the requested theories over the box of modes with every
    /// coordinate in [-radius, radius].
    pub fn torus_cohomology(
        &self,
        theories: &[Theory],
        pair: DeltaPair,
        radius: i64,
    ) -> Result<TorusReport, ModelError> {
        if radius < 0 {
            return Err(ModelError::Parse(
                "the mode box radius must be nonnegative".to_string(),
            ));
        }
        let mut requested: Vec<Theory> = Vec::new();
        for t in theories {
            if !requested.contains(t) {
                requested.push(*t);
            }
        }
        if requested.is_empty() {
            return Err(ModelError::Parse(
                "at least one cohomology theory must be requested".to_string(),
            ));
        }
        let bigraded: Vec<Theory> = requested
            .iter()
            .copied()
            .filter(|t| *t != Theory::DeRham)
            .collect();
        let want_de_rham = requested.contains(&Theory::DeRham);

        let coords = 2 * self.n;
        let mut totals: BTreeMap<Theory, BTreeMap<(i64, i64), usize>> = BTreeMap::new();
        let mut de_rham_totals: BTreeMap<i64, usize> = BTreeMap::new();
        let mut per_mode: Vec<ModeContribution> = Vec::new();
        let mut nonzero_contribution = false;

        let mut k = vec![-radius; coords];
        loop {
            let mc = self.mode_complex(&k)?;
            let rc = mc.reindex(pair);

            let mut tables = Vec::new();
            let mut contributed = false;
            for theory in &bigraded {
                let mut dims: BTreeMap<(i64, i64), usize> = BTreeMap::new();
                for (&(a, b), group) in &rc.complex().bigraded_cohomology(*theory) {
                    if group.dim() > 0 {
                        let (p, q) = rc.slice_of(a, b);
                        dims.insert((p, q), group.dim());
                    }
                }
                if !dims.is_empty() {
                    contributed = true;
                    let slot = totals.entry(*theory).or_default();
                    for (&pq, &d) in &dims {
                        *slot.entry(pq).or_insert(0) += d;
                    }
                }
                tables.push(TheoryTable {
                    theory: *theory,
                    entries: entries_of(&dims),
                });
            }
            let mut mode_de_rham: BTreeMap<i64, usize> = BTreeMap::new();
            if want_de_rham {
                for (&degree, group) in &rc.complex().de_rham_cohomology() {
                    if group.dim() > 0 {
                        mode_de_rham.insert(degree, group.dim());
                    }
                }
                if !mode_de_rham.is_empty() {
                    contributed = true;
                    for (&degree, &d) in &mode_de_rham {
                        *de_rham_totals.entry(degree).or_insert(0) += d;
                    }
                }
            }

            if contributed {
                if k.iter().any(|&x| x != 0) {
                    nonzero_contribution = true;
                }
                per_mode.push(ModeContribution {
                    mode: k.clone(),
                    tables,
                    de_rham: degree_entries_of(&mode_de_rham),
                });
            }

            // Lexicographic odometer over the box, least significant last.
            let mut idx = coords;
            let advanced = loop {
                if idx == 0 {
                    break false;
                }
                idx -= 1;
                if k[idx] < radius {
                    k[idx] += 1;
                    for later in k.iter_mut().skip(idx + 1) {
                        *later = -radius;
                    }
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }

        let totals_tables: Vec<TheoryTable> = bigraded
            .iter()
            .map(|theory| TheoryTable {
                theory: *theory,
                entries: entries_of(totals.get(theory).unwrap_or(&BTreeMap::new())),
            })
            .collect();

        Ok(TorusReport {
            label: self.label.clone(),
            pair,
            radius,
            theories: requested,
            slice_dims: entries_of(&self.frame.support),
            totals: totals_tables,
            de_rham: degree_entries_of(&de_rham_totals),
            per_mode,
            nonzero_mode_contribution: nonzero_contribution,
            complete_within_box: !nonzero_contribution,
        })
    }
}
