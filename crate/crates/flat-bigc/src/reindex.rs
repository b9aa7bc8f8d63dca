//! Relabeling a mode's graded pieces so that a chosen pair of components
//! becomes the two differentials of a double complex.
//!
//! Four of the component pairs anticommute and admit such a relabeling. The
//! affine change of bidegree depends on the parity of the torus dimension,
//! because the joint grading of an n torus lives on the sublattice where the
//! two levels sum to n modulo two.

use std::collections::BTreeMap;
use std::str::FromStr;

use double_complex_core::DoubleComplex;
use serde::{Deserialize, Serialize};

use crate::mode::{DeltaKind, ModeComplex};

/// The four anticommuting component pairs that carry a double complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DeltaPair {
    #[serde(rename = "pp")]
    PlusMinus,
    #[serde(rename = "pb")]
    PlusBarMinus,
    #[serde(rename = "bp")]
    BarPlusMinus,
    #[serde(rename = "bb")]
    BarPlusBarMinus,
}

impl DeltaPair {
    pub const ALL: [DeltaPair; 4] = [
        DeltaPair::PlusMinus,
        DeltaPair::PlusBarMinus,
        DeltaPair::BarPlusMinus,
        DeltaPair::BarPlusBarMinus,
    ];

    /// The component playing the row differential after relabeling.
    pub fn dprime_kind(self) -> DeltaKind {
        match self {
            DeltaPair::PlusMinus | DeltaPair::PlusBarMinus => DeltaKind::Plus,
            DeltaPair::BarPlusMinus | DeltaPair::BarPlusBarMinus => DeltaKind::BarPlus,
        }
    }

    /// The component playing the column differential after relabeling.
    pub fn dsecond_kind(self) -> DeltaKind {
        match self {
            DeltaPair::PlusMinus | DeltaPair::BarPlusMinus => DeltaKind::Minus,
            DeltaPair::PlusBarMinus | DeltaPair::BarPlusBarMinus => DeltaKind::BarMinus,
        }
    }

    /// The components in the order the joint Laplacian lists them, which
    /// follows the numbering raising, lowering, barred lowering, barred
    /// raising.
    pub fn laplacian_order(self) -> (DeltaKind, DeltaKind) {
        match self {
            DeltaPair::PlusMinus => (DeltaKind::Plus, DeltaKind::Minus),
            DeltaPair::PlusBarMinus => (DeltaKind::Plus, DeltaKind::BarMinus),
            DeltaPair::BarPlusMinus => (DeltaKind::Minus, DeltaKind::BarPlus),
            DeltaPair::BarPlusBarMinus => (DeltaKind::BarMinus, DeltaKind::BarPlus),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DeltaPair::PlusMinus => "pp",
            DeltaPair::PlusBarMinus => "pb",
            DeltaPair::BarPlusMinus => "bp",
            DeltaPair::BarPlusBarMinus => "bb",
        }
    }

    /// The slice underlying position (a, b) of the relabeled complex.
    fn slice_at(self, a: i64, b: i64, c2: i64) -> (i64, i64) {
        match self {
            DeltaPair::PlusMinus => (a + b, a - b + c2),
            DeltaPair::PlusBarMinus => (a - b, a + b + c2),
            DeltaPair::BarPlusMinus => (b - a, -a - b + c2),
            DeltaPair::BarPlusBarMinus => (-a - b, -a + b + c2),
        }
    }

    /// Where slice (p, q) lands in the relabeled complex, when the parity
    /// admits it.
    fn position_of(self, p: i64, q: i64, c2: i64) -> Option<(i64, i64)> {
        if (p + q - c2).rem_euclid(2) != 0 {
            return None;
        }
        Some(match self {
            DeltaPair::PlusMinus => ((p + q - c2) / 2, (p - q + c2) / 2),
            DeltaPair::PlusBarMinus => ((p + q - c2) / 2, (q - c2 - p) / 2),
            DeltaPair::BarPlusMinus => ((c2 - p - q) / 2, (p - q + c2) / 2),
            DeltaPair::BarPlusBarMinus => ((c2 - p - q) / 2, (q - p - c2) / 2),
        })
    }
}

impl FromStr for DeltaPair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pp" => Ok(DeltaPair::PlusMinus),
            "pb" => Ok(DeltaPair::PlusBarMinus),
            "bp" => Ok(DeltaPair::BarPlusMinus),
            "bb" => Ok(DeltaPair::BarPlusBarMinus),
            other => Err(format!(
                "unknown component pair {other:?}; expected pp, pb, bp, or bb"
            )),
        }
    }
}

/// A mode rebuilt as a double complex, remembering how its bidegrees map
/// back to the underlying slices.
#[derive(Clone, Debug)]
pub struct ReindexedComplex {
    pair: DeltaPair,
    c2: i64,
    complex: DoubleComplex,
}

impl ReindexedComplex {
    pub(crate) fn build(mode: &ModeComplex, pair: DeltaPair, c2: i64) -> ReindexedComplex {
        let mut support = BTreeMap::new();
        let mut dprime = BTreeMap::new();
        let mut dsecond = BTreeMap::new();
        for (&(p, q), &dim) in mode.support() {
            let (a, b) = pair
                .position_of(p, q, c2)
                .expect("every supported slice sits on the grading sublattice");
            support.insert((a, b), dim);
            dprime.insert((a, b), mode.block(pair.dprime_kind(), p, q));
            dsecond.insert((a, b), mode.block(pair.dsecond_kind(), p, q));
        }
        ReindexedComplex {
            pair,
            c2,
            complex: DoubleComplex::new(support, dprime, dsecond),
        }
    }

    pub fn pair(&self) -> DeltaPair {
        self.pair
    }

    pub fn complex(&self) -> &DoubleComplex {
        &self.complex
    }

    /// The slice underlying position (a, b).
    pub fn slice_of(&self, a: i64, b: i64) -> (i64, i64) {
        self.pair.slice_at(a, b, self.c2)
    }

    /// The position of slice (p, q), when its parity admits one.
    pub fn bidegree_of(&self, p: i64, q: i64) -> Option<(i64, i64)> {
        self.pair.position_of(p, q, self.c2)
    }
}
