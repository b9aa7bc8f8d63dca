//! Finite double complexes: a finitely supported grid of Q(i) vector spaces
//! with two anticommuting differentials.
//!
//! `dprime` raises the first index, `dsecond` raises the second, and the two
//! satisfy d'd'' + d''d' = 0, so the total differential d' + d'' squares to
//! zero. Maps out of or into unsupported bidegrees are zero and are simply
//! absent from the tables.

use std::collections::BTreeMap;

use exact_linalg::{GaussianRational, Matrix};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Bidegree = (i64, i64);

#[derive(Clone, PartialEq, Eq)]
pub struct DoubleComplex {
    support: BTreeMap<Bidegree, usize>,
    dprime: BTreeMap<Bidegree, Matrix>,
    dsecond: BTreeMap<Bidegree, Matrix>,
}

/// A broken invariant found by `validate`, with the bidegree it starts at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A stored map whose shape disagrees with the support dimensions.
    Shape {
        which: &'static str,
        at: Bidegree,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// d' followed by d' is nonzero starting at `at`.
    DprimeSquare { at: Bidegree },
    /// d'' followed by d'' is nonzero starting at `at`.
    DsecondSquare { at: Bidegree },
    /// d'd'' + d''d' is nonzero starting at `at`.
    Anticommute { at: Bidegree },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Shape {
                which,
                at,
                expected,
                found,
            } => write!(
                f,
                "{which} at ({},{}) should be {}x{} but is {}x{}",
                at.0, at.1, expected.0, expected.1, found.0, found.1
            ),
            Violation::DprimeSquare { at } => {
                write!(f, "d' twice is nonzero starting at ({},{})", at.0, at.1)
            }
            Violation::DsecondSquare { at } => {
                write!(f, "d'' twice is nonzero starting at ({},{})", at.0, at.1)
            }
            Violation::Anticommute { at } => write!(
                f,
                "d'd'' + d''d' is nonzero starting at ({},{})",
                at.0, at.1
            ),
        }
    }
}

impl DoubleComplex {
    /// Assembles a complex, dropping zero-dimensional spaces and maps whose
    /// source or target is absent (they are zero maps either way). Shape and
    /// sign laws are checked separately by `validate`.
    pub fn new(
        support: BTreeMap<Bidegree, usize>,
        dprime: BTreeMap<Bidegree, Matrix>,
        dsecond: BTreeMap<Bidegree, Matrix>,
    ) -> Self {
        let support: BTreeMap<Bidegree, usize> =
            support.into_iter().filter(|&(_, dim)| dim > 0).collect();
        let keep = |target: fn(Bidegree) -> Bidegree| {
            let support = support.clone();
            move |(&at, m): (&Bidegree, &Matrix)| {
                if support.contains_key(&at) && support.contains_key(&target(at)) {
                    Some((at, m.clone()))
                } else {
                    None
                }
            }
        };
        let dprime = dprime.iter().filter_map(keep(|(p, q)| (p + 1, q))).collect();
        let dsecond = dsecond.iter().filter_map(keep(|(p, q)| (p, q + 1))).collect();
        DoubleComplex {
            support,
            dprime,
            dsecond,
        }
    }

    pub fn support(&self) -> &BTreeMap<Bidegree, usize> {
        &self.support
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.support.keys().copied()
    }

    pub fn dim_at(&self, p: i64, q: i64) -> usize {
        self.support.get(&(p, q)).copied().unwrap_or(0)
    }

    /// The d' map out of (p,q), materialized as a zero matrix when absent.
    pub fn dprime_at(&self, p: i64, q: i64) -> Matrix {
        match self.dprime.get(&(p, q)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.dim_at(p + 1, q), self.dim_at(p, q)),
        }
    }

    /// The d'' map out of (p,q), materialized as a zero matrix when absent.
    pub fn dsecond_at(&self, p: i64, q: i64) -> Matrix {
        match self.dsecond.get(&(p, q)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.dim_at(p, q + 1), self.dim_at(p, q)),
        }
    }

    /// The composite d'd'' out of (p,q) into (p+1,q+1), applying d'' first.
    pub fn dd_at(&self, p: i64, q: i64) -> Matrix {
        &self.dprime_at(p, q + 1) * &self.dsecond_at(p, q)
    }

    /// Range of total degrees p+q over the support, inclusive; None if empty.
    pub fn total_range(&self) -> Option<(i64, i64)> {
        let mut degrees = self.support.keys().map(|&(p, q)| p + q);
        let first = degrees.next()?;
        let (mut lo, mut hi) = (first, first);
        for k in degrees {
            lo = lo.min(k);
            hi = hi.max(k);
        }
        Some((lo, hi))
    }

    /// Checks shapes, both square laws, and anticommutation; an empty list
    /// means the complex is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        for (&(p, q), m) in &self.dprime {
            let expected = (self.dim_at(p + 1, q), self.dim_at(p, q));
            if (m.rows(), m.cols()) != expected {
                violations.push(Violation::Shape {
                    which: "d'",
                    at: (p, q),
                    expected,
                    found: (m.rows(), m.cols()),
                });
            }
        }
        for (&(p, q), m) in &self.dsecond {
            let expected = (self.dim_at(p, q + 1), self.dim_at(p, q));
            if (m.rows(), m.cols()) != expected {
                violations.push(Violation::Shape {
                    which: "d''",
                    at: (p, q),
                    expected,
                    found: (m.rows(), m.cols()),
                });
            }
        }
        if !violations.is_empty() {
            // Composites below assume consistent shapes.
            return violations;
        }
        for &(p, q) in self.support.keys() {
            if !(&self.dprime_at(p + 1, q) * &self.dprime_at(p, q)).is_zero() {
                violations.push(Violation::DprimeSquare { at: (p, q) });
            }
            if !(&self.dsecond_at(p, q + 1) * &self.dsecond_at(p, q)).is_zero() {
                violations.push(Violation::DsecondSquare { at: (p, q) });
            }
            let one_way = &self.dprime_at(p, q + 1) * &self.dsecond_at(p, q);
            let other_way = &self.dsecond_at(p + 1, q) * &self.dprime_at(p, q);
            if !(&one_way + &other_way).is_zero() {
                violations.push(Violation::Anticommute { at: (p, q) });
            }
        }
        violations
    }

    /// The total complex: one space per total degree k, the direct sum of the
    /// bidegree slices with p+q = k in bidegree order, with d = d' + d''.
    pub fn total_complex(&self) -> TotalComplex {
        let mut degrees: BTreeMap<i64, Vec<Bidegree>> = BTreeMap::new();
        for &(p, q) in self.support.keys() {
            degrees.entry(p + q).or_default().push((p, q));
        }
        let mut offsets: BTreeMap<Bidegree, usize> = BTreeMap::new();
        let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
        for (&k, slices) in &degrees {
            let mut offset = 0;
            for &pq in slices {
                offsets.insert(pq, offset);
                offset += self.support[&pq];
            }
            dims.insert(k, offset);
        }
        let dim_of = |k: i64| dims.get(&k).copied().unwrap_or(0);
        let mut d: BTreeMap<i64, Matrix> = BTreeMap::new();
        for (&k, slices) in &degrees {
            let mut matrix = Matrix::zeros(dim_of(k + 1), dim_of(k));
            for &(p, q) in slices {
                let src_off = offsets[&(p, q)];
                for (block, tgt) in [
                    (self.dprime_at(p, q), (p + 1, q)),
                    (self.dsecond_at(p, q), (p, q + 1)),
                ] {
                    if block.rows() == 0 {
                        continue;
                    }
                    let tgt_off = offsets[&tgt];
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            matrix.set(tgt_off + r, src_off + c, block.get(r, c).clone());
                        }
                    }
                }
            }
            d.insert(k, matrix);
        }
        TotalComplex {
            degrees,
            offsets,
            dims,
            d,
        }
    }
}

/// The collapsed single complex of a double complex, with the coordinate
/// bookkeeping needed to move vectors between bidegree slices and total
/// degrees.
#[derive(Clone)]
pub struct TotalComplex {
    degrees: BTreeMap<i64, Vec<Bidegree>>,
    offsets: BTreeMap<Bidegree, usize>,
    dims: BTreeMap<i64, usize>,
    d: BTreeMap<i64, Matrix>,
}

impl TotalComplex {
    pub fn dim_at(&self, k: i64) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.keys().copied()
    }

    /// Bidegree slices of total degree k, in summand order.
    pub fn slices_at(&self, k: i64) -> &[Bidegree] {
        self.degrees.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn slice_offset(&self, p: i64, q: i64) -> Option<usize> {
        self.offsets.get(&(p, q)).copied()
    }

    /// The total differential out of degree k, materialized when absent.
    pub fn d_at(&self, k: i64) -> Matrix {
        match self.d.get(&k) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.dim_at(k + 1), self.dim_at(k)),
        }
    }

    /// Embeds a slice vector at (p,q) into total degree p+q coordinates.
    pub fn include(&self, p: i64, q: i64, v: &[GaussianRational], slice_dim: usize) -> Vec<GaussianRational> {
        assert_eq!(v.len(), slice_dim, "slice vector has wrong length");
        let k = p + q;
        let mut out = vec![GaussianRational::zero(); self.dim_at(k)];
        if slice_dim > 0 {
            let off = self.slice_offset(p, q).expect("slice not in total complex");
            out[off..off + slice_dim].clone_from_slice(v);
        }
        out
    }

    /// Extracts the (p,q) component of a total degree-k vector.
    pub fn component(&self, v: &[GaussianRational], p: i64, q: i64, slice_dim: usize) -> Vec<GaussianRational> {
        if slice_dim == 0 {
            return Vec::new();
        }
        let off = self.slice_offset(p, q).expect("slice not in total complex");
        v[off..off + slice_dim].to_vec()
    }
}

#[derive(Serialize, Deserialize)]
struct SpaceEntry {
    p: i64,
    q: i64,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct MapEntry {
    p: i64,
    q: i64,
    matrix: Vec<Vec<GaussianRational>>,
}

#[derive(Serialize, Deserialize)]
struct ComplexDoc {
    spaces: Vec<SpaceEntry>,
    #[serde(default)]
    dprime: Vec<MapEntry>,
    #[serde(default)]
    dsecond: Vec<MapEntry>,
}

impl Serialize for DoubleComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let spaces = self
            .support
            .iter()
            .map(|(&(p, q), &dim)| SpaceEntry { p, q, dim })
            .collect();
        let maps = |table: &BTreeMap<Bidegree, Matrix>| {
            table
                .iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|(&(p, q), m)| MapEntry {
                    p,
                    q,
                    matrix: (0..m.rows()).map(|r| m.row(r)).collect(),
                })
                .collect()
        };
        ComplexDoc {
            spaces,
            dprime: maps(&self.dprime),
            dsecond: maps(&self.dsecond),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DoubleComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = ComplexDoc::deserialize(deserializer)?;
        let mut support = BTreeMap::new();
        for entry in &doc.spaces {
            if support.insert((entry.p, entry.q), entry.dim).is_some() {
                return Err(D::Error::custom(format!(
                    "duplicate space entry at ({},{})",
                    entry.p, entry.q
                )));
            }
        }
        let tables = |entries: &[MapEntry], which: &str| -> Result<BTreeMap<Bidegree, Matrix>, D::Error> {
            let mut table = BTreeMap::new();
            for entry in entries {
                let matrix = Matrix::from_rows(entry.matrix.clone())
                    .map_err(|e| D::Error::custom(format!("{which} at ({},{}): {e}", entry.p, entry.q)))?;
                if table.insert((entry.p, entry.q), matrix).is_some() {
                    return Err(D::Error::custom(format!(
                        "duplicate {which} entry at ({},{})",
                        entry.p, entry.q
                    )));
                }
            }
            Ok(table)
        };
        Ok(DoubleComplex::new(
            support,
            tables(&doc.dprime, "dprime")?,
            tables(&doc.dsecond, "dsecond")?,
        ))
    }
}

impl std::fmt::Debug for DoubleComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DoubleComplex{:?}", self.support)
    }
}
