//! Constant bi-generalized Hermitian structures on a flat torus: a commuting
//! pair of generalized complex structures on the doubled space together with
//! a compatible generalized metric.
//!
//! Everything is a rational matrix acting on the 4n coordinates of the
//! doubled torus, and every axiom is checked exactly. Validation collects
//! every broken axiom instead of stopping at the first, so a report on a bad
//! model names all of its problems at once.

use std::collections::BTreeMap;

use exact_linalg::{GaussianRational, Matrix};
use serde::{Deserialize, Serialize};
use spinor_clifford::{joint_grading, pairing_matrix, SpinorSpace};

use crate::error::ModelError;
use crate::mode::ModeComplex;

/// Shared spinor-space data computed once per model: the joint grading of
/// the two structures, the change of basis between monomial and graded
/// coordinates, and the coordinate wedge matrices that assemble each mode's
/// differential.
#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub space: SpinorSpace,
    pub support: BTreeMap<(i64, i64), usize>,
    pub bases: BTreeMap<(i64, i64), Matrix>,
    pub offsets: BTreeMap<(i64, i64), usize>,
    pub to_monomial: Matrix,
    pub to_graded: Matrix,
    pub wedges: Vec<Matrix>,
}

impl Frame {
    fn build(n: usize, j1: &Matrix, j2: &Matrix) -> Result<Frame, ModelError> {
        let space = SpinorSpace::new(n);
        let joint = joint_grading(&space, j1, j2)?;
        let mut support = BTreeMap::new();
        let mut bases = BTreeMap::new();
        let mut offsets = BTreeMap::new();
        let mut offset = 0usize;
        for (&(p, q), piece) in joint.pieces() {
            if piece.dim() == 0 {
                continue;
            }
            support.insert((p, q), piece.dim());
            offsets.insert((p, q), offset);
            offset += piece.dim();
            bases.insert((p, q), piece.basis().clone());
        }
        let columns: Vec<&Matrix> = bases.values().collect();
        let to_monomial = Matrix::hstack(&columns)?;
        let to_graded = to_monomial
            .inverse()
            .expect("the joint grading spans the spinor space");
        let wedges = (0..2 * n).map(|j| space.coordinate_wedge_matrix(j)).collect();
        Ok(Frame {
            space,
            support,
            bases,
            offsets,
            to_monomial,
            to_graded,
            wedges,
        })
    }
}

/// A validated model: the two structures, the metric, and the graded frame.
#[derive(Clone, Debug)]
pub struct FlatBiGcModel {
    pub(crate) n: usize,
    pub(crate) j1: Matrix,
    pub(crate) j2: Matrix,
    pub(crate) metric: Matrix,
    pub(crate) label: String,
    pub(crate) frame: Frame,
}

fn is_real(m: &Matrix) -> bool {
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| m.get(r, c).is_real()))
}

fn shape_violations(j1: &Matrix, j2: &Matrix, metric: Option<&Matrix>) -> Vec<String> {
    let mut violations = Vec::new();
    if j1.rows() != j1.cols() {
        violations.push("J1 must be square".to_string());
    }
    if j2.rows() != j2.cols() {
        violations.push("J2 must be square".to_string());
    }
    if j1.rows() != j2.rows() || j1.cols() != j2.cols() {
        violations.push("J1 and J2 must be the same size".to_string());
    }
    if violations.is_empty() && (j1.rows() == 0 || j1.rows() % 4 != 0) {
        violations.push(
            "the structures must act on a doubled space whose dimension is a positive multiple of four"
                .to_string(),
        );
    }
    if let Some(g) = metric {
        if g.rows() != j1.rows() || g.cols() != j1.cols() {
            violations.push("the metric must be the same size as the structures".to_string());
        }
    }
    violations
}

fn structure_violations(name: &str, j: &Matrix, pairing: &Matrix) -> Vec<String> {
    let mut violations = Vec::new();
    if !is_real(j) {
        violations.push(format!("{name} must have real entries"));
    }
    let id = Matrix::identity(j.rows());
    if &(j * j) != &(-&id) {
        violations.push(format!("{name} must square to minus the identity"));
    }
    if &(&(&j.transpose() * pairing) * j) != pairing {
        violations.push(format!("{name} must preserve the natural pairing"));
    }
    violations
}

fn pairing_gram_is_positive(gram: &Matrix) -> bool {
    for k in 1..=gram.rows() {
        if !gram.submatrix(0..k, 0..k).determinant().is_positive_real() {
            return false;
        }
    }
    true
}

pub(crate) fn metric_violations(j1: &Matrix, j2: &Matrix, g: &Matrix) -> Vec<String> {
    let mut violations = Vec::new();
    if !is_real(g) {
        violations.push("the metric must have real entries".to_string());
    }
    let id = Matrix::identity(g.rows());
    if &(g * g) != &id {
        violations.push("the metric must square to the identity".to_string());
    }
    let pairing = pairing_matrix(g.rows() / 4);
    if &(&(&g.transpose() * &pairing) * g) != &pairing {
        violations.push("the metric must preserve the natural pairing".to_string());
    }
    let gram = &pairing * g;
    if gram.transpose() != gram {
        violations.push("the metric pairing must be symmetric".to_string());
    } else if !pairing_gram_is_positive(&gram) {
        violations.push("the metric pairing must be positive definite".to_string());
    }
    if &(g * j1) != &(j1 * g) {
        violations.push("the metric must commute with J1".to_string());
    }
    if &(g * j2) != &(j2 * g) {
        violations.push("the metric must commute with J2".to_string());
    }
    violations
}

impl FlatBiGcModel {
    /// Validates a pair of structures and a metric. A missing metric is
    /// filled in as minus the product of the two structures, which is the
    /// canonical candidate whenever one exists.
    pub fn new(
        j1: Matrix,
        j2: Matrix,
        metric: Option<Matrix>,
        label: &str,
    ) -> Result<Self, ModelError> {
        let shape = shape_violations(&j1, &j2, metric.as_ref());
        if !shape.is_empty() {
            return Err(ModelError::Invalid { violations: shape });
        }
        let pairing = pairing_matrix(j1.rows() / 4);
        let mut violations = structure_violations("J1", &j1, &pairing);
        violations.extend(structure_violations("J2", &j2, &pairing));
        if &(&j1 * &j2) != &(&j2 * &j1) {
            violations.push("J1 and J2 must commute".to_string());
        }
        let metric = metric.unwrap_or_else(|| -&(&j1 * &j2));
        violations.extend(metric_violations(&j1, &j2, &metric));
        if !violations.is_empty() {
            return Err(ModelError::Invalid { violations });
        }
        let n = j1.rows() / 4;
        let frame = Frame::build(n, &j1, &j2)?;
        Ok(FlatBiGcModel {
            n,
            j1,
            j2,
            metric,
            label: label.to_string(),
            frame,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn j1(&self) -> &Matrix {
        &self.j1
    }

    pub fn j2(&self) -> &Matrix {
        &self.j2
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn spinor_space(&self) -> SpinorSpace {
        self.frame.space.clone()
    }

    /// Dimensions of the joint graded pieces.
    pub fn slice_dims(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.frame.support
    }

    /// The differential at one Fourier mode, wedging by i times the mode
    /// covector, split into its four graded components.
    pub fn mode_complex(&self, k: &[i64]) -> Result<ModeComplex, ModelError> {
        if k.len() != 2 * self.n {
            return Err(ModelError::ModeLength {
                expected: 2 * self.n,
                found: k.len(),
            });
        }
        let dim = self.frame.space.dim();
        let mut operator = Matrix::zeros(dim, dim);
        for (j, &kj) in k.iter().enumerate() {
            if kj != 0 {
                operator = &operator + &self.frame.wedges[j].scale(&GaussianRational::imag_int(kj));
            }
        }
        ModeComplex::build(&self.frame, k.to_vec(), operator)
    }

    pub(crate) fn from_doc(doc: ModelDoc) -> Result<Self, ModelError> {
        if doc.j1.rows() != 4 * doc.n || doc.j1.cols() != 4 * doc.n {
            return Err(ModelError::Parse(format!(
                "J1 is {}x{} but n = {} demands {}x{}",
                doc.j1.rows(),
                doc.j1.cols(),
                doc.n,
                4 * doc.n,
                4 * doc.n
            )));
        }
        if doc.j2.rows() != 4 * doc.n || doc.j2.cols() != 4 * doc.n {
            return Err(ModelError::Parse(format!(
                "J2 is {}x{} but n = {} demands {}x{}",
                doc.j2.rows(),
                doc.j2.cols(),
                doc.n,
                4 * doc.n,
                4 * doc.n
            )));
        }
        let metric = match doc.metric {
            MetricField::Given(m) => Some(m),
            MetricField::Auto(tag) => {
                if tag == "auto:-J1J2" {
                    None
                } else {
                    return Err(ModelError::Parse(format!(
                        "unknown metric tag {tag:?}; the only derived form is \"auto:-J1J2\""
                    )));
                }
            }
        };
        FlatBiGcModel::new(doc.j1, doc.j2, metric, &doc.label)
    }

    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        let doc: ModelDoc =
            serde_json::from_str(text).map_err(|e| ModelError::Parse(e.to_string()))?;
        Self::from_doc(doc)
    }

    pub fn to_json(&self) -> String {
        let doc = ModelDoc {
            n: self.n,
            j1: self.j1.clone(),
            j2: self.j2.clone(),
            metric: MetricField::Given(self.metric.clone()),
            label: self.label.clone(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("a model always serializes");
        text.push('\n');
        text
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum MetricField {
    Auto(String),
    Given(Matrix),
}

#[derive(Serialize, Deserialize)]
pub(crate) struct ModelDoc {
    pub n: usize,
    #[serde(rename = "J1")]
    pub j1: Matrix,
    #[serde(rename = "J2")]
    pub j2: Matrix,
    #[serde(rename = "G")]
    pub metric: MetricField,
    pub label: String,
}

/// The flat two torus with its standard commuting pair: one structure of
/// symplectic type and one of complex type, metric derived from the pair.
pub fn standard_two_torus() -> FlatBiGcModel {
    let j1 = Matrix::from_int_rows(&[
        &[0, 0, 0, 1],
        &[0, 0, -1, 0],
        &[0, 1, 0, 0],
        &[-1, 0, 0, 0],
    ]);
    let j2 = Matrix::from_int_rows(&[
        &[0, 1, 0, 0],
        &[-1, 0, 0, 0],
        &[0, 0, 0, 1],
        &[0, 0, -1, 0],
    ]);
    FlatBiGcModel::new(j1, j2, None, "standard two torus")
        .expect("the standard two torus satisfies every axiom")
}

pub(crate) fn four_torus_j1() -> Matrix {
    Matrix::from_int_rows(&[
        &[0, 0, 0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, -1, 0, 0, 0],
        &[0, 0, 0, 0, 0, -1, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0],
        &[-1, 0, 0, 0, 0, 0, 0, 0],
        &[0, -1, 0, 0, 0, 0, 0, 0],
    ])
}

pub(crate) fn four_torus_j2() -> Matrix {
    Matrix::from_int_rows(&[
        &[0, 1, 0, 0, 0, 0, 0, 0],
        &[-1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0],
        &[0, 0, -1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, -1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, 0, 0, -1, 0],
    ])
}

/// The flat four torus with a symplectic type structure pairing the two
/// coordinate planes against each other and a complex type structure acting
/// plane by plane. Minus the product of this pair is not positive, so the
/// metric cannot be derived from them; the compatible choice is the plain
/// exchange of tangent and cotangent directions, given explicitly.
pub fn standard_four_torus() -> FlatBiGcModel {
    let swap = Matrix::from_fn(8, 8, |r, c| {
        if r + 4 == c || c + 4 == r {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    });
    FlatBiGcModel::new(four_torus_j1(), four_torus_j2(), Some(swap), "standard four torus")
        .expect("the standard four torus satisfies every axiom")
}

/// Outcome of searching for a compatible metric for a commuting pair.
#[derive(Clone, Debug)]
pub struct MetricProbe {
    /// Dimension of the space of real matrices commuting with both
    /// structures and symmetric against the pairing.
    pub candidate_space_dim: usize,
    /// How many candidates were tested against the nonlinear axioms.
    pub samples_tried: usize,
    /// The first candidate that satisfied every metric axiom, if any.
    pub witness: Option<Matrix>,
}

/// Searches for a compatible metric: solves the linear constraints exactly,
/// then samples small rational combinations of the solution basis for the
/// two nonlinear axioms, squaring to the identity and positivity. Minus the
/// product of the structures is always tried first.
pub fn probe_compatible_metric(j1: &Matrix, j2: &Matrix) -> Result<MetricProbe, ModelError> {
    let shape = shape_violations(j1, j2, None);
    if !shape.is_empty() {
        return Err(ModelError::Invalid { violations: shape });
    }
    let pairing = pairing_matrix(j1.rows() / 4);
    let mut violations = structure_violations("J1", j1, &pairing);
    violations.extend(structure_violations("J2", j2, &pairing));
    if &(j1 * j2) != &(j2 * j1) {
        violations.push("J1 and J2 must commute".to_string());
    }
    if !violations.is_empty() {
        return Err(ModelError::Invalid { violations });
    }

    let m = j1.rows();
    let var = |r: usize, c: usize| r * m + c;
    let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
    // Commutation with each structure: GJ - JG = 0 entrywise.
    for j in [j1, j2] {
        for i in 0..m {
            for k in 0..m {
                let mut row = vec![GaussianRational::zero(); m * m];
                for c in 0..m {
                    let cur = row[var(i, c)].clone();
                    row[var(i, c)] = &cur + j.get(c, k);
                }
                for r in 0..m {
                    let cur = row[var(r, k)].clone();
                    row[var(r, k)] = &cur - j.get(i, r);
                }
                rows.push(row);
            }
        }
    }
    // Symmetry of the pairing Gram form: (PG) transposed equals PG, and for
    // the swap pairing PG just permutes the rows of G.
    let half = m / 2;
    let sigma = |i: usize| (i + half) % m;
    for i in 0..m {
        for k in (i + 1)..m {
            let mut row = vec![GaussianRational::zero(); m * m];
            let cur = row[var(sigma(i), k)].clone();
            row[var(sigma(i), k)] = &cur + &GaussianRational::one();
            let cur = row[var(sigma(k), i)].clone();
            row[var(sigma(k), i)] = &cur - &GaussianRational::one();
            rows.push(row);
        }
    }
    let system = Matrix::from_rows(rows)?;
    let kernel = system.kernel_basis();
    let candidate_space_dim = kernel.cols();

    let devectorize = |v: &[GaussianRational]| {
        Matrix::from_fn(m, m, |r, c| v[var(r, c)].clone())
    };

    let mut candidates: Vec<Matrix> = vec![-&(j1 * j2)];
    for i in 0..kernel.cols() {
        let b = kernel.column(i);
        candidates.push(devectorize(&b));
        candidates.push(-&devectorize(&b));
    }
    'pairs: for i in 0..kernel.cols() {
        for j in (i + 1)..kernel.cols() {
            for (si, sj) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                let v: Vec<GaussianRational> = kernel
                    .column(i)
                    .iter()
                    .zip(kernel.column(j).iter())
                    .map(|(a, b)| {
                        &(a * &GaussianRational::from_int(si))
                            + &(b * &GaussianRational::from_int(sj))
                    })
                    .collect();
                candidates.push(devectorize(&v));
                if candidates.len() > 512 {
                    break 'pairs;
                }
            }
        }
    }

    let mut samples_tried = 0usize;
    let mut witness = None;
    for g in candidates {
        samples_tried += 1;
        if metric_violations(j1, j2, &g).is_empty() {
            witness = Some(g);
            break;
        }
    }
    Ok(MetricProbe {
        candidate_space_dim,
        samples_tried,
        witness,
    })
}
