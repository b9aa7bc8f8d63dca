//! Dense matrices over the Gaussian rationals, with exact elimination.
//!
//! Everything here is rank-exact: there are no tolerances anywhere, a pivot
//! is any entry that is not structurally zero. Row reduction is deterministic
//! (topmost nonzero entry wins), so every derived object (kernel basis,
//! echelon form, solutions) is reproducible across runs.

use crate::scalar::GaussianRational;
use crate::LinalgError;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense `rows x cols` matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows, which must be nonragged.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in &rows {
            if row.len() != ncols {
                return Err(LinalgError::RaggedRows {
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().cloned());
        }
        Ok(Matrix { rows: nrows, cols: ncols, data })
    }

    /// Convenience constructor from integer entries, mostly for tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| GaussianRational::from_int(n)).collect())
                .collect(),
        )
        .expect("integer rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn conj_transpose(&self) -> Matrix {
        self.transpose().conj()
    }

    pub fn scale(&self, s: &GaussianRational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn column(&self, c: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<GaussianRational> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn from_columns(ambient: usize, columns: &[Vec<GaussianRational>]) -> Result<Self, LinalgError> {
        for col in columns {
            if col.len() != ambient {
                return Err(LinalgError::RaggedRows {
                    expected: ambient,
                    found: col.len(),
                });
            }
        }
        Ok(Matrix::from_fn(ambient, columns.len(), |r, c| columns[c][r].clone()))
    }

    /// Horizontal concatenation `[A | B | ...]`. All blocks share a row count.
    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix, LinalgError> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        for b in blocks {
            if b.rows != rows {
                return Err(LinalgError::ShapeMismatch {
                    op: "hstack",
                    lhs: (rows, 0),
                    rhs: (b.rows, b.cols),
                });
            }
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, offset + c, b.get(r, c).clone());
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation. All blocks share a column count.
    pub fn vstack(blocks: &[&Matrix]) -> Result<Matrix, LinalgError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::ShapeMismatch {
                    op: "vstack",
                    lhs: (0, cols),
                    rhs: (b.rows, b.cols),
                });
            }
        }
        let mut data = Vec::new();
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix {
            rows: blocks.iter().map(|b| b.rows).sum(),
            cols,
            data,
        })
    }

    pub fn submatrix(&self, row_range: std::ops::Range<usize>, col_range: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(row_range.len(), col_range.len(), |r, c| {
            self.get(row_range.start + r, col_range.start + c).clone()
        })
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len(), "mul_vec dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += &(a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let found = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero());
            let Some(r) = found else { continue };
            self.swap_rows(pivot_row, r);
            let inv = self.get(pivot_row, col).inv();
            for c in col..self.cols {
                let v = self.get(pivot_row, c) * &inv;
                self.set(pivot_row, c, v);
            }
            for r2 in 0..self.rows {
                if r2 == pivot_row || self.get(r2, col).is_zero() {
                    continue;
                }
                let factor = self.get(r2, col).clone();
                for c in col..self.cols {
                    let v = self.get(r2, c) - &(self.get(pivot_row, c) * &factor);
                    self.set(r2, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : Ax = 0}` as columns, in the
    /// deterministic order of the free columns.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, GaussianRational::one());
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(pc, j, -r.get(row, fc).clone());
            }
        }
        out
    }

    /// One solution of `self * X = rhs` with free variables set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve dimension mismatch");
        let stacked = Matrix::hstack(&[self, rhs]).expect("row counts match");
        let (red, pivots) = stacked.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, red.get(row, self.cols + c).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.rows))?;
        if (self * &x) == Matrix::identity(self.rows) {
            Some(x)
        } else {
            None
        }
    }

    /// Determinant by Gaussian elimination with row swaps. Panics on
    /// non-square input.
    pub fn determinant(&self) -> GaussianRational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = GaussianRational::one();
        for col in 0..m.cols {
            let found = (col..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(r) = found else {
                return GaussianRational::zero();
            };
            if r != col {
                m.swap_rows(col, r);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let inv = pivot.inv();
            for r2 in col + 1..m.rows {
                if m.get(r2, col).is_zero() {
                    continue;
                }
                let factor = m.get(r2, col) * &inv;
                for c in col..m.cols {
                    let v = m.get(r2, c) - &(m.get(col, c) * &factor);
                    m.set(r2, c, v);
                }
            }
        }
        det
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<&GaussianRational>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<GaussianRational>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
