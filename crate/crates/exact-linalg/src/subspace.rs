//! Subspaces of Q(i)^n in a canonical form, with the lattice operations
//! (sum, intersection, quotient dimension) used by every cohomology
//! computation downstream.
//!
//! A subspace is stored as an `ambient x dim` basis matrix in reduced column
//! echelon form: pivot entries are 1, pivot rows are strictly increasing, and
//! every pivot row is zero in all other columns. This form is unique per
//! subspace, so structural equality of the basis matrices is equality of
//! subspaces, and sorting or hashing subspaces is meaningful.

use crate::matrix::Matrix;
use crate::scalar::GaussianRational;
use crate::LinalgError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    /// `ambient x dim`, reduced column echelon.
    basis: Matrix,
    /// Pivot row of each basis column, strictly increasing.
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ambient, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalizes the span of the given columns.
    pub fn from_spanning_columns(columns: &Matrix) -> Self {
        let ambient = columns.rows();
        let (reduced, pivots) = columns.transpose().rref();
        let dim = pivots.len();
        let basis = Matrix::from_fn(ambient, dim, |r, c| reduced.get(c, r).clone());
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<GaussianRational>]) -> Result<Self, LinalgError> {
        Ok(Subspace::from_spanning_columns(&Matrix::from_columns(ambient, vectors)?))
    }

    /// Column space of a matrix.
    pub fn image(of: &Matrix) -> Self {
        Subspace::from_spanning_columns(of)
    }

    /// Right kernel of a matrix, as a subspace of the domain.
    pub fn kernel(of: &Matrix) -> Self {
        Subspace::from_spanning_columns(&of.kernel_basis())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The canonical `ambient x dim` basis matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_column(&self, j: usize) -> Vec<GaussianRational> {
        self.basis.column(j)
    }

    /// Reduces `v` modulo this subspace; the residue is zero iff `v` lies in it.
    fn residue(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.ambient, "vector/ambient mismatch");
        let mut w = v.to_vec();
        for (j, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for r in 0..self.ambient {
                let b = self.basis.get(r, j);
                if !b.is_zero() {
                    w[r] -= &(b * &factor);
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[GaussianRational]) -> bool {
        self.residue(v).iter().all(|x| x.is_zero())
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the span.
    /// Reduced column echelon form makes extraction direct: the coefficient
    /// of column `j` is the entry of `v` at that column's pivot row.
    pub fn express(&self, v: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && (0..other.dim()).all(|j| self.contains_vector(&other.basis_column(j)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other, "sum")?;
        let stacked = Matrix::hstack(&[&self.basis, &other.basis])?;
        Ok(Subspace::from_spanning_columns(&stacked))
    }

    /// Intersection via the kernel of `[B_self | -B_other]`: a kernel vector
    /// `(x, y)` witnesses `B_self x = B_other y`, a point of both spans.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other, "intersect")?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let neg = -&other.basis;
        let stacked = Matrix::hstack(&[&self.basis, &neg])?;
        let kernel = stacked.kernel_basis();
        let coeffs = kernel.submatrix(0..self.dim(), 0..kernel.cols());
        Ok(Subspace::from_spanning_columns(&(&self.basis * &coeffs)))
    }

    /// `dim(self / denominator)`; errors unless `denominator` is contained in `self`.
    pub fn quotient_dim(&self, denominator: &Subspace) -> Result<usize, LinalgError> {
        self.check_ambient(denominator, "quotient_dim")?;
        if !self.contains(denominator) {
            return Err(LinalgError::NotASubspace { op: "quotient_dim" });
        }
        Ok(self.dim() - denominator.dim())
    }

    /// Deterministic representatives of `self / denominator`: the canonical
    /// basis columns of `self` that extend a basis of `denominator`, greedily
    /// in canonical order. Returned as an `ambient x quotient_dim` matrix.
    pub fn quotient_representatives(&self, denominator: &Subspace) -> Result<Matrix, LinalgError> {
        self.check_ambient(denominator, "quotient_representatives")?;
        if !self.contains(denominator) {
            return Err(LinalgError::NotASubspace {
                op: "quotient_representatives",
            });
        }
        let mut span = denominator.clone();
        let mut reps: Vec<Vec<GaussianRational>> = Vec::new();
        for j in 0..self.dim() {
            let col = self.basis_column(j);
            if !span.contains_vector(&col) {
                reps.push(col.clone());
                span = span.sum(&Subspace::from_vectors(self.ambient, &[col])?)?;
            }
        }
        Matrix::from_columns(self.ambient, &reps)
    }

    /// Entrywise conjugate of the subspace, recanonicalized.
    pub fn conj(&self) -> Subspace {
        Subspace::from_spanning_columns(&self.basis.conj())
    }

    /// Image of this subspace under a linear map given by `ambient_out x ambient_in` matrix.
    pub fn map_through(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "map/ambient mismatch");
        Subspace::from_spanning_columns(&(map * &self.basis))
    }

    /// Preimage `{v : map v in self}` of this subspace under `map`.
    pub fn preimage_under(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.rows(), self.ambient, "map/ambient mismatch");
        // v is in the preimage iff map v = B c for some c: kernel of [map | -B].
        if self.dim() == 0 {
            return Subspace::kernel(map);
        }
        let neg = -&self.basis;
        let stacked = Matrix::hstack(&[map, &neg]).expect("row counts match");
        let kernel = stacked.kernel_basis();
        let head = kernel.submatrix(0..map.cols(), 0..kernel.cols());
        Subspace::from_spanning_columns(&head)
    }

    fn check_ambient(&self, other: &Subspace, op: &'static str) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                op,
                lhs: self.ambient,
                rhs: other.ambient,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of Q(i)^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_unique_per_span() {
        let a = Matrix::from_int_rows(&[&[1, 1], &[1, 2], &[0, 1]]);
        let b = Matrix::from_int_rows(&[&[2, 3], &[2, 5], &[0, 2]]);
        assert_eq!(Subspace::from_spanning_columns(&a), Subspace::from_spanning_columns(&b));
    }

    #[test]
    fn express_recovers_coefficients() {
        let s = Subspace::from_spanning_columns(&Matrix::from_int_rows(&[&[1, 0], &[2, 1], &[0, 3]]));
        let v = vec![
            GaussianRational::from_int(2),
            GaussianRational::from_int(5),
            GaussianRational::from_int(3),
        ];
        let coeffs = s.express(&v).unwrap();
        let rebuilt = s.basis().mul_vec(&coeffs);
        assert_eq!(rebuilt, v);
        assert!(s
            .express(&[GaussianRational::zero(), GaussianRational::one(), GaussianRational::from_int(3)])
            .is_some());
        assert!(s
            .express(&[GaussianRational::zero(), GaussianRational::zero(), GaussianRational::one()])
            .is_none());
    }

    #[test]
    fn modular_law_fails_but_dimension_formula_holds() {
        // dim(u+w) + dim(u cap w) = dim u + dim w on a concrete pair.
        let u = Subspace::from_spanning_columns(&Matrix::from_int_rows(&[&[1, 0], &[0, 1], &[0, 0]]));
        let w = Subspace::from_spanning_columns(&Matrix::from_int_rows(&[&[0, 0], &[1, 0], &[0, 1]]));
        let sum = u.sum(&w).unwrap();
        let cap = u.intersect(&w).unwrap();
        assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        assert_eq!(sum.dim(), 3);
        assert_eq!(cap.dim(), 1);
    }

    #[test]
    fn quotient_representatives_extend_the_denominator() {
        let k = Subspace::full(3);
        let i = Subspace::from_spanning_columns(&Matrix::from_int_rows(&[&[1], &[1], &[0]]));
        let reps = k.quotient_representatives(&i).unwrap();
        assert_eq!(reps.cols(), 2);
        let mut all = i.clone();
        for j in 0..reps.cols() {
            all = all
                .sum(&Subspace::from_vectors(3, &[reps.column(j)]).unwrap())
                .unwrap();
        }
        assert_eq!(all, k);
    }

    #[test]
    fn quotient_dim_rejects_non_subspaces() {
        let u = Subspace::from_spanning_columns(&Matrix::from_int_rows(&[&[1], &[0]]));
        let w = Subspace::from_spanning_columns(&Matrix::from_int_rows(&[&[0], &[1]]));
        assert!(u.quotient_dim(&w).is_err());
    }
}
