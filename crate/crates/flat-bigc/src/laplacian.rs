//! Laplacians of one mode: the full differential, the two middle
//! regradings, each single component, and the joint Laplacian of each
//! anticommuting component pair.

use exact_linalg::Matrix;

use crate::error::ModelError;
use crate::hodge::HodgeForm;
use crate::mode::DeltaKind;
use crate::model::FlatBiGcModel;
use crate::reindex::DeltaPair;

/// Every Laplacian of one mode.
#[derive(Clone, Debug)]
pub struct Laplacians {
    de_rham: Matrix,
    partial_one: Matrix,
    partial_two: Matrix,
    singles: [Matrix; 4],
    pairs: [Matrix; 4],
}

fn single_laplacian(op: &Matrix, form: &HodgeForm) -> Matrix {
    let adj = form.adjoint(op);
    &(op * &adj) + &(&adj * op)
}

fn pair_index(pair: DeltaPair) -> usize {
    match pair {
        DeltaPair::PlusMinus => 0,
        DeltaPair::PlusBarMinus => 1,
        DeltaPair::BarPlusMinus => 2,
        DeltaPair::BarPlusBarMinus => 3,
    }
}

impl Laplacians {
    /// Laplacian of the whole mode differential.
    pub fn de_rham(&self) -> &Matrix {
        &self.de_rham
    }

    /// Laplacian of the sum of the two raising-degree components.
    pub fn partial_one(&self) -> &Matrix {
        &self.partial_one
    }

    /// Laplacian of the raising component plus the barred lowering one.
    pub fn partial_two(&self) -> &Matrix {
        &self.partial_two
    }

    /// Laplacian of a single component.
    pub fn single(&self, kind: DeltaKind) -> &Matrix {
        &self.singles[kind.index()]
    }

    /// The six term joint Laplacian of an anticommuting pair.
    pub fn pair(&self, pair: DeltaPair) -> &Matrix {
        &self.pairs[pair_index(pair)]
    }
}

impl FlatBiGcModel {
    pub fn laplacians(&self, k: &[i64]) -> Result<Laplacians, ModelError> {
        let form = self.hodge_form()?;
        let mc = self.mode_complex(k)?;

        let de_rham = single_laplacian(mc.operator(), &form);
        let partial_one = single_laplacian(
            &(mc.delta(DeltaKind::Plus) + mc.delta(DeltaKind::Minus)),
            &form,
        );
        let partial_two = single_laplacian(
            &(mc.delta(DeltaKind::Plus) + mc.delta(DeltaKind::BarMinus)),
            &form,
        );
        let singles = DeltaKind::ALL.map(|kind| single_laplacian(mc.delta(kind), &form));

        let mut pairs_vec = Vec::with_capacity(4);
        for pair in DeltaPair::ALL {
            let (first, second) = pair.laplacian_order();
            let di = mc.delta(first);
            let dj = mc.delta(second);
            let si = form.adjoint(di);
            let sj = form.adjoint(dj);
            // di dj sj si + sj si di dj + sj di si dj + si dj sj di
            //   + si di + sj dj
            let t1 = &(&(di * dj) * &sj) * &si;
            let t2 = &(&(&sj * &si) * di) * dj;
            let t3 = &(&(&sj * di) * &si) * dj;
            let t4 = &(&(&si * dj) * &sj) * di;
            let t5 = &si * di;
            let t6 = &sj * dj;
            pairs_vec.push(&(&(&(&(&t1 + &t2) + &t3) + &t4) + &t5) + &t6);
        }
        let pairs: [Matrix; 4] = pairs_vec
            .try_into()
            .expect("exactly four pairs are assembled");

        Ok(Laplacians {
            de_rham,
            partial_one,
            partial_two,
            singles,
            pairs,
        })
    }
}
