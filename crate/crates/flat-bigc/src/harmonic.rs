//! Harmonic decomposition of one graded piece under an anticommuting
//! component pair: the joint kernel splits as the kernel of the joint
//! Laplacian plus the image of the composed pair, and the split is checked
//! exactly rather than assumed.

use exact_linalg::Subspace;

use crate::error::ModelError;
use crate::model::FlatBiGcModel;
use crate::reindex::DeltaPair;

/// Dimensions of the three subspaces and whether they really split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HarmonicReport {
    /// The joint kernel of the two components inside the piece.
    pub kernel_dim: usize,
    /// The kernel of the joint Laplacian inside the piece.
    pub harmonic_dim: usize,
    /// The image of the composed pair inside the piece.
    pub image_dim: usize,
    /// Whether harmonic plus image exactly fills the joint kernel with
    /// trivial overlap.
    pub verified: bool,
}

impl FlatBiGcModel {
    pub fn harmonic_decomposition(
        &self,
        k: &[i64],
        pair: DeltaPair,
        slice: (i64, i64),
    ) -> Result<HarmonicReport, ModelError> {
        let mc = self.mode_complex(k)?;
        let basis = match mc.piece_basis(slice.0, slice.1) {
            Some(b) => b.clone(),
            None => {
                return Ok(HarmonicReport {
                    kernel_dim: 0,
                    harmonic_dim: 0,
                    image_dim: 0,
                    verified: true,
                })
            }
        };
        let piece = Subspace::from_spanning_columns(&basis);
        let laplacians = self.laplacians(k)?;
        let (first, second) = pair.laplacian_order();
        let di = mc.delta(first);
        let dj = mc.delta(second);

        let joint_kernel = Subspace::kernel(di)
            .intersect(&Subspace::kernel(dj))?
            .intersect(&piece)?;
        let harmonic = Subspace::kernel(laplacians.pair(pair)).intersect(&piece)?;
        let image = Subspace::image(&(di * dj)).intersect(&piece)?;

        let verified = joint_kernel.contains(&harmonic)
            && joint_kernel.contains(&image)
            && harmonic.intersect(&image)?.is_zero()
            && harmonic.dim() + image.dim() == joint_kernel.dim();

        Ok(HarmonicReport {
            kernel_dim: joint_kernel.dim(),
            harmonic_dim: harmonic.dim(),
            image_dim: image.dim(),
            verified,
        })
    }
}
