//! Solvability checks tying a slice's cohomology to an explicit constant
//! coefficient system: on the standard four torus the extreme slices are
//! spanned by the two canonical spinor lines, and a mode contributes to
//! them exactly when the mode function satisfies the corresponding
//! holomorphicity equations.

use exact_linalg::GaussianRational;

use crate::error::ModelError;
use crate::model::{four_torus_j1, four_torus_j2, FlatBiGcModel};
use crate::reindex::DeltaPair;

/// The constraint residues of one mode against one slice descriptor,
/// alongside the slice's cohomology at that mode.
#[derive(Clone, Debug)]
pub struct PdeSliceReport {
    pub descriptor: String,
    pub mode: Vec<i64>,
    /// One residue per complex coordinate; the system is satisfied when all
    /// of them vanish.
    pub constraints: Vec<GaussianRational>,
    pub constraints_satisfied: bool,
    pub cohomology_dim: usize,
    /// Whether satisfaction coincides with a nonzero cohomology dimension.
    pub equivalent: bool,
}

fn parse_descriptor(descriptor: &str) -> Option<(i64, i64)> {
    let inner = descriptor.strip_prefix("H^{")?.strip_suffix('}')?;
    let (p, q) = inner.split_once(',')?;
    Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
}

impl FlatBiGcModel {
    /// Checks one mode of the standard four torus against a canonical slice
    /// descriptor. The slice at (0, -2) is cut out by the holomorphic
    /// system and the slice at (0, 2) by the antiholomorphic one.
    pub fn pde_slice_check(
        &self,
        k: &[i64],
        descriptor: &str,
    ) -> Result<PdeSliceReport, ModelError> {
        let slice = parse_descriptor(descriptor).ok_or_else(|| {
            ModelError::UnsupportedDescriptor {
                descriptor: descriptor.to_string(),
                reason: "descriptors look like H^{p,q}".to_string(),
            }
        })?;
        if slice != (0, -2) && slice != (0, 2) {
            return Err(ModelError::UnsupportedDescriptor {
                descriptor: descriptor.to_string(),
                reason: "only the canonical slices (0,-2) and (0,2) carry a known system"
                    .to_string(),
            });
        }
        if self.n != 2 || self.j1 != four_torus_j1() || self.j2 != four_torus_j2() {
            return Err(ModelError::UnsupportedDescriptor {
                descriptor: descriptor.to_string(),
                reason: "the system is tabulated only for the standard four torus structures"
                    .to_string(),
            });
        }
        if k.len() != 4 {
            return Err(ModelError::ModeLength {
                expected: 4,
                found: k.len(),
            });
        }

        // The mode function is e^{i<k, x>} in coordinates (x1, y1, x2, y2).
        // Its derivative along the antiholomorphic (respectively
        // holomorphic) direction of plane j is proportional to the residue
        // below; vanishing of both residues is the system.
        let holomorphic = slice == (0, -2);
        let mut constraints = Vec::with_capacity(2);
        for plane in 0..2 {
            let kx = GaussianRational::imag_int(k[2 * plane]);
            let ky = GaussianRational::from_int(k[2 * plane + 1]);
            constraints.push(if holomorphic { &kx - &ky } else { &kx + &ky });
        }
        let constraints_satisfied = constraints.iter().all(|c| c.is_zero());

        let rc = self.mode_complex(k)?.reindex(DeltaPair::PlusMinus);
        let cohomology_dim = match rc.bidegree_of(slice.0, slice.1) {
            Some((a, b)) => rc.complex().bott_chern_at(a, b).dim(),
            None => 0,
        };

        Ok(PdeSliceReport {
            descriptor: descriptor.to_string(),
            mode: k.to_vec(),
            constraints,
            constraints_satisfied,
            cohomology_dim,
            equivalent: constraints_satisfied == (cohomology_dim > 0),
        })
    }
}
