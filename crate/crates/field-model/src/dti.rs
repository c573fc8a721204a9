use std::sync::Arc;

use nalgebra::Matrix3;
use sphere_grid::Tessellation;

use crate::error::FieldError;
use crate::field::OrientationField;

/// A regular grid of symmetric positive-definite 3×3 diffusion tensors.
#[derive(Debug, Clone)]
pub struct DtiVolume {
    nx: usize,
    ny: usize,
    nz: usize,
    h: f64,
    tensors: Vec<Matrix3<f64>>,
}

impl DtiVolume {
    /// Builds a volume after checking symmetry (to 1e-12 relative) and
    /// positive-definiteness of every tensor.
    pub fn new(
        dims: (usize, usize, usize),
        h: f64,
        tensors: Vec<Matrix3<f64>>,
    ) -> Result<Self, FieldError> {
        assert_eq!(dims.0 * dims.1 * dims.2, tensors.len());
        for (i, d) in tensors.iter().enumerate() {
            let voxel = (
                i / (dims.1 * dims.2),
                (i / dims.2) % dims.1,
                i % dims.2,
            );
            let asym = (d - d.transpose()).norm();
            if asym > 1e-12 * d.norm().max(1.0) {
                return Err(FieldError::NonSpd { voxel });
            }
            let eigenvalues = d.symmetric_eigenvalues();
            if eigenvalues.iter().any(|&l| l <= 0.0) {
                return Err(FieldError::NonSpd { voxel });
            }
        }
        Ok(Self {
            nx: dims.0,
            ny: dims.1,
            nz: dims.2,
            h,
            tensors,
        })
    }

    /// Grid dimensions.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.nx, self.ny, self.nz)
    }

    /// Grid spacing.
    pub fn spacing(&self) -> f64 {
        self.h
    }

    /// Tensor at a voxel.
    pub fn tensor(&self, x: usize, y: usize, z: usize) -> &Matrix3<f64> {
        &self.tensors[(x * self.ny + y) * self.nz + z]
    }
}

/// Converts a tensor volume to an orientation field:
/// `U(y, n) = 3 · nᵀ D(y) n / (4π ∫ trace D)`, with the trace integral taken
/// as the grid sum times the voxel volume. The result integrates to 1 over
/// positions × directions up to the angular quadrature error (which vanishes
/// for this grid because the direction samples average second moments
/// isotropically).
pub fn dti_to_field(volume: &DtiVolume, tessellation: Arc<Tessellation>) -> OrientationField {
    let h3 = volume.h.powi(3);
    let trace_integral: f64 = volume.tensors.iter().map(|d| d.trace()).sum::<f64>() * h3;
    let scale = 3.0 / (4.0 * std::f64::consts::PI * trace_integral);
    let dirs = tessellation.vertices().to_vec();
    OrientationField::from_fn(
        volume.dims(),
        volume.h,
        tessellation,
        |x, y, z, l| {
            let d = volume.tensor(x, y, z);
            let n = &dirs[l];
            scale * (d * n).dot(n)
        },
    )
}
