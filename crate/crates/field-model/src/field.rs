use std::sync::Arc;

use sphere_grid::Tessellation;

/// A scalar field `U(y, n)` on a regular position grid crossed with a
/// spherical direction grid.
///
/// Values are stored in double precision with the direction index fastest:
/// `index = ((x·Ny + y)·Nz + z)·N_o + l`. Fields used as densities are
/// non-negative; signed fields arise as intermediate results of morphological
/// operations, and [`OrientationField::is_nonnegative`] reports which case
/// holds.
#[derive(Debug, Clone)]
pub struct OrientationField {
    nx: usize,
    ny: usize,
    nz: usize,
    h: f64,
    tessellation: Arc<Tessellation>,
    data: Vec<f64>,
}

impl OrientationField {
    /// Zero field of the given shape.
    pub fn zeros(dims: (usize, usize, usize), h: f64, tessellation: Arc<Tessellation>) -> Self {
        let len = dims.0 * dims.1 * dims.2 * tessellation.vertex_count();
        Self {
            nx: dims.0,
            ny: dims.1,
            nz: dims.2,
            h,
            tessellation,
            data: vec![0.0; len],
        }
    }

    /// Field with values produced by `f(x, y, z, l)`.
    pub fn from_fn(
        dims: (usize, usize, usize),
        h: f64,
        tessellation: Arc<Tessellation>,
        mut f: impl FnMut(usize, usize, usize, usize) -> f64,
    ) -> Self {
        let mut field = Self::zeros(dims, h, tessellation);
        let n_dirs = field.direction_count();
        let (nx, ny, nz) = (field.nx, field.ny, field.nz);
        let mut i = 0;
        for x in 0..nx {
            for y in 0..ny {
                for z in 0..nz {
                    for l in 0..n_dirs {
                        field.data[i] = f(x, y, z, l);
                        i += 1;
                    }
                }
            }
        }
        field
    }

    /// Takes ownership of a raw value vector laid out as documented.
    pub fn from_data(
        dims: (usize, usize, usize),
        h: f64,
        tessellation: Arc<Tessellation>,
        data: Vec<f64>,
    ) -> Self {
        assert_eq!(
            data.len(),
            dims.0 * dims.1 * dims.2 * tessellation.vertex_count(),
            "data length does not match field shape"
        );
        Self {
            nx: dims.0,
            ny: dims.1,
            nz: dims.2,
            h,
            tessellation,
            data,
        }
    }

    /// Position grid dimensions `(Nx, Ny, Nz)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.nx, self.ny, self.nz)
    }

    /// Position grid spacing.
    pub fn spacing(&self) -> f64 {
        self.h
    }

    /// The direction grid.
    pub fn tessellation(&self) -> &Arc<Tessellation> {
        &self.tessellation
    }

    /// Number of direction samples per voxel.
    pub fn direction_count(&self) -> usize {
        self.tessellation.vertex_count()
    }

    /// Number of position voxels.
    pub fn voxel_count(&self) -> usize {
        self.nx * self.ny * self.nz
    }

    /// Flat index of `(x, y, z, l)`.
    #[inline]
    pub fn idx(&self, x: usize, y: usize, z: usize, l: usize) -> usize {
        ((x * self.ny + y) * self.nz + z) * self.direction_count() + l
    }

    /// Value at `(x, y, z, l)`.
    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize, l: usize) -> f64 {
        self.data[self.idx(x, y, z, l)]
    }

    /// Sets the value at `(x, y, z, l)`.
    #[inline]
    pub fn set(&mut self, x: usize, y: usize, z: usize, l: usize, value: f64) {
        let i = self.idx(x, y, z, l);
        self.data[i] = value;
    }

    /// All values in layout order.
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Mutable access to all values in layout order.
    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// The direction values of one voxel.
    pub fn voxel(&self, x: usize, y: usize, z: usize) -> &[f64] {
        let start = self.idx(x, y, z, 0);
        &self.data[start..start + self.direction_count()]
    }

    /// Mutable direction values of one voxel.
    pub fn voxel_mut(&mut self, x: usize, y: usize, z: usize) -> &mut [f64] {
        let start = self.idx(x, y, z, 0);
        let n = self.direction_count();
        &mut self.data[start..start + n]
    }

    /// A field of the same shape filled with zeros.
    pub fn same_shape(&self) -> Self {
        Self::zeros((self.nx, self.ny, self.nz), self.h, Arc::clone(&self.tessellation))
    }

    /// Whether every value is ≥ 0 (density semantics).
    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&v| v >= 0.0)
    }

    /// Whether every value is finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Smallest and largest value over the whole field.
    pub fn min_max(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in &self.data {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }

    /// Integral of the field with the product measure `δ(n_l)·h³`.
    pub fn integral(&self) -> f64 {
        let measures = self.tessellation.measures();
        let n = self.direction_count();
        let cell = self.h * self.h * self.h;
        let mut total = 0.0;
        for chunk in self.data.chunks_exact(n) {
            for (v, m) in chunk.iter().zip(measures) {
                total += v * m;
            }
        }
        total * cell
    }

    /// Two fields live on the same grid (shape, spacing, direction count).
    pub fn same_grid(&self, other: &Self) -> bool {
        self.dims() == other.dims()
            && self.h == other.h
            && self.direction_count() == other.direction_count()
    }
}
