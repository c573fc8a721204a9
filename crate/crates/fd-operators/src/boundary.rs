/// Rule applied when a spatial stencil point falls outside the volume.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    /// Mirror indices across the faces (zero-flux behavior). The default.
    #[default]
    Reflect,
    /// Wrap indices around to the opposite face.
    Periodic,
    /// Treat everything outside the volume as zero.
    Zero,
}

impl Boundary {
    /// Maps a possibly out-of-range index into `0..len`, or `None` when the
    /// sample is dropped under the zero rule.
    pub(crate) fn map(self, index: i64, len: usize) -> Option<usize> {
        let n = len as i64;
        match self {
            Boundary::Reflect => {
                let mut i = index;
                // Mirroring shrinks the overshoot each pass, so the loop ends
                // quickly for the one- and two-cell stencils used here.
                loop {
                    if i < 0 {
                        i = -1 - i;
                    } else if i >= n {
                        i = 2 * n - 1 - i;
                    } else {
                        return Some(i as usize);
                    }
                }
            }
            Boundary::Periodic => Some(index.rem_euclid(n) as usize),
            Boundary::Zero => (0..n).contains(&index).then_some(index as usize),
        }
    }
}

/// Visits the trilinear interpolation footprint of a fractional grid position:
/// up to eight `(index triple, weight)` pairs with weights summing to 1 (to
/// less when the zero rule drops corners). Corners with exactly zero weight
/// are skipped, so integer positions touch a single cell.
pub(crate) fn trilinear_footprint(
    pos: [f64; 3],
    dims: (usize, usize, usize),
    boundary: Boundary,
    mut emit: impl FnMut([usize; 3], f64),
) {
    let base = [pos[0].floor(), pos[1].floor(), pos[2].floor()];
    let frac = [pos[0] - base[0], pos[1] - base[1], pos[2] - base[2]];
    let lens = [dims.0, dims.1, dims.2];
    'corners: for corner in 0..8u32 {
        let mut weight = 1.0;
        let mut idx = [0usize; 3];
        for axis in 0..3 {
            let hi = (corner >> axis) & 1;
            let factor = if hi == 1 { frac[axis] } else { 1.0 - frac[axis] };
            if factor == 0.0 {
                continue 'corners;
            }
            match boundary.map(base[axis] as i64 + hi as i64, lens[axis]) {
                Some(i) => idx[axis] = i,
                None => continue 'corners,
            }
            weight *= factor;
        }
        emit(idx, weight);
    }
}
