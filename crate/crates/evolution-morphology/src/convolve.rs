use field_model::{exec, OrientationField};
use nalgebra::Vector3;
use se3_core::rotation_onto;

use crate::params::MorphMode;
use crate::upwind::negated;

/// One admissible displacement of the structure element for a fixed output
/// orientation: voxel offset, source orientation index, and cost.
struct Candidate {
    dx: i64,
    dy: i64,
    dz: i64,
    source: usize,
    cost: f64,
}

/// Morphological convolution of `u` with a group structure element.
///
/// Erosion takes the min-plus form
///
/// ```text
/// (k ⊖ U)(y, n) = min over (y′, n′) of  U(y′, n′) + k(R_{n′}ᵀ(y − y′), R_{n′}ᵀn),
/// ```
///
/// where the kernel sees the displacement in the source frame; dilation is
/// the max-plus dual, evaluated as −(k ⊖ (−U)). The search runs over voxel
/// offsets with |Δ|∞ ≤ `radius` and all source orientations. Candidates whose
/// cost exceeds the value range of `u` are discarded up front — they can
/// never attain the extremum, so the result is exact whenever the radius
/// covers every in-range displacement. A kernel may return +∞ (or NaN) to
/// exclude a candidate outright; positions outside the grid do not
/// participate.
pub fn morph_convolve(
    u: &OrientationField,
    kernel: &(dyn Fn(&Vector3<f64>, &Vector3<f64>) -> f64 + Sync),
    mode: MorphMode,
    radius: usize,
) -> OrientationField {
    match mode {
        MorphMode::Erosion => erosion_convolve(u, kernel, radius),
        MorphMode::Dilation => negated(&erosion_convolve(&negated(u), kernel, radius)),
    }
}

fn erosion_convolve(
    u: &OrientationField,
    kernel: &(dyn Fn(&Vector3<f64>, &Vector3<f64>) -> f64 + Sync),
    radius: usize,
) -> OrientationField {
    let (min, max) = u.min_max();
    let cutoff = max - min;
    let h = u.spacing();
    let vertices = u.tessellation().vertices();
    let n_o = vertices.len();
    let r = radius as i64;
    let span = 2 * r + 1;
    let offsets = span * span * span;

    // Structure element per output orientation, filtered by the cutoff.
    let support: Vec<Vec<Candidate>> = exec::map_indices(n_o, |l_out| {
        let mut entries = Vec::new();
        for (l_src, v_src) in vertices.iter().enumerate() {
            let frame = rotation_onto(v_src).transpose();
            // The frame maps its own axis to the pole exactly; computing it
            // through the matrix product would leave round-off that prices
            // the zero-cost identity move out of constant fields.
            let n_arg = if l_src == l_out {
                Vector3::z()
            } else {
                frame * vertices[l_out]
            };
            for o in 0..offsets {
                let dx = o / (span * span) - r;
                let dy = o / span % span - r;
                let dz = o % span - r;
                let shift = frame * Vector3::new(dx as f64 * h, dy as f64 * h, dz as f64 * h);
                let cost = kernel(&shift, &n_arg);
                if cost <= cutoff {
                    entries.push(Candidate {
                        dx,
                        dy,
                        dz,
                        source: l_src,
                        cost,
                    });
                }
            }
        }
        entries
    });

    let (nx, ny, nz) = u.dims();
    let mut out = u.same_shape();
    exec::for_each_chunk(out.data_mut(), n_o, |v, chunk| {
        let z = (v % nz) as i64;
        let y = (v / nz % ny) as i64;
        let x = (v / (nz * ny)) as i64;
        for (l_out, slot) in chunk.iter_mut().enumerate() {
            let mut best = f64::INFINITY;
            for c in &support[l_out] {
                let xs = x - c.dx;
                let ys = y - c.dy;
                let zs = z - c.dz;
                if xs < 0
                    || ys < 0
                    || zs < 0
                    || xs >= nx as i64
                    || ys >= ny as i64
                    || zs >= nz as i64
                {
                    continue;
                }
                let value = u.get(xs as usize, ys as usize, zs as usize, c.source) + c.cost;
                if value < best {
                    best = value;
                }
            }
            *slot = best;
        }
    });
    out
}
