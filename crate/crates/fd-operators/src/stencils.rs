use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{Matrix3, Vector3};
use se3_core::rotation_onto;
use sphere_grid::{interpolate, InterpolationWeights, Tessellation};

/// Interpolation weights of the two rotated directions used by one angular
/// first difference at one vertex.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AngularPair {
    pub plus: InterpolationWeights,
    pub minus: InterpolationWeights,
}

/// Per-vertex angular stencils for a fixed tessellation and angular step.
pub(crate) struct AngularStencils {
    /// `pairs[l][p]`: forward/backward weights at vertex `l`; `p = 0` rotates
    /// about the frame's `e_x` (the `A₄` stencil), `p = 1` about `e_y` (`A₅`).
    pub pairs: Vec<[AngularPair; 2]>,
    /// `transpose[p][l]`: `(source vertex, weight)` pairs listing every forward
    /// stencil in which vertex `l` is sampled — the columns of the forward
    /// interpolation matrix, needed by the measure-weighted adjoint.
    pub transpose: [Vec<Vec<(usize, f64)>>; 2],
}

static AXES: OnceLock<Mutex<HashMap<usize, Arc<Vec<Matrix3<f64>>>>>> = OnceLock::new();
static ANGULAR: OnceLock<Mutex<HashMap<(usize, u64), Arc<AngularStencils>>>> = OnceLock::new();

/// Rotations `R_{n_l}` mapping `e_z` onto each vertex, cached per tessellation
/// order. Their columns are the spatial shift axes of `A₁`, `A₂`, `A₃`.
pub(crate) fn spatial_axes_for(t: &Tessellation) -> Arc<Vec<Matrix3<f64>>> {
    let cache = AXES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    Arc::clone(map.entry(t.order()).or_insert_with(|| {
        Arc::new(
            t.vertices()
                .iter()
                .map(|n| *rotation_onto(n).matrix())
                .collect(),
        )
    }))
}

/// Angular stencils cached per (tessellation order, angular step). Orders are
/// canonical — every tessellation of a given order has identical vertices — so
/// the order plus the exact bit pattern of the step identify the stencil set.
pub(crate) fn angular_stencils_for(t: &Tessellation, h_a: f64) -> Arc<AngularStencils> {
    let key = (t.order(), h_a.to_bits());
    let cache = ANGULAR.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    Arc::clone(
        map.entry(key)
            .or_insert_with(|| Arc::new(build_angular(t, h_a))),
    )
}

fn build_angular(t: &Tessellation, h_a: f64) -> AngularStencils {
    let n_o = t.vertex_count();
    let (sa, ca) = h_a.sin_cos();
    let mut pairs = Vec::with_capacity(n_o);
    let mut transpose = [vec![Vec::new(); n_o], vec![Vec::new(); n_o]];
    for (l, n) in t.vertices().iter().enumerate() {
        let r = rotation_onto(n);
        // Images of e_z under R_{n_l}R_{e_x,±h_a} and R_{n_l}R_{e_y,±h_a}.
        let dirs = [
            [
                r * Vector3::new(0.0, -sa, ca),
                r * Vector3::new(0.0, sa, ca),
            ],
            [
                r * Vector3::new(sa, 0.0, ca),
                r * Vector3::new(-sa, 0.0, ca),
            ],
        ];
        let vertex_pairs = [0usize, 1].map(|p| {
            let pair = AngularPair {
                plus: interpolate(t, &dirs[p][0]),
                minus: interpolate(t, &dirs[p][1]),
            };
            for &(k, w) in &pair.plus.entries {
                if w > 0.0 {
                    transpose[p][k].push((l, w));
                }
            }
            pair
        });
        pairs.push(vertex_pairs);
    }
    AngularStencils { pairs, transpose }
}
