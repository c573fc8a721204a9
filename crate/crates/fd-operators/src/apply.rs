use field_model::{exec, OrientationField};

use crate::boundary::{trilinear_footprint, Boundary};
use crate::stencils::{angular_stencils_for, spatial_axes_for};

/// Which first difference [`apply_a`] forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Forward,
    Backward,
    Central,
}

/// Trilinear read of direction `l` at a fractional grid position.
fn trilinear_sample(field: &OrientationField, pos: [f64; 3], l: usize, boundary: Boundary) -> f64 {
    let mut acc = 0.0;
    trilinear_footprint(pos, field.dims(), boundary, |idx, w| {
        acc += w * field.get(idx[0], idx[1], idx[2], l);
    });
    acc
}

/// First difference of the `i`-th frame derivative, `i ∈ 1..=5`.
///
/// Spatial operators (`i ≤ 3`) shift each voxel by `±h·R_{n_l}e_i` (in length
/// units; `h` is normally the grid spacing) and read the shifted positions
/// with trilinear interpolation under the given boundary rule. Angular
/// operators (`i ∈ {4, 5}`) rotate the direction by `±h_a` about the frame's
/// `e_x`/`e_y` axis and read the rotated directions with barycentric
/// interpolation; they never touch the boundary. All sides are literal
/// differences, so constants are annihilated for every `i` and side.
pub fn apply_a(
    i: usize,
    side: Side,
    field: &OrientationField,
    h: f64,
    h_a: f64,
    boundary: Boundary,
) -> OrientationField {
    assert!((1..=5).contains(&i), "frame index must lie in 1..=5, got {i}");
    assert!(h > 0.0, "spatial step must be positive");
    assert!(h_a > 0.0, "angular step must be positive");
    let (_, ny, nz) = field.dims();
    let n_o = field.direction_count();
    let mut out = field.same_shape();
    if i <= 3 {
        let axes = spatial_axes_for(field.tessellation());
        let step = h / field.spacing();
        exec::for_each_chunk(out.data_mut(), n_o, |v, chunk| {
            let z = (v % nz) as f64;
            let y = ((v / nz) % ny) as f64;
            let x = (v / (nz * ny)) as f64;
            let values = &field.data()[v * n_o..(v + 1) * n_o];
            for (l, slot) in chunk.iter_mut().enumerate() {
                let axis = axes[l].column(i - 1);
                let shift = [step * axis[0], step * axis[1], step * axis[2]];
                let plus = [x + shift[0], y + shift[1], z + shift[2]];
                let minus = [x - shift[0], y - shift[1], z - shift[2]];
                *slot = match side {
                    Side::Forward => {
                        (trilinear_sample(field, plus, l, boundary) - values[l]) / h
                    }
                    Side::Backward => {
                        (values[l] - trilinear_sample(field, minus, l, boundary)) / h
                    }
                    Side::Central => {
                        (trilinear_sample(field, plus, l, boundary)
                            - trilinear_sample(field, minus, l, boundary))
                            / (2.0 * h)
                    }
                };
            }
        });
    } else {
        let stencils = angular_stencils_for(field.tessellation(), h_a);
        let p = i - 4;
        exec::for_each_chunk(out.data_mut(), n_o, |v, chunk| {
            let values = &field.data()[v * n_o..(v + 1) * n_o];
            for (l, slot) in chunk.iter_mut().enumerate() {
                let pair = &stencils.pairs[l][p];
                *slot = match side {
                    Side::Forward => (pair.plus.apply(values) - values[l]) / h_a,
                    Side::Backward => (values[l] - pair.minus.apply(values)) / h_a,
                    Side::Central => {
                        (pair.plus.apply(values) - pair.minus.apply(values)) / (2.0 * h_a)
                    }
                };
            }
        });
    }
    out
}

/// Centered second difference along the orientation axis:
/// `(U(y + hR_{n}e_z) − 2U(y) + U(y − hR_{n}e_z))/h²`.
pub fn second_difference_a3(field: &OrientationField, h: f64, boundary: Boundary) -> OrientationField {
    assert!(h > 0.0, "spatial step must be positive");
    let (_, ny, nz) = field.dims();
    let n_o = field.direction_count();
    let axes = spatial_axes_for(field.tessellation());
    let step = h / field.spacing();
    let mut out = field.same_shape();
    exec::for_each_chunk(out.data_mut(), n_o, |v, chunk| {
        let z = (v % nz) as f64;
        let y = ((v / nz) % ny) as f64;
        let x = (v / (nz * ny)) as f64;
        let values = &field.data()[v * n_o..(v + 1) * n_o];
        for (l, slot) in chunk.iter_mut().enumerate() {
            let axis = axes[l].column(2);
            let shift = [step * axis[0], step * axis[1], step * axis[2]];
            let plus = trilinear_sample(
                field,
                [x + shift[0], y + shift[1], z + shift[2]],
                l,
                boundary,
            );
            let minus = trilinear_sample(
                field,
                [x - shift[0], y - shift[1], z - shift[2]],
                l,
                boundary,
            );
            *slot = (plus - 2.0 * values[l] + minus) / (h * h);
        }
    });
    out
}

/// Adjoint of the forward angular difference under the surface-measure inner
/// product `⟨u, v⟩ = Σ_l δ(n_l)u_l v_l`, negated so it discretizes the same
/// backward derivative: `⟨A_pᶠu, v⟩ = −⟨u, angular_adjoint_backward(p, v)⟩`
/// exactly. Composing it after the forward difference yields a symmetric
/// negative semi-definite spherical operator whose rows and measure-weighted
/// columns sum to zero, unlike the literal backward difference of
/// [`apply_a`], which does not annihilate constants when transposed.
pub fn angular_adjoint_backward(p: usize, field: &OrientationField, h_a: f64) -> OrientationField {
    assert!(p == 4 || p == 5, "angular frame index must be 4 or 5, got {p}");
    assert!(h_a > 0.0, "angular step must be positive");
    let stencils = angular_stencils_for(field.tessellation(), h_a);
    let measures = field.tessellation().measures();
    let n_o = field.direction_count();
    let g = p - 4;
    let mut out = field.same_shape();
    exec::for_each_chunk(out.data_mut(), n_o, |v, chunk| {
        let values = &field.data()[v * n_o..(v + 1) * n_o];
        for (l, slot) in chunk.iter_mut().enumerate() {
            let mut acc = measures[l] * values[l];
            for &(src, w) in &stencils.transpose[g][l] {
                acc -= w * measures[src] * values[src];
            }
            *slot = acc / (measures[l] * h_a);
        }
    });
    out
}

/// Spherical Laplacian: the forward angular differences composed with their
/// measure-weighted adjoints, `Σ_p adjoint(A_pᶠ)·A_pᶠ` for `p ∈ {4, 5}`, which
/// is negative semi-definite and exactly mass-conserving.
pub fn laplace_beltrami(field: &OrientationField, h_a: f64) -> OrientationField {
    let forward4 = apply_a(4, Side::Forward, field, 1.0, h_a, Boundary::Reflect);
    let mut out = angular_adjoint_backward(4, &forward4, h_a);
    let forward5 = apply_a(5, Side::Forward, field, 1.0, h_a, Boundary::Reflect);
    let part5 = angular_adjoint_backward(5, &forward5, h_a);
    for (o, b) in out.data_mut().iter_mut().zip(part5.data()) {
        *o += b;
    }
    out
}
