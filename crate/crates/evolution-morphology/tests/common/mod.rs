//! Shared fixtures for the morphology integration tests.

use std::sync::Arc;

use field_model::OrientationField;
use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphere_grid::{build_tessellation, interpolate, Tessellation};

/// Off-axis unit direction used as the glyph orientation in most fixtures.
pub fn glyph_direction() -> Vector3<f64> {
    Vector3::new(0.3, 0.2, 0.93).normalize()
}

pub fn tessellation(order: usize) -> Arc<Tessellation> {
    Arc::new(build_tessellation(order).expect("tessellation order is valid"))
}

/// Smooth positive field: a spatial Gaussian bump times a von-Mises-style
/// angular glyph pointing along [`glyph_direction`], scaled by `amplitude`.
pub fn smooth_glyph_field(
    dims: (usize, usize, usize),
    order: usize,
    kappa: f64,
    amplitude: f64,
) -> OrientationField {
    let tess = tessellation(order);
    let vertices = tess.vertices().to_vec();
    let m = glyph_direction();
    let centre = Vector3::new(
        (dims.0 as f64 - 1.0) / 2.0,
        (dims.1 as f64 - 1.0) / 2.0,
        (dims.2 as f64 - 1.0) / 2.0,
    );
    OrientationField::from_fn(dims, 1.0, tess, |x, y, z, l| {
        let p = Vector3::new(x as f64, y as f64, z as f64) - centre;
        let spatial = (-p.norm_squared() / 8.0).exp();
        let angular = (kappa * (vertices[l].dot(&m) - 1.0)).exp();
        amplitude * spatial * angular
    })
}

/// A 3^3 field whose centre voxel carries an angular glyph and every other
/// voxel is zero; isolates the purely angular behaviour of a solver.
pub fn single_voxel_glyph(order: usize, kappa: f64) -> OrientationField {
    let tess = tessellation(order);
    let vertices = tess.vertices().to_vec();
    let m = glyph_direction();
    OrientationField::from_fn((3, 3, 3), 1.0, tess, |x, y, z, l| {
        if (x, y, z) == (1, 1, 1) {
            (kappa * (vertices[l].dot(&m) - 1.0)).exp()
        } else {
            0.0
        }
    })
}

/// Uniform random field on `[lo, hi)` with a fixed seed.
pub fn random_field(
    dims: (usize, usize, usize),
    order: usize,
    seed: u64,
    lo: f64,
    hi: f64,
) -> OrientationField {
    let tess = tessellation(order);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    OrientationField::from_fn(dims, 1.0, tess, |_, _, _, _| rng.gen_range(lo..hi))
}

/// Supremum difference between two fields, relative to the value range of the
/// first one.
pub fn rel_sup(reference: &OrientationField, other: &OrientationField) -> f64 {
    let (min, max) = reference.min_max();
    let scale = (max - min).max(f64::MIN_POSITIVE);
    reference
        .data()
        .iter()
        .zip(other.data())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
        / scale
}

/// Width of the angular profile of one fiber at a fixed absolute level.
///
/// The fiber values are interpolated along the great circle through
/// [`glyph_direction`] with axis `m × e_z`, the profile maximum is located,
/// and the first crossings of `level` on either side of it are found by
/// linear interpolation between samples. Returns `(width, peak_angle)` in
/// radians, with the peak angle measured from `m` along the circle.
pub fn circle_width_at_level(
    tess: &Tessellation,
    fiber: &[f64],
    level: f64,
) -> (f64, f64) {
    let m = glyph_direction();
    let axis = m.cross(&Vector3::z()).normalize();
    let ortho = axis.cross(&m);
    let samples = 2001usize;
    let step = 2.0 * std::f64::consts::PI / samples as f64;
    let value = |i: usize| -> f64 {
        let theta = i as f64 * step;
        let dir = m * theta.cos() + ortho * theta.sin();
        interpolate(tess, &dir).apply(fiber)
    };
    let profile: Vec<f64> = (0..samples).map(value).collect();
    let peak = (0..samples)
        .max_by(|a, b| profile[*a].total_cmp(&profile[*b]))
        .expect("profile is nonempty");
    assert!(
        profile[peak] > level,
        "profile peak {} does not exceed the level {}",
        profile[peak],
        level
    );
    let crossing = |dir: isize| -> f64 {
        for offset in 1..samples as isize {
            let i = (peak as isize + dir * offset).rem_euclid(samples as isize) as usize;
            let prev =
                (peak as isize + dir * (offset - 1)).rem_euclid(samples as isize) as usize;
            if profile[i] < level {
                let frac = (profile[prev] - level) / (profile[prev] - profile[i]);
                return (offset - 1) as f64 + frac;
            }
        }
        panic!("profile never drops below the level {level}");
    };
    let width = (crossing(1) + crossing(-1)) * step;
    let mut peak_angle = peak as f64 * step;
    if peak_angle > std::f64::consts::PI {
        peak_angle -= 2.0 * std::f64::consts::PI;
    }
    (width, peak_angle)
}
