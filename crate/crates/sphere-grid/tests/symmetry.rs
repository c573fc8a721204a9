use std::f64::consts::PI;

use nalgebra::{Matrix3, Rotation3, Vector3};
use sphere_grid::build_tessellation;

/// Distance from each mapped vertex to its nearest grid vertex.
fn worst_mismatch(vertices: &[Vector3<f64>], map: impl Fn(&Vector3<f64>) -> Vector3<f64>) -> f64 {
    let mut worst: f64 = 0.0;
    for v in vertices {
        let image = map(v);
        let closest = vertices
            .iter()
            .map(|u| (u - image).norm())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(closest);
    }
    worst
}

/// The vertex set inherits the full symmetry group of the icosahedron. The
/// group is generated by the five-fold rotation about the polar axis, a
/// two-fold rotation about an edge-midpoint axis, and the point reflection.
#[test]
fn vertex_set_is_closed_under_the_icosahedral_group() {
    for order in 0..=2 {
        let t = build_tessellation(order).unwrap();
        let v = t.vertices();

        let five_fold = Rotation3::from_axis_angle(&Vector3::z_axis(), 2.0 * PI / 5.0);
        assert!(
            worst_mismatch(v, |n| five_fold * n) < 1e-9,
            "order {order}: five-fold closure"
        );

        // Two-fold axis through the midpoint of the edge joining the first
        // two upper-ring vertices.
        let axis = (v[1] + v[2]).normalize();
        let two_fold = Matrix3::from_fn(|i, j| {
            2.0 * axis[i] * axis[j] - if i == j { 1.0 } else { 0.0 }
        });
        assert!(
            worst_mismatch(v, |n| two_fold * n) < 1e-9,
            "order {order}: two-fold closure"
        );

        assert!(
            worst_mismatch(v, |n| -n) < 1e-9,
            "order {order}: antipodal closure"
        );
    }
}

/// The five-fold polar symmetry also holds at the resolution used by the
/// statistical grid tests.
#[test]
fn five_fold_symmetry_survives_subdivision() {
    let t = build_tessellation(3).unwrap();
    let rot = Rotation3::from_axis_angle(&Vector3::z_axis(), 2.0 * PI / 5.0);
    assert!(worst_mismatch(t.vertices(), |n| rot * n) < 1e-9);
}

/// Surface measures are invariant under the grid symmetry: matching vertices
/// across the five-fold rotation carry the same measure.
#[test]
fn measures_respect_the_polar_symmetry() {
    let t = build_tessellation(2).unwrap();
    let rot = Rotation3::from_axis_angle(&Vector3::z_axis(), 2.0 * PI / 5.0);
    for (k, v) in t.vertices().iter().enumerate() {
        let image = rot * v;
        let (j, _) = t
            .vertices()
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                (*a - image).norm().partial_cmp(&(*b - image).norm()).unwrap()
            })
            .unwrap();
        assert!(
            (t.measures()[k] - t.measures()[j]).abs() < 1e-12,
            "measure differs across symmetry: {} vs {}",
            t.measures()[k],
            t.measures()[j]
        );
    }
}
