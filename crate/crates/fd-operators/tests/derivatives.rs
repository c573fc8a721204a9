use std::sync::Arc;

use fd_operators::{apply_a, laplace_beltrami, second_difference_a3, Boundary, Side};
use field_model::OrientationField;
use sphere_grid::{build_tessellation, Tessellation};

const SIDES: [Side; 3] = [Side::Forward, Side::Backward, Side::Central];

fn grid(order: usize) -> Arc<Tessellation> {
    Arc::new(build_tessellation(order).unwrap())
}

#[test]
fn constant_fields_have_zero_derivatives() {
    let t = grid(1);
    let field = OrientationField::from_fn((4, 3, 5), 0.7, Arc::clone(&t), |_, _, _, _| 3.7);
    for boundary in [Boundary::Reflect, Boundary::Periodic] {
        for i in 1..=5 {
            for side in SIDES {
                let d = apply_a(i, side, &field, 0.7, 0.4, boundary);
                let sup = d.data().iter().fold(0.0f64, |a, v| a.max(v.abs()));
                assert!(
                    sup <= 1e-12,
                    "A{i} {side:?} {boundary:?} of a constant reached {sup:.3e}"
                );
            }
        }
        let dd = second_difference_a3(&field, 0.7, boundary);
        let sup = dd.data().iter().fold(0.0f64, |a, v| a.max(v.abs()));
        assert!(sup <= 1e-12);
    }
}

#[test]
fn linear_ramp_gives_exact_directional_derivatives() {
    // U(y, n) = y·n is linear in the position, so trilinear interpolation is
    // exact and every side of A₃ returns n·n = 1; A₁ and A₂ differentiate
    // across the axis and return 0. Checked away from the boundary.
    let t = grid(1);
    let h = 0.7;
    let n = 8;
    let field = OrientationField::from_fn((n, n, n), h, Arc::clone(&t), |x, y, z, l| {
        let p = nalgebra::Vector3::new(x as f64, y as f64, z as f64) * h;
        p.dot(&t.vertices()[l])
    });
    for side in SIDES {
        let a3 = apply_a(3, side, &field, h, 0.4, Boundary::Reflect);
        let a1 = apply_a(1, side, &field, h, 0.4, Boundary::Reflect);
        let a2 = apply_a(2, side, &field, h, 0.4, Boundary::Reflect);
        for x in 2..n - 2 {
            for y in 2..n - 2 {
                for z in 2..n - 2 {
                    for l in 0..t.vertex_count() {
                        assert!((a3.get(x, y, z, l) - 1.0).abs() <= 1e-10);
                        assert!(a1.get(x, y, z, l).abs() <= 1e-10);
                        assert!(a2.get(x, y, z, l).abs() <= 1e-10);
                    }
                }
            }
        }
    }
}

#[test]
fn second_difference_matches_quadratic_profile() {
    // U(y, n) = (y·n)² has second derivative 2 along the orientation axis.
    // Trilinear interpolation subtracts the same f(1−f)-shaped error from both
    // shifted samples, so the result stays within 2 − 2Σᵢnᵢ²fᵢ(1−fᵢ) ∈ [1.5, 2],
    // and is exact where the shifts land on grid points (the ±e_z poles).
    let t = grid(1);
    let h = 0.5;
    let n = 9;
    let field = OrientationField::from_fn((n, n, n), h, Arc::clone(&t), |x, y, z, l| {
        let p = nalgebra::Vector3::new(x as f64, y as f64, z as f64) * h;
        p.dot(&t.vertices()[l]).powi(2)
    });
    let dd = second_difference_a3(&field, h, Boundary::Reflect);
    let north = t.nearest_vertex(&nalgebra::Vector3::z());
    let south = t.nearest_vertex(&(-nalgebra::Vector3::z()));
    assert!((t.vertices()[north].z - 1.0).abs() < 1e-15);
    assert!((t.vertices()[south].z + 1.0).abs() < 1e-15);
    for x in 3..n - 3 {
        for y in 3..n - 3 {
            for z in 3..n - 3 {
                for l in 0..t.vertex_count() {
                    let v = dd.get(x, y, z, l);
                    assert!((v - 2.0).abs() <= 0.5, "voxel ({x},{y},{z}) dir {l}: {v}");
                }
                assert!((dd.get(x, y, z, north) - 2.0).abs() <= 1e-9);
                assert!((dd.get(x, y, z, south) - 2.0).abs() <= 1e-9);
            }
        }
    }
}

#[test]
fn second_difference_is_negative_at_a_concave_peak() {
    let t = grid(1);
    let n = 7;
    let c = 3.0;
    let field = OrientationField::from_fn((n, n, n), 1.0, Arc::clone(&t), |x, y, z, _| {
        let r2 = (x as f64 - c).powi(2) + (y as f64 - c).powi(2) + (z as f64 - c).powi(2);
        (-r2 / 8.0).exp()
    });
    let dd = second_difference_a3(&field, 1.0, Boundary::Reflect);
    for l in 0..t.vertex_count() {
        assert!(dd.get(3, 3, 3, l) < 0.0);
    }
}

#[test]
fn angular_differences_converge_on_the_height_function() {
    // For U(n) = n³ the frame derivatives have the closed forms A₄U = n²,
    // A₅U = −n¹. With the angular step tied to the mean edge length the
    // centered differences converge at least at first order under refinement.
    let mut log_h = Vec::new();
    let mut log_e = Vec::new();
    let mut previous = f64::INFINITY;
    for order in 1..=4 {
        let t = grid(order);
        let h_a = t.mean_edge_length();
        let field = OrientationField::from_fn((1, 1, 1), 1.0, Arc::clone(&t), |_, _, _, l| {
            t.vertices()[l].z
        });
        let a4 = apply_a(4, Side::Central, &field, 1.0, h_a, Boundary::Reflect);
        let a5 = apply_a(5, Side::Central, &field, 1.0, h_a, Boundary::Reflect);
        let mut err: f64 = 0.0;
        for (l, v) in t.vertices().iter().enumerate() {
            err = err.max((a4.get(0, 0, 0, l) - v.y).abs());
            err = err.max((a5.get(0, 0, 0, l) + v.x).abs());
        }
        assert!(err < previous, "error grew from {previous} to {err} at order {order}");
        previous = err;
        log_h.push(h_a.ln());
        log_e.push(err.ln());
    }
    let m = log_h.len() as f64;
    let mean_h = log_h.iter().sum::<f64>() / m;
    let mean_e = log_e.iter().sum::<f64>() / m;
    let slope = log_h
        .iter()
        .zip(&log_e)
        .map(|(h, e)| (h - mean_h) * (e - mean_e))
        .sum::<f64>()
        / log_h.iter().map(|h| (h - mean_h).powi(2)).sum::<f64>();
    assert!(
        (0.9..=3.5).contains(&slope),
        "convergence rate {slope} outside the expected first-to-second-order band"
    );
}

#[test]
fn laplace_beltrami_annihilates_constants() {
    let t = grid(2);
    let field = OrientationField::from_fn((2, 2, 2), 1.0, Arc::clone(&t), |_, _, _, _| 5.5);
    let lb = laplace_beltrami(&field, t.mean_edge_length());
    let sup = lb.data().iter().fold(0.0f64, |a, v| a.max(v.abs()));
    assert!(sup <= 1e-12);
}

#[test]
fn laplace_beltrami_height_function_eigenvalue() {
    // n³ spans the degree-1 eigenspace of the spherical Laplacian with
    // eigenvalue −2; the Rayleigh quotient of the discrete operator under the
    // surface-measure inner product recovers it within 5%.
    for order in [2, 3] {
        let t = grid(order);
        let field = OrientationField::from_fn((1, 1, 1), 1.0, Arc::clone(&t), |_, _, _, l| {
            t.vertices()[l].z
        });
        let lb = laplace_beltrami(&field, t.mean_edge_length());
        let measures = t.measures();
        let mut num = 0.0;
        let mut den = 0.0;
        for l in 0..t.vertex_count() {
            num -= measures[l] * lb.get(0, 0, 0, l) * field.get(0, 0, 0, l);
            den += measures[l] * field.get(0, 0, 0, l).powi(2);
        }
        let rayleigh = num / den;
        assert!(
            (rayleigh - 2.0).abs() <= 0.1,
            "order {order}: Rayleigh quotient {rayleigh} too far from 2"
        );
    }
}

#[test]
fn laplace_beltrami_is_negative_at_a_smooth_peak() {
    let t = grid(2);
    let field = OrientationField::from_fn((1, 1, 1), 1.0, Arc::clone(&t), |_, _, _, l| {
        t.vertices()[l].z.exp()
    });
    let lb = laplace_beltrami(&field, t.mean_edge_length());
    let pole = t.nearest_vertex(&nalgebra::Vector3::z());
    assert!(lb.get(0, 0, 0, pole) < 0.0);
}

#[test]
#[should_panic(expected = "frame index")]
fn frame_index_zero_is_rejected() {
    let t = grid(0);
    let field = OrientationField::zeros((2, 2, 2), 1.0, t);
    apply_a(0, Side::Central, &field, 1.0, 0.4, Boundary::Reflect);
}

#[test]
#[should_panic(expected = "spatial step")]
fn zero_spatial_step_is_rejected() {
    let t = grid(0);
    let field = OrientationField::zeros((2, 2, 2), 1.0, t);
    apply_a(3, Side::Central, &field, 0.0, 0.4, Boundary::Reflect);
}
