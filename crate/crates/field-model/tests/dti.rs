use std::sync::Arc;

use field_model::{dti_to_field, DtiVolume, FieldError};
use nalgebra::Matrix3;
use sphere_grid::build_tessellation;

#[test]
fn isotropic_tensors_give_a_constant_profile() {
    let dims = (2, 2, 2);
    let volume = DtiVolume::new(dims, 1.0, vec![Matrix3::identity(); 8]).unwrap();
    let tess = Arc::new(build_tessellation(1).unwrap());
    let field = dti_to_field(&volume, tess);
    let first = field.get(0, 0, 0, 0);
    assert!(field.data().iter().all(|&v| (v - first).abs() < 1e-15));
    // 3/(4π ∫tr D) with ∫tr D = 8·3·1³.
    let expected = 3.0 / (4.0 * std::f64::consts::PI * 24.0);
    assert!((first - expected).abs() < 1e-15);
}

#[test]
fn needle_tensors_peak_along_their_axis() {
    let eps = 1e-3;
    let d = Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, eps, eps));
    let volume = DtiVolume::new((1, 1, 1), 1.0, vec![d]).unwrap();
    let tess = Arc::new(build_tessellation(2).unwrap());
    let field = dti_to_field(&volume, Arc::clone(&tess));
    let values = field.voxel(0, 0, 0);
    let best = (0..tess.vertex_count())
        .max_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap())
        .unwrap();
    let n = tess.vertices()[best];
    // The grid has no vertex exactly on ±e_x; the peak lands on the nearest one.
    assert!(n.x.abs() > 0.95, "profile should peak near ±e_x, got {n:?}");
    // Profile follows n ↦ nᵀDn up to the global normalization.
    let ratio = values[best] / (d * n).dot(&n);
    for (l, &v) in values.iter().enumerate() {
        let m = tess.vertices()[l];
        assert!((v - ratio * (d * m).dot(&m)).abs() < 1e-12 * values[best]);
    }
}

/// The direction grid integrates quadratic forms exactly (its second moments
/// are isotropic), so the converted field integrates to exactly 1.
#[test]
fn converted_fields_are_normalized_densities() {
    let dims = (3, 2, 2);
    let mut tensors = Vec::new();
    for i in 0..12 {
        let s = 1.0 + 0.1 * i as f64;
        let mut d = Matrix3::from_diagonal(&nalgebra::Vector3::new(s, 1.0, 2.0 / s));
        // A rotation keeps it SPD but off-diagonal.
        let r = nalgebra::Rotation3::from_euler_angles(0.3 * i as f64, 0.1, 0.7);
        d = r.matrix() * d * r.matrix().transpose();
        let d = (d + d.transpose()) * 0.5;
        tensors.push(d);
    }
    let volume = DtiVolume::new(dims, 0.7, tensors).unwrap();
    for order in [1, 2] {
        let tess = Arc::new(build_tessellation(order).unwrap());
        let field = dti_to_field(&volume, tess);
        assert!(
            (field.integral() - 1.0).abs() < 1e-10,
            "order {order}: integral {} should be 1",
            field.integral()
        );
        assert!(field.is_nonnegative());
    }
}

#[test]
fn non_spd_tensors_are_rejected() {
    let indefinite = Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, -0.1, 1.0));
    match DtiVolume::new((1, 1, 1), 1.0, vec![indefinite]) {
        Err(FieldError::NonSpd { voxel }) => assert_eq!(voxel, (0, 0, 0)),
        other => panic!("expected NonSpd, got {other:?}"),
    }

    let mut asymmetric = Matrix3::identity();
    asymmetric[(0, 1)] = 1e-6;
    assert!(matches!(
        DtiVolume::new((1, 1, 1), 1.0, vec![asymmetric]),
        Err(FieldError::NonSpd { .. })
    ));
}
