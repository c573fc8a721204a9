use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};
use proptest::prelude::*;
use se3_core::{
    angles_from_normal, compose, exp_se3, log_se3, log_section, normal_from_angles, rotation_onto,
    LieVector, SE3Element,
};

/// Lie algebra vectors whose exponential stays clear of the branch cut.
fn lie_vector() -> impl Strategy<Value = LieVector> {
    (
        prop::array::uniform3(-3.0f64..3.0),
        prop::array::uniform3(-1.0f64..1.0),
        0.0f64..(PI - 0.2),
    )
        .prop_filter_map("zero axis", |(v, axis, angle)| {
            let axis = Vector3::from(axis);
            let norm = axis.norm();
            if norm < 1e-3 {
                return None;
            }
            let w = axis * (angle / norm);
            Some(LieVector::new(v[0], v[1], v[2], w[0], w[1], w[2]))
        })
}

fn element() -> impl Strategy<Value = SE3Element> {
    lie_vector().prop_map(|c| exp_se3(&c, 1.0))
}

fn unit_vector() -> impl Strategy<Value = Vector3<f64>> {
    (prop::array::uniform3(-1.0f64..1.0)).prop_filter_map("near-zero direction", |v| {
        let v = Vector3::from(v);
        let n = v.norm();
        (n > 1e-2).then(|| v / n)
    })
}

proptest! {
    #[test]
    fn exp_then_log_recovers_the_vector(c in lie_vector()) {
        let recovered = log_se3(&exp_se3(&c, 1.0)).unwrap();
        prop_assert!((recovered - c).norm() <= 1e-9 * c.norm().max(1.0));
    }

    #[test]
    fn composition_is_associative(a in element(), b in element(), c in element()) {
        let left = compose(&compose(&a, &b), &c);
        let right = compose(&a, &compose(&b, &c));
        prop_assert!((left.x - right.x).norm() < 1e-10);
        prop_assert!((left.r.matrix() - right.r.matrix()).norm() < 1e-11);
    }

    #[test]
    fn inverse_cancels(g in element()) {
        let e = compose(&g, &g.inverse());
        prop_assert!(e.x.norm() < 1e-10);
        prop_assert!((e.r.matrix() - Matrix3::identity()).norm() < 1e-11);
    }

    #[test]
    fn rotation_onto_is_a_rotation_mapping_ez(n in unit_vector()) {
        let r = rotation_onto(&n);
        let m = r.matrix();
        prop_assert!((r * Vector3::z() - n).norm() < 1e-12);
        prop_assert!((m.transpose() * m - Matrix3::identity()).norm() < 1e-12);
        prop_assert!((m.determinant() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn normal_angles_round_trip(beta in -1.5f64..1.5, gamma in -1.5f64..1.5) {
        let n = normal_from_angles(beta, gamma);
        prop_assert!((n.norm() - 1.0).abs() < 1e-12);
        let a = angles_from_normal(&n).unwrap();
        prop_assert!((a.beta - beta).abs() < 1e-10);
        prop_assert!((a.gamma - gamma).abs() < 1e-10);
    }

    #[test]
    fn log_section_exponentiates_to_the_section(
        y in prop::array::uniform3(-2.0f64..2.0),
        beta in -1.5f64..1.5,
        gamma in -1.5f64..1.5,
    ) {
        let y = Vector3::from(y);
        let c = log_section(&y, beta, gamma).unwrap();
        let g = exp_se3(&c, 1.0);
        prop_assert!((g.x - y).norm() < 1e-9);
        let n = normal_from_angles(beta, gamma);
        prop_assert!((g.r.matrix().column(2) - n).norm() < 1e-9);
    }
}
