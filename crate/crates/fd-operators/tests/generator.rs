use std::sync::Arc;

use fd_operators::{
    angular_adjoint_backward, apply_a, assemble_generator, Boundary, GeneratorCoefficients, Side,
};
use field_model::OrientationField;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphere_grid::build_tessellation;

fn random_field(dims: (usize, usize, usize), h: f64, order: usize, seed: u64) -> OrientationField {
    let t = Arc::new(build_tessellation(order).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    OrientationField::from_fn(dims, h, t, |_, _, _, _| rng.gen::<f64>())
}

/// Matrix-free application of the generator: spatial second differences in
/// forward-outer/backward-inner form plus the adjoint-paired spherical block.
fn composed_generator(
    u: &OrientationField,
    c: &GeneratorCoefficients,
    h: f64,
    h_a: f64,
    boundary: Boundary,
) -> OrientationField {
    let mut out = u.same_shape();
    for (axis, d) in [(1, c.d11), (2, c.d11), (3, c.d33)] {
        if d == 0.0 {
            continue;
        }
        let backward = apply_a(axis, Side::Backward, u, h, h_a, boundary);
        let second = apply_a(axis, Side::Forward, &backward, h, h_a, boundary);
        for (o, s) in out.data_mut().iter_mut().zip(second.data()) {
            *o += d * s;
        }
    }
    if c.d44 > 0.0 {
        for p in [4, 5] {
            let forward = apply_a(p, Side::Forward, u, h, h_a, boundary);
            let lap = angular_adjoint_backward(p, &forward, h_a);
            for (o, s) in out.data_mut().iter_mut().zip(lap.data()) {
                *o += c.d44 * s;
            }
        }
    }
    out
}

#[test]
fn zero_coefficients_yield_an_empty_operator() {
    let u = random_field((3, 3, 3), 1.0, 1, 1);
    let c = GeneratorCoefficients {
        d11: 0.0,
        d33: 0.0,
        d44: 0.0,
    };
    let j = assemble_generator(&u, &c, 1.0, 0.5, Boundary::Reflect);
    assert_eq!(j.nnz(), 0);
}

#[test]
fn assembled_operator_matches_the_composed_applications() {
    let u = random_field((4, 3, 5), 0.7, 1, 11);
    let h_a = u.tessellation().mean_edge_length();
    let c = GeneratorCoefficients {
        d11: 0.4,
        d33: 1.2,
        d44: 0.15,
    };
    for boundary in [Boundary::Periodic, Boundary::Reflect] {
        let j = assemble_generator(&u, &c, 0.7, h_a, boundary);
        let by_matrix = j.apply(u.data());
        let by_composition = composed_generator(&u, &c, 0.7, h_a, boundary);
        let scale = by_composition
            .data()
            .iter()
            .fold(0.0f64, |a, v| a.max(v.abs()));
        for (m, d) in by_matrix.iter().zip(by_composition.data()) {
            assert!(
                (m - d).abs() <= 1e-12 * (1.0 + scale),
                "matrix row disagrees with composed form: {m} vs {d} ({boundary:?})"
            );
        }
    }
}

#[test]
fn row_sums_vanish_so_constants_are_stationary() {
    // Every difference in the generator annihilates constants, for both the
    // wrapping and the mirroring boundary, so each matrix row sums to zero.
    let u = random_field((4, 4, 4), 1.0, 1, 13);
    let h_a = u.tessellation().mean_edge_length();
    let c = GeneratorCoefficients {
        d11: 0.5,
        d33: 1.0,
        d44: 0.2,
    };
    for boundary in [Boundary::Periodic, Boundary::Reflect] {
        let j = assemble_generator(&u, &c, 1.0, h_a, boundary);
        for r in 0..j.n() {
            let s = j.row_sum(r);
            assert!(
                s.abs() <= 1e-12,
                "row {r} sums to {s} under {boundary:?}"
            );
        }
    }
}

#[test]
fn gerschgorin_bound_reads_off_the_step_denominator() {
    // With the spherical block switched off the worst absolute row sum is hit
    // at rows whose direction is a pole (the forward and backward spatial
    // shifts land on grid points there, no interpolation spread), giving
    // exactly 2·(4·d11 + 2·d33)/h². The spherical block roughly doubles its
    // own share; the combined bound stays within a modest factor of the
    // explicit-Euler step denominator (4·d11 + 2·d33)/h² + 4·d44/h_a².
    let u = random_field((4, 4, 4), 0.8, 2, 17);
    let h = 0.8;
    let h_a = u.tessellation().mean_edge_length();

    let spatial_only = GeneratorCoefficients {
        d11: 0.3,
        d33: 1.0,
        d44: 0.0,
    };
    let j = assemble_generator(&u, &spatial_only, h, h_a, Boundary::Periodic);
    let expected = 2.0 * (4.0 * spatial_only.d11 + 2.0 * spatial_only.d33) / (h * h);
    let bound = j.gerschgorin_bound();
    assert!(
        (bound - expected).abs() <= 1e-12 * expected,
        "spatial-only bound {bound} differs from {expected}"
    );

    let full = GeneratorCoefficients {
        d11: 0.3,
        d33: 1.0,
        d44: 0.2,
    };
    let j = assemble_generator(&u, &full, h, h_a, Boundary::Periodic);
    let denom = (4.0 * full.d11 + 2.0 * full.d33) / (h * h) + 4.0 * full.d44 / (h_a * h_a);
    let ratio = j.gerschgorin_bound() / denom;
    assert!(
        (1.2..=2.6).contains(&ratio),
        "full-generator Gerschgorin bound is {ratio} step denominators"
    );
}

#[test]
fn euler_step_conserves_weighted_mass_on_the_torus() {
    // Row sums of the adjoint-paired generator vanish against the measure, so
    // one explicit Euler step leaves Σ δ(n_l)h³·u unchanged on a periodic
    // grid.
    let u = random_field((5, 4, 3), 0.9, 2, 19);
    let h = 0.9;
    let h_a = u.tessellation().mean_edge_length();
    let c = GeneratorCoefficients {
        d11: 0.4,
        d33: 1.0,
        d44: 0.3,
    };
    let denom = (4.0 * c.d11 + 2.0 * c.d33) / (h * h) + 4.0 * c.d44 / (h_a * h_a);
    let dt = 1.0 / denom;
    let j = assemble_generator(&u, &c, h, h_a, Boundary::Periodic);
    let ju = j.apply(u.data());
    let mut stepped = u.same_shape();
    for ((s, v), dv) in stepped.data_mut().iter_mut().zip(u.data()).zip(&ju) {
        *s = v + dt * dv;
    }
    let before = u.integral();
    let after = stepped.integral();
    assert!(
        (after - before).abs() <= 1e-12 * before.abs(),
        "mass moved from {before} to {after} in one step"
    );
}
