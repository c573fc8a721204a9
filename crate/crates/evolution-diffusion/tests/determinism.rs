//! Bitwise agreement between the threaded and sequential execution paths.
//! Lives in its own binary because it flips the global execution mode.

use std::sync::Arc;

use evolution_diffusion::{
    resolvent, run_completion, run_enhancement, run_perona_malik, DiffusionParams,
};
use fd_operators::Boundary;
use field_model::{exec, OrientationField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphere_grid::build_tessellation;

#[test]
fn sequential_and_parallel_runs_agree_bitwise() {
    let t = Arc::new(build_tessellation(2).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let u = OrientationField::from_fn((6, 5, 4), 1.0, t, |_, _, _, _| rng.gen::<f64>());
    let enhancement = DiffusionParams {
        d11: 0.0,
        d33: 1.0,
        d44: 0.04,
        t: 1.0,
        boundary: Boundary::Periodic,
        ..DiffusionParams::default()
    };
    let completion = DiffusionParams {
        d33: 0.0,
        a3: 1.0,
        t: 2.0,
        ..enhancement
    };
    let adaptive = DiffusionParams {
        contrast: 0.05,
        ..enhancement
    };

    let run = || {
        (
            run_enhancement(&u, &enhancement).unwrap(),
            run_completion(&u, &completion).unwrap(),
            run_perona_malik(&u, &adaptive).unwrap(),
            resolvent(&u, 1.0, &completion).unwrap(),
        )
    };
    exec::set_sequential(false);
    let threaded = run();
    exec::set_sequential(true);
    let sequential = run();
    exec::set_sequential(false);

    assert_eq!(threaded.0.data(), sequential.0.data());
    assert_eq!(threaded.1.data(), sequential.1.data());
    assert_eq!(threaded.2.data(), sequential.2.data());
    assert_eq!(threaded.3.data(), sequential.3.data());
}
