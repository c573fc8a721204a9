use nalgebra::Vector3;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use se3_core::{exp_se3, LieVector, SE3Element};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random unit vector (area measure on S²).
pub fn random_unit(rng: &mut ChaCha8Rng) -> Vector3<f64> {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    Vector3::new(r * phi.cos(), r * phi.sin(), z)
}

/// A random Lie vector with angular norm bounded away from the branch cut:
/// ‖ĉ⁽²⁾‖ ≤ π − 0.1.
pub fn random_lie_vector(rng: &mut ChaCha8Rng) -> LieVector {
    let spatial = Vector3::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    );
    let axis = random_unit(rng);
    let angle: f64 = rng.gen_range(0.0..(std::f64::consts::PI - 0.1));
    let angular = axis * angle;
    se3_core::join_lie_vector(&spatial, &angular)
}

/// A random group element on the principal branch.
pub fn random_element(rng: &mut ChaCha8Rng) -> SE3Element {
    exp_se3(&random_lie_vector(rng), 1.0)
}
