use nalgebra::Vector3;
use se3_core::{log_se3, log_section, rotation_onto, split_lie_vector, SE3Element, Se3Error};

use crate::params::MorphParams;

/// Structure-element constant of the analytic kernel; any value in (0, 2) is
/// admissible. The flat-limit Hopf–Lax cost |x|²/(4Dt) on each horizontal
/// subspace fixes C = 2^{−1/2} at η = 1 (prefactor ½C² = ¼), which also gives
/// the closest agreement with the upwind finite-difference solver.
const KERNEL_CONSTANT: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Below this distance from η = ½ the kernel degenerates to the flat ball
/// indicator.
const FLAT_ETA: f64 = 1e-9;

/// `num/den` with the convention that a vanishing numerator costs nothing
/// even when the corresponding coefficient is zero.
fn ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Analytic structure element of the Hamilton–Jacobi evolution at time `t`,
/// evaluated at the position–orientation pair `(y, n)`.
///
/// The kernel is the Hopf–Lax cost of the squared anisotropic distance
/// d²(y, n), expressed through the frame coordinates c of (y, R_n):
///
/// ```text
/// d²(y, n)  = (((|c¹|²+|c²|²)/D¹¹ + (|c⁴|²+|c⁵|²)/D⁴⁴)² + |c³|²/(D¹¹D⁴⁴))^{1/2}
/// k_t(y, n) = ((2η−1)/2η) · C^{2η/(2η−1)} · t^{−1/(2η−1)} · (d²)^{η/(2η−1)}
/// ```
///
/// The inner square root makes d² homogeneous of degree two under the
/// anisotropic scaling that weights the reachable direction c³ twice, so at
/// η = 1 the kernel is quadratic in the distance — the scaling that gives the
/// two-step/one-step semigroup k_{t/2} ▫ k_{t/2} = k_t and reduces to the
/// classical |x|²/(4Dt) cost on each flat subspace.
///
/// for η ∈ (½, 1]; the limit η ↓ ½ is the flat ball indicator that is 0 where
/// the square root of the argument stays below t² and +∞ outside. A vanishing
/// coefficient prices its directions out entirely (+∞ off the reachable set),
/// with displacement-free terms costing nothing. At the unity element the
/// kernel is 0; at η = 1 it scales exactly as k_t = k_1/t.
///
/// The frame coordinates come from the logarithm of (y, R_n) with R_n the
/// geodesic frame [`rotation_onto`]. That frame conjugates covariantly under
/// rotations about e_z, so the kernel is exactly invariant under simultaneous
/// z-rotation of position and orientation — the symmetry that keeps the
/// group convolution independent of the per-direction frame convention.
///
/// `params.t` and `params.mode` are not consulted: the time comes from `t`
/// and the mode only flips the sign at the point of use. Errors surface at
/// the antipodal orientation n ≈ −e_z, where the geodesic frame leaves the
/// principal branch of the logarithm.
pub fn morph_kernel(
    y: &Vector3<f64>,
    n: &Vector3<f64>,
    t: f64,
    params: &MorphParams,
) -> Result<f64, Se3Error> {
    assert!(t > 0.0, "kernel time must be positive");
    let c = log_se3(&SE3Element::new(*y, rotation_onto(n)))?;
    let (c1, c2) = split_lie_vector(&c);
    let lateral = c1.x * c1.x + c1.y * c1.y;
    let axial = c1.z * c1.z;
    let angular = c2.x * c2.x + c2.y * c2.y;

    let planar = ratio(lateral, params.d11) + ratio(angular, params.d44);
    let base = planar * planar + ratio(axial, params.d11 * params.d44);
    let squared_distance = base.sqrt();

    let eta = params.eta;
    if (eta - 0.5).abs() < FLAT_ETA {
        return Ok(if squared_distance > t * t { f64::INFINITY } else { 0.0 });
    }
    let denom = 2.0 * eta - 1.0;
    let prefactor = denom / (2.0 * eta) * KERNEL_CONSTANT.powf(2.0 * eta / denom);
    Ok(prefactor * t.powf(-1.0 / denom) * squared_distance.powf(eta / denom))
}

/// Accuracy surface of the analytic kernel approximation for purely angular
/// evolution, on the orientation chart.
///
/// With S(β̃, γ̃) = (c⁴)² + (c⁵)² the squared angular frame coordinates of the
/// section log, the surface is
///
/// ```text
/// m = ¼ · ((∂_β̃ S)² + cos⁻²β̃ · (∂_γ̃ S)²) / S,
/// ```
///
/// the ratio between the squared gradient of the approximate kernel and the
/// time derivative the exact kernel would have. The approximation is exact
/// where m = 1, which holds along both chart axes; the derivatives are taken
/// by central differences. The removable singularity at the origin evaluates
/// to the limit 1.
pub fn kernel_accuracy_m(beta: f64, gamma: f64) -> Result<f64, Se3Error> {
    const STEP: f64 = 1e-5;
    let origin = Vector3::zeros();
    let s = |b: f64, g: f64| -> Result<f64, Se3Error> {
        let c = log_section(&origin, b, g)?;
        let (_, c2) = split_lie_vector(&c);
        Ok(c2.x * c2.x + c2.y * c2.y)
    };
    let s0 = s(beta, gamma)?;
    if s0 < 1e-16 {
        return Ok(1.0);
    }
    let ds_db = (s(beta + STEP, gamma)? - s(beta - STEP, gamma)?) / (2.0 * STEP);
    let ds_dg = (s(beta, gamma + STEP)? - s(beta, gamma - STEP)?) / (2.0 * STEP);
    let cos_b = beta.cos();
    Ok(0.25 * (ds_db * ds_db + ds_dg * ds_dg / (cos_b * cos_b)) / s0)
}
