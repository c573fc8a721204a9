use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix3, Vector3};

use crate::{join_lie_vector, LieVector, Rotation, SE3Element, Se3Error};

/// Below this angular norm the sin/cos quotients are replaced by 4th-order series
/// (the direct quotients become 0/0 at zero angle).
const SERIES_THRESHOLD: f64 = 1e-6;

/// Rotation angles within this margin of π are refused by the logarithm: the
/// antipodal branch makes the sign of the rotation axis arbitrary there.
const BRANCH_GUARD: f64 = 1e-6;

/// Margin by which the section logarithm stays away from the β̃ = ±π/2 (and
/// γ̃ = ±π/2) chart singularities.
const CHART_GUARD: f64 = 1e-9;

/// Skew matrix [w]× with [w]× v = w × v.
pub(crate) fn skew(w: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(0.0, -w.z, w.y, w.z, 0.0, -w.x, -w.y, w.x, 0.0)
}

/// The Rodrigues quotients (sin q/q, (1−cos q)/q², (1 − sin q/q)/q²).
fn rodrigues_coefficients(q: f64) -> (f64, f64, f64) {
    if q < SERIES_THRESHOLD {
        let q2 = q * q;
        let q4 = q2 * q2;
        (
            1.0 - q2 / 6.0 + q4 / 120.0,
            0.5 - q2 / 24.0 + q4 / 720.0,
            1.0 / 6.0 - q2 / 120.0 + q4 / 5040.0,
        )
    } else {
        let a = q.sin() / q;
        let b = (1.0 - q.cos()) / (q * q);
        (a, b, (1.0 - a) / (q * q))
    }
}

/// The factor q/(2 sin q) scaling the skew part of a rotation into its log.
fn log_scale(q: f64) -> f64 {
    if q < SERIES_THRESHOLD {
        let q2 = q * q;
        0.5 * (1.0 + q2 / 6.0 + 7.0 * q2 * q2 / 360.0)
    } else {
        q / (2.0 * q.sin())
    }
}

/// The Ω² coefficient ψ(q) = (1 − (q/2)·cot(q/2))/q² of the inverse left Jacobian
/// V⁻¹ = I − ½Ω + ψ(q)Ω².
fn inv_jacobian_psi(q: f64) -> f64 {
    if q < SERIES_THRESHOLD {
        let q2 = q * q;
        1.0 / 12.0 + q2 / 720.0 + q2 * q2 / 30240.0
    } else {
        let half = 0.5 * q;
        (1.0 - half * half.cos() / half.sin()) / (q * q)
    }
}

/// Inverse left Jacobian for angular log coefficients c⁽²⁾ with ‖c⁽²⁾‖ = q.
fn inv_left_jacobian(q: f64, c2: &Vector3<f64>) -> Matrix3<f64> {
    let omega = skew(c2);
    Matrix3::identity() - omega * 0.5 + omega * omega * inv_jacobian_psi(q)
}

/// Exponential map of SE(3), evaluated at time t: exp(t · Σ cⁱAᵢ).
///
/// With v = t·ĉ⁽¹⁾, w = t·ĉ⁽²⁾, q = ‖w‖ and Ω = [w]×:
///
/// - rotation R = I + (sin q/q)·Ω + ((1−cos q)/q²)·Ω²  (Rodrigues),
/// - translation x = (I + ((1−cos q)/q²)·Ω + ((1−sin q/q)/q²)·Ω²)·v,
///
/// with the quotients replaced by their series below `q = 1e-6`. The map is total;
/// q = 0 yields the pure translation (v, I).
pub fn exp_se3(c: &LieVector, t: f64) -> SE3Element {
    let v = c.fixed_rows::<3>(0).into_owned() * t;
    let w = c.fixed_rows::<3>(3).into_owned() * t;
    let q = w.norm();
    let (a, b, cc) = rodrigues_coefficients(q);
    let omega = skew(&w);
    let omega2 = omega * omega;
    let rot = Matrix3::identity() + omega * a + omega2 * b;
    let x = (Matrix3::identity() + omega * b + omega2 * cc) * v;
    SE3Element {
        x,
        r: Rotation::from_matrix_unchecked(rot),
    }
}

/// Principal-branch logarithm of SE(3): returns c with exp(c, 1) = g.
///
/// The rotation angle θ is recovered as atan2(½‖R − Rᵀ‖∨, ½(tr R − 1)), which is
/// valid on the whole branch θ ∈ [0, π); the angular coefficients are
/// c⁽²⁾ = θ/(2 sin θ)·(R₃₂−R₂₃, R₁₃−R₃₁, R₂₁−R₁₂) and the spatial coefficients
/// c⁽¹⁾ = V⁻¹x with the inverse left Jacobian V⁻¹ = I − ½Ω + ψ(θ)Ω².
///
/// Errors with [`Se3Error::AngleOutOfBranch`] for θ ≥ π − 1e-6.
pub fn log_se3(g: &SE3Element) -> Result<LieVector, Se3Error> {
    let m = g.r.matrix();
    let v = Vector3::new(
        m[(2, 1)] - m[(1, 2)],
        m[(0, 2)] - m[(2, 0)],
        m[(1, 0)] - m[(0, 1)],
    );
    let sin_theta = 0.5 * v.norm();
    let cos_theta = 0.5 * (m.trace() - 1.0);
    let theta = sin_theta.atan2(cos_theta);
    if theta >= PI - BRANCH_GUARD {
        return Err(Se3Error::AngleOutOfBranch { angle: theta });
    }
    let c2 = v * log_scale(theta);
    let c1 = inv_left_jacobian(theta, &c2) * g.x;
    Ok(join_lie_vector(&c1, &c2))
}

/// Logarithm of the section element (y, R_{e_x,γ̃} R_{e_y,β̃}) representing the
/// position–orientation pair (y, ñ(β̃, γ̃)) with fiber coordinate α̃ = 0.
///
/// The skew part of the section rotation has the closed form
/// v = (sin γ̃(1+cos β̃), sin β̃(1+cos γ̃), sin γ̃ sin β̃) and rotation angle
/// cos θ = ½(cos β̃ + cos γ̃ + cos β̃ cos γ̃ − 1); the coefficients then follow the
/// same scaling as [`log_se3`]. Within the chart domain θ stays below 2π/3, so the
/// principal branch never fails here.
///
/// Errors with [`Se3Error::ChartSingularity`] when |β̃| or |γ̃| reaches π/2.
pub fn log_section(y: &Vector3<f64>, beta: f64, gamma: f64) -> Result<LieVector, Se3Error> {
    let guard = FRAC_PI_2 - CHART_GUARD;
    if !(beta.abs() < guard) {
        return Err(Se3Error::ChartSingularity {
            context: "section logarithm at |β̃| = π/2",
        });
    }
    if !(gamma.abs() < guard) {
        return Err(Se3Error::ChartSingularity {
            context: "section logarithm at |γ̃| = π/2",
        });
    }
    let (sb, cb) = beta.sin_cos();
    let (sg, cg) = gamma.sin_cos();
    let v = Vector3::new(sg * (1.0 + cb), sb * (1.0 + cg), sg * sb);
    let sin_theta = 0.5 * v.norm();
    let cos_theta = 0.5 * (cb + cg + cb * cg - 1.0);
    let theta = sin_theta.atan2(cos_theta);
    let c2 = v * log_scale(theta);
    let c1 = inv_left_jacobian(theta, &c2) * y;
    Ok(join_lie_vector(&c1, &c2))
}
