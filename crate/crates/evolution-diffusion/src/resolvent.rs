use field_model::OrientationField;

use crate::linear::{resolve_dt, Flow};
use crate::{DiffusionError, DiffusionParams};

/// Relative weight below which the time integral is truncated.
const TAIL: f64 = 1e-8;

/// Resolvent of the evolution generator: the field
/// P = λ(λI − Q)⁻¹U, the evolution integrated against an exponentially
/// distributed stopping time with rate λ.
///
/// The generator Q is the completion flow when `p.a3 > 0` and the enhancement
/// flow otherwise. P is accumulated over the Euler-forward trajectory
/// W_m = (I + Δt·Q)^m U with the geometric weights λΔt·β^{m+1},
/// β = 1/(1 + λΔt), which sum the trajectory to the resolvent of the
/// *discrete* generator exactly: Σ_m β^{m+1}(I + Δt·Q)^m = (λI − Q)⁻¹/Δt.
/// The sum is truncated once the remaining weight β^{m+1} drops below 1e-8,
/// the discrete counterpart of dropping times with e^{−λt} below that
/// threshold.
pub fn resolvent(
    u: &OrientationField,
    lambda: f64,
    p: &DiffusionParams,
) -> Result<OrientationField, DiffusionError> {
    assert!(lambda > 0.0, "resolvent rate must be positive");
    let (flow, bound) = if p.a3 > 0.0 {
        Flow::completion(u, p)
    } else {
        Flow::enhancement(u, p)
    };
    // Only the step size matters here; the trajectory length comes from the
    // weight truncation, not from p.t.
    let dt = resolve_dt(p.dt, bound)?;
    let beta = 1.0 / (1.0 + lambda * dt);
    // Smallest M with β^{M+1} ≤ TAIL; the truncated weights then sum to
    // exactly 1 − β^{M+1} ∈ [1 − TAIL, 1].
    let last = ((TAIL.ln() / beta.ln()).ceil() as usize).max(1) - 1;
    let mut w = u.clone();
    let mut weight = lambda * dt * beta;
    let mut acc: Vec<f64> = u.data().iter().map(|v| weight * v).collect();
    for _ in 1..=last {
        flow.advance(&mut w, dt);
        weight *= beta;
        for (a, v) in acc.iter_mut().zip(w.data()) {
            *a += weight * v;
        }
    }
    Ok(OrientationField::from_data(
        u.dims(),
        u.spacing(),
        std::sync::Arc::clone(u.tessellation()),
        acc,
    ))
}

/// Iterated resolvent: `k` applications of [`resolvent`], each one running a
/// fresh Euler trajectory from the previous result. This integrates the
/// evolution against a Gamma-distributed total traveling time with shape `k`
/// and rate λ (expected time k/λ).
pub fn k_step(
    u: &OrientationField,
    lambda: f64,
    k: usize,
    p: &DiffusionParams,
) -> Result<OrientationField, DiffusionError> {
    assert!(k >= 1, "the iterated resolvent needs at least one application");
    let mut w = resolvent(u, lambda, p)?;
    for _ in 1..k {
        w = resolvent(&w, lambda, p)?;
    }
    Ok(w)
}
