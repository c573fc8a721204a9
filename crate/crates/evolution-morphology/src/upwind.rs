use fd_operators::{apply_a, laplace_beltrami, Boundary, Side};
use field_model::{exec, OrientationField};

use crate::params::{MorphMode, MorphParams};

/// Boundary rule of the finite-difference solvers. Reflection extends the
/// field evenly, so boundary voxels see a vanishing normal gradient and the
/// evolution stays additive-invariant up to rounding.
const BOUNDARY: Boundary = Boundary::Reflect;

/// Hard cap on the step count of one run: the adaptive guard shrinks with the
/// steepest gradient and could otherwise demand arbitrarily many steps on
/// rough data.
const MAX_STEPS: f64 = 1024.0;

/// The three first differences of one frame direction, taken once per step.
struct Differences {
    central: OrientationField,
    forward: OrientationField,
    backward: OrientationField,
}

impl Differences {
    fn of(i: usize, w: &OrientationField, h: f64, h_a: f64) -> Self {
        Self {
            central: apply_a(i, Side::Central, w, h, h_a, BOUNDARY),
            forward: apply_a(i, Side::Forward, w, h, h_a, BOUNDARY),
            backward: apply_a(i, Side::Backward, w, h, h_a, BOUNDARY),
        }
    }

    /// The upwind difference at `idx`: the one-sided difference on the side
    /// the central difference points to. `mirror` flips the selection, which
    /// is equivalent to selecting on the negated field (the dilation rule).
    fn select(&self, idx: usize, mirror: bool) -> f64 {
        let c = self.central.data()[idx];
        let positive = if mirror { c < 0.0 } else { c > 0.0 };
        let negative = if mirror { c > 0.0 } else { c < 0.0 };
        if positive {
            self.backward.data()[idx]
        } else if negative {
            self.forward.data()[idx]
        } else {
            0.0
        }
    }
}

/// Sum of squared upwind differences over `dirs`, per point.
fn selected_gradient_squares(
    w: &OrientationField,
    dirs: &[usize],
    mirror: bool,
    h: f64,
    h_a: f64,
) -> Vec<f64> {
    let n_o = w.direction_count();
    let diffs: Vec<Differences> = dirs.iter().map(|&i| Differences::of(i, w, h, h_a)).collect();
    let mut acc = vec![0.0; w.data().len()];
    exec::for_each_chunk(&mut acc, n_o, |v, chunk| {
        for (l, slot) in chunk.iter_mut().enumerate() {
            let idx = v * n_o + l;
            let mut sum = 0.0;
            for d in &diffs {
                let dx = d.select(idx, mirror);
                sum += dx * dx;
            }
            *slot = sum;
        }
    });
    acc
}

/// Step bound 0.25·step^{2η}/(coeff·G^{2η−2}) of one transport mechanism,
/// with G the largest selected gradient magnitude. Unbounded on flat fields,
/// where the Hamiltonian vanishes anyway.
fn mechanism_bound(step: f64, coeff: f64, max_gradsq: f64, eta: f64) -> f64 {
    let g = max_gradsq.sqrt();
    if coeff <= 0.0 || g <= 1e-30 {
        return f64::INFINITY;
    }
    0.25 * step.powf(2.0 * eta) / (coeff * g.powf(2.0 * eta - 2.0))
}

fn max_value(values: &[f64]) -> f64 {
    values.iter().fold(0.0_f64, |m, &v| m.max(v))
}

/// One erosion update of size `dt` applied in place:
/// `w −= (dt/2η)·(d11·gs + d44·ga)^η`.
fn apply_erosion_update(
    w: &mut OrientationField,
    dt: f64,
    eta: f64,
    d11: f64,
    d44: f64,
    spatial: Option<&[f64]>,
    angular: Option<&[f64]>,
) {
    let n_o = w.direction_count();
    let scale = dt / (2.0 * eta);
    exec::for_each_chunk(w.data_mut(), n_o, |v, chunk| {
        for (l, slot) in chunk.iter_mut().enumerate() {
            let idx = v * n_o + l;
            let mut ham = 0.0;
            if let Some(gs) = spatial {
                ham += d11 * gs[idx];
            }
            if let Some(ga) = angular {
                ham += d44 * ga[idx];
            }
            *slot -= scale * ham.powf(eta);
        }
    });
}

pub(crate) fn negated(u: &OrientationField) -> OrientationField {
    let mut out = u.clone();
    for v in out.data_mut() {
        *v = -*v;
    }
    out
}

/// Runs the erosion evolution to time `params.t` with an erosion-mode update
/// regardless of `params.mode` (the caller's choice of entry point wins).
fn erode(u: &OrientationField, params: &MorphParams) -> OrientationField {
    let h = u.spacing();
    let h_a = u.tessellation().mean_edge_length();
    let mut w = u.clone();
    let mut remaining = params.t;
    let floor = params.t / MAX_STEPS;
    while remaining > params.t * 1e-12 {
        let spatial = (params.d11 > 0.0)
            .then(|| selected_gradient_squares(&w, &[1, 2], false, h, h_a));
        let angular = (params.d44 > 0.0)
            .then(|| selected_gradient_squares(&w, &[4, 5], false, h, h_a));
        let dt = match params.dt {
            Some(dt) => dt.min(remaining),
            None => {
                let bound = mechanism_bound(
                    h,
                    params.d11,
                    spatial.as_deref().map_or(0.0, max_value),
                    params.eta,
                )
                .min(mechanism_bound(
                    h_a,
                    params.d44,
                    angular.as_deref().map_or(0.0, max_value),
                    params.eta,
                ));
                bound.max(floor).min(remaining)
            }
        };
        apply_erosion_update(
            &mut w,
            dt,
            params.eta,
            params.d11,
            params.d44,
            spatial.as_deref(),
            angular.as_deref(),
        );
        remaining -= dt;
    }
    w
}

/// One explicit upwind step of the Hamilton–Jacobi evolution in the mode
/// given by `params.mode`.
///
/// The step size is `params.dt` when set; otherwise the gradient-dependent
/// stability guard of the steeper mechanism. The total time `params.t` plays
/// no role here — this advances exactly one step.
pub fn upwind_step(w: &OrientationField, params: &MorphParams) -> OrientationField {
    params.validate();
    let step = |u: &OrientationField| {
        let h = u.spacing();
        let h_a = u.tessellation().mean_edge_length();
        let spatial = (params.d11 > 0.0)
            .then(|| selected_gradient_squares(u, &[1, 2], false, h, h_a));
        let angular = (params.d44 > 0.0)
            .then(|| selected_gradient_squares(u, &[4, 5], false, h, h_a));
        let dt = params.dt.unwrap_or_else(|| {
            mechanism_bound(
                h,
                params.d11,
                spatial.as_deref().map_or(0.0, max_value),
                params.eta,
            )
            .min(mechanism_bound(
                h_a,
                params.d44,
                angular.as_deref().map_or(0.0, max_value),
                params.eta,
            ))
        });
        assert!(
            dt.is_finite(),
            "no finite step size: set an explicit dt for gradient-free fields"
        );
        let mut next = u.clone();
        apply_erosion_update(
            &mut next,
            dt,
            params.eta,
            params.d11,
            params.d44,
            spatial.as_deref(),
            angular.as_deref(),
        );
        next
    };
    match params.mode {
        MorphMode::Erosion => step(w),
        MorphMode::Dilation => negated(&step(&negated(w))),
    }
}

/// Erodes `u` to time `params.t`: level sets shrink, the output never
/// exceeds the input, and adding a constant to the input adds the same
/// constant to the output.
pub fn run_erosion(u: &OrientationField, params: &MorphParams) -> OrientationField {
    params.validate();
    erode(u, params)
}

/// Dilates `u` to time `params.t`, evaluated as −erosion(−u) so the duality
/// between the two modes holds exactly.
pub fn run_dilation(u: &OrientationField, params: &MorphParams) -> OrientationField {
    params.validate();
    negated(&erode(&negated(u), params))
}

/// Angular erosion whose coefficient switches sign per point.
///
/// The switching field d = Δ_LB u(·, t=0) − threshold is computed once from
/// the input and held fixed; the signed coefficient φ(d) = D⁴⁴ sign(d)
/// |d|^exponent then erodes where d > 0 (typically spherical minima and
/// flanks) and dilates where d < 0 (spherical maxima), sharpening angular
/// peaks in place. Only the angular terms take part; `params.d11` is ignored.
pub fn run_adaptive_erosion(u: &OrientationField, params: &MorphParams) -> OrientationField {
    params.validate();
    assert!(
        params.exponent > 0.0,
        "adaptive exponent must be positive, got {}",
        params.exponent
    );
    let h = u.spacing();
    let h_a = u.tessellation().mean_edge_length();
    let lb = laplace_beltrami(u, h_a);
    let phi: Vec<f64> = lb
        .data()
        .iter()
        .map(|&d| {
            let x = d - params.threshold;
            params.d44 * x.signum() * x.abs().powf(params.exponent)
        })
        .collect();
    let phi_max = phi.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));

    let n_o = u.direction_count();
    let mut w = u.clone();
    let mut remaining = params.t;
    let floor = params.t / MAX_STEPS;
    while remaining > params.t * 1e-12 {
        let eroding = selected_gradient_squares(&w, &[4, 5], false, h, h_a);
        let dilating = selected_gradient_squares(&w, &[4, 5], true, h, h_a);
        let dt = match params.dt {
            Some(dt) => dt.min(remaining),
            None => {
                let max_gradsq = max_value(&eroding).max(max_value(&dilating));
                mechanism_bound(h_a, phi_max, max_gradsq, params.eta)
                    .max(floor)
                    .min(remaining)
            }
        };
        let scale = dt / (2.0 * params.eta);
        let eta = params.eta;
        let phi = &phi;
        let eroding = &eroding;
        let dilating = &dilating;
        exec::for_each_chunk(w.data_mut(), n_o, |v, chunk| {
            for (l, slot) in chunk.iter_mut().enumerate() {
                let idx = v * n_o + l;
                let s = phi[idx];
                if s > 0.0 {
                    *slot -= scale * (s * eroding[idx]).powf(eta);
                } else if s < 0.0 {
                    *slot += scale * (-s * dilating[idx]).powf(eta);
                }
            }
        });
        remaining -= dt;
    }
    w
}
