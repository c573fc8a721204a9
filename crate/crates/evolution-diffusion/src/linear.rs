use fd_operators::{
    apply_a, assemble_generator, laplace_beltrami, GeneratorCoefficients, OperatorMatrix, Side,
};
use field_model::OrientationField;

use crate::{DiffusionError, DiffusionParams};

/// Largest stable Euler step for the combined evolution,
/// 1 / ((4·d11 + 2·d33)/h² + 4·d44/h_a² + a3/h).
///
/// The spatial and angular terms are the Gerschgorin bound of the diffusion
/// generator; a positive convection speed adds its CFL share to the same
/// denominator, which is stricter than taking the minimum of the two bounds.
pub fn stability_dt(p: &DiffusionParams, h: f64, h_a: f64) -> Result<f64, DiffusionError> {
    assert!(h > 0.0, "spatial step must be positive");
    assert!(h_a > 0.0, "angular step must be positive");
    assert!(
        p.d11 >= 0.0 && p.d33 >= 0.0 && p.d44 >= 0.0 && p.a3 >= 0.0,
        "evolution coefficients must be nonnegative"
    );
    let denom = (4.0 * p.d11 + 2.0 * p.d33) / (h * h) + 4.0 * p.d44 / (h_a * h_a) + p.a3 / h;
    if denom == 0.0 {
        return Err(DiffusionError::AllZeroCoefficients);
    }
    Ok(1.0 / denom)
}

/// Validates an explicit step against the bound (with a small relative slack
/// so that running exactly at the bound is accepted), or defaults to 0.9× the
/// bound.
pub(crate) fn resolve_dt(dt: Option<f64>, bound: f64) -> Result<f64, DiffusionError> {
    match dt {
        Some(dt) => {
            assert!(dt > 0.0, "time step must be positive");
            if dt > bound * (1.0 + 1e-9) {
                Err(DiffusionError::UnstableStep { dt, bound })
            } else {
                Ok(dt)
            }
        }
        None => {
            if !bound.is_finite() {
                Err(DiffusionError::AllZeroCoefficients)
            } else {
                Ok(0.9 * bound)
            }
        }
    }
}

/// Splits the total time into Euler steps no larger than `bound`. An explicit
/// step must divide the total time; an automatic step is shrunk from 0.9× the
/// bound so that the step count is an integer.
pub(crate) fn resolve_steps(
    t: f64,
    dt: Option<f64>,
    bound: f64,
) -> Result<(usize, f64), DiffusionError> {
    assert!(t >= 0.0, "evolution time must be nonnegative");
    if t == 0.0 {
        return Ok((0, dt.unwrap_or(bound)));
    }
    let dt0 = resolve_dt(dt, bound)?;
    if dt.is_some() {
        let n = (t / dt0).round();
        assert!(
            (n * dt0 - t).abs() <= 1e-6 * t.max(1.0),
            "total time must be an integer number of steps"
        );
        Ok((n as usize, dt0))
    } else {
        let n = (t / dt0).ceil().max(1.0);
        Ok((n as usize, t / n))
    }
}

/// One Euler-forward evolution, either the assembled diffusion generator or
/// the matrix-free convection–diffusion composition.
pub(crate) enum Flow {
    Diffusion {
        generator: OperatorMatrix,
    },
    Convection {
        a3: f64,
        d44: f64,
        h: f64,
        h_a: f64,
        boundary: fd_operators::Boundary,
    },
}

impl Flow {
    /// Enhancement flow: d33 along the orientation axis, d11 across it, d44
    /// on the sphere. The generator is assembled once and applied per step.
    pub(crate) fn enhancement(
        template: &OrientationField,
        p: &DiffusionParams,
    ) -> (Self, f64) {
        let h = template.spacing();
        let h_a = template.tessellation().mean_edge_length();
        let denom = (4.0 * p.d11 + 2.0 * p.d33) / (h * h) + 4.0 * p.d44 / (h_a * h_a);
        let coefficients = GeneratorCoefficients {
            d11: p.d11,
            d33: p.d33,
            d44: p.d44,
        };
        let generator = assemble_generator(template, &coefficients, h, h_a, p.boundary);
        let bound = if denom > 0.0 { 1.0 / denom } else { f64::INFINITY };
        (Flow::Diffusion { generator }, bound)
    }

    /// Completion flow: upwind convection along the orientation axis (the
    /// backward difference, for positive speed) plus angular diffusion.
    pub(crate) fn completion(template: &OrientationField, p: &DiffusionParams) -> (Self, f64) {
        assert!(p.a3 > 0.0, "completion requires a positive convection speed");
        let h = template.spacing();
        let h_a = template.tessellation().mean_edge_length();
        let denom = p.a3 / h + 4.0 * p.d44 / (h_a * h_a);
        (
            Flow::Convection {
                a3: p.a3,
                d44: p.d44,
                h,
                h_a,
                boundary: p.boundary,
            },
            1.0 / denom,
        )
    }

    /// Advances `w` by one Euler step of size `dt`.
    pub(crate) fn advance(&self, w: &mut OrientationField, dt: f64) {
        match self {
            Flow::Diffusion { generator } => {
                let jw = generator.apply(w.data());
                for (wi, d) in w.data_mut().iter_mut().zip(&jw) {
                    *wi += dt * d;
                }
            }
            Flow::Convection {
                a3,
                d44,
                h,
                h_a,
                boundary,
            } => {
                let backward = apply_a(3, Side::Backward, w, *h, *h_a, *boundary);
                if *d44 > 0.0 {
                    let spherical = laplace_beltrami(w, *h_a);
                    for ((wi, b), s) in w
                        .data_mut()
                        .iter_mut()
                        .zip(backward.data())
                        .zip(spherical.data())
                    {
                        *wi += dt * (d44 * s - a3 * b);
                    }
                } else {
                    for (wi, b) in w.data_mut().iter_mut().zip(backward.data()) {
                        *wi -= dt * a3 * b;
                    }
                }
            }
        }
    }
}

fn run_flow(
    u: &OrientationField,
    p: &DiffusionParams,
    flow: Flow,
    bound: f64,
    mut observe: impl FnMut(usize, &OrientationField),
) -> Result<OrientationField, DiffusionError> {
    if bound.is_infinite() && p.dt.is_none() && p.t > 0.0 {
        return Err(DiffusionError::AllZeroCoefficients);
    }
    let (nsteps, dt) = resolve_steps(p.t, p.dt, bound)?;
    let mut w = u.clone();
    for m in 1..=nsteps {
        flow.advance(&mut w, dt);
        observe(m, &w);
    }
    Ok(w)
}

/// Linear diffusion for structure enhancement,
/// ∂W/∂t = (d33·A₃A₃ + d11·(A₁A₁ + A₂A₂) + d44·Δ_sphere) W,
/// advanced by Euler-forward steps to time `p.t`.
///
/// The convection speed in `p` is ignored. Errors with
/// [`DiffusionError::UnstableStep`] when an explicit step exceeds the
/// stability bound, and with [`DiffusionError::AllZeroCoefficients`] when no
/// step can be chosen automatically.
pub fn run_enhancement(
    u: &OrientationField,
    p: &DiffusionParams,
) -> Result<OrientationField, DiffusionError> {
    run_enhancement_observed(u, p, |_, _| {})
}

/// [`run_enhancement`] with a per-step observer `observe(step_index, state)`,
/// for monitoring max-norms, mass, or intermediate snapshots without paying
/// for repeated runs.
pub fn run_enhancement_observed(
    u: &OrientationField,
    p: &DiffusionParams,
    observe: impl FnMut(usize, &OrientationField),
) -> Result<OrientationField, DiffusionError> {
    let (flow, bound) = Flow::enhancement(u, p);
    run_flow(u, p, flow, bound, observe)
}

/// Convection–diffusion for structure completion,
/// ∂W/∂t = (−a3·A₃ + d44·Δ_sphere) W,
/// advanced by Euler-forward steps to time `p.t`. The convection term is
/// discretized upwind (backward difference for positive speed).
///
/// The spatial diffusion coefficients in `p` are ignored.
pub fn run_completion(
    u: &OrientationField,
    p: &DiffusionParams,
) -> Result<OrientationField, DiffusionError> {
    run_completion_observed(u, p, |_, _| {})
}

/// [`run_completion`] with a per-step observer.
pub fn run_completion_observed(
    u: &OrientationField,
    p: &DiffusionParams,
    observe: impl FnMut(usize, &OrientationField),
) -> Result<OrientationField, DiffusionError> {
    let (flow, bound) = Flow::completion(u, p);
    run_flow(u, p, flow, bound, observe)
}
