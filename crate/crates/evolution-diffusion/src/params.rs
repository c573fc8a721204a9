use fd_operators::Boundary;

/// Coefficients and run control for the diffusion-type evolutions.
///
/// The lateral spatial coefficient and the angular coefficient are single
/// numbers that apply to both of their frame axes; sharing them is exactly
/// the condition under which the evolution is well defined on positions and
/// orientations (independent of the section used to represent orientations).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffusionParams {
    /// Diffusion across the orientation axis (both lateral axes), length²/time.
    pub d11: f64,
    /// Diffusion along the orientation axis, length²/time.
    pub d33: f64,
    /// Angular diffusion (both angular axes), rad²/time.
    pub d44: f64,
    /// Convection speed along the orientation axis, length/time. Positive
    /// values select the completion flow in [`resolvent`](crate::resolvent)
    /// and [`k_step`](crate::k_step).
    pub a3: f64,
    /// Total evolution time.
    pub t: f64,
    /// Time step. `None` picks 0.9× the stability bound, rounded down so the
    /// total time is an integer number of steps.
    pub dt: Option<f64>,
    /// Perona–Malik contrast threshold (soft gradient scale), field units per
    /// length. Only used by the adaptive run.
    pub contrast: f64,
    /// Spatial boundary handling.
    pub boundary: Boundary,
}

impl Default for DiffusionParams {
    fn default() -> Self {
        Self {
            d11: 0.0,
            d33: 1.0,
            d44: 0.04,
            a3: 0.0,
            t: 1.0,
            dt: None,
            contrast: 0.05,
            boundary: Boundary::Reflect,
        }
    }
}
