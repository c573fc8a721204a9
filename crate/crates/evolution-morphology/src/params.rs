/// Direction of the Hamilton–Jacobi evolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphMode {
    /// Shrinking evolution (min-plus algebra): output never exceeds the input.
    Erosion,
    /// Growing evolution (max-plus algebra), the additive dual of erosion.
    Dilation,
}

/// Parameters of the morphological evolutions.
///
/// The lateral spatial directions share one coefficient and the angular
/// directions share another; distinct values would make the evolution depend
/// on the arbitrary fiber angle of the moving frame. Intensities enter the
/// Hamiltonian only through first differences, so every solver commutes with
/// adding constants.
#[derive(Clone, Copy, Debug)]
pub struct MorphParams {
    /// Coefficient of the two lateral spatial terms.
    pub d11: f64,
    /// Coefficient of the two angular terms.
    pub d44: f64,
    /// Homogeneity exponent η ∈ [½, 1]: ½ gives flat structure elements
    /// (constant-speed front propagation), 1 the quadratic Hamiltonian.
    pub eta: f64,
    /// Total evolution time.
    pub t: f64,
    /// Explicit time step. `None` derives one from the gradient-dependent
    /// stability guard before every step.
    pub dt: Option<f64>,
    /// Whether the field is eroded or dilated.
    pub mode: MorphMode,
    /// Threshold c of the adaptive angular coefficient φ(Δ_LB U − c).
    pub threshold: f64,
    /// Exponent of the adaptive odd power law φ(x) = D⁴⁴ sign(x)|x|^exponent.
    pub exponent: f64,
}

impl Default for MorphParams {
    fn default() -> Self {
        Self {
            d11: 0.0,
            d44: 0.4,
            eta: 1.0,
            t: 0.4,
            dt: None,
            mode: MorphMode::Erosion,
            threshold: 0.0,
            exponent: 1.0 / 3.0,
        }
    }
}

impl MorphParams {
    pub(crate) fn validate(&self) {
        assert!(
            self.d11 >= 0.0 && self.d44 >= 0.0,
            "evolution coefficients must be nonnegative"
        );
        assert!(
            (0.5..=1.0).contains(&self.eta),
            "homogeneity exponent must lie in [1/2, 1], got {}",
            self.eta
        );
        assert!(self.t >= 0.0, "evolution time must be nonnegative");
        if let Some(dt) = self.dt {
            assert!(dt > 0.0, "explicit time step must be positive");
        }
    }
}
