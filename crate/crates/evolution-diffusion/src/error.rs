use thiserror::Error;

/// Failures of the explicit evolution drivers.
#[derive(Debug, Error)]
pub enum DiffusionError {
    /// Every coefficient of the requested evolution is zero, so no stability
    /// bound (and hence no automatic step size) exists.
    #[error("all evolution coefficients are zero; there is nothing to evolve")]
    AllZeroCoefficients,
    /// The requested time step exceeds the Gerschgorin stability bound of the
    /// discrete generator.
    #[error("time step {dt} exceeds the stability bound {bound}")]
    UnstableStep { dt: f64, bound: f64 },
}
