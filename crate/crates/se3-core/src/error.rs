use thiserror::Error;

/// Failures of the chart and logarithm operations.
///
/// All group operations themselves are total; errors arise only where a chart or a
/// principal branch does not cover the requested element.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Se3Error {
    /// The rotation angle is too close to π for the principal logarithm branch: the
    /// antipodal sign choice would be arbitrary, so the logarithm is refused.
    #[error("rotation angle {angle} rad is outside the principal logarithm branch")]
    AngleOutOfBranch {
        /// Principal rotation angle of the offending element, in radians.
        angle: f64,
    },

    /// The requested configuration lies on (or numerically at) a singular locus of
    /// the Euler chart in use.
    #[error("chart singularity: {context}")]
    ChartSingularity {
        /// Which chart/locus was hit.
        context: &'static str,
    },
}
