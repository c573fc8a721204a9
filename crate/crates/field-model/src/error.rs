use thiserror::Error;

/// Errors for field construction, transforms, and file I/O.
#[derive(Debug, Error)]
pub enum FieldError {
    /// A diffusion tensor was not symmetric positive-definite.
    #[error("tensor at voxel {voxel:?} is not symmetric positive-definite")]
    NonSpd { voxel: (usize, usize, usize) },

    /// A transform requiring non-negative values met a negative one.
    #[error("negative value {value} at flat index {index}; this transform requires a non-negative field")]
    NegativeInput { index: usize, value: f64 },

    /// Pointwise powers below 1 are not sharpening transforms.
    #[error("exponent {exponent} is invalid; expected p ≥ 1")]
    InvalidExponent { exponent: f64 },

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Structurally invalid or unsupported file content.
    #[error("invalid field file: {0}")]
    Format(String),
}
