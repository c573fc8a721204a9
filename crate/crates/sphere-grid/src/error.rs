use thiserror::Error;

/// Errors produced while building a tessellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SphereGridError {
    /// Subdivision orders above 6 are rejected as a memory guard; order 6
    /// already yields 492 directions, far beyond practical grids.
    #[error("tessellation order {order} exceeds the supported maximum of 6")]
    OrderTooLarge { order: usize },
}
