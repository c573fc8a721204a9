//! Morphological scale spaces on position–orientation fields.
//!
//! Where the diffusion flows of the companion crate average a field, the
//! evolutions here move its level sets: the Hamilton–Jacobi equation
//!
//! ```text
//! ∂W/∂t = ∓ (1/2η) (D¹¹(|A₁W|² + |A₂W|²) + D⁴⁴(|A₄W|² + |A₅W|²))^η
//! ```
//!
//! erodes (−) or dilates (+) a field along the lateral spatial and angular
//! frame directions, with homogeneity exponent η ∈ [½, 1] blending flat
//! (η = ½) into quadratic (η = 1) structure elements. Three solvers cover it:
//!
//! - [`upwind_step`] / [`run_erosion`] / [`run_dilation`]: an explicit upwind
//!   finite-difference scheme in the moving frame, where the sign of the
//!   central difference selects the one-sided difference entering the
//!   Hamiltonian.
//! - [`morph_kernel`] + [`morph_convolve`]: the closed-form structure element
//!   of the evolution paired with min-plus (erosion) or max-plus (dilation)
//!   convolution over the group, exact up to the analytic kernel
//!   approximation. [`kernel_accuracy_m`] evaluates the accuracy surface of
//!   that approximation on the orientation chart.
//! - [`run_adaptive_erosion`]: a locally signed variant whose angular
//!   coefficient φ(Δ_LB U − c) erodes where the initial spherical Laplacian
//!   exceeds the threshold and dilates where it falls below, sharpening
//!   angular peaks without moving them.
//!
//! All solvers treat the two lateral spatial coefficients as equal and the two
//! angular coefficients as equal, act identically on every fiber, and commute
//! with adding constants. Dilation is evaluated through the erosion path on
//! the negated field, so the min/max duality holds exactly.

mod convolve;
mod kernel;
mod params;
mod upwind;

pub use convolve::morph_convolve;
pub use kernel::{kernel_accuracy_m, morph_kernel};
pub use params::{MorphMode, MorphParams};
pub use upwind::{run_adaptive_erosion, run_dilation, run_erosion, upwind_step};
