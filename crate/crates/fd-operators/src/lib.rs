//! Finite-difference derivatives along the moving frame of an orientation field.
//!
//! Every grid direction `n_l` carries the rotation `R_{n_l}` that maps `e_z`
//! onto it, and the five derivative operators act along that frame:
//!
//! - `A₁`, `A₂` differentiate across the orientation axis and `A₃` along it;
//!   the shifted positions `y ± h·R_{n_l}e_p` fall between grid points and are
//!   read with trilinear interpolation,
//! - `A₄`, `A₅` rotate the orientation about the frame's `e_x`/`e_y` axes; the
//!   rotated directions fall between tessellation vertices and are read with
//!   barycentric interpolation on the sphere.
//!
//! [`apply_a`] forms forward, backward, and centered first differences of all
//! five, [`second_difference_a3`] the centered second difference along the
//! orientation axis, and [`laplace_beltrami`] the spherical Laplacian. For the
//! angular operators the adjoint of the forward difference under the
//! surface-measure inner product is exposed as [`angular_adjoint_backward`];
//! pairing it with the forward difference yields a symmetric negative
//! semi-definite spherical block that conserves mass exactly, which is how
//! [`assemble_generator`] builds the diffusion generator
//! `D³³A₃ᶠA₃ᵇ + D¹¹(A₁ᶠA₁ᵇ + A₂ᶠA₂ᵇ) + D⁴⁴Δ_{S²}`.
//!
//! Interpolation stencils are computed once per (tessellation, angular step)
//! and cached for reuse across calls.

mod apply;
mod boundary;
mod matrix;
mod stencils;

pub use apply::{
    angular_adjoint_backward, apply_a, laplace_beltrami, second_difference_a3, Side,
};
pub use boundary::Boundary;
pub use matrix::{assemble_generator, GeneratorCoefficients, OperatorMatrix};
