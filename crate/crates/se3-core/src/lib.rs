//! Exact arithmetic on the rigid-motion group SE(3) and the section maps used to
//! work on the coupled position–orientation space R³⋊S².
//!
//! The crate provides:
//!
//! - [`SE3Element`] with group [`compose`]/inverse and homogeneous-matrix conversion,
//! - the exponential map [`exp_se3`] (Rodrigues form with small-angle series) and the
//!   principal-branch logarithm [`log_se3`],
//! - the section logarithm [`log_section`] for elements parameterized by a position
//!   and the two orientation angles (β̃, γ̃) of the second Euler chart,
//! - both Euler charts ([`EulerAngles1`] = ZYZ, [`EulerAngles2`] = XYZ order) with
//!   singularity-checked extraction,
//! - the rational rotation-onto-normal construction [`rotation_onto`] and its inverse
//!   angle extraction [`angles_from_normal`],
//! - the anisotropic homogeneous norm [`weighted_modulus`] built from logarithm
//!   coefficients.
//!
//! All operations are pure value computations and safe to call concurrently.

mod charts;
mod element;
mod error;
mod exp_log;
mod modulus;

pub use charts::{
    angles_from_normal, normal_from_angles, rotation_onto, EulerAngles1, EulerAngles2,
};
pub use element::{compose, SE3Element};
pub use error::Se3Error;
pub use exp_log::{exp_se3, log_se3, log_section};
pub use modulus::{weighted_modulus, weighted_modulus_squared};

/// Rotation part of a rigid motion: an element of SO(3).
pub type Rotation = nalgebra::Rotation3<f64>;

/// Coefficients (c¹, …, c⁶) of a Lie-algebra element Σ cⁱ Aᵢ with respect to the
/// left-invariant frame: (c¹, c², c³) is the spatial velocity ĉ⁽¹⁾ (length units),
/// (c⁴, c⁵, c⁶) the angular velocity ĉ⁽²⁾ (radians).
pub type LieVector = nalgebra::Vector6<f64>;

/// Splits a [`LieVector`] into its spatial part ĉ⁽¹⁾ and angular part ĉ⁽²⁾.
pub fn split_lie_vector(c: &LieVector) -> (nalgebra::Vector3<f64>, nalgebra::Vector3<f64>) {
    (
        c.fixed_rows::<3>(0).into_owned(),
        c.fixed_rows::<3>(3).into_owned(),
    )
}

/// Assembles a [`LieVector`] from its spatial and angular parts.
pub fn join_lie_vector(
    spatial: &nalgebra::Vector3<f64>,
    angular: &nalgebra::Vector3<f64>,
) -> LieVector {
    LieVector::new(
        spatial.x, spatial.y, spatial.z, angular.x, angular.y, angular.z,
    )
}
