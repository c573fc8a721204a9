//! Icosahedral tessellations of the unit sphere.
//!
//! The tessellation starts from a regular icosahedron in the polar orientation
//! (vertices at ±e_z), subdivides every face into `(o+1)²` spherical triangles,
//! and equips every vertex with a surface measure so that sums over vertices
//! approximate integrals over S². Triangle location and barycentric
//! interpolation provide the angular sampling used by discrete differential
//! operators and kernel convolutions.

mod error;
mod interpolation;
mod tessellation;

pub use error::SphereGridError;
pub use interpolation::{interpolate, InterpolationWeights};
pub use tessellation::{build_tessellation, Tessellation};
