//! Scalar fields on positions × orientations.
//!
//! The central type is [`OrientationField`]: a double-precision scalar field
//! sampled on a regular position grid crossed with an icosahedral direction
//! grid. The crate also provides grey-value transforms (min–max sharpening,
//! pointwise powers), conversion of diffusion-tensor volumes to orientation
//! fields, glyph export for visualization, and a compact binary file format
//! with single-precision storage.

mod dti;
mod error;
pub mod exec;
mod field;
mod glyphs;
mod io;
mod transforms;

pub use dti::{dti_to_field, DtiVolume};
pub use error::FieldError;
pub use field::OrientationField;
pub use glyphs::export_glyphs;
pub use io::{read_field, write_field, write_field_with_explicit_directions, MAGIC};
pub use transforms::{minmax_sharpen, power_transform};
