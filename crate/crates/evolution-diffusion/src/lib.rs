//! Explicit evolution solvers for diffusion on position-orientation fields.
//!
//! The crate drives three flavours of Euler-forward evolution built from the
//! moving-frame differences in `fd-operators`:
//!
//! * **enhancement** — linear diffusion along the orientation axis plus a
//!   spherical Laplacian (optionally with lateral diffusion), used to sharpen
//!   elongated structures while preserving crossings;
//! * **completion** — convection along the orientation axis combined with
//!   angular diffusion, which transports mass forward and lets it fan out in
//!   direction, bridging interrupted structures;
//! * **adaptive (Perona–Malik) diffusion** — the enhancement flow with a
//!   gradient-dependent conductivity that shuts the axial flux down across
//!   sharp interfaces.
//!
//! On top of the plain runs, [`resolvent`] integrates the evolution against an
//! exponentially distributed stopping time (the resolvent of the generator)
//! and [`k_step`] iterates it, which corresponds to a Gamma-distributed total
//! traveling time.
//!
//! All step sizes are validated against a Gerschgorin stability bound; see
//! [`stability_dt`].

mod adaptive;
mod error;
mod linear;
mod params;
mod resolvent;

pub use adaptive::{run_perona_malik, run_perona_malik_observed};
pub use error::DiffusionError;
pub use linear::{
    run_completion, run_completion_observed, run_enhancement, run_enhancement_observed,
    stability_dt,
};
pub use params::DiffusionParams;
pub use resolvent::{k_step, resolvent};
