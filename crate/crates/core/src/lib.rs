//! Toroidal electromagnetic model of the photon and the electron-positron pair.
//!
//! Everything is expressed in Gaussian CGS units. The crate is organised
//! bottom-up:
//!
//! - [`constants`]: CODATA 2018 values and the electron length scales.
//! - [`geometry`]: circular trajectories, Frenet frames and torus metrics.
//! - [`fields`]: plane and twirled wave configurations, displacement-current
//!   decomposition, charge, energy and mass densities.
//! - [`quadrature`]: composite Gauss-Legendre integration of charge, mass and
//!   angular momentum over the twirled support.
//! - [`model`]: the photon / semi-photon parameter chain ending in the bare
//!   fine-structure constant `(2/pi) zeta^2`.
//! - [`renorm`]: vacuum-polarization arithmetic between bare and measured values.
//! - [`lorentz`]: boosts of plane-wave packets and the invariant ratios.
//! - [`cli`] and [`report`]: the command-line front end and its emitters.

// `!(x > 0.0)` is used on purpose so that NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod constants;
pub mod error;
pub mod fields;
pub mod geometry;
pub mod lorentz;
pub mod model;
pub mod quadrature;
pub mod renorm;
pub mod report;

pub use error::{Error, Result};

/// Relative difference `|a - b| / max(|a|, |b|)`, zero when both are zero.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
