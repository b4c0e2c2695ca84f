//! Single-site addressing of optical-lattice atoms beyond the diffraction
//! limit, using stimulated Raman adiabatic passage with a node in the pump
//! beam (SLAP).
//!
//! The crate is organized in four layers:
//!
//! - [`model`]: physical parameters, pump/Stokes field profiles, the dark
//!   state, and the lattice density, together with all derived trap
//!   quantities.
//! - [`analytics`]: closed-form resolution, feasibility, and efficiency
//!   formulas, plus inverse design (the intensity ratio required for a
//!   target resolution).
//! - [`dynamics`]: open-system time evolution of a single Λ atom at a fixed
//!   position, integrating the Lindblad master equation with an adaptive
//!   embedded Runge-Kutta pair.
//! - [`scan`]: spatial sweeps, survival profiles, empirical FWHM extraction,
//!   site probabilities, and intensity-ratio sweeps.
//!
//! All angular frequencies are in rad/s, lengths in meters, and times in
//! seconds. Conversions from conventional units (MHz, nm, µs) are the
//! responsibility of the caller.

pub mod analytics;
pub mod constants;
pub mod dynamics;
mod error;
pub mod model;
pub mod ode;
pub mod scan;
#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
