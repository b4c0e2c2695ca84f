//! Physical parameters and position/time-dependent field evaluations.
//!
//! The pump beam carries a node at the target site x = 0 while the Stokes
//! beam is a plain Gaussian centered there. Both share a Gaussian temporal
//! envelope of width `sigma`; the pulse order is set by the temporal centers
//! `t_p` and `t_s`:
//!
//! ```text
//! Omega_P(x,t) = Omega_P0 * (1 - exp(-x^2/w_P^2)) * exp(-(t-t_P)^2 / 2 sigma^2)
//! Omega_S(x,t) = Omega_S0 *      exp(-x^2/w_S^2)  * exp(-(t-t_S)^2 / 2 sigma^2)
//! ```
//!
//! Atoms sit in the ground band of the lattice wells, each a normalized
//! Gaussian of width `w_at = sqrt(hbar / m omega)` centered on its site.

use crate::constants::HBAR;
use crate::{Error, Result};

/// Pump/Stokes pulse-pair parameterization.
///
/// All frequencies are angular (rad/s), lengths in meters, times in seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSpec {
    /// Peak pump Rabi frequency, rad/s.
    pub omega_p0: f64,
    /// Peak Stokes Rabi frequency, rad/s.
    pub omega_s0: f64,
    /// Pump node 1/e half-width, m.
    pub w_p: f64,
    /// Stokes 1/e half-width, m.
    pub w_s: f64,
    /// Pump temporal center, s.
    pub t_p: f64,
    /// Stokes temporal center, s.
    pub t_s: f64,
    /// Temporal width, s.
    pub sigma: f64,
    /// Pump single-photon detuning, rad/s.
    pub delta_p: f64,
    /// Stokes single-photon detuning, rad/s.
    pub delta_s: f64,
    /// Addressing-light wavelength, m.
    pub lambda_l: f64,
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.omega_p0 >= 0.0) {
            return Err(Error::invalid("FieldSpec", "omega_p0 must be >= 0"));
        }
        if !(self.omega_s0 > 0.0) {
            return Err(Error::invalid("FieldSpec", "omega_s0 must be > 0"));
        }
        if !(self.w_p > 0.0) {
            return Err(Error::invalid("FieldSpec", "w_p must be > 0"));
        }
        if !(self.w_s > 0.0) {
            return Err(Error::invalid("FieldSpec", "w_s must be > 0"));
        }
        if !(self.sigma > 0.0) {
            return Err(Error::invalid("FieldSpec", "sigma must be > 0"));
        }
        if !(self.lambda_l > 0.0) {
            return Err(Error::invalid("FieldSpec", "lambda_l must be > 0"));
        }
        if !self.t_p.is_finite() || !self.t_s.is_finite() {
            return Err(Error::invalid("FieldSpec", "t_p and t_s must be finite"));
        }
        if !self.delta_p.is_finite() || !self.delta_s.is_finite() {
            return Err(Error::invalid("FieldSpec", "detunings must be finite"));
        }
        Ok(())
    }

    /// Pulse delay T = t_p - t_s; positive for the counterintuitive
    /// (Stokes-first) order.
    pub fn delay(&self) -> f64 {
        self.t_p - self.t_s
    }

    /// Intensity ratio R = (Omega_P0 / Omega_S0)^2.
    pub fn intensity_ratio(&self) -> f64 {
        (self.omega_p0 / self.omega_s0).powi(2)
    }

    /// Waist-corrected ratio R' = R (w_S / w_P)^4.
    pub fn modified_ratio(&self) -> f64 {
        self.intensity_ratio() * (self.w_s / self.w_p).powi(4)
    }

    /// Rabi frequencies (Omega_P, Omega_S) at position `x` and time `t`.
    pub fn amplitudes(&self, x: f64, t: f64) -> (f64, f64) {
        let (sp, ss) = self.spatial_envelopes(x);
        let gp = (-(t - self.t_p).powi(2) / (2.0 * self.sigma * self.sigma)).exp();
        let gs = (-(t - self.t_s).powi(2) / (2.0 * self.sigma * self.sigma)).exp();
        (self.omega_p0 * sp * gp, self.omega_s0 * ss * gs)
    }

    /// Dimensionless spatial envelopes of pump and Stokes at `x`.
    ///
    /// The pump factor `1 - exp(-x^2/w_p^2)` vanishes identically at the
    /// node x = 0.
    pub fn spatial_envelopes(&self, x: f64) -> (f64, f64) {
        let p = if x == 0.0 {
            0.0
        } else {
            1.0 - (-x * x / (self.w_p * self.w_p)).exp()
        };
        let s = (-x * x / (self.w_s * self.w_s)).exp();
        (p, s)
    }
}

/// The dark state cos(theta)|1> - sin(theta)|3> at one point of space-time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarkState {
    /// Mixing angle theta = atan(Omega_P / Omega_S), in [0, pi/2].
    pub theta: f64,
    /// Amplitude on |1>: cos(theta).
    pub c1: f64,
    /// Amplitude on |3>: -sin(theta).
    pub c3: f64,
}

/// Evaluate the dark state of the Λ system at (x, t).
///
/// Errors with [`Error::DegenerateFields`] when both Rabi frequencies vanish:
/// the mixing angle is ill-conditioned there and adiabatic following is
/// meaningless.
pub fn dark_state(x: f64, t: f64, f: &FieldSpec) -> Result<DarkState> {
    let (omega_p, omega_s) = f.amplitudes(x, t);
    if omega_p == 0.0 && omega_s == 0.0 {
        return Err(Error::DegenerateFields { x, t });
    }
    // atan2 keeps theta well-behaved as either field approaches zero
    let theta = omega_p.atan2(omega_s);
    Ok(DarkState {
        theta,
        c1: theta.cos(),
        c3: -theta.sin(),
    })
}

/// Optical-lattice geometry. Sites sit at x_n = n * lambda / 2 with the
/// target site n = 0 centered; `n_sites` is odd so the comb is symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSpec {
    /// Lattice-laser wavelength, m.
    pub lambda: f64,
    /// Trap depth in recoil energies E_r = hbar^2 k^2 / 2m.
    pub v0_over_er: f64,
    /// Number of occupied sites (odd).
    pub n_sites: u32,
}

impl LatticeSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0) {
            return Err(Error::invalid("LatticeSpec", "lambda must be > 0"));
        }
        if !(self.v0_over_er > 0.0) {
            return Err(Error::invalid("LatticeSpec", "v0_over_er must be > 0"));
        }
        if self.n_sites == 0 || self.n_sites % 2 == 0 {
            return Err(Error::invalid("LatticeSpec", "n_sites must be odd"));
        }
        Ok(())
    }

    /// Center of site `n`, at n * lambda / 2.
    pub fn site_center(&self, n: i32) -> f64 {
        n as f64 * self.lambda / 2.0
    }

    /// Nearest-neighbor distance x_1 = lambda / 2.
    pub fn neighbor_distance(&self) -> f64 {
        self.lambda / 2.0
    }

    /// Site indices, centered on the target site: -(n-1)/2 ..= (n-1)/2.
    pub fn site_indices(&self) -> impl Iterator<Item = i32> {
        let half = (self.n_sites as i32 - 1) / 2;
        -half..=half
    }
}

/// Atomic mass and spontaneous decay rates of the Λ system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomSpec {
    /// Atomic mass, kg.
    pub mass: f64,
    /// Spontaneous rate |2> -> |1>, rad/s.
    pub gamma21: f64,
    /// Spontaneous rate |2> -> |3>, rad/s.
    pub gamma23: f64,
}

impl AtomSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.mass > 0.0) {
            return Err(Error::invalid("AtomSpec", "mass must be > 0"));
        }
        if !(self.gamma21 >= 0.0) || !(self.gamma23 >= 0.0) {
            return Err(Error::invalid("AtomSpec", "decay rates must be >= 0"));
        }
        Ok(())
    }

    /// Total decay rate out of the excited state.
    pub fn gamma_total(&self) -> f64 {
        self.gamma21 + self.gamma23
    }
}

/// Quantities derived from the harmonic expansion of a lattice well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapDerived {
    /// Harmonic trapping frequency, rad/s.
    pub omega_trap: f64,
    /// Ground-state width sqrt(hbar / m omega), m.
    pub w_at: f64,
    /// FWHM of the site density, 2 sqrt(ln 2) w_at, m.
    pub dx_at: f64,
}

/// Expand V0 sin^2(kx) about a minimum: omega = k sqrt(2 V0 / m).
pub fn derive_trap(lat: &LatticeSpec, atom: &AtomSpec) -> TrapDerived {
    let k = 2.0 * std::f64::consts::PI / lat.lambda;
    let recoil = HBAR * HBAR * k * k / (2.0 * atom.mass);
    let v0 = lat.v0_over_er * recoil;
    let omega_trap = k * (2.0 * v0 / atom.mass).sqrt();
    let w_at = (HBAR / (atom.mass * omega_trap)).sqrt();
    TrapDerived {
        omega_trap,
        w_at,
        dx_at: 2.0 * std::f64::consts::LN_2.sqrt() * w_at,
    }
}

/// Initial atomic density of the lattice: a comb of unit-normalized
/// Gaussians of width `w_at` centered on the sites. Units 1/m.
pub fn lattice_density(x: f64, lat: &LatticeSpec, trap: &TrapDerived) -> f64 {
    let norm = 1.0 / (trap.w_at * std::f64::consts::PI.sqrt());
    lat.site_indices()
        .map(|n| {
            let dx = x - lat.site_center(n);
            norm * (-dx * dx / (trap.w_at * trap.w_at)).exp()
        })
        .sum()
}
