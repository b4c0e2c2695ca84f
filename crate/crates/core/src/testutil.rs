//! Shared fixtures: the ⁸⁷Rb lattice configuration used throughout the
//! test suite (lambda = 1064 nm, V0 = 15 Er, sigma = 0.2 us, T = 1.4 sigma,
//! Omega_S0 T = 19, w_P = lambda_L, w_S = 32 lambda_L).

use crate::constants::RB87_MASS_KG;
use crate::model::{AtomSpec, FieldSpec, LatticeSpec};

pub const LAMBDA_LATTICE: f64 = 1064e-9;
pub const LAMBDA_LIGHT: f64 = 795e-9;
pub const SIGMA: f64 = 0.2e-6;
pub const T_DELAY: f64 = 1.4 * SIGMA;
pub const OMEGA_S0_T: f64 = 19.0;
pub const A_CONST: f64 = 20.0;

pub fn fig3_field(r: f64) -> FieldSpec {
    let omega_s0 = OMEGA_S0_T / T_DELAY;
    FieldSpec {
        omega_p0: omega_s0 * r.sqrt(),
        omega_s0,
        w_p: LAMBDA_LIGHT,
        w_s: 32.0 * LAMBDA_LIGHT,
        t_p: T_DELAY,
        t_s: 0.0,
        sigma: SIGMA,
        delta_p: 0.0,
        delta_s: 0.0,
        lambda_l: LAMBDA_LIGHT,
    }
}

pub fn rb87() -> AtomSpec {
    AtomSpec {
        mass: RB87_MASS_KG,
        gamma21: 2.0 * std::f64::consts::PI * 0.96e6,
        gamma23: 2.0 * std::f64::consts::PI * 1.44e6,
    }
}

pub fn fig3_lattice() -> LatticeSpec {
    LatticeSpec {
        lambda: LAMBDA_LATTICE,
        v0_over_er: 15.0,
        n_sites: 3,
    }
}
