//! Physical constants (SI units).

/// Reduced Planck constant, J·s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Unified atomic mass unit, kg (CODATA 2018).
pub const AMU_KG: f64 = 1.660_539_066_60e-27;

/// Mass of ⁸⁷Rb, kg (AME 2016 atomic mass 86.909180531 u).
pub const RB87_MASS_KG: f64 = 86.909_180_531 * AMU_KG;
