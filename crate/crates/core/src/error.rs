use thiserror::Error;

/// Errors produced by the model, analytics, dynamics, and scan layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A specification struct failed validation.
    #[error("invalid {context}: {reason}")]
    InvalidSpec { context: &'static str, reason: String },

    /// Both Rabi frequencies vanish; the dark state is undefined there.
    #[error("dark state undefined at x = {x:.6e} m, t = {t:.6e} s: both Rabi frequencies vanish")]
    DegenerateFields { x: f64, t: f64 },

    /// The adiabaticity condition is never met at any position.
    #[error("no adiabaticity threshold: fields stay below A/T everywhere")]
    NoThreshold,

    /// The addressing-width formula has a negative discriminant.
    #[error(
        "addressing width not real valued: Omega_S0*T = {omega_s0_t:.6} exceeds \
         A*sqrt((1+R')/R') = {bound:.6}"
    )]
    NotRealValued { omega_s0_t: f64, bound: f64 },

    /// The lattice geometry leaves no room for an addressing window.
    #[error(
        "no addressing window: neighbor distance {x1:.4e} m does not exceed \
         atomic width {dx_at:.4e} m"
    )]
    InfeasibleGeometry { x1: f64, dx_at: f64 },

    /// A design target lies outside the attainable resolution range.
    #[error("target width {target:.4e} m outside attainable range ({lo:.4e}, {hi:.4e}) m")]
    Unachievable { target: f64, lo: f64, hi: f64 },

    /// Adaptive step-size control underflowed.
    #[error("integration failed at t = {t:.6e} s: step size underflow (h = {h:.3e} s)")]
    IntegrationFailure { t: f64, h: f64 },

    /// A survival probability strayed outside [0, 1] by more than tolerance.
    #[error("survival probability {p:.8} outside [0, 1] beyond tolerance at x = {x:.4e} m")]
    SurvivalOutOfRange { p: f64, x: f64 },

    /// A grid-point evolution failed during a spatial scan.
    #[error("scan failed at x = {x:.6e} m")]
    ScanFailure {
        x: f64,
        #[source]
        source: Box<Error>,
    },

    /// The survival profile has no usable central peak.
    #[error("no central peak in survival profile")]
    NoPeak,

    /// More than one interior maximum rises above half height.
    #[error("multiple interior maxima above half height; peak is ambiguous")]
    AmbiguousPeak,

    /// The scan grid does not span the requested site window.
    #[error(
        "grid [{grid_min:.4e}, {grid_max:.4e}] m does not cover site window \
         [{win_min:.4e}, {win_max:.4e}] m"
    )]
    WindowNotCovered {
        grid_min: f64,
        grid_max: f64,
        win_min: f64,
        win_max: f64,
    },
}

impl Error {
    pub(crate) fn invalid(context: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidSpec {
            context,
            reason: reason.into(),
        }
    }
}
