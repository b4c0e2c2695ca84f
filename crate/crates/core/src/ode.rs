//! Adaptive embedded Runge-Kutta integration on fixed-size real states.
//!
//! Dormand-Prince 5(4) pair with the classic PI-free controller: the fifth
//! order solution is propagated, the embedded fourth-order difference drives
//! the step size. FSAL saves one derivative evaluation per accepted step.

use crate::{Error, Result};

/// Right-hand side writes dy/dt into `dydt`.
pub trait Rhs<const N: usize> {
    fn eval(&self, t: f64, y: &[f64; N], dydt: &mut [f64; N]);
}

impl<const N: usize, F> Rhs<N> for F
where
    F: Fn(f64, &[f64; N], &mut [f64; N]),
{
    fn eval(&self, t: f64, y: &[f64; N], dydt: &mut [f64; N]) {
        self(t, y, dydt)
    }
}

/// Integration controls. Tolerances are the usual mixed absolute/relative
/// error weights.
#[derive(Debug, Clone, Copy)]
pub struct OdeOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Largest step the controller may take, s.
    pub max_step: f64,
}

// Dormand-Prince coefficients
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
// fifth-order weights (same as the last A row: FSAL)
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
// embedded fourth-order weights
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;

/// Integrate dy/dt = f(t, y) from `t0` to `t1` (t1 > t0), calling
/// `observer(t, y)` after each accepted step (including the initial state).
///
/// Fails with [`Error::IntegrationFailure`] when step-size control
/// underflows.
pub fn integrate<const N: usize>(
    rhs: &impl Rhs<N>,
    t0: f64,
    y0: [f64; N],
    t1: f64,
    opts: &OdeOptions,
    mut observer: impl FnMut(f64, &[f64; N]),
) -> Result<[f64; N]> {
    assert!(t1 > t0, "integration window must be forward in time");
    let span = t1 - t0;
    let h_min = span * 1e-14;

    let mut t = t0;
    let mut y = y0;
    let mut k = [[0.0; N]; 7];
    rhs.eval(t, &y, &mut k[0]);
    observer(t, &y);

    let mut h = (span / 100.0).min(opts.max_step);

    while t < t1 {
        if h < h_min {
            return Err(Error::IntegrationFailure { t, h });
        }
        let mut final_step = false;
        if t + h >= t1 {
            h = t1 - t;
            final_step = true;
        }

        // stages 2..7
        for s in 1..7 {
            let mut ys = y;
            for (j, kj) in k.iter().enumerate().take(s) {
                let a = A[s][j];
                if a != 0.0 {
                    for i in 0..N {
                        ys[i] += h * a * kj[i];
                    }
                }
            }
            let ti = t + C[s] * h;
            let mut ks = [0.0; N];
            rhs.eval(ti, &ys, &mut ks);
            k[s] = ks;
        }

        // fifth-order proposal and embedded error estimate
        let mut y5 = y;
        let mut err = [0.0; N];
        for (s, ks) in k.iter().enumerate() {
            for i in 0..N {
                y5[i] += h * B5[s] * ks[i];
                err[i] += h * (B5[s] - B4[s]) * ks[i];
            }
        }

        let mut norm_sq = 0.0;
        for i in 0..N {
            let scale = opts.abs_tol + opts.rel_tol * y[i].abs().max(y5[i].abs());
            let e = err[i] / scale;
            norm_sq += e * e;
        }
        let err_norm = (norm_sq / N as f64).sqrt();

        if err_norm <= 1.0 {
            t = if final_step { t1 } else { t + h };
            y = y5;
            k[0] = k[6]; // FSAL
            observer(t, &y);
        }

        let factor = if err_norm == 0.0 {
            MAX_FACTOR
        } else {
            (SAFETY * err_norm.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR)
        };
        h = (h * factor).min(opts.max_step);
    }

    Ok(y)
}
