//! Classical special functions used by the logarithmic Lambert function and
//! by the phase-space volumes: principal-branch Lambert W, the real
//! exponential integral Ei, and ln Γ.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const INV_E: f64 = 1.0 / std::f64::consts::E;

/// Tolerances and iteration cap shared by the iterative solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_iter: 100,
        }
    }
}

impl SolverOptions {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iter: usize) -> Result<Self> {
        let opts = Self {
            abs_tol,
            rel_tol,
            max_iter,
        };
        opts.validate()?;
        Ok(opts)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidParameter(
                "max_iter must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Principal branch W₀ of the Lambert W function, the solution w ≥ −1 of
/// w·eʷ = x for x ≥ −1/e.
///
/// The starting point comes from the branch-point series near −1/e, a
/// logarithmic fit for moderate x, or ln x − ln ln x for large x; Halley
/// iteration then polishes it.
pub fn lambert_w0(x: f64, opts: &SolverOptions) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!(
            "lambert_w0 needs a finite argument, got {x}"
        )));
    }
    if x < -INV_E {
        return Err(Error::domain(format!(
            "lambert_w0 is undefined below -1/e, got {x}"
        )));
    }
    if x == -INV_E {
        return Ok(-1.0);
    }
    if x == 0.0 {
        return Ok(0.0);
    }

    let mut w = if x < -0.32 {
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x < 3.0 {
        let l = x.ln_1p();
        l * (1.0 - l.ln_1p() / (2.0 + l))
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };

    for _ in 0..opts.max_iter {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            return Ok(w);
        }
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        let residual = (w * w.exp() - x).abs();
        // Near -1/e the slope vanishes and steps stall at rounding level
        // while the residual is already exact.
        let settled = step.abs() <= opts.rel_tol * (1.0 + w.abs())
            || residual <= 8.0 * f64::EPSILON * (1.0 + x.abs());
        if settled && residual <= opts.abs_tol * (1.0 + x.abs()) {
            return Ok(w.max(-1.0));
        }
    }
    Err(Error::no_convergence(
        opts.max_iter,
        format!("lambert_w0 at x = {x}"),
    ))
}

/// Real exponential integral Ei(x) (principal value for x > 0).
///
/// For x < 0 this is −E₁(−x). Singular at x = 0.
pub fn exp_integral_ei(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("Ei of NaN"));
    }
    if x == 0.0 {
        return Err(Error::domain("Ei has a logarithmic singularity at 0"));
    }
    if x < -1.0 {
        Ok(-e1_continued_fraction(-x))
    } else if x <= 40.0 {
        Ok(ei_series(x))
    } else {
        Ok(ei_asymptotic(x))
    }
}

fn ei_series(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for n in 1..500 {
        let n = n as f64;
        term *= x / n;
        let contrib = term / n;
        sum += contrib;
        if contrib.abs() <= f64::EPSILON * sum.abs() {
            break;
        }
    }
    EULER_GAMMA + x.abs().ln() + sum
}

// Modified Lentz evaluation of E1(z), z > 1.
fn e1_continued_fraction(z: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = z + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() <= f64::EPSILON {
            break;
        }
    }
    h * (-z).exp()
}

fn ei_asymptotic(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let next = term * k as f64 / x;
        if next > term || next <= f64::EPSILON * sum {
            break;
        }
        term = next;
        sum += term;
    }
    x.exp() / x * sum
}

/// ln Γ(x) for x > 0.
///
/// Arguments below 10 are shifted up with the recurrence Γ(x+1) = xΓ(x);
/// the Stirling series is then accurate to well below 1e−15.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("log_gamma needs x > 0, got {x}")));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    let mut shift = 0.0;
    let mut z = x;
    let mut prod = 1.0;
    while z < 10.0 {
        prod *= z;
        z += 1.0;
    }
    if prod != 1.0 {
        shift = prod.ln();
    }
    Ok(stirling(z) - shift)
}

fn stirling(z: f64) -> f64 {
    // Bernoulli terms B_2k / (2k (2k-1) z^(2k-1)), k = 1..7
    const COEFFS: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
    ];
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for c in COEFFS {
        series += c * pow;
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + series
}
