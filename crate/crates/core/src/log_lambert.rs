//! The logarithmic Lambert function W_L: the inverse of
//! f(y) = y·ln(By)·eʸ for a fixed nonzero constant B.
//!
//! f is not monotone, so W_L splits into branches at the points where
//! f′(y) = ((y+1)ln(By) + 1)eʸ vanishes, i.e. the solutions δ of
//! (y+1)ln(By) = −1. For B > 0 there is one such point and two branches;
//! for B < 0 there are two (δ₁ < 1/B < δ₂ < 0) and three branches.
//!
//! | branch | B | x-domain        | y-range       | direction  |
//! |--------|---|-----------------|---------------|------------|
//! | `Pos0` | + | [f(δ), ∞)       | [δ, ∞)        | increasing |
//! | `Pos1` | + | [f(δ), 0)       | (0, δ]        | decreasing |
//! | `Neg0` | − | (0, f(δ₂)]      | [δ₂, 0)       | decreasing |
//! | `Neg1` | − | [f(δ₁), f(δ₂)]  | [δ₁, δ₂]      | increasing |
//! | `Neg2` | − | [f(δ₁), 0)      | (−∞, δ₁]      | decreasing |
//!
//! Endpoints at x = 0 (other than the y-intercept 1/B) are only reached in
//! the limit y → 0 or y → −∞ and are excluded.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::special::{exp_integral_ei, lambert_w0, SolverOptions};

/// One of the five real branches of W_L.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchId {
    /// Principal branch for B > 0.
    Pos0,
    Pos1,
    Neg0,
    Neg1,
    Neg2,
}

impl BranchId {
    pub const ALL: [BranchId; 5] = [
        BranchId::Pos0,
        BranchId::Pos1,
        BranchId::Neg0,
        BranchId::Neg1,
        BranchId::Neg2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BranchId::Pos0 => "pos0",
            BranchId::Pos1 => "pos1",
            BranchId::Neg0 => "neg0",
            BranchId::Neg1 => "neg1",
            BranchId::Neg2 => "neg2",
        }
    }

    /// `true` for the branches that exist when B > 0.
    pub fn needs_positive_b(self) -> bool {
        matches!(self, BranchId::Pos0 | BranchId::Pos1)
    }

    /// Whether W_L increases with x on this branch.
    pub fn is_increasing(self) -> bool {
        matches!(self, BranchId::Pos0 | BranchId::Neg1)
    }

    /// The branches available for a given sign of B.
    pub fn for_b(b: f64) -> &'static [BranchId] {
        if b > 0.0 {
            &Self::ALL[..2]
        } else {
            &Self::ALL[2..]
        }
    }
}

impl fmt::Display for BranchId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BranchId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BranchId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown branch `{s}`, expected one of pos0, pos1, neg0, neg1, neg2"
                ))
            })
    }
}

/// Real interval with per-end closedness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn contains(&self, v: f64) -> bool {
        let above = if self.lo_closed {
            v >= self.lo
        } else {
            v > self.lo
        };
        let below = if self.hi_closed {
            v <= self.hi
        } else {
            v < self.hi
        };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// Singular points of f and their images.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BranchPoints {
    /// B > 0: the single point δ ∈ (0, 1/B).
    Positive { delta: f64, f_delta: f64 },
    /// B < 0: δ₁ < 1/B < δ₂ < 0.
    Negative {
        delta1: f64,
        f_delta1: f64,
        delta2: f64,
        f_delta2: f64,
    },
}

/// Solver bookkeeping returned with every evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalDiagnostics {
    pub iterations: usize,
    /// |f(y) − x|
    pub residual: f64,
    pub bracket_width: f64,
    /// Set when x is the image of a branch point, where dW_L/dx is unbounded.
    pub derivative_singular: bool,
}

/// f(y) = y·ln(By)·eʸ.
pub fn forward(y: f64, b: f64) -> Result<f64> {
    if !(b * y > 0.0) {
        return Err(Error::domain(format!(
            "forward needs B*y > 0, got B = {b}, y = {y}"
        )));
    }
    Ok(y * (b * y).ln() * y.exp())
}

/// f′(y) = ((y+1)ln(By) + 1)eʸ. Caller guarantees B·y > 0.
fn forward_slope(y: f64, b: f64) -> f64 {
    singular_residual(y, b) * y.exp()
}

/// (y+1)ln(By) + 1, zero exactly at the branch points.
fn singular_residual(y: f64, b: f64) -> f64 {
    (y + 1.0) * (b * y).ln() + 1.0
}

/// Split point for bracket refinement: geometric when both ends share a
/// sign and span several binades, arithmetic otherwise.
fn split(lo: f64, hi: f64) -> f64 {
    if lo != 0.0 && hi != 0.0 && lo.signum() == hi.signum() {
        let ratio = hi / lo;
        if !(0.125..=8.0).contains(&ratio) {
            // product of square roots: lo·hi itself can underflow
            return lo.signum() * lo.abs().sqrt() * hi.abs().sqrt();
        }
    }
    lo + 0.5 * (hi - lo)
}

/// Bisection on a sign change of (y+1)ln(By)+1 inside [lo, hi].
///
/// Once the bracket has shrunk to neighbouring doubles the closer end is
/// accepted even if the residual exceeds `abs_tol`: for |B| far from 1 the
/// residual is dominated by rounding in ln(By), about ε·|δ|.
fn bisect_singular(b: f64, mut lo: f64, mut hi: f64, opts: &SolverOptions) -> Result<f64> {
    let s_lo = singular_residual(lo, b);
    let mut collapsed = false;
    for _ in 0..opts.max_iter {
        let mid = split(lo, hi);
        if mid <= lo || mid >= hi {
            collapsed = true;
            break;
        }
        let s_mid = singular_residual(mid, b);
        if s_mid == 0.0 {
            return Ok(mid);
        }
        if (s_mid < 0.0) == (s_lo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let best = if singular_residual(lo, b).abs() <= singular_residual(hi, b).abs() {
        lo
    } else {
        hi
    };
    let residual = singular_residual(best, b).abs();
    if residual > opts.abs_tol && !collapsed {
        return Err(Error::no_convergence(
            opts.max_iter,
            format!("branch point for B = {b}: residual {residual:e} after bisection"),
        ));
    }
    Ok(best)
}

/// A fixed constant B with its branch points, ready for evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLambertContext {
    b: f64,
    points: BranchPoints,
    opts: SolverOptions,
}

/// Solve (y+1)ln(By) = −1 for the branch points of W_L at constant B.
pub fn branch_points(b: f64, opts: SolverOptions) -> Result<LogLambertContext> {
    LogLambertContext::new(b, opts)
}

impl LogLambertContext {
    pub fn new(b: f64, opts: SolverOptions) -> Result<Self> {
        opts.validate()?;
        if b == 0.0 || !b.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "B must be finite and nonzero, got {b}"
            )));
        }
        let inv_b = 1.0 / b;
        let points = if b > 0.0 {
            // ln(Bδ) = −1/(δ+1) ∈ (−1, 0) pins Bδ inside (1/e, 1).
            let delta = bisect_singular(b, inv_b / std::f64::consts::E, inv_b, &opts)?;
            BranchPoints::Positive {
                delta,
                f_delta: forward(delta, b)?,
            }
        } else {
            // δ₂ lies in (max(1/B, −1), 0); s → −∞ as y → 0⁻.
            let start = inv_b.max(-1.0);
            let mut near_zero = 0.5 * start;
            let mut found = false;
            for _ in 0..opts.max_iter {
                if singular_residual(near_zero, b) < 0.0 {
                    found = true;
                    break;
                }
                near_zero *= 0.5;
            }
            if !found {
                return Err(Error::no_convergence(
                    opts.max_iter,
                    format!("could not bracket delta2 for B = {b}"),
                ));
            }
            let delta2 = bisect_singular(b, start, near_zero, &opts)?;

            // δ₁ < 1/B; s → −∞ as y → −∞.
            let mut far = 2.0 * inv_b;
            let mut found = false;
            for _ in 0..opts.max_iter {
                if singular_residual(far, b) < 0.0 {
                    found = true;
                    break;
                }
                far *= 2.0;
            }
            if !found {
                return Err(Error::no_convergence(
                    opts.max_iter,
                    format!("could not bracket delta1 for B = {b}"),
                ));
            }
            let delta1 = bisect_singular(b, far, inv_b, &opts)?;

            let f_delta1 = forward(delta1, b)?;
            let f_delta2 = forward(delta2, b)?;
            if !(f_delta1 < f_delta2) {
                return Err(Error::no_convergence(
                    opts.max_iter,
                    format!("branch images out of order for B = {b}: f(d1) = {f_delta1}, f(d2) = {f_delta2}"),
                ));
            }
            BranchPoints::Negative {
                delta1,
                f_delta1,
                delta2,
                f_delta2,
            }
        };
        Ok(Self { b, points, opts })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn points(&self) -> BranchPoints {
        self.points
    }

    pub fn opts(&self) -> &SolverOptions {
        &self.opts
    }

    fn check_branch(&self, branch: BranchId) -> Result<()> {
        if branch.needs_positive_b() != (self.b > 0.0) {
            return Err(Error::domain(format!(
                "branch {branch} is not defined for B = {}",
                self.b
            )));
        }
        Ok(())
    }

    /// Admissible x values of a branch.
    pub fn domain(&self, branch: BranchId) -> Result<Interval> {
        self.check_branch(branch)?;
        let iv = |lo, hi, lo_closed, hi_closed| Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        };
        Ok(match (self.points, branch) {
            (BranchPoints::Positive { f_delta, .. }, BranchId::Pos0) => {
                iv(f_delta, f64::INFINITY, true, false)
            }
            (BranchPoints::Positive { f_delta, .. }, BranchId::Pos1) => {
                iv(f_delta, 0.0, true, false)
            }
            (BranchPoints::Negative { f_delta2, .. }, BranchId::Neg0) => {
                iv(0.0, f_delta2, false, true)
            }
            (
                BranchPoints::Negative {
                    f_delta1, f_delta2, ..
                },
                BranchId::Neg1,
            ) => iv(f_delta1, f_delta2, true, true),
            (BranchPoints::Negative { f_delta1, .. }, BranchId::Neg2) => {
                iv(f_delta1, 0.0, true, false)
            }
            _ => unreachable!("branch/sign checked above"),
        })
    }

    /// Values W_L takes on a branch.
    pub fn range(&self, branch: BranchId) -> Result<Interval> {
        self.check_branch(branch)?;
        let iv = |lo, hi, lo_closed, hi_closed| Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        };
        Ok(match (self.points, branch) {
            (BranchPoints::Positive { delta, .. }, BranchId::Pos0) => {
                iv(delta, f64::INFINITY, true, false)
            }
            (BranchPoints::Positive { delta, .. }, BranchId::Pos1) => iv(0.0, delta, false, true),
            (BranchPoints::Negative { delta2, .. }, BranchId::Neg0) => iv(delta2, 0.0, true, false),
            (BranchPoints::Negative { delta1, delta2, .. }, BranchId::Neg1) => {
                iv(delta1, delta2, true, true)
            }
            (BranchPoints::Negative { delta1, .. }, BranchId::Neg2) => {
                iv(f64::NEG_INFINITY, delta1, false, true)
            }
            _ => unreachable!("branch/sign checked above"),
        })
    }

    /// Branch points bounding `branch` as (δ, f(δ)) pairs.
    fn endpoints(&self, branch: BranchId) -> Vec<(f64, f64)> {
        match self.points {
            BranchPoints::Positive { delta, f_delta } => vec![(delta, f_delta)],
            BranchPoints::Negative {
                delta1,
                f_delta1,
                delta2,
                f_delta2,
            } => match branch {
                BranchId::Neg0 => vec![(delta2, f_delta2)],
                BranchId::Neg1 => vec![(delta1, f_delta1), (delta2, f_delta2)],
                _ => vec![(delta1, f_delta1)],
            },
        }
    }

    /// W_L(x) on the given branch.
    ///
    /// A monotone bracket is built for the branch and refined with Newton
    /// steps on f, falling back to bisection whenever a step leaves the
    /// bracket. At the image of a branch point the branch point itself is
    /// returned with `derivative_singular` set.
    pub fn eval(&self, x: f64, branch: BranchId) -> Result<(f64, EvalDiagnostics)> {
        let domain = self.domain(branch)?;
        if !x.is_finite() || !domain.contains(x) {
            return Err(Error::domain(format!(
                "x = {x} is outside the domain {domain} of branch {branch} (B = {})",
                self.b
            )));
        }
        for (delta, f_delta) in self.endpoints(branch) {
            if x == f_delta {
                return Ok((
                    delta,
                    EvalDiagnostics {
                        iterations: 0,
                        residual: 0.0,
                        bracket_width: 0.0,
                        derivative_singular: true,
                    },
                ));
            }
        }
        let inv_b = 1.0 / self.b;
        if x == 0.0 && matches!(branch, BranchId::Pos0 | BranchId::Neg1) {
            return Ok((
                inv_b,
                EvalDiagnostics {
                    iterations: 0,
                    residual: 0.0,
                    bracket_width: 0.0,
                    derivative_singular: false,
                },
            ));
        }

        let b = self.b;
        let f = |y: f64| y * (b * y).ln() * y.exp();
        let max_iter = self.opts.max_iter;
        let bracket_err = || {
            Error::no_convergence(
                max_iter,
                format!("could not bracket x = {x} on branch {branch} (B = {b})"),
            )
        };

        let (lo, hi, start) = match (self.points, branch) {
            (BranchPoints::Positive { delta, .. }, BranchId::Pos0) => {
                if x < 0.0 {
                    (delta, inv_b, None)
                } else {
                    let mut lo = inv_b;
                    let mut hi = (delta * 1.000_001).max(inv_b) * 2.0;
                    let mut n = 0;
                    while f(hi) < x {
                        lo = hi;
                        hi *= 2.0;
                        n += 1;
                        if n >= max_iter {
                            return Err(bracket_err());
                        }
                    }
                    // f is convex increasing here: Newton from the right end
                    // never overshoots.
                    (lo, hi, Some(hi))
                }
            }
            (BranchPoints::Positive { delta, .. }, BranchId::Pos1) => {
                let (lo, hi) =
                    shrink_towards_zero(delta, |y| f(y) < x, max_iter).ok_or_else(bracket_err)?;
                (lo, hi, None)
            }
            (BranchPoints::Negative { delta2, .. }, BranchId::Neg0) => {
                let (lo, hi) =
                    shrink_towards_zero(delta2, |y| f(y) > x, max_iter).ok_or_else(bracket_err)?;
                (lo, hi, None)
            }
            (BranchPoints::Negative { delta1, delta2, .. }, BranchId::Neg1) => {
                (delta1, delta2, None)
            }
            (BranchPoints::Negative { delta1, .. }, BranchId::Neg2) => {
                let mut hi = delta1;
                let mut lo = 2.0 * delta1;
                let mut n = 0;
                while f(lo) < x {
                    hi = lo;
                    lo *= 2.0;
                    n += 1;
                    if n >= max_iter {
                        return Err(bracket_err());
                    }
                }
                (lo, hi, None)
            }
            _ => unreachable!("branch/sign checked above"),
        };

        self.refine(x, branch, lo, hi, start)
    }

    fn refine(
        &self,
        x: f64,
        branch: BranchId,
        mut lo: f64,
        mut hi: f64,
        start: Option<f64>,
    ) -> Result<(f64, EvalDiagnostics)> {
        let b = self.b;
        let opts = &self.opts;
        let increasing = branch.is_increasing();
        let mut y = start.unwrap_or_else(|| split(lo, hi));
        let mut converged = false;
        let mut iterations = 0;

        while iterations < opts.max_iter {
            iterations += 1;
            let g = forward(y, b)? - x;
            if g == 0.0 {
                converged = true;
                break;
            }
            // keep the root between lo and hi
            if (g < 0.0) == increasing {
                lo = y;
            } else {
                hi = y;
            }
            let slope = forward_slope(y, b);
            let newton = y - g / slope;
            let (next, was_newton) = if slope != 0.0 && newton > lo && newton < hi {
                (newton, true)
            } else {
                (split(lo, hi), false)
            };
            let step = (next - y).abs();
            if next <= lo || next >= hi || next == y {
                // bracket has collapsed to neighbouring doubles
                converged = true;
                break;
            }
            y = next;
            if was_newton && step <= opts.rel_tol * y.abs() {
                converged = true;
                break;
            }
        }

        let residual = (forward(y, b)? - x).abs();
        let diag = EvalDiagnostics {
            iterations,
            residual,
            bracket_width: hi - lo,
            derivative_singular: false,
        };
        let collapsed = hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs());
        // where f is steep a one-ulp change in y already moves f past abs_tol
        let resolvable = 4.0 * f64::EPSILON * y.abs() * forward_slope(y, b).abs();
        let tol = (opts.abs_tol * (1.0 + x.abs())).max(resolvable);
        if (converged && residual <= tol) || collapsed {
            Ok((y, diag))
        } else {
            Err(Error::no_convergence(
                iterations,
                format!("W_L({x}) on branch {branch} (B = {b}), residual {residual:e}"),
            ))
        }
    }

    /// dW_L/dx = e^{−y} / ((y+1)ln(By) + 1), y = W_L(x).
    pub fn derivative(&self, x: f64, branch: BranchId) -> Result<f64> {
        let (y, diag) = self.eval(x, branch)?;
        let denom = singular_residual(y, self.b);
        if diag.derivative_singular || denom == 0.0 {
            return Err(Error::Singular(y));
        }
        Ok((-y).exp() / denom)
    }

    /// An antiderivative of W_L with zero integration constant:
    /// F(x) = eʸ[1 + (y² − y + 1)ln(By)] − Ei(y), y = W_L(x).
    pub fn antiderivative(&self, x: f64, branch: BranchId) -> Result<f64> {
        let (y, _) = self.eval(x, branch)?;
        let log_by = (self.b * y).ln();
        Ok(y.exp() * (1.0 + (y * y - y + 1.0) * log_by) - exp_integral_ei(y)?)
    }
}

/// Walks from `anchor` towards zero by a factor that squares on every step
/// (½, ¼, 1/16, …) until `overshoots` turns false. Returns (near_zero,
/// anchor_side) bracketing the crossing.
fn shrink_towards_zero(
    anchor: f64,
    overshoots: impl Fn(f64) -> bool,
    max_iter: usize,
) -> Option<(f64, f64)> {
    let mut factor = 0.5;
    let mut outer = anchor;
    for _ in 0..max_iter {
        let inner = anchor * factor;
        if inner == 0.0 {
            return None;
        }
        if !overshoots(inner) {
            return Some(if anchor > 0.0 {
                (inner, outer)
            } else {
                (outer, inner)
            });
        }
        outer = inner;
        factor *= factor;
    }
    None
}

/// Truncated Taylor expansion of the principal branch about x = 0:
/// 1/B + g₁x + g₂x²/2! + g₃x³/3!, up to `order` ≤ 3.
///
/// g₁ = e^{−1/B}, g₂ = −(2+B)e^{−2/B}, g₃ = (4B² + 9B + 9)e^{−3/B}.
pub fn taylor_eval(x: f64, b: f64, order: u32) -> Result<f64> {
    if b == 0.0 || !b.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "B must be finite and nonzero, got {b}"
        )));
    }
    if !(1..=3).contains(&order) {
        return Err(Error::InvalidParameter(format!(
            "Taylor order must be 1, 2 or 3, got {order}"
        )));
    }
    let coeffs = taylor_coefficients(b);
    let mut sum = 1.0 / b;
    let mut pow = 1.0;
    let mut fact = 1.0;
    for (n, g) in coeffs.iter().take(order as usize).enumerate() {
        pow *= x;
        fact *= (n + 1) as f64;
        sum += g * pow / fact;
    }
    Ok(sum)
}

/// Derivatives g₁, g₂, g₃ of W_L at x = 0.
pub fn taylor_coefficients(b: f64) -> [f64; 3] {
    let e1 = (-1.0 / b).exp();
    [
        e1,
        -(2.0 + b) * e1 * e1,
        (4.0 * b * b + 9.0 * b + 9.0) * e1 * e1 * e1,
    ]
}

/// Large-x approximation W(x) − ln ln(B·W(x)) with W the principal
/// Lambert W function.
pub fn asymptotic_approx(x: f64, b: f64) -> Result<f64> {
    let w = lambert_w0(x, &SolverOptions::default())?;
    if !(b * w > 1.0) {
        return Err(Error::domain(format!(
            "asymptotic form needs B*W(x) > 1, got B*W({x}) = {}",
            b * w
        )));
    }
    Ok(w - (b * w).ln().ln())
}
