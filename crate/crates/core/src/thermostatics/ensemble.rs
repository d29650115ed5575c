//! Adiabatic ensembles of the classical ideal gas under the
//! three-parameter entropy S = k·ln_{q,q′,r} Σ.
//!
//! In every ensemble ln Σ = ln ξ + γ·κ(Q), where Q is the heat function
//! (E, H, L or R), κ(Q) = ln Q for the microcanonical and
//! isoenthalpic-isobaric ensembles and κ(Q) = Q for the Hill and Ray
//! ensembles, and γ is DN/2, α = DN/2 + N, D/(2μ) or D/μ. Writing
//! u = ((1−q′)/(1−q))·Σ^{1−q} and y = ((1−r)/(1−q′))·A·eᵘ, the temperature
//! condition 1/T = ∂S/∂Q becomes y·eʸ·ln(By) = cβ, so y = W_L(cβ) and
//!
//! ```text
//! (1−q)·γ·κ(Q) = ln( a·ln(B·W_L(cβ)) )
//! ```
//!
//! with A = e^{−(1−q′)/(1−q)}, B = (1−q′)/((1−r)A),
//! a = (1−q)/((1−q′)ξ^{1−q}) and c = (1−r)e^{(1−r)/(1−q′)}/((1−q)γ).
//! For E and H the derivation drops a factor 1/Q (the large-N step), so
//! ∂S/∂Q at the returned heat equals 1/(T·Q) there; Hill and Ray are exact.

use std::f64::consts::PI;

use super::deformed::DeformationParams;
use crate::error::{Error, Result};
use crate::log_lambert::{BranchId, LogLambertContext};
use crate::special::{log_gamma, SolverOptions};

/// Physical constants of the gas, natural units by default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasConstants {
    /// Spatial dimension D.
    pub d: u32,
    /// Particle mass.
    pub m: f64,
    /// Planck constant.
    pub h: f64,
    /// Entropy prefactor (Boltzmann constant).
    pub k: f64,
}

impl Default for GasConstants {
    fn default() -> Self {
        Self {
            d: 3,
            m: 1.0,
            h: 1.0,
            k: 1.0,
        }
    }
}

impl GasConstants {
    pub fn new(d: u32, m: f64, h: f64, k: f64) -> Result<Self> {
        let gc = Self { d, m, h, k };
        gc.validate()?;
        Ok(gc)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidParameter(
                "dimension D must be positive".into(),
            ));
        }
        for (name, v) in [("m", self.m), ("h", self.h), ("k", self.k)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    fn half_d(&self) -> f64 {
        self.d as f64 / 2.0
    }

    /// ln M with M = (2πm/h²)^{D/2}.
    pub fn log_m(&self) -> f64 {
        self.half_d() * (2.0 * PI * self.m / (self.h * self.h)).ln()
    }
}

/// The four adiabatic ensembles and their fixed macroscopic variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnsembleSpec {
    /// (N, V, E)
    Microcanonical { n: u32, v: f64 },
    /// (N, P, H)
    IsoenthalpicIsobaric { n: u32, p: f64 },
    /// (μ, V, L)
    Hill { mu: f64, v: f64 },
    /// (μ, P, R); N enters only through α = DN/2 + N.
    Ray { mu: f64, p: f64, n: u32 },
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )))
            }
        };
        let count = |n: u32| {
            if n > 0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter(
                    "particle number N must be positive".into(),
                ))
            }
        };
        match *self {
            EnsembleSpec::Microcanonical { n, v } => {
                count(n)?;
                positive("V", v)
            }
            EnsembleSpec::IsoenthalpicIsobaric { n, p } => {
                count(n)?;
                positive("P", p)
            }
            EnsembleSpec::Hill { mu, v } => {
                positive("mu", mu)?;
                positive("V", v)
            }
            EnsembleSpec::Ray { mu, p, n } => {
                count(n)?;
                positive("mu", mu)?;
                positive("P", p)
            }
        }
    }

    /// Symbol of the heat function.
    pub fn heat_symbol(&self) -> &'static str {
        match self {
            EnsembleSpec::Microcanonical { .. } => "E",
            EnsembleSpec::IsoenthalpicIsobaric { .. } => "H",
            EnsembleSpec::Hill { .. } => "L",
            EnsembleSpec::Ray { .. } => "R",
        }
    }

    /// Heat enters Σ as a power (E, H) rather than an exponential (L, R).
    fn is_power_law(&self) -> bool {
        matches!(
            self,
            EnsembleSpec::Microcanonical { .. } | EnsembleSpec::IsoenthalpicIsobaric { .. }
        )
    }

    fn alpha(&self, gc: &GasConstants) -> Option<f64> {
        match *self {
            EnsembleSpec::IsoenthalpicIsobaric { n, .. } | EnsembleSpec::Ray { n, .. } => {
                Some(gc.half_d() * n as f64 + n as f64)
            }
            _ => None,
        }
    }

    /// γ: the coefficient of κ(Q) in ln Σ.
    fn heat_coefficient(&self, gc: &GasConstants) -> f64 {
        match *self {
            EnsembleSpec::Microcanonical { n, .. } => gc.half_d() * n as f64,
            EnsembleSpec::IsoenthalpicIsobaric { .. } => self.alpha(gc).unwrap_or_default(),
            EnsembleSpec::Hill { mu, .. } => gc.half_d() / mu,
            EnsembleSpec::Ray { mu, .. } => gc.d as f64 / mu,
        }
    }

    /// ln ξ, the heat-independent part of ln Σ.
    fn log_xi(&self, gc: &GasConstants) -> Result<f64> {
        let log_m = gc.log_m();
        match *self {
            EnsembleSpec::Microcanonical { n, v } => {
                let n = n as f64;
                Ok(n * (v.ln() + log_m) - log_gamma(n + 1.0)? - log_gamma(gc.half_d() * n + 1.0)?)
            }
            EnsembleSpec::IsoenthalpicIsobaric { n, p } => {
                let alpha = self.alpha(gc).unwrap_or_default();
                Ok(n as f64 * (log_m - p.ln()) - log_gamma(alpha + 1.0)?)
            }
            EnsembleSpec::Hill { mu, v } => {
                let half_d = gc.half_d();
                Ok((v.ln() + half_d * (mu.ln() + 1.0) + log_m - half_d * half_d.ln()).exp())
            }
            EnsembleSpec::Ray { mu, p, .. } => {
                let alpha = self.alpha(gc).unwrap_or_default();
                let log_g = log_m - p.ln() + alpha * (mu.ln() - alpha.ln()) + alpha;
                if !(log_g < 0.0) {
                    return Err(Error::domain(format!(
                        "Ray ensemble needs (M/P)(mu/alpha)^alpha e^alpha < 1, got exp({log_g})"
                    )));
                }
                Ok(-(-log_g.exp()).ln_1p())
            }
        }
    }

    /// γ·κ(Q)
    fn heat_kernel(&self, gc: &GasConstants, heat: f64) -> Result<f64> {
        let gamma = self.heat_coefficient(gc);
        if self.is_power_law() {
            if !(heat > 0.0 && heat.is_finite()) {
                return Err(Error::domain(format!(
                    "{} must be positive, got {heat}",
                    self.heat_symbol()
                )));
            }
            Ok(gamma * heat.ln())
        } else {
            if !heat.is_finite() {
                return Err(Error::domain(format!(
                    "{} must be finite, got {heat}",
                    self.heat_symbol()
                )));
            }
            Ok(gamma * heat)
        }
    }
}

/// ln Σ of the ensemble at the given heat-function value.
///
/// Factorials and Γ are taken through [`log_gamma`], so the result stays
/// finite for any particle number.
pub fn phase_volume_log(spec: &EnsembleSpec, gc: &GasConstants, heat: f64) -> Result<f64> {
    spec.validate()?;
    gc.validate()?;
    Ok(spec.log_xi(gc)? + spec.heat_kernel(gc, heat)?)
}

/// Constants of the heat-function solution for one ensemble and parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedConstants {
    /// A = e^{−(1−q′)/(1−q)}
    pub big_a: f64,
    /// B = (1−q′)/((1−r)A), the W_L constant.
    pub b: f64,
    pub log_xi: f64,
    /// a = (1−q)/((1−q′)ξ^{1−q}); may over/underflow, see `log_abs_a`.
    pub a: f64,
    pub log_abs_a: f64,
    pub a_sign: f64,
    /// W_L argument per unit β.
    pub c: f64,
    /// α = DN/2 + N (isoenthalpic and Ray ensembles).
    pub alpha: Option<f64>,
    /// γ, the coefficient of the heat kernel in ln Σ.
    pub gamma: f64,
}

pub fn derived_constants(
    spec: &EnsembleSpec,
    gc: &GasConstants,
    dp: &DeformationParams,
) -> Result<DerivedConstants> {
    dp.ensure_nondegenerate()?;
    spec.validate()?;
    gc.validate()?;
    let (q, qp, r) = (dp.q, dp.q_prime, dp.r);
    let big_a = (-(1.0 - qp) / (1.0 - q)).exp();
    let b = (1.0 - qp) / ((1.0 - r) * big_a);
    let log_xi = spec.log_xi(gc)?;
    let ratio = (1.0 - q) / (1.0 - qp);
    let log_abs_a = ratio.abs().ln() - (1.0 - q) * log_xi;
    let a_sign = ratio.signum();
    let gamma = spec.heat_coefficient(gc);
    let c = (1.0 - r) * dp.rho().exp() / ((1.0 - q) * gamma);
    Ok(DerivedConstants {
        big_a,
        b,
        log_xi,
        a: a_sign * log_abs_a.exp(),
        log_abs_a,
        a_sign,
        c,
        alpha: spec.alpha(gc),
        gamma,
    })
}

/// W_L branch that keeps the heat function continuous in (q, q′, r).
///
/// | r  | q  | q′ < 1 | q′ > 1 |
/// |----|----|--------|--------|
/// | >1 | >1 | `Neg0` | `Pos0` |
/// | <1 | <1 | `Pos0` | `Neg0` |
/// | <1 | >1 | `Pos0` | `Neg1` |
///
/// r > 1 with q < 1 has no rule and is rejected.
pub fn select_branch(dp: &DeformationParams) -> Result<BranchId> {
    dp.ensure_nondegenerate()?;
    let (q_big, qp_big, r_big) = (dp.q > 1.0, dp.q_prime > 1.0, dp.r > 1.0);
    match (r_big, q_big) {
        (true, true) => Ok(if qp_big {
            BranchId::Pos0
        } else {
            BranchId::Neg0
        }),
        (false, false) => Ok(if qp_big {
            BranchId::Neg0
        } else {
            BranchId::Pos0
        }),
        (false, true) => Ok(if qp_big {
            BranchId::Neg1
        } else {
            BranchId::Pos0
        }),
        (true, false) => Err(Error::UncoveredRegion(format!(
            "r = {} > 1 with q = {} < 1 has no branch rule",
            dp.r, dp.q
        ))),
    }
}

/// Heat function at one temperature with the W_L data behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatResult {
    /// E, H, L or R.
    pub heat: f64,
    /// C_V or C_P; NaN when cβ sits exactly on a branch point.
    pub specific_heat: f64,
    /// cβ
    pub w_argument: f64,
    pub w_value: f64,
    pub branch: BranchId,
    /// ln(W_L·(1−q′)/((1−r)A)), which equals u = ln(B·W_L).
    pub u_check: f64,
}

/// One ensemble with fixed parameters; evaluates heat, specific heat and
/// entropy without re-solving for the branch points each time.
#[derive(Debug, Clone, Copy)]
pub struct HeatModel {
    spec: EnsembleSpec,
    gc: GasConstants,
    dp: DeformationParams,
    constants: DerivedConstants,
    branch: BranchId,
    ctx: LogLambertContext,
}

struct Solution {
    heat: f64,
    y: f64,
    x: f64,
    log_by: f64,
}

impl HeatModel {
    pub fn new(spec: EnsembleSpec, gc: GasConstants, dp: DeformationParams) -> Result<Self> {
        let constants = derived_constants(&spec, &gc, &dp)?;
        let branch = select_branch(&dp)?;
        let ctx = LogLambertContext::new(constants.b, SolverOptions::default())?;
        Ok(Self {
            spec,
            gc,
            dp,
            constants,
            branch,
            ctx,
        })
    }

    pub fn constants(&self) -> &DerivedConstants {
        &self.constants
    }

    pub fn branch(&self) -> BranchId {
        self.branch
    }

    pub fn context(&self) -> &LogLambertContext {
        &self.ctx
    }

    /// W_L argument cβ at temperature T.
    pub fn w_argument(&self, t: f64) -> Result<f64> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "temperature must be positive, got {t}"
            )));
        }
        Ok(self.constants.c / (self.gc.k * t))
    }

    fn solve(&self, t: f64) -> Result<(Solution, bool)> {
        let x = self.w_argument(t)?;
        let (y, diag) = self.ctx.eval(x, self.branch)?;
        // On the curve ln(By) = x/(y·eʸ); unlike ln(B·y) this keeps full
        // relative precision when y is close to 1/B.
        let log_by = x * (-y).exp() / y;
        if !(self.constants.a_sign * log_by > 0.0) {
            return Err(Error::NonPhysical(format!(
                "a*ln(B*W_L) = {:e} is not positive at T = {t}",
                self.constants.a * log_by
            )));
        }
        let log_p = self.constants.log_abs_a + log_by.abs().ln();
        let scale = (1.0 - self.dp.q) * self.constants.gamma;
        let heat = if self.spec.is_power_law() {
            (log_p / scale).exp()
        } else {
            log_p / scale
        };
        if !heat.is_finite() || heat == 0.0 {
            return Err(Error::Overflow(format!(
                "{} leaves the f64 range at T = {t}",
                self.spec.heat_symbol()
            )));
        }
        Ok((Solution { heat, y, x, log_by }, diag.derivative_singular))
    }

    /// Heat function and specific heat at temperature T.
    pub fn heat(&self, t: f64) -> Result<HeatResult> {
        let (sol, singular) = self.solve(t)?;
        let specific_heat = if singular {
            f64::NAN
        } else {
            self.specific_heat_from(&sol, t)?
        };
        let (q_prime, r) = (self.dp.q_prime, self.dp.r);
        Ok(HeatResult {
            heat: sol.heat,
            specific_heat,
            w_argument: sol.x,
            w_value: sol.y,
            branch: self.branch,
            u_check: (sol.y * (1.0 - q_prime) / ((1.0 - r) * self.constants.big_a)).ln(),
        })
    }

    /// dQ/dT by the chain rule through dW_L/dx.
    pub fn specific_heat(&self, t: f64) -> Result<f64> {
        let (sol, singular) = self.solve(t)?;
        if singular {
            return Err(Error::Singular(sol.y));
        }
        self.specific_heat_from(&sol, t)
    }

    fn specific_heat_from(&self, sol: &Solution, t: f64) -> Result<f64> {
        let y = sol.y;
        let denom = (y + 1.0) * sol.log_by + 1.0;
        if denom == 0.0 {
            return Err(Error::Singular(y));
        }
        // dW/dT = −(c/kT²)·e^{−W}/((W+1)ln(BW) + 1) = −(x/T)·W′(x)
        let dw_dt = -(sol.x / t) * (-y).exp() / denom;
        let dlog_p_dt = dw_dt / (y * sol.log_by);
        let scale = (1.0 - self.dp.q) * self.constants.gamma;
        Ok(if self.spec.is_power_law() {
            sol.heat * dlog_p_dt / scale
        } else {
            dlog_p_dt / scale
        })
    }

    /// S(Q) in the factored form k/(1−r)·[e^{ρzA}·e^{−ρ} − 1], z = eᵘ.
    pub fn entropy(&self, heat: f64) -> Result<f64> {
        let log_sigma = self.constants.log_xi + self.spec.heat_kernel(&self.gc, heat)?;
        factored_entropy(log_sigma, &self.dp, self.gc.k)
    }
}

fn factored_entropy(log_sigma: f64, dp: &DeformationParams, k: f64) -> Result<f64> {
    let (q, qp, r) = (dp.q, dp.q_prime, dp.r);
    let ratio = (1.0 - qp) / (1.0 - q);
    let u = ratio * ((1.0 - q) * log_sigma).exp();
    let log_big_a = -ratio;
    // zA − 1
    let za_m1 = (u + log_big_a).exp_m1();
    let s = k * (dp.rho() * za_m1).exp_m1() / (1.0 - r);
    if !s.is_finite() {
        return Err(Error::Overflow(format!(
            "entropy overflows at ln(Sigma) = {log_sigma}"
        )));
    }
    Ok(s)
}

/// Heat function at temperature T; see [`HeatModel::heat`].
pub fn heat_function(
    spec: &EnsembleSpec,
    gc: &GasConstants,
    dp: &DeformationParams,
    t: f64,
) -> Result<HeatResult> {
    HeatModel::new(*spec, *gc, *dp)?.heat(t)
}

/// C_V or C_P at temperature T; see [`HeatModel::specific_heat`].
pub fn specific_heat(
    spec: &EnsembleSpec,
    gc: &GasConstants,
    dp: &DeformationParams,
    t: f64,
) -> Result<f64> {
    HeatModel::new(*spec, *gc, *dp)?.specific_heat(t)
}

/// S_{q,q′,r} of the ensemble at the given heat-function value.
pub fn entropy_of_system(
    spec: &EnsembleSpec,
    gc: &GasConstants,
    dp: &DeformationParams,
    heat: f64,
) -> Result<f64> {
    dp.ensure_nondegenerate()?;
    let log_sigma = phase_volume_log(spec, gc, heat)?;
    factored_entropy(log_sigma, dp, gc.k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::log_lambert::forward;
    use crate::thermostatics::deformed::three_param_log_of_ln;

    fn dp(q: f64, qp: f64, r: f64) -> DeformationParams {
        DeformationParams::new(q, qp, r).unwrap()
    }

    fn mc(n: u32) -> EnsembleSpec {
        EnsembleSpec::Microcanonical { n, v: 1.0 }
    }

    #[test]
    fn microcanonical_single_particle_volume() {
        let gc = GasConstants {
            d: 2,
            ..GasConstants::default()
        };
        let v = phase_volume_log(&mc(1), &gc, 1.0).unwrap();
        assert!((v - (2.0 * PI).ln()).abs() < 1e-14);
    }

    #[test]
    fn hill_and_ray_volumes() {
        let gc = GasConstants::default();
        let (mu, v, l) = (0.7, 2.0, 1.3);
        let spec = EnsembleSpec::Hill { mu, v };
        let m = (2.0 * PI).powf(1.5);
        let expected =
            1.5 * l / mu + v * (mu * std::f64::consts::E).powf(1.5) * m / 1.5f64.powf(1.5);
        assert!((phase_volume_log(&spec, &gc, l).unwrap() - expected).abs() < 1e-12);

        // choose P so that the geometric factor is exactly 1/2
        let (mu, n) = (1.0, 2u32);
        let alpha = 1.5 * n as f64 + n as f64;
        let g_over_p = m * (mu / alpha).powf(alpha) * alpha.exp();
        let p = 2.0 * g_over_p;
        let spec = EnsembleSpec::Ray { mu, p, n };
        let r = 0.4;
        let expected = 3.0 * r / mu + 2f64.ln();
        assert!((phase_volume_log(&spec, &gc, r).unwrap() - expected).abs() < 1e-12);

        let bad = EnsembleSpec::Ray {
            mu,
            p: 0.5 * g_over_p,
            n,
        };
        assert!(matches!(
            phase_volume_log(&bad, &gc, r),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn isoenthalpic_volume_against_direct_formula() {
        let gc = GasConstants::default();
        let (n, p, h) = (3u32, 2.0f64, 5.0f64);
        let alpha = 1.5 * 3.0 + 3.0;
        let m = (2.0 * PI).powf(1.5);
        // Γ(8.5) by the half-integer product
        let mut gamma = PI.sqrt();
        let mut z = 0.5;
        while z < 8.5 {
            gamma *= z;
            z += 1.0;
        }
        let sigma = (m / p).powi(3) * h.powf(alpha) / gamma;
        let got = phase_volume_log(&EnsembleSpec::IsoenthalpicIsobaric { n, p }, &gc, h).unwrap();
        assert!((got - sigma.ln()).abs() < 1e-12);
    }

    #[test]
    fn phase_volume_large_n_stays_finite() {
        let v = phase_volume_log(&mc(10_000), &GasConstants::default(), 5.0).unwrap();
        assert!(v.is_finite());
    }

    #[test]
    fn derived_constant_examples() {
        let gc = GasConstants::default();
        let c = derived_constants(&mc(10), &gc, &dp(1.2, 1.1, 1.1)).unwrap();
        assert!((c.big_a - (-0.5f64).exp()).abs() < 1e-15);
        assert!((c.b - 0.5f64.exp()).abs() < 1e-14);
        // c = 2(1−r)e^ρ/((1−q)DN) with ρ = 1, DN = 30
        assert!((c.c - std::f64::consts::E / 30.0).abs() < 1e-15);
        assert!(c.alpha.is_none());

        let c = derived_constants(&mc(10), &gc, &dp(1.2, 0.9, 1.1)).unwrap();
        assert!(c.b < 0.0);
        let c = derived_constants(
            &EnsembleSpec::IsoenthalpicIsobaric { n: 10, p: 1.0 },
            &gc,
            &dp(1.2, 0.9, 1.1),
        )
        .unwrap();
        assert_eq!(c.alpha, Some(25.0));
    }

    #[test]
    fn branch_selection_table() {
        assert_eq!(select_branch(&dp(1.2, 1.1, 1.1)).unwrap(), BranchId::Pos0);
        assert_eq!(select_branch(&dp(1.2, 0.9, 1.1)).unwrap(), BranchId::Neg0);
        assert_eq!(select_branch(&dp(0.9, 0.95, 0.9)).unwrap(), BranchId::Pos0);
        assert_eq!(select_branch(&dp(0.9, 1.1, 0.9)).unwrap(), BranchId::Neg0);
        assert_eq!(select_branch(&dp(1.2, 0.9, 0.9)).unwrap(), BranchId::Pos0);
        assert_eq!(select_branch(&dp(1.2, 1.3, 0.9)).unwrap(), BranchId::Neg1);
        assert!(matches!(
            select_branch(&dp(0.9, 1.1, 1.1)),
            Err(Error::UncoveredRegion(_))
        ));
    }

    // Independent bisection for y·eʸ·ln(By) = x on y > 1/B (B > 0, x > 0).
    fn bisect_w(x: f64, b: f64) -> f64 {
        let (mut lo, mut hi) = (1.0 / b, 1.0 / b + 50.0);
        for _ in 0..300 {
            let mid = 0.5 * (lo + hi);
            if mid * mid.exp() * (b * mid).ln() < x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn microcanonical_energy_against_oracle() {
        let gc = GasConstants::default();
        let d = dp(1.2, 1.1, 1.1);
        let res = heat_function(&mc(10), &gc, &d, 1.0).unwrap();

        let b = 0.5f64.exp();
        let x = std::f64::consts::E / 30.0;
        let y = bisect_w(x, b);
        // a = (1−q)/((1−q′)ξ^{1−q}), ξ = M^10/(10!·Γ(16))
        let log_xi = 10.0 * 1.5 * (2.0 * PI).ln() - 3_628_800f64.ln() - 1_307_674_368_000f64.ln();
        let a = 2.0 * (0.2 * log_xi).exp();
        let e = (a * (b * y).ln()).powf(2.0 / (30.0 * -0.2));
        assert!((res.w_value - y).abs() < 1e-12);
        assert!(((res.heat - e) / e).abs() < 1e-10, "{} vs {e}", res.heat);
        assert_eq!(res.branch, BranchId::Pos0);
        assert!((res.w_argument - x).abs() < 1e-15);
        let back = forward(res.w_value, b).unwrap();
        assert!(((back - x) / x).abs() < 1e-9);
        assert!((res.u_check - (b * res.w_value).ln()).abs() < 1e-9);
    }

    #[test]
    fn hill_energy_against_oracle() {
        let gc = GasConstants::default();
        let d = dp(1.2, 1.1, 1.1);
        let spec = EnsembleSpec::Hill { mu: 1.0, v: 1.0 };
        let res = heat_function(&spec, &gc, &d, 1.0).unwrap();
        let b = 0.5f64.exp();
        // c = 2μ(1−r)e^ρ/(D(1−q)) = e/3
        let x = std::f64::consts::E / 3.0;
        let y = bisect_w(x, b);
        let m = (2.0 * PI).powf(1.5);
        let log_xi = std::f64::consts::E.powf(1.5) * m / 1.5f64.powf(1.5);
        let a = 2.0 * (0.2 * log_xi).exp();
        let l = 2.0 / (3.0 * -0.2) * (a * (b * y).ln()).ln();
        assert!(((res.heat - l) / l).abs() < 1e-10, "{} vs {l}", res.heat);
    }

    #[test]
    fn specific_heat_matches_finite_difference() {
        let gc = GasConstants::default();
        let d = dp(1.2, 1.1, 1.1);
        let model = HeatModel::new(mc(10), gc, d).unwrap();
        let t = 1.0;
        let h = 1e-5 * t;
        let fd = (model.heat(t + h).unwrap().heat - model.heat(t - h).unwrap().heat) / (2.0 * h);
        let cv = model.specific_heat(t).unwrap();
        assert!(((cv - fd) / fd).abs() < 1e-5, "{cv} vs {fd}");
        assert_eq!(model.heat(t).unwrap().specific_heat, cv);
    }

    #[test]
    fn hill_specific_heat_independent_of_a() {
        // V only enters through ξ, hence a; C_V must not change.
        let gc = GasConstants::default();
        let d = dp(1.2, 1.1, 1.1);
        let m1 = HeatModel::new(EnsembleSpec::Hill { mu: 1.0, v: 1.0 }, gc, d).unwrap();
        let m2 = HeatModel::new(EnsembleSpec::Hill { mu: 1.0, v: 2.0 }, gc, d).unwrap();
        assert_ne!(m1.constants().a, m2.constants().a);
        let (r1, r2) = (m1.heat(1.3).unwrap(), m2.heat(1.3).unwrap());
        assert!((r1.heat - r2.heat).abs() > 1e-3);
        assert!(((r1.specific_heat - r2.specific_heat) / r1.specific_heat).abs() < 1e-12);
    }

    #[test]
    fn large_temperature_stays_finite_then_guards() {
        let model = HeatModel::new(mc(10), GasConstants::default(), dp(1.2, 1.1, 1.1)).unwrap();
        let res = model.heat(1e300).unwrap();
        assert!(res.heat.is_finite() && res.specific_heat.is_finite());
        // kT overflows, cβ is exactly 0 and ln(BW) = 0: reported, not NaN.
        let hot = GasConstants {
            k: 1e300,
            ..GasConstants::default()
        };
        let model = HeatModel::new(mc(10), hot, dp(1.2, 1.1, 1.1)).unwrap();
        assert!(matches!(model.heat(1e300), Err(Error::NonPhysical(_))));
        assert!(model.heat(0.0).is_err());
        assert!(model.heat(-1.0).is_err());
    }

    #[test]
    fn negative_b_regions() {
        let gc = GasConstants::default();
        // region (i) with q' < 1: Neg0, needs cβ ≤ f(δ₂)
        let model = HeatModel::new(mc(10), gc, dp(1.2, 0.9, 1.1)).unwrap();
        assert_eq!(model.branch(), BranchId::Neg0);
        let res = model.heat(10.0).unwrap();
        assert!(model.constants().b * res.w_value > 0.0);
        assert!(res.heat > 0.0);
        // region (iii) with q' > 1: Neg1, negative argument
        let model = HeatModel::new(mc(10), gc, dp(1.2, 1.3, 0.9)).unwrap();
        assert_eq!(model.branch(), BranchId::Neg1);
        let res = model.heat(10.0).unwrap();
        assert!(res.w_argument < 0.0);
        assert!(res.heat > 0.0 && res.specific_heat.is_finite());
    }

    #[test]
    fn entropy_zero_at_unit_volume() {
        let d = dp(1.2, 1.1, 1.1);
        assert_eq!(factored_entropy(0.0, &d, 1.0).unwrap(), 0.0);
        assert_eq!(
            factored_entropy(0.0, &dp(0.9, 0.95, 0.9), 1.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn factored_entropy_equals_composition() {
        let gc = GasConstants::default();
        let d = dp(1.2, 1.1, 1.1);
        for heat in [0.3, 1.0, 4.0] {
            let s = entropy_of_system(&mc(1), &gc, &d, heat).unwrap();
            let direct =
                three_param_log_of_ln(phase_volume_log(&mc(1), &gc, heat).unwrap(), &d).unwrap();
            assert!(((s - direct) / direct).abs() < 1e-9, "{s} vs {direct}");
        }
    }

    #[test]
    fn hill_and_ray_temperature_is_exact() {
        let gc = GasConstants::default();
        let d = dp(1.2, 1.1, 1.1);
        for spec in [
            EnsembleSpec::Hill { mu: 1.0, v: 1.0 },
            EnsembleSpec::Ray {
                mu: 1.0,
                p: 1.0,
                n: 10,
            },
        ] {
            let model = HeatModel::new(spec, gc, d).unwrap();
            for t in [0.5, 1.0, 2.0] {
                let q = model.heat(t).unwrap().heat;
                let h = 1e-5 * q.abs().max(1e-3);
                let ds =
                    (model.entropy(q + h).unwrap() - model.entropy(q - h).unwrap()) / (2.0 * h);
                assert!(
                    (ds * t - 1.0).abs() < 1e-6,
                    "{spec:?} T={t}: T dS/dQ = {}",
                    ds * t
                );
            }
        }
    }

    #[test]
    fn power_law_temperature_carries_large_n_factor() {
        // T·∂S/∂E = 1/E at the returned energy.
        let gc = GasConstants::default();
        let d = dp(1.2, 1.1, 1.1);
        let model = HeatModel::new(mc(10), gc, d).unwrap();
        let t = 1.0;
        let e = model.heat(t).unwrap().heat;
        let h = 1e-6 * e;
        let ds = (model.entropy(e + h).unwrap() - model.entropy(e - h).unwrap()) / (2.0 * h);
        assert!((ds * t * e - 1.0).abs() < 1e-6);
    }

    #[test]
    fn invalid_inputs() {
        let gc = GasConstants::default();
        assert!(derived_constants(&mc(0), &gc, &dp(1.2, 1.1, 1.1)).is_err());
        let bad = GasConstants { m: -1.0, ..gc };
        assert!(derived_constants(&mc(3), &bad, &dp(1.2, 1.1, 1.1)).is_err());
        let lim = DeformationParams::allowing_limits(1.0, 1.1, 1.1).unwrap();
        assert!(derived_constants(&mc(3), &gc, &lim).is_err());
        assert!(heat_function(&mc(10), &gc, &dp(0.9, 1.1, 1.1), 1.0).is_err());
        assert!(phase_volume_log(&mc(3), &gc, -1.0).is_err());
    }
}
