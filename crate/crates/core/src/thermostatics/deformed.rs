use crate::error::{Error, Result};

/// Entropy deformation parameters (q, q′, r).
///
/// [`DeformationParams::new`] rejects the value 1 for any parameter, which
/// every ensemble formula divides by. [`DeformationParams::allowing_limits`]
/// admits it for the deformed logarithms, which fall back to their
/// undeformed limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationParams {
    pub q: f64,
    pub q_prime: f64,
    pub r: f64,
}

impl DeformationParams {
    pub fn new(q: f64, q_prime: f64, r: f64) -> Result<Self> {
        let dp = Self::allowing_limits(q, q_prime, r)?;
        dp.ensure_nondegenerate()?;
        Ok(dp)
    }

    pub fn allowing_limits(q: f64, q_prime: f64, r: f64) -> Result<Self> {
        for (name, v) in [("q", q), ("q'", q_prime), ("r", r)] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite, got {v}"
                )));
            }
        }
        Ok(Self { q, q_prime, r })
    }

    pub fn ensure_nondegenerate(&self) -> Result<()> {
        for (name, v) in [("q", self.q), ("q'", self.q_prime), ("r", self.r)] {
            if v == 1.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} = 1 is not allowed in ensemble formulas"
                )));
            }
        }
        Ok(())
    }

    /// (1−r)/(1−q′)
    pub fn rho(&self) -> f64 {
        (1.0 - self.r) / (1.0 - self.q_prime)
    }
}

/// q-logarithm (x^{1−q} − 1)/(1−q); ln x at q = 1.
pub fn q_log(x: f64, q: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("q_log needs x > 0, got {x}")));
    }
    Ok(q_log_of_ln(x.ln(), q))
}

fn q_log_of_ln(ln_x: f64, q: f64) -> f64 {
    if q == 1.0 {
        ln_x
    } else {
        ((1.0 - q) * ln_x).exp_m1() / (1.0 - q)
    }
}

/// q-exponential [1 + (1−q)x]^{1/(1−q)}, the inverse of [`q_log`]; eˣ at q = 1.
pub fn q_exp(x: f64, q: f64) -> Result<f64> {
    if q == 1.0 {
        return Ok(x.exp());
    }
    let t = (1.0 - q) * x;
    if !(1.0 + t > 0.0) {
        return Err(Error::domain(format!(
            "q_exp needs 1 + (1-q)x > 0, got q = {q}, x = {x}"
        )));
    }
    Ok((t.ln_1p() / (1.0 - q)).exp())
}

/// Three-parameter logarithm
/// ln_{q,q′,r}(x) = (1/(1−r))·[exp(((1−r)/(1−q′))·(e^{(1−q′)ln_q x} − 1)) − 1].
///
/// Reduces to the two-parameter form at r = 1 and to ln_q at q′ = r = 1.
pub fn three_param_log(x: f64, dp: &DeformationParams) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "three_param_log needs x > 0, got {x}"
        )));
    }
    three_param_log_of_ln(x.ln(), dp)
}

/// [`three_param_log`] taking ln x, for arguments beyond the f64 range.
pub fn three_param_log_of_ln(ln_x: f64, dp: &DeformationParams) -> Result<f64> {
    if ln_x.is_nan() {
        return Err(Error::domain("three_param_log of NaN"));
    }
    let lq = q_log_of_ln(ln_x, dp.q);
    let two = if dp.q_prime == 1.0 {
        lq
    } else {
        ((1.0 - dp.q_prime) * lq).exp_m1() / (1.0 - dp.q_prime)
    };
    let three = if dp.r == 1.0 {
        two
    } else {
        ((1.0 - dp.r) * two).exp_m1() / (1.0 - dp.r)
    };
    if !three.is_finite() {
        return Err(Error::Overflow(format!(
            "three_param_log overflows at ln x = {ln_x} for {dp:?}"
        )));
    }
    Ok(three)
}

/// k·Σ pᵢ·ln_{q,q′,r}(1/pᵢ); zero-probability states contribute nothing.
pub fn entropy_of_distribution(p: &[f64], dp: &DeformationParams, k: f64) -> Result<f64> {
    if p.is_empty() {
        return Err(Error::domain("empty probability vector"));
    }
    if let Some(bad) = p.iter().find(|&&pi| !(pi >= 0.0) || !pi.is_finite()) {
        return Err(Error::domain(format!(
            "negative or non-finite probability {bad}"
        )));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::domain(format!(
            "probabilities sum to {total}, not 1"
        )));
    }
    let mut s = 0.0;
    for &pi in p.iter().filter(|&&pi| pi > 0.0) {
        s += pi * three_param_log_of_ln(-pi.ln(), dp)?;
    }
    Ok(k * s)
}
