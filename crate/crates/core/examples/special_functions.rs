//! Principal Lambert W, the exponential integral and ln Γ.

use loglambert::{exp_integral_ei, lambert_w0, log_gamma, SolverOptions};

pub fn main() -> Result<(), loglambert::Error> {
    let opts = SolverOptions::default();
    println!("x,W0(x),Ei(x)");
    for x in [-0.3, 0.5, 1.0, 10.0, 302.7564] {
        println!("{x},{:e},{:e}", lambert_w0(x, &opts)?, exp_integral_ei(x)?);
    }
    // W0 stops at -1/e
    assert!(lambert_w0(-0.5, &opts).is_err());
    println!(
        "ln Γ(11) = {} (ln 10! = {})",
        log_gamma(11.0)?,
        3_628_800f64.ln()
    );
    Ok(())
}
