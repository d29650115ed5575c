//! Derivative and antiderivative of W_L, checked against a finite
//! difference and a trapezoid sum.

use loglambert::{BranchId, LogLambertContext, SolverOptions};

pub fn main() -> Result<(), loglambert::Error> {
    let ctx = LogLambertContext::new(1.0, SolverOptions::default())?;
    let branch = BranchId::Pos0;
    let x = 302.7564;
    let h = 1e-4;
    let fd = (ctx.eval(x + h, branch)?.0 - ctx.eval(x - h, branch)?.0) / (2.0 * h);
    println!(
        "W_L'({x}) = {:.10e}, central difference {fd:.10e}",
        ctx.derivative(x, branch)?
    );

    let exact = ctx.antiderivative(x, branch)? - ctx.antiderivative(0.0, branch)?;
    let n = 20_000;
    let step = x / n as f64;
    let mut sum = 0.5 * (ctx.eval(0.0, branch)?.0 + ctx.eval(x, branch)?.0);
    for i in 1..n {
        sum += ctx.eval(i as f64 * step, branch)?.0;
    }
    println!(
        "integral over [0, {x}]: F difference {exact:.8}, trapezoid {:.8}",
        sum * step
    );

    // the derivative is unbounded at the branch point
    let f_delta = ctx.domain(branch)?.lo;
    println!(
        "at x = f(delta): {:?}",
        ctx.derivative(f_delta, branch).unwrap_err()
    );
    Ok(())
}
