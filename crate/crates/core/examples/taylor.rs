//! Taylor polynomials of the principal branch about x = 0.

use loglambert::{taylor_coefficients, taylor_eval, BranchId, LogLambertContext, SolverOptions};

pub fn main() -> Result<(), loglambert::Error> {
    let b = 1.0;
    let ctx = LogLambertContext::new(b, SolverOptions::default())?;
    println!("g1, g2, g3 = {:?}", taylor_coefficients(b));
    println!(
        "{:>7} {:>11} {:>11} {:>11}",
        "x", "order 1", "order 2", "order 3"
    );
    for x in [-0.2, -0.05, -0.01, 0.01, 0.05, 0.2] {
        let (exact, _) = ctx.eval(x, BranchId::Pos0)?;
        let errs: Vec<String> = (1..=3)
            .map(|k| taylor_eval(x, b, k).map(|t| format!("{:>11.3e}", (t - exact).abs())))
            .collect::<Result<_, _>>()?;
        println!("{x:>7} {}", errs.join(" "));
    }
    Ok(())
}
