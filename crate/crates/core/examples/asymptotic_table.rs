//! Large-x approximation W(x) - ln ln(W(x)) against the exact W_L at B = 1.

use loglambert::{asymptotic_approx, forward, BranchId, LogLambertContext, SolverOptions};

pub fn main() -> Result<(), loglambert::Error> {
    let ctx = LogLambertContext::new(1.0, SolverOptions::default())?;
    println!(
        "{:>14} {:>8} {:>8} {:>12}",
        "x", "W_L", "approx", "rel_error"
    );
    for n in 4..=10 {
        let x = forward(n as f64, 1.0)?;
        let (exact, _) = ctx.eval(x, BranchId::Pos0)?;
        let approx = asymptotic_approx(x, 1.0)?;
        let rel = (approx - exact).abs() / exact;
        println!("{x:>14.4} {exact:>8.4} {approx:>8.4} {rel:>12.5e}");
    }
    Ok(())
}
