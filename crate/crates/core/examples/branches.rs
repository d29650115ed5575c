//! Curve data for every branch at B = 1 and B = -1 as CSV (B,branch,x,y),
//! ready for an external plotting tool.

use loglambert::{forward, BranchId, LogLambertContext, SolverOptions};

pub fn main() -> Result<(), loglambert::Error> {
    println!("B,branch,x,y");
    for b in [1.0, -1.0] {
        let ctx = LogLambertContext::new(b, SolverOptions::default())?;
        for &branch in BranchId::for_b(b) {
            let r = ctx.range(branch)?;
            let lo = if r.lo.is_finite() { r.lo } else { r.hi - 6.0 };
            let hi = if r.hi.is_finite() { r.hi } else { r.lo + 2.5 };
            // sample in y, then evaluate the inverse at the image
            for i in 1..40 {
                let y = lo + (hi - lo) * i as f64 / 40.0;
                let x = forward(y, b)?;
                let (w, _) = ctx.eval(x, branch)?;
                println!("{b},{branch},{x},{w}");
            }
        }
    }
    Ok(())
}
