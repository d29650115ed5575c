//! Branch points of W_L and the domain and range of every branch.

use loglambert::{branch_points, BranchId, BranchPoints, SolverOptions};

pub fn main() -> Result<(), loglambert::Error> {
    for b in [1.0, 2.0, -1.0, -0.5] {
        let ctx = branch_points(b, SolverOptions::default())?;
        match ctx.points() {
            BranchPoints::Positive { delta, f_delta } => {
                println!("B = {b}: delta = {delta:.12}, f(delta) = {f_delta:.12}");
            }
            BranchPoints::Negative {
                delta1,
                f_delta1,
                delta2,
                f_delta2,
            } => {
                println!("B = {b}: delta1 = {delta1:.12}, f(delta1) = {f_delta1:.12}");
                println!("        delta2 = {delta2:.12}, f(delta2) = {f_delta2:.12}");
            }
        }
        for &branch in BranchId::for_b(b) {
            println!(
                "  {branch}: x in {}, y in {}",
                ctx.domain(branch)?,
                ctx.range(branch)?
            );
        }
    }
    Ok(())
}
