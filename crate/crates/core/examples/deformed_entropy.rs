//! q-logarithm, the three-parameter logarithm and the entropy of a
//! discrete distribution.

use loglambert::thermostatics::{
    entropy_of_distribution, q_exp, q_log, three_param_log, DeformationParams,
};

pub fn main() -> Result<(), loglambert::Error> {
    let x = 3.0;
    for q in [0.5, 1.0, 1.5] {
        let l = q_log(x, q)?;
        println!(
            "q = {q}: ln_q(3) = {l:.10}, exp_q(ln_q(3)) = {:.10}",
            q_exp(l, q)?
        );
    }
    let dp = DeformationParams::new(1.2, 1.1, 1.1)?;
    println!("ln_(1.2,1.1,1.1)(3) = {:.10}", three_param_log(x, &dp)?);
    let near = DeformationParams::allowing_limits(1.2, 1.0 + 1e-6, 1.0 + 1e-6)?;
    println!(
        "q' = r = 1 + 1e-6: {:.8} vs ln_q {:.8}",
        three_param_log(x, &near)?,
        q_log(x, 1.2)?
    );

    for p in [
        vec![0.25; 4],
        vec![0.4, 0.3, 0.2, 0.1],
        vec![0.97, 0.01, 0.01, 0.01],
        vec![1.0, 0.0, 0.0, 0.0],
    ] {
        println!("S{p:?} = {:.8}", entropy_of_distribution(&p, &dp, 1.0)?);
    }
    Ok(())
}
