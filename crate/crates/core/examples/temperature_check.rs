//! Temperature recovered from the entropy, T·dS/dQ, as the particle number
//! grows. Hill and Ray reproduce 1 exactly; the microcanonical and
//! isoenthalpic values equal 1/E and 1/H instead.

use loglambert::thermostatics::{DeformationParams, EnsembleSpec, GasConstants, HeatModel};

pub fn main() -> Result<(), loglambert::Error> {
    let gc = GasConstants::default();
    let dp = DeformationParams::new(1.2, 1.1, 1.1)?;
    let t = 1.0;
    for n in [10, 50, 100] {
        for spec in [
            EnsembleSpec::Microcanonical { n, v: 1.0 },
            EnsembleSpec::IsoenthalpicIsobaric { n, p: 1.0 },
            EnsembleSpec::Hill { mu: 1.0, v: 1.0 },
            EnsembleSpec::Ray { mu: 1.0, p: 1.0, n },
        ] {
            let model = HeatModel::new(spec, gc, dp)?;
            let q = model.heat(t)?.heat;
            let h = 1e-5 * q.abs().max(1.0);
            let ds = (model.entropy(q + h)? - model.entropy(q - h)?) / (2.0 * h);
            println!(
                "N = {n:>3} {}: Q = {q:>10.4}, T dS/dQ = {:.6}",
                spec.heat_symbol(),
                t * ds
            );
        }
    }
    Ok(())
}
