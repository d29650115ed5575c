//! Heat function and specific heat of the ideal gas in the four adiabatic
//! ensembles, with the W_L branch each one lands on.

use loglambert::thermostatics::{DeformationParams, EnsembleSpec, GasConstants, HeatModel};

pub fn main() -> Result<(), loglambert::Error> {
    let gc = GasConstants::default();
    let ensembles = [
        (
            "microcanonical",
            EnsembleSpec::Microcanonical { n: 10, v: 1.0 },
        ),
        (
            "isoenthalpic",
            EnsembleSpec::IsoenthalpicIsobaric { n: 10, p: 1.0 },
        ),
        ("hill", EnsembleSpec::Hill { mu: 1.0, v: 1.0 }),
        (
            "ray",
            EnsembleSpec::Ray {
                mu: 1.0,
                p: 1.0,
                n: 10,
            },
        ),
    ];
    for (q, qp, r) in [(1.2, 1.1, 1.1), (0.9, 0.95, 0.9), (0.9, 1.05, 0.95)] {
        let dp = DeformationParams::new(q, qp, r)?;
        for (name, spec) in ensembles {
            let model = HeatModel::new(spec, gc, dp)?;
            print!("({q},{qp},{r}) {name:<14} {}:", model.branch());
            for t in [0.5, 1.0, 2.0] {
                match model.heat(t) {
                    Ok(res) => print!(
                        "  T={t}: {}={:.4} C={:.4}",
                        spec.heat_symbol(),
                        res.heat,
                        res.specific_heat
                    ),
                    Err(e) => print!("  T={t}: {e}"),
                }
            }
            println!();
        }
    }
    // q' and r above 1 with q below 1 is not covered by any branch rule
    let dp = DeformationParams::new(0.9, 1.1, 1.1)?;
    println!("{}", HeatModel::new(ensembles[0].1, gc, dp).unwrap_err());
    Ok(())
}
