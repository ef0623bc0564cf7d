//! Rates of one pair as the weak user's power fraction grows, with and
//! without phase error, and the two α₂ bounds.
//!
//! Usage: cargo run --example alpha2_sweep [gamma1_db gamma2_db]

use ris_noma::channel::{rate_noma, rates_oma, EffectiveCsi, PhaseModel};
use ris_noma::mpa::{MpaBounds, RateTargets, TargetPolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (g1, g2) = match args[..] {
        [a, b] => (a, b),
        _ => (8.0, 5.0),
    };
    let (c1, c2) = (EffectiveCsi::from_db(g1)?, EffectiveCsi::from_db(g2)?);

    for delta_deg in [0.0, 11.0] {
        let phase = PhaseModel::from_degrees(delta_deg)?;
        let targets = RateTargets::for_pair(TargetPolicy::default(), c1, c2, &phase)?;
        let b = MpaBounds::compute(&targets, c1, c2, &phase)?;
        let oma = rates_oma(c1, c2, &phase);
        println!(
            "Γ = [{g1}, {g2}] dB, δ = {delta_deg}°: α₂^lb = {:.4}, α₂^ub = {:.4}, OMA (R₁, R₂) = ({:.3}, {:.3})",
            b.alpha2_lb, b.alpha2_ub, oma.strong, oma.weak
        );
        println!("{:>6} {:>8} {:>8} {:>8}", "α₂", "R₁", "R₂", "ASR");
        for k in 0..=10 {
            let a2 = k as f64 / 10.0;
            let r = rate_noma(1.0, a2, c1, c2, &phase)?;
            println!("{a2:>6.1} {:>8.4} {:>8.4} {:>8.4}", r.strong, r.weak, r.strong + r.weak);
        }
        println!();
    }
    Ok(())
}
