//! MPA versus OMA for one pair as the phase-error bound grows; NOMA is
//! kept up to δ_ub and abandoned beyond it.
//!
//! Usage: cargo run --example delta_sweep [gamma1_db gamma2_db]

use ris_noma::channel::{rates_oma, EffectiveCsi, PhaseModel};
use ris_noma::mpa::{allocate_mpa, pairing_criterion_mpa, Mode, RateTargets, TargetPolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (g1, g2) = match args[..] {
        [a, b] => (a, b),
        _ => (8.0, 5.0),
    };
    let (c1, c2) = (EffectiveCsi::from_db(g1)?, EffectiveCsi::from_db(g2)?);
    // Targets are the OMA rates without phase error, so they do not move with δ.
    let targets = RateTargets::for_pair(TargetPolicy::default(), c1, c2, &PhaseModel::perfect())?;
    let crit = pairing_criterion_mpa(&targets, c1, &PhaseModel::perfect());
    match crit.delta_ub {
        Some(ub) => println!("Γ = [{g1}, {g2}] dB: δ_ub = {:.4} rad = {:.2}°", ub, ub.to_degrees()),
        None => println!("Γ = [{g1}, {g2}] dB: sinc² threshold {:.4}, no finite δ_ub", crit.sinc_sq_threshold),
    }

    println!("{:>5} {:>5} {:>7} {:>8} {:>8} {:>8} {:>8}", "δ°", "mode", "α₂", "R₁", "R₂", "R₁ OMA", "R₂ OMA");
    for delta_deg in (0..=120).step_by(10) {
        let phase = PhaseModel::from_degrees(delta_deg as f64)?;
        let d = allocate_mpa(&targets, c1, c2, &phase)?;
        let oma = rates_oma(c1, c2, &phase);
        let mode = if d.mode == Mode::Noma { "noma" } else { "oma" };
        println!(
            "{delta_deg:>5} {mode:>5} {:>7.4} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            d.alpha2, d.rates.strong, d.rates.weak, oma.strong, oma.weak
        );
    }
    Ok(())
}
