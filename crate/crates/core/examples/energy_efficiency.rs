//! Dinkelbach iterations for the energy-efficient allocation of one pair,
//! compared with the sum-rate allocation.
//!
//! Usage: cargo run --example energy_efficiency [gamma1_db gamma2_db delta_deg]

use ris_noma::channel::{EffectiveCsi, PhaseModel};
use ris_noma::eepa::{dinkelbach_allocate, pairing_criterion_eepa, DEFAULT_MAX_ITER, DEFAULT_TOL};
use ris_noma::mpa::{allocate_mpa, RateTargets, TargetPolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (g1, g2, delta_deg) = match args[..] {
        [a, b, d] => (a, b, d),
        _ => (15.0, 5.0, 20.0),
    };
    let (c1, c2) = (EffectiveCsi::from_db(g1)?, EffectiveCsi::from_db(g2)?);
    let phase = PhaseModel::from_degrees(delta_deg)?;
    let targets = RateTargets::for_pair(TargetPolicy::default(), c1, c2, &phase)?;

    let crit = pairing_criterion_eepa(&targets, c1, c2, &phase);
    println!(
        "criterion: sinc² thresholds {:.4} / {:.4}, sinc²δ = {:.4}, δ_ub = {:?}",
        crit.sinc_sq_threshold_1,
        crit.sinc_sq_threshold_2,
        phase.degradation(),
        crit.delta_ub.map(f64::to_degrees)
    );

    let sol = dinkelbach_allocate(&targets, c1, c2, &phase, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
    for (k, (lambda, f)) in sol.history.iter().enumerate() {
        println!("  iter {k}: λ = {lambda:.8}, F(λ) = {f:.3e}");
    }
    println!("EE optimum  (α₁, α₂) = ({:.5}, {:.5}), EE = {:.5}", sol.alpha1, sol.alpha2, sol.lambda_star);

    let mpa = allocate_mpa(&targets, c1, c2, &phase)?;
    println!("sum-rate    (α₁, α₂) = ({:.5}, {:.5}), EE = {:.5}, ASR = {:.5}", mpa.alpha1, mpa.alpha2, mpa.ee, mpa.asr);
    Ok(())
}
