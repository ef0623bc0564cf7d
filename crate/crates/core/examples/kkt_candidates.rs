//! The KKT candidates of the sum-rate problem, the feasible ones and the
//! winner, next to the closed-form allocation and a brute-force grid.

use ris_noma::channel::{EffectiveCsi, PhaseModel};
use ris_noma::mpa::{allocate_mpa, best_kkt_candidate, kkt_candidates, MpaBounds, RateTargets, TargetPolicy};
use ris_noma::oracle::grid_oracle_asr;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (g1, g2, delta_deg) in [(8.0, 5.0, 0.0), (8.0, 2.0, 0.0), (15.0, 5.0, 40.0)] {
        let (c1, c2) = (EffectiveCsi::from_db(g1)?, EffectiveCsi::from_db(g2)?);
        let phase = PhaseModel::from_degrees(delta_deg)?;
        let targets = RateTargets::for_pair(TargetPolicy::default(), c1, c2, &phase)?;
        let b = MpaBounds::compute(&targets, c1, c2, &phase)?;
        let candidates = kkt_candidates(b.eta, b.kappa, b.alpha2_lb);

        println!("Γ = [{g1}, {g2}] dB, δ = {delta_deg}°  (η = {:.4}, κ = {:.4})", b.eta, b.kappa);
        for (a1, a2) in &candidates {
            println!("  feasible candidate ({a1:.5}, {a2:.5})");
        }
        let best = best_kkt_candidate(&candidates, c1, c2);
        let d = allocate_mpa(&targets, c1, c2, &phase)?;
        let grid = grid_oracle_asr(&targets, c1, c2, &phase, 1e-3)?;
        println!("  best candidate {best:?}");
        println!("  closed form    ({}, {:.5}), ASR {:.6}", d.alpha1, d.alpha2, d.asr);
        println!("  grid (1e-3)    ({:.3}, {:.3}), ASR {:.6}\n", grid.alpha1, grid.alpha2, grid.value);
    }
    Ok(())
}
