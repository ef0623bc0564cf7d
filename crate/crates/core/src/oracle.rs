//! Brute-force grid searches over `(α₁, α₂) ∈ [0, 1]²`.
//!
//! These evaluate the per-user SINRs directly and test the rate floors in
//! SINR form with no slack, so every grid point they accept is strictly feasible. They
//! exist to validate the closed-form and Dinkelbach allocations and share
//! no code path with them.

use crate::channel::{EffectiveCsi, PhaseModel};
use crate::error::{Error, Result};
use crate::mpa::RateTargets;

/// Best grid point found by an oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridOptimum {
    pub alpha1: f64,
    pub alpha2: f64,
    pub value: f64,
}

fn grid_points(step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step <= 0.1) {
        return Err(Error::Domain {
            name: "step",
            value: step,
            domain: "(0, 0.1]",
        });
    }
    let n = (1.0 / step).round() as usize;
    Ok((0..=n).map(|k| (k as f64 * step).min(1.0)).collect())
}

/// Visits every strictly feasible grid point as
/// `(α₁, α₂, (1 + SINR₁)(1 + SNR₂))`.
fn for_each_feasible<F: FnMut(f64, f64, f64)>(
    targets: &RateTargets,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
    step: f64,
    mut visit: F,
) -> Result<()> {
    let grid = grid_points(step)?;
    let s = phase.degradation();
    let (g1, g2) = (csi1.gamma() * s, csi2.gamma() * s);
    // log₂(1 + x) ≥ R̄  ⇔  x ≥ 2^R̄ − 1
    let need1 = targets.r1_min.exp2() - 1.0;
    let need2 = targets.r2_min.exp2() - 1.0;
    for &a2 in &grid {
        let snr2 = a2 * g2;
        if snr2 < need2 {
            continue;
        }
        let interference = 1.0 + snr2;
        for &a1 in &grid {
            let sinr1 = a1 * g1 / interference;
            if sinr1 < need1 {
                continue;
            }
            visit(a1, a2, (1.0 + sinr1) * (1.0 + snr2));
        }
    }
    Ok(())
}

/// Grid maximum of the pair sum rate under both rate floors.
pub fn grid_oracle_asr(
    targets: &RateTargets,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
    step: f64,
) -> Result<GridOptimum> {
    let mut best: Option<(f64, f64, f64)> = None;
    for_each_feasible(targets, csi1, csi2, phase, step, |a1, a2, product| {
        if best.is_none_or(|b| product > b.2) {
            best = Some((a1, a2, product));
        }
    })?;
    let (alpha1, alpha2, product) = best.ok_or(Error::EmptyPolytope)?;
    Ok(GridOptimum {
        alpha1,
        alpha2,
        value: product.log2(),
    })
}

/// Grid maximum of the energy efficiency under both rate floors.
pub fn grid_oracle_ee(
    targets: &RateTargets,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
    step: f64,
) -> Result<GridOptimum> {
    let mut best: Option<GridOptimum> = None;
    for_each_feasible(targets, csi1, csi2, phase, step, |a1, a2, product| {
        let power = a1 + a2;
        if power == 0.0 {
            return;
        }
        let ee = product.log2() / power;
        if best.is_none_or(|b| ee > b.value) {
            best = Some(GridOptimum {
                alpha1: a1,
                alpha2: a2,
                value: ee,
            });
        }
    })?;
    best.ok_or(Error::EmptyPolytope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpa::TargetPolicy;

    #[test]
    fn asr_grid_finds_mpa_corner() {
        let (c1, c2) = (EffectiveCsi::from_db(8.0).unwrap(), EffectiveCsi::from_db(5.0).unwrap());
        let p = PhaseModel::perfect();
        let t = RateTargets::for_pair(TargetPolicy::default(), c1, c2, &p).unwrap();
        let g = grid_oracle_asr(&t, c1, c2, &p, 1e-2).unwrap();
        assert_eq!(g.alpha1, 1.0);
        assert!((g.alpha2 - 0.85).abs() < 1e-12);
        assert!(g.value < 3.323831);
    }

    #[test]
    fn rejects_bad_step_and_empty_sets() {
        let c = EffectiveCsi::from_db(5.0).unwrap();
        let p = PhaseModel::perfect();
        let t = RateTargets::explicit(0.1, 0.1).unwrap();
        assert!(grid_oracle_ee(&t, c, c, &p, 0.0).is_err());
        assert!(grid_oracle_ee(&t, c, c, &p, 0.5).is_err());
        let impossible = RateTargets::explicit(10.0, 10.0).unwrap();
        assert_eq!(grid_oracle_ee(&impossible, c, c, &p, 0.05).unwrap_err(), Error::EmptyPolytope);
    }
}
