//! Maximum-sum-rate pairing (MPA).
//!
//! With `s = sinc²(δ)`, the rate floors `R₁ ≥ R̄₁` and `R₂ ≥ R̄₂` confine
//! the weak user's power fraction to `[α₂^lb, α₂^ub]` once the strong user
//! transmits at full power. Because the sum rate only grows with either
//! fraction, the optimum is `(1, min(α₂^ub, 1))`. The pair is served in
//! NOMA only when that interval is non-empty, which reduces to a threshold
//! on `sinc²(δ)`; otherwise both users fall back to OMA.

use serde::{Deserialize, Serialize};

use crate::channel::{self, EffectiveCsi, PhaseModel, RatePair};
use crate::error::{Error, Result};
use crate::search::delta_for_sinc_sq;

/// Absolute slack on every feasibility test at an analytic boundary.
pub const FEASIBILITY_EPS: f64 = 1e-9;

/// How the per-pair minimum rates are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum TargetPolicy {
    /// OMA rates of both users evaluated at a fixed reference bound
    /// (radians), independent of the operating `δ`.
    OmaAtReferenceDelta { delta_ref: f64 },
    /// OMA rates at the operating `δ`.
    OmaAtCurrentDelta,
    /// Fixed targets, bits/s/Hz.
    Explicit { strong: f64, weak: f64 },
}

impl Default for TargetPolicy {
    fn default() -> Self {
        TargetPolicy::OmaAtReferenceDelta { delta_ref: 0.0 }
    }
}

/// Minimum rates `(R̄₁, R̄₂)` required of a pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateTargets {
    pub r1_min: f64,
    pub r2_min: f64,
    pub policy: TargetPolicy,
}

impl RateTargets {
    pub fn explicit(r1_min: f64, r2_min: f64) -> Result<Self> {
        for (name, v) in [("r1_min", r1_min), ("r2_min", r2_min)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::Domain {
                    name,
                    value: v,
                    domain: "[0, inf)",
                });
            }
        }
        Ok(Self {
            r1_min,
            r2_min,
            policy: TargetPolicy::Explicit {
                strong: r1_min,
                weak: r2_min,
            },
        })
    }

    /// Resolves `policy` for a pair operating at `phase`.
    pub fn for_pair(policy: TargetPolicy, csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> Result<Self> {
        let reference = match policy {
            TargetPolicy::OmaAtReferenceDelta { delta_ref } => PhaseModel::new(delta_ref)?,
            TargetPolicy::OmaAtCurrentDelta => *phase,
            TargetPolicy::Explicit { strong, weak } => {
                let mut t = Self::explicit(strong, weak)?;
                t.policy = policy;
                return Ok(t);
            }
        };
        Ok(Self {
            r1_min: channel::rate_oma(csi1, &reference),
            r2_min: channel::rate_oma(csi2, &reference),
            policy,
        })
    }
}

/// `α₂^lb = (2^{R̄₂} − 1) / (Γ₂ sinc²δ)`. May exceed 1.
pub fn alpha2_lower(targets: &RateTargets, csi2: EffectiveCsi, phase: &PhaseModel) -> Result<f64> {
    let need = targets.r2_min.exp2() - 1.0;
    if need == 0.0 {
        return Ok(0.0);
    }
    let g2 = csi2.gamma() * phase.degradation();
    if g2 == 0.0 {
        return Err(Error::Degenerate("weak user has zero effective gain"));
    }
    Ok(need / g2)
}

/// `α₂^ub = (Γ₁ sinc²δ + 1 − 2^{R̄₁}) / (Γ₂ sinc²δ (2^{R̄₁} − 1))`, the
/// largest weak-user fraction that keeps `R₁(1, α₂) ≥ R̄₁`. May be negative
/// or exceed 1.
///
/// Evaluated as `(1 − η)/κ` so that it is bit-identical to the matching
/// KKT candidate.
pub fn alpha2_upper(targets: &RateTargets, csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> Result<f64> {
    let need = targets.r1_min.exp2() - 1.0;
    if need == 0.0 {
        return Err(Error::Degenerate("zero strong-user target leaves alpha2 unbounded"));
    }
    let g1 = csi1.gamma() * phase.degradation();
    if g1 == 0.0 {
        return Err(Error::Degenerate("strong user has zero effective gain"));
    }
    if csi2.gamma() * phase.degradation() == 0.0 {
        return Err(Error::Degenerate("weak user has zero effective gain"));
    }
    let eta = need / g1;
    let kappa = need * csi2.gamma() / csi1.gamma();
    Ok((1.0 - eta) / kappa)
}

/// Pairing criterion of MPA: NOMA is possible iff `sinc²(δ) ≥ threshold`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MpaCriterion {
    pub feasible: bool,
    pub sinc_sq_threshold: f64,
    /// Largest admissible `δ`; `None` when the threshold is `≤ 0` (every
    /// `δ` admissible) or `> 1` (none is).
    pub delta_ub: Option<f64>,
}

/// `sinc²(δ) ≥ 2^{R̄₂}(2^{R̄₁} − 1) / Γ₁`, equivalent to `α₂^ub ≥ α₂^lb`.
pub fn pairing_criterion_mpa(targets: &RateTargets, csi1: EffectiveCsi, phase: &PhaseModel) -> MpaCriterion {
    let numerator = targets.r2_min.exp2() * (targets.r1_min.exp2() - 1.0);
    let threshold = if numerator == 0.0 {
        0.0
    } else if csi1.gamma() == 0.0 {
        f64::INFINITY
    } else {
        numerator / csi1.gamma()
    };
    MpaCriterion {
        feasible: phase.degradation() >= threshold,
        sinc_sq_threshold: threshold,
        delta_ub: delta_for_sinc_sq(threshold),
    }
}

/// Everything MPA derives for one pair at one `δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MpaBounds {
    pub alpha2_lb: f64,
    /// `+∞` when `R̄₁ = 0`.
    pub alpha2_ub: f64,
    /// `(2^{R̄₁} − 1) / (Γ₁ sinc²δ)`.
    pub eta: f64,
    /// `(2^{R̄₁} − 1) Γ₂ / Γ₁`.
    pub kappa: f64,
    pub sinc_sq_threshold: f64,
    pub delta_ub: Option<f64>,
}

impl MpaBounds {
    /// Requires `Γ₁ sinc²δ > 0`. A weak user with zero gain is accepted only
    /// with a zero weak target, in which case `α₂^ub = +∞`.
    pub fn compute(targets: &RateTargets, csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> Result<Self> {
        let s = phase.degradation();
        let g1 = csi1.gamma() * s;
        if g1 == 0.0 {
            return Err(Error::Degenerate("strong user has zero effective gain"));
        }
        let need1 = targets.r1_min.exp2() - 1.0;
        let alpha2_lb = alpha2_lower(targets, csi2, phase)?;
        let alpha2_ub = match alpha2_upper(targets, csi1, csi2, phase) {
            Ok(v) => v,
            Err(_) if need1 == 0.0 || csi2.gamma() == 0.0 => f64::INFINITY,
            Err(e) => return Err(e),
        };
        let crit = pairing_criterion_mpa(targets, csi1, phase);
        Ok(Self {
            alpha2_lb,
            alpha2_ub,
            eta: need1 / g1,
            kappa: need1 * csi2.gamma() / csi1.gamma(),
            sinc_sq_threshold: crit.sinc_sq_threshold,
            delta_ub: crit.delta_ub,
        })
    }

    /// Box-constrained feasibility: the criterion holds and `α₂^lb ≤ 1`.
    pub fn noma_feasible(&self, phase: &PhaseModel) -> bool {
        phase.degradation() >= self.sinc_sq_threshold && self.alpha2_lb <= 1.0 + FEASIBILITY_EPS
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Noma,
    Oma,
}

/// Outcome for one strong/weak pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairDecision {
    pub mode: Mode,
    pub alpha1: f64,
    pub alpha2: f64,
    pub rates: RatePair,
    pub asr: f64,
    pub ee: f64,
    pub strong_id: u64,
    pub weak_id: u64,
}

impl PairDecision {
    /// Both users in OMA at full power.
    pub fn oma(csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> Self {
        let rates = channel::rates_oma(csi1, csi2, phase);
        let asr = channel::asr(&rates);
        Self {
            mode: Mode::Oma,
            alpha1: 1.0,
            alpha2: 1.0,
            rates,
            asr,
            ee: asr / 2.0,
            strong_id: 0,
            weak_id: 1,
        }
    }

    pub fn noma(alpha1: f64, alpha2: f64, csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> Result<Self> {
        let rates = channel::rate_noma(alpha1, alpha2, csi1, csi2, phase)?;
        Ok(Self {
            mode: Mode::Noma,
            alpha1,
            alpha2,
            rates,
            asr: channel::asr(&rates),
            ee: channel::ee(&rates, alpha1, alpha2)?,
            strong_id: 0,
            weak_id: 1,
        })
    }

    pub fn with_ids(mut self, strong_id: u64, weak_id: u64) -> Self {
        self.strong_id = strong_id;
        self.weak_id = weak_id;
        self
    }

    pub fn meets(&self, targets: &RateTargets) -> bool {
        self.rates.strong >= targets.r1_min - FEASIBILITY_EPS && self.rates.weak >= targets.r2_min - FEASIBILITY_EPS
    }
}

/// MPA allocation `α₁ = 1`, `α₂ = min(α₂^ub, 1)`, or OMA when the pair
/// cannot meet both floors.
///
/// Besides the printed criterion this also requires `α₂^lb ≤ 1`: with
/// targets frozen at a reference `δ` the criterion alone can hold while the
/// weak floor needs more than full power.
pub fn allocate_mpa(targets: &RateTargets, csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> Result<PairDecision> {
    let bounds = match MpaBounds::compute(targets, csi1, csi2, phase) {
        Ok(b) => b,
        Err(Error::Degenerate(_)) => return Ok(PairDecision::oma(csi1, csi2, phase)),
        Err(e) => return Err(e),
    };
    if !bounds.noma_feasible(phase) {
        return Ok(PairDecision::oma(csi1, csi2, phase));
    }
    let alpha2 = bounds.alpha2_ub.clamp(0.0, 1.0);
    PairDecision::noma(1.0, alpha2, csi1, csi2, phase)
}

/// Stationary points of the linearized MPA program
/// `max α₁Γ₁ + α₂Γ₂` s.t. `α₁ ≥ η + κα₂`, `α₂ ≥ α₂^lb`, `α₁, α₂ ≤ 1`,
/// kept only where they satisfy all four constraints.
pub fn kkt_candidates(eta: f64, kappa: f64, alpha2_lb: f64) -> Vec<(f64, f64)> {
    let raw = [
        (alpha2_lb * kappa + eta, alpha2_lb),
        (kappa + eta, 1.0),
        (1.0, 1.0),
        (1.0, alpha2_lb),
        (1.0, (1.0 - eta) / kappa),
    ];
    raw.into_iter()
        .filter(|&(a1, a2)| {
            a1.is_finite()
                && a2.is_finite()
                && -a1 + a2 * kappa + eta <= FEASIBILITY_EPS
                && alpha2_lb - a2 <= FEASIBILITY_EPS
                && a1 - 1.0 <= FEASIBILITY_EPS
                && a2 - 1.0 <= FEASIBILITY_EPS
                && a1 >= -FEASIBILITY_EPS
                && a2 >= -FEASIBILITY_EPS
        })
        .collect()
}

/// Candidate maximizing `α₁Γ₁ + α₂Γ₂`; ties go to the lower total power.
pub fn best_kkt_candidate(candidates: &[(f64, f64)], csi1: EffectiveCsi, csi2: EffectiveCsi) -> Option<(f64, f64)> {
    let objective = |(a1, a2): (f64, f64)| a1 * csi1.gamma() + a2 * csi2.gamma();
    candidates.iter().copied().reduce(|best, c| {
        let (ob, oc) = (objective(best), objective(c));
        if oc > ob || (oc == ob && c.0 + c.1 < best.0 + best.1) {
            c
        } else {
            best
        }
    })
}
