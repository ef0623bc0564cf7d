//! Energy-efficiency pairing (EEPA).
//!
//! EEPA keeps MPA's rate floors but maximizes
//! `EE = log₂(1 + (α₁Γ₁ + α₂Γ₂) sinc²δ) / (α₁ + α₂)`,
//! a concave-over-linear ratio solved with Dinkelbach's method. Each
//! Dinkelbach step maximizes the concave `f − λg` over the allocation
//! polygon; since `∇f ∥ (Γ₁, Γ₂)` while `∇g = (1, 1)`, that maximum sits on
//! the boundary, so the subproblem is a golden-section search per edge.

use crate::channel::{EffectiveCsi, PhaseModel};
use crate::error::{Error, Result};
use crate::mpa::{MpaBounds, PairDecision, RateTargets, FEASIBILITY_EPS};
use crate::polytope::Polytope;
use crate::search::{delta_for_sinc_sq, golden_section_max, GOLDEN_TOL};

pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_ITER: usize = 100;

/// Which feasibility test gates NOMA.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EepaFeasibility {
    /// Threshold pair derived with the weak user at full power.
    #[default]
    WorstCase,
    /// Non-emptiness of the actual allocation polygon.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EepaOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub feasibility: EepaFeasibility,
}

impl Default for EepaOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            feasibility: EepaFeasibility::WorstCase,
        }
    }
}

/// Worst-case EEPA pairing criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EepaCriterion {
    /// From `κ + η ≤ 1`: `1 / (Γ₁/(2^{R̄₁} − 1) − Γ₂)`, `+∞` when the
    /// denominator is not positive.
    pub sinc_sq_threshold_1: f64,
    /// From `α₂^lb ≤ 1`: `(2^{R̄₂} − 1) / Γ₂`.
    pub sinc_sq_threshold_2: f64,
    /// `min(δ^ub1, δ^ub2)`; `None` when no or every `δ` qualifies.
    pub delta_ub: Option<f64>,
    /// Criterion evaluated at the phase it was built for.
    pub feasible: bool,
}

impl EepaCriterion {
    pub fn threshold(&self) -> f64 {
        self.sinc_sq_threshold_1.max(self.sinc_sq_threshold_2)
    }

    pub fn feasible_at(&self, phase: &PhaseModel) -> bool {
        phase.degradation() >= self.threshold()
    }
}

pub fn pairing_criterion_eepa(
    targets: &RateTargets,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
) -> EepaCriterion {
    let need1 = targets.r1_min.exp2() - 1.0;
    let need2 = targets.r2_min.exp2() - 1.0;
    let (g1, g2) = (csi1.gamma(), csi2.gamma());

    let t1 = if need1 == 0.0 {
        0.0
    } else {
        let denom = g1 / need1 - g2;
        if denom > 0.0 {
            1.0 / denom
        } else {
            f64::INFINITY
        }
    };
    let t2 = if need2 == 0.0 {
        0.0
    } else if g2 == 0.0 {
        f64::INFINITY
    } else {
        need2 / g2
    };
    let threshold = t1.max(t2);
    EepaCriterion {
        sinc_sq_threshold_1: t1,
        sinc_sq_threshold_2: t2,
        delta_ub: delta_for_sinc_sq(threshold),
        feasible: phase.degradation() >= threshold,
    }
}

/// Dinkelbach optimum of the EE program.
#[derive(Debug, Clone, PartialEq)]
pub struct DinkelbachResult {
    pub alpha1: f64,
    pub alpha2: f64,
    /// `EE(α₁, α₂)`.
    pub lambda_star: f64,
    pub iterations: usize,
    /// `|F(λ)|` at termination.
    pub residual: f64,
    /// `(λ_t, F(λ_t))` per iteration.
    pub history: Vec<(f64, f64)>,
}

/// Numerator and denominator of the EE ratio.
#[derive(Debug, Clone, Copy)]
struct Ratio {
    g1: f64,
    g2: f64,
}

impl Ratio {
    fn new(csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> Self {
        let s = phase.degradation();
        Self {
            g1: csi1.gamma() * s,
            g2: csi2.gamma() * s,
        }
    }

    #[inline]
    fn rate(&self, p: [f64; 2]) -> f64 {
        (p[0] * self.g1 + p[1] * self.g2).ln_1p() / std::f64::consts::LN_2
    }

    #[inline]
    fn power(p: [f64; 2]) -> f64 {
        p[0] + p[1]
    }

    fn efficiency(&self, p: [f64; 2]) -> f64 {
        let g = Self::power(p);
        if g > 0.0 {
            self.rate(p) / g
        } else {
            0.0
        }
    }
}

/// Maximizes `log₂(1 + (α₁Γ₁ + α₂Γ₂) sinc²δ) − λ(α₁ + α₂)` over `polytope`
/// by checking every vertex and golden-section searching every edge.
pub fn inner_maximize(
    lambda: f64,
    polytope: &Polytope,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
) -> Result<(f64, f64)> {
    let ratio = Ratio::new(csi1, csi2, phase);
    let p = maximize_parametric(lambda, polytope, &ratio)?;
    Ok((p[0], p[1]))
}

fn maximize_parametric(lambda: f64, polytope: &Polytope, ratio: &Ratio) -> Result<[f64; 2]> {
    if polytope.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let objective = |p: [f64; 2]| ratio.rate(p) - lambda * Ratio::power(p);

    let mut best = polytope.vertices()[0];
    let mut best_val = objective(best);
    for &v in &polytope.vertices()[1..] {
        let val = objective(v);
        if val > best_val {
            best = v;
            best_val = val;
        }
    }
    for (a, b) in polytope.edges() {
        let d = [b[0] - a[0], b[1] - a[1]];
        if d[0].abs() < 1e-15 && d[1].abs() < 1e-15 {
            continue;
        }
        let at = |t: f64| [a[0] + t * d[0], a[1] + t * d[1]];
        let (t, val) = golden_section_max(|t| objective(at(t)), GOLDEN_TOL);
        if val > best_val {
            best = at(t);
            best_val = val;
        }
    }
    Ok([best[0].clamp(0.0, 1.0), best[1].clamp(0.0, 1.0)])
}

/// Dinkelbach's method on the allocation polygon of `targets`.
///
/// Starts from the EE of the minimal-power vertex
/// `(η + κα₂^lb, α₂^lb)` and stops once `F(λ) = max f − λg ≤ tol`.
pub fn dinkelbach_allocate(
    targets: &RateTargets,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
    tol: f64,
    max_iter: usize,
) -> Result<DinkelbachResult> {
    let bounds = MpaBounds::compute(targets, csi1, csi2, phase)?;
    let polytope = Polytope::allocation(bounds.eta, bounds.kappa, bounds.alpha2_lb);
    if polytope.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let ratio = Ratio::new(csi1, csi2, phase);

    let start = [
        (bounds.eta + bounds.kappa * bounds.alpha2_lb).clamp(0.0, 1.0),
        bounds.alpha2_lb.clamp(0.0, 1.0),
    ];
    let mut lambda = ratio.efficiency(start);
    let mut history = Vec::new();
    let mut residual = f64::INFINITY;

    for iteration in 1..=max_iter {
        let p = maximize_parametric(lambda, &polytope, &ratio)?;
        let f_lambda = ratio.rate(p) - lambda * Ratio::power(p);
        history.push((lambda, f_lambda));
        residual = f_lambda.abs();
        if f_lambda <= tol {
            let lambda_star = if Ratio::power(p) > 0.0 { ratio.efficiency(p) } else { lambda };
            return Ok(DinkelbachResult {
                alpha1: p[0],
                alpha2: p[1],
                lambda_star,
                iterations: iteration,
                residual,
                history,
            });
        }
        lambda = ratio.efficiency(p);
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        residual,
    })
}

/// EEPA allocation: Dinkelbach optimum when the criterion admits NOMA,
/// otherwise OMA.
pub fn allocate_eepa(
    targets: &RateTargets,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
    options: &EepaOptions,
) -> Result<PairDecision> {
    let admitted = match options.feasibility {
        EepaFeasibility::WorstCase => pairing_criterion_eepa(targets, csi1, csi2, phase).feasible,
        EepaFeasibility::Exact => match MpaBounds::compute(targets, csi1, csi2, phase) {
            Ok(b) => !Polytope::allocation(b.eta, b.kappa, b.alpha2_lb).is_empty(),
            Err(_) => false,
        },
    };
    if !admitted {
        return Ok(PairDecision::oma(csi1, csi2, phase));
    }
    let sol = match dinkelbach_allocate(targets, csi1, csi2, phase, options.tol, options.max_iter) {
        Ok(sol) => sol,
        Err(Error::Degenerate(_)) => return Ok(PairDecision::oma(csi1, csi2, phase)),
        Err(e) => return Err(e),
    };
    PairDecision::noma(sol.alpha1, sol.alpha2, csi1, csi2, phase)
}

/// Residual check that a point meets both rate floors and the box.
pub fn satisfies_constraints(
    alpha1: f64,
    alpha2: f64,
    targets: &RateTargets,
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    phase: &PhaseModel,
) -> bool {
    let in_box = (-FEASIBILITY_EPS..=1.0 + FEASIBILITY_EPS).contains(&alpha1)
        && (-FEASIBILITY_EPS..=1.0 + FEASIBILITY_EPS).contains(&alpha2);
    in_box
        && crate::channel::rate_noma(alpha1.clamp(0.0, 1.0), alpha2.clamp(0.0, 1.0), csi1, csi2, phase)
            .map(|r| r.strong >= targets.r1_min - FEASIBILITY_EPS && r.weak >= targets.r2_min - FEASIBILITY_EPS)
            .unwrap_or(false)
}
