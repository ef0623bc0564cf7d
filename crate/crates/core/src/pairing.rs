//! Cell-level pairing: sort users by effective CSI, pair the i-th strongest
//! with the i-th weakest, then allocate power per pair under a scheme.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channel::{EffectiveCsi, PhaseModel};
use crate::eepa::{allocate_eepa, EepaOptions};
use crate::error::{Error, Result};
use crate::mpa::{allocate_mpa, MpaBounds, PairDecision, RateTargets, TargetPolicy};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UserRecord {
    pub id: u64,
    pub csi: EffectiveCsi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Maximum sum rate with the phase-aware criterion.
    Mpa,
    /// Maximum energy efficiency with the phase-aware criterion.
    Eepa,
    /// Phase-oblivious sum-rate baseline: MPA's perfect-phase allocation,
    /// always NOMA.
    Srm,
    /// Every pair orthogonal.
    Oma,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [Scheme::Mpa, Scheme::Eepa, Scheme::Srm, Scheme::Oma];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Mpa => "mpa",
            Scheme::Eepa => "eepa",
            Scheme::Srm => "srm",
            Scheme::Oma => "oma",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mpa" => Ok(Scheme::Mpa),
            "eepa" => Ok(Scheme::Eepa),
            "srm" => Ok(Scheme::Srm),
            "oma" => Ok(Scheme::Oma),
            other => Err(Error::Config(format!("unknown scheme `{other}` (expected mpa, eepa, srm or oma)"))),
        }
    }
}

/// Users matched into (strong, weak) pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Pairing {
    pub pairs: Vec<(UserRecord, UserRecord)>,
    /// Median user when the population is odd.
    pub unpaired: Option<UserRecord>,
}

/// Sorts by `Γ` descending (ties by id) and pairs index `i` with `G − 1 − i`.
pub fn build_pairs(users: &[UserRecord]) -> Result<Pairing> {
    if users.len() < 2 {
        return Err(Error::TooFewUsers(users.len()));
    }
    let mut seen = HashSet::with_capacity(users.len());
    for u in users {
        if !seen.insert(u.id) {
            return Err(Error::DuplicateUser(u.id));
        }
    }
    let mut sorted = users.to_vec();
    sorted.sort_by(|a, b| b.csi.gamma().total_cmp(&a.csi.gamma()).then(a.id.cmp(&b.id)));

    let g = sorted.len();
    let pairs = (0..g / 2).map(|i| (sorted[i], sorted[g - 1 - i])).collect();
    let unpaired = (g % 2 == 1).then(|| sorted[g / 2]);
    Ok(Pairing { pairs, unpaired })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairingPlan {
    pub scheme: Scheme,
    pub decisions: Vec<PairDecision>,
    pub unpaired: Option<UserRecord>,
}

impl PairingPlan {
    pub fn sum_rate(&self) -> f64 {
        self.decisions.iter().map(|d| d.asr).sum()
    }
}

pub fn run_scheme(users: &[UserRecord], scheme: Scheme, phase: &PhaseModel, policy: TargetPolicy) -> Result<PairingPlan> {
    run_scheme_with(users, scheme, phase, policy, &EepaOptions::default())
}

pub fn run_scheme_with(
    users: &[UserRecord],
    scheme: Scheme,
    phase: &PhaseModel,
    policy: TargetPolicy,
    eepa: &EepaOptions,
) -> Result<PairingPlan> {
    if scheme == Scheme::Srm {
        return srm_baseline(users, phase);
    }
    let pairing = build_pairs(users)?;
    let decisions = pairing
        .pairs
        .iter()
        .map(|(strong, weak)| decide_pair(strong.csi, weak.csi, scheme, phase, policy, eepa).map(|d| d.with_ids(strong.id, weak.id)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PairingPlan {
        scheme,
        decisions,
        unpaired: pairing.unpaired,
    })
}

/// Allocation for a single (strong, weak) pair under `scheme`.
pub fn decide_pair(
    csi1: EffectiveCsi,
    csi2: EffectiveCsi,
    scheme: Scheme,
    phase: &PhaseModel,
    policy: TargetPolicy,
    eepa: &EepaOptions,
) -> Result<PairDecision> {
    match scheme {
        Scheme::Oma => Ok(PairDecision::oma(csi1, csi2, phase)),
        Scheme::Mpa => {
            let targets = RateTargets::for_pair(policy, csi1, csi2, phase)?;
            allocate_mpa(&targets, csi1, csi2, phase)
        }
        Scheme::Eepa => {
            let targets = RateTargets::for_pair(policy, csi1, csi2, phase)?;
            allocate_eepa(&targets, csi1, csi2, phase, eepa)
        }
        Scheme::Srm => srm_pair(csi1, csi2, phase),
    }
}

/// Fractions MPA would choose with perfect phase and perfect-phase OMA
/// targets, applied regardless of the actual `δ`.
fn srm_pair(csi1: EffectiveCsi, csi2: EffectiveCsi, phase: &PhaseModel) -> Result<PairDecision> {
    let perfect = PhaseModel::perfect();
    let targets = RateTargets::for_pair(TargetPolicy::default(), csi1, csi2, &perfect)?;
    let alpha2 = match MpaBounds::compute(&targets, csi1, csi2, &perfect) {
        Ok(b) => b.alpha2_ub.clamp(0.0, 1.0),
        Err(_) => 1.0,
    };
    PairDecision::noma(1.0, alpha2, csi1, csi2, phase)
}

/// Phase-oblivious sum-rate baseline over a population.
pub fn srm_baseline(users: &[UserRecord], phase: &PhaseModel) -> Result<PairingPlan> {
    let pairing = build_pairs(users)?;
    let decisions = pairing
        .pairs
        .iter()
        .map(|(strong, weak)| srm_pair(strong.csi, weak.csi, phase).map(|d| d.with_ids(strong.id, weak.id)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PairingPlan {
        scheme: Scheme::Srm,
        decisions,
        unpaired: pairing.unpaired,
    })
}
