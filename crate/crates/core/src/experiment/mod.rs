//! Declarative experiment descriptions and the runners behind `risnoma`.
//!
//! A configuration is a TOML document; every field has a default, so an
//! empty file is valid. Angles are degrees here and radians everywhere
//! else in the crate.
//!
//! ```
//! use ris_noma::experiment::{ExperimentConfig, Kind};
//!
//! let cfg = ExperimentConfig::from_toml_str("kind = \"sweep-alpha2\"\ngammas_db = [8.0, 2.0]\n").unwrap();
//! assert_eq!(cfg.kind, Kind::SweepAlpha2);
//! assert_eq!(cfg.delta_deg, vec![0.0, 11.0]);
//! assert_eq!(ExperimentConfig::from_toml_str(&cfg.to_toml()).unwrap(), cfg);
//! ```

mod runners;
mod table;

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::eepa::{EepaFeasibility, EepaOptions};
use crate::error::{Error, Result};
use crate::mpa::TargetPolicy;
use crate::pairing::Scheme;
use crate::syslevel::{CampaignConfig, DeploymentConfig, RadioConfig};

pub use runners::{
    cdf_path, cmd_pair_study, cmd_sweep_alpha2, cmd_sweep_delta, cmd_syslevel, cmd_validate_approx, exit_code, run, Output,
};
pub use table::{Table, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    #[default]
    SweepAlpha2,
    SweepDelta,
    PairStudy,
    Syslevel,
    ValidateApprox,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::SweepAlpha2 => "sweep-alpha2",
            Kind::SweepDelta => "sweep-delta",
            Kind::PairStudy => "pair-study",
            Kind::Syslevel => "syslevel",
            Kind::ValidateApprox => "validate-approx",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown format `{other}` (expected csv or json)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolicyName {
    /// OMA rates at `reference_delta_deg`.
    #[default]
    OmaRef,
    /// OMA rates at the operating bound.
    OmaCurrent,
    /// Fixed `strong` / `weak` rates.
    Explicit,
}

impl std::str::FromStr for PolicyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "oma-ref" => Ok(PolicyName::OmaRef),
            "oma-current" => Ok(PolicyName::OmaCurrent),
            "explicit" => Ok(PolicyName::Explicit),
            other => Err(Error::Config(format!(
                "unknown targets policy `{other}` (expected oma-ref, oma-current or explicit)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TargetsConfig {
    pub policy: PolicyName,
    pub reference_delta_deg: f64,
    /// Explicit targets, bits/s/Hz.
    pub strong: f64,
    pub weak: f64,
}

impl Default for TargetsConfig {
    fn default() -> Self {
        Self {
            policy: PolicyName::OmaRef,
            reference_delta_deg: 0.0,
            strong: 1.0,
            weak: 0.5,
        }
    }
}

impl TargetsConfig {
    pub fn policy(&self) -> TargetPolicy {
        match self.policy {
            PolicyName::OmaRef => TargetPolicy::OmaAtReferenceDelta {
                delta_ref: self.reference_delta_deg.to_radians(),
            },
            PolicyName::OmaCurrent => TargetPolicy::OmaAtCurrentDelta,
            PolicyName::Explicit => TargetPolicy::Explicit {
                strong: self.strong,
                weak: self.weak,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EepaConfig {
    pub tol: f64,
    pub max_iter: usize,
    pub feasibility: EepaFeasibility,
}

impl Default for EepaConfig {
    fn default() -> Self {
        let o = EepaOptions::default();
        Self {
            tol: o.tol,
            max_iter: o.max_iter,
            feasibility: o.feasibility,
        }
    }
}

impl EepaConfig {
    pub fn options(&self) -> EepaOptions {
        EepaOptions {
            tol: self.tol,
            max_iter: self.max_iter,
            feasibility: self.feasibility,
        }
    }
}

/// Fully resolved experiment description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub kind: Kind,
    pub seed: u64,
    pub format: Format,
    /// Standard output when absent.
    pub out: Option<PathBuf>,
    /// Effective CSI values, dB. Two values (strong first) for the pair
    /// sweeps; any population of at least two for `pair-study`.
    pub gammas_db: Vec<f64>,
    /// Phase-error bounds, degrees, sorted ascending. Empty means the
    /// default grid of `kind`.
    pub delta_deg: Vec<f64>,
    /// Points of the `α₂` grid in `sweep-alpha2`.
    pub alpha2_points: usize,
    pub schemes: Vec<Scheme>,
    /// Bound at which the syslevel ASR CDF is collected; must be on the grid.
    pub cdf_delta_deg: f64,
    /// CDF rows per scheme.
    pub cdf_points: usize,
    /// Array sizes for `validate-approx`.
    pub elements: Vec<usize>,
    /// Monte-Carlo trials per `validate-approx` point.
    pub trials: usize,
    pub targets: TargetsConfig,
    pub eepa: EepaConfig,
    pub deployment: DeploymentConfig,
    pub radio: RadioConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            kind: Kind::default(),
            seed: 1,
            format: Format::Csv,
            out: None,
            gammas_db: vec![8.0, 5.0],
            delta_deg: Vec::new(),
            alpha2_points: 101,
            schemes: Scheme::ALL.to_vec(),
            cdf_delta_deg: 0.0,
            cdf_points: 200,
            elements: vec![4, 16, 64, 256, 1024],
            trials: 10_000,
            targets: TargetsConfig::default(),
            eepa: EepaConfig::default(),
            deployment: DeploymentConfig::default(),
            radio: RadioConfig::default(),
        }
    }
}

/// Default `δ` grid (degrees) of each experiment kind.
pub fn default_delta_grid(kind: Kind) -> Vec<f64> {
    match kind {
        Kind::SweepAlpha2 => vec![0.0, 11.0],
        Kind::SweepDelta | Kind::PairStudy => (0..=179).map(f64::from).collect(),
        Kind::Syslevel => (0..=17).map(|k| 10.0 * k as f64).collect(),
        Kind::ValidateApprox => vec![0.0, 5.0, 10.0, 30.0, 60.0, 90.0, 120.0],
    }
}

/// Command-line overrides; `None` leaves the file value in place.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub kind: Option<Kind>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub drops: Option<usize>,
    pub delta_deg: Option<Vec<f64>>,
    pub gammas_db: Option<Vec<f64>>,
    pub schemes: Option<Vec<Scheme>>,
    pub targets_policy: Option<PolicyName>,
}

impl ExperimentConfig {
    /// Parses and resolves a TOML document.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let mut cfg: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.resolve();
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Loads `path` (or the defaults), applies `overrides`, resolves and
    /// validates.
    pub fn load(path: Option<&Path>, overrides: &Overrides) -> Result<Self> {
        let mut cfg = match path {
            Some(p) => Self::from_file(p)?,
            None => Self::default(),
        };
        cfg.apply(overrides);
        cfg.resolve();
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn apply(&mut self, o: &Overrides) {
        if let Some(kind) = o.kind {
            if kind != self.kind && o.delta_deg.is_none() {
                // The file's grid was chosen for its own kind.
                self.delta_deg.clear();
            }
            self.kind = kind;
        }
        if let Some(out) = &o.out {
            self.out = Some(out.clone());
        }
        if let Some(f) = o.format {
            self.format = f;
        }
        if let Some(s) = o.seed {
            self.seed = s;
        }
        if let Some(d) = o.drops {
            self.deployment.drops = d;
        }
        if let Some(d) = &o.delta_deg {
            self.delta_deg = d.clone();
        }
        if let Some(g) = &o.gammas_db {
            self.gammas_db = g.clone();
        }
        if let Some(s) = &o.schemes {
            self.schemes = s.clone();
        }
        if let Some(p) = o.targets_policy {
            self.targets.policy = p;
        }
    }

    /// Fills kind-dependent defaults.
    pub fn resolve(&mut self) {
        self.deployment.seed = self.seed;
        if self.delta_deg.is_empty() {
            self.delta_deg = default_delta_grid(self.kind);
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.delta_deg.is_empty() {
            return bad("delta_deg: grid is empty".into());
        }
        for (i, &d) in self.delta_deg.iter().enumerate() {
            if !(0.0..180.0).contains(&d) {
                return bad(format!("delta_deg[{i}] = {d}: must lie in [0, 180)"));
            }
        }
        if self.delta_deg.windows(2).any(|w| w[0] >= w[1]) {
            return bad("delta_deg: grid must be strictly increasing".into());
        }
        for (i, &g) in self.gammas_db.iter().enumerate() {
            if !g.is_finite() {
                return bad(format!("gammas_db[{i}]: must be finite"));
            }
        }
        if !(0.0..180.0).contains(&self.targets.reference_delta_deg) {
            return bad("targets.reference_delta_deg: must lie in [0, 180)".into());
        }
        if self.targets.policy == PolicyName::Explicit {
            for (name, v) in [("strong", self.targets.strong), ("weak", self.targets.weak)] {
                if !(v >= 0.0 && v.is_finite()) {
                    return bad(format!("targets.{name} = {v}: must be a finite rate >= 0"));
                }
            }
        }
        if !(self.eepa.tol.is_finite() && self.eepa.max_iter > 0) {
            return bad("eepa: tol must be finite and max_iter >= 1".into());
        }
        match self.kind {
            Kind::SweepAlpha2 | Kind::SweepDelta => {
                if self.gammas_db.len() != 2 {
                    return bad(format!(
                        "gammas_db: {} needs exactly two values (strong, weak), got {}",
                        self.kind.name(),
                        self.gammas_db.len()
                    ));
                }
                if self.gammas_db[0] < self.gammas_db[1] {
                    return bad("gammas_db: the strong user must come first".into());
                }
                if self.kind == Kind::SweepAlpha2 && self.alpha2_points < 2 {
                    return bad("alpha2_points: need at least 2".into());
                }
            }
            Kind::PairStudy => {
                if self.gammas_db.len() < 2 {
                    return bad("gammas_db: pair-study needs at least two users".into());
                }
                if self.schemes.is_empty() {
                    return bad("schemes: list is empty".into());
                }
            }
            Kind::Syslevel => {
                if self.schemes.is_empty() {
                    return bad("schemes: list is empty".into());
                }
                self.campaign()?.validate()?;
            }
            Kind::ValidateApprox => {
                if self.elements.is_empty() || self.elements.contains(&0) {
                    return bad("elements: need a non-empty list of positive sizes".into());
                }
                if self.trials == 0 {
                    return bad("trials: must be >= 1".into());
                }
            }
        }
        Ok(())
    }

    /// Campaign description of a syslevel run.
    pub fn campaign(&self) -> Result<CampaignConfig> {
        let cdf_index = self
            .delta_deg
            .iter()
            .position(|&d| d == self.cdf_delta_deg)
            .ok_or_else(|| Error::Config(format!("cdf_delta_deg = {}: not on the delta_deg grid", self.cdf_delta_deg)))?;
        let mut c = CampaignConfig::new(
            self.deployment.clone(),
            self.radio.clone(),
            self.schemes.clone(),
            self.delta_deg.iter().map(|d| d.to_radians()).collect(),
        );
        c.policy = self.targets.policy();
        c.eepa = self.eepa.options();
        c.cdf_index = cdf_index;
        Ok(c)
    }

    /// Resolved configuration as TOML; parsing it yields `self` again.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("experiment config is always representable")
    }

    /// SHA-256 of the resolved TOML echo, hex. The output location is
    /// not part of the experiment and is left out.
    pub fn hash(&self) -> String {
        let echo = Self { out: None, ..self.clone() }.to_toml();
        Sha256::digest(echo.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_default() {
        let cfg = ExperimentConfig::from_toml_str("").unwrap();
        let mut expected = ExperimentConfig::default();
        expected.resolve();
        assert_eq!(cfg, expected);
        cfg.validate().unwrap();
    }

    #[test]
    fn echo_round_trips() {
        let mut cfg = ExperimentConfig {
            kind: Kind::Syslevel,
            out: Some("x/y.csv".into()),
            ..Default::default()
        };
        cfg.targets.policy = PolicyName::Explicit;
        cfg.radio.transmit_power_dbm = 20.5;
        cfg.resolve();
        let back = ExperimentConfig::from_toml_str(&cfg.to_toml()).unwrap();
        assert_eq!(back, cfg);
        assert_eq!(back.hash(), cfg.hash());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = ExperimentConfig::from_toml_str("kind = \"sweep-delta\"\nbogus = 1\n").unwrap_err();
        assert!(matches!(err, Error::Config(ref m) if m.contains("bogus")), "{err}");
        assert!(ExperimentConfig::from_toml_str("[radio]\nbs_antenas = 4\n").is_err());
    }

    #[test]
    fn validation_messages_name_the_field() {
        let mut cfg = ExperimentConfig::default();
        cfg.resolve();
        cfg.delta_deg = vec![0.0, 200.0];
        assert!(cfg.validate().unwrap_err().to_string().contains("delta_deg[1]"));
        cfg.delta_deg = vec![10.0, 5.0];
        assert!(cfg.validate().is_err());
        cfg.delta_deg = vec![0.0];
        cfg.gammas_db = vec![5.0, 8.0];
        assert!(cfg.validate().unwrap_err().to_string().contains("strong"));
        cfg.kind = Kind::Syslevel;
        cfg.schemes.clear();
        assert!(cfg.validate().unwrap_err().to_string().contains("schemes"));
    }

    #[test]
    fn overrides_win() {
        let o = Overrides {
            kind: Some(Kind::SweepDelta),
            seed: Some(7),
            drops: Some(3),
            gammas_db: Some(vec![8.0, 2.0]),
            targets_policy: Some(PolicyName::OmaCurrent),
            ..Default::default()
        };
        let cfg = ExperimentConfig::load(None, &o).unwrap();
        assert_eq!(cfg.kind, Kind::SweepDelta);
        assert_eq!((cfg.seed, cfg.deployment.seed, cfg.deployment.drops), (7, 7, 3));
        assert_eq!(cfg.delta_deg.len(), 180);
        assert_eq!(cfg.targets.policy(), TargetPolicy::OmaAtCurrentDelta);
    }
}
