use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use super::{ExperimentConfig, Format, Kind, Table};
use crate::channel::{self, phase_error_gain_mc, sinc_sq, EffectiveCsi, PhaseModel};
use crate::error::{Error, Result};
use crate::mpa::{allocate_mpa, pairing_criterion_mpa, MpaBounds, Mode, RateTargets};
use crate::pairing::{run_scheme_with, UserRecord};
use crate::syslevel::{drop_seed, run_campaign};

fn phase_deg(d: f64) -> Result<PhaseModel> {
    PhaseModel::from_degrees(d).map_err(|_| Error::Config(format!("delta {d} deg is outside [0, 180)")))
}

fn pair_csi(cfg: &ExperimentConfig) -> Result<(EffectiveCsi, EffectiveCsi)> {
    match cfg.gammas_db[..] {
        [g1, g2] => Ok((EffectiveCsi::from_db(g1)?, EffectiveCsi::from_db(g2)?)),
        _ => Err(Error::Config("gammas_db: exactly two values required".into())),
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Noma => "noma",
        Mode::Oma => "oma",
    }
}

/// `δ^ub` in degrees: `inf` when every bound qualifies, NaN when none does.
fn delta_ub_deg(delta_ub: Option<f64>, threshold: f64) -> f64 {
    match delta_ub {
        Some(d) => d.to_degrees(),
        None if threshold <= 0.0 => f64::INFINITY,
        None => f64::NAN,
    }
}

/// Rates of the pair along `α₂ ∈ [0, 1]` with `α₁ = 1`, plus rows at the
/// `α₂^lb` / `α₂^ub` markers whenever they fall inside the interval.
pub fn cmd_sweep_alpha2(cfg: &ExperimentConfig) -> Result<Table> {
    let (c1, c2) = pair_csi(cfg)?;
    let policy = cfg.targets.policy();
    let mut t = Table::new(&[
        "delta_deg",
        "point",
        "alpha2",
        "r1",
        "r2",
        "asr",
        "r1_oma",
        "r2_oma",
        "asr_oma",
        "r1_target",
        "r2_target",
        "alpha2_lb",
        "alpha2_ub",
    ]);
    let n = cfg.alpha2_points;
    for &d in &cfg.delta_deg {
        let phase = phase_deg(d)?;
        let targets = RateTargets::for_pair(policy, c1, c2, &phase)?;
        let (lb, ub) = match MpaBounds::compute(&targets, c1, c2, &phase) {
            Ok(b) => (b.alpha2_lb, b.alpha2_ub),
            Err(_) => (f64::NAN, f64::NAN),
        };
        let oma = channel::rates_oma(c1, c2, &phase);

        let mut points: Vec<(f64, &str)> = (0..n).map(|k| (k as f64 / (n - 1) as f64, "grid")).collect();
        for (a, label) in [(lb, "lb"), (ub, "ub")] {
            if (0.0..=1.0).contains(&a) {
                points.push((a, label));
            }
        }
        points.sort_by(|x, y| x.0.total_cmp(&y.0));

        for (a2, label) in points {
            let r = channel::rate_noma(1.0, a2, c1, c2, &phase)?;
            t.push(vec![
                d.into(),
                label.into(),
                a2.into(),
                r.strong.into(),
                r.weak.into(),
                channel::asr(&r).into(),
                oma.strong.into(),
                oma.weak.into(),
                channel::asr(&oma).into(),
                targets.r1_min.into(),
                targets.r2_min.into(),
                lb.into(),
                ub.into(),
            ]);
        }
    }
    Ok(t)
}

/// MPA decision of one pair along the `δ` grid next to its OMA rates.
pub fn cmd_sweep_delta(cfg: &ExperimentConfig) -> Result<Table> {
    let (c1, c2) = pair_csi(cfg)?;
    let policy = cfg.targets.policy();
    let mut t = Table::new(&[
        "delta_deg",
        "mode",
        "alpha1",
        "alpha2",
        "r1",
        "r2",
        "asr",
        "ee",
        "r1_oma",
        "r2_oma",
        "asr_oma",
        "delta_ub_deg",
    ]);
    for &d in &cfg.delta_deg {
        let phase = phase_deg(d)?;
        let targets = RateTargets::for_pair(policy, c1, c2, &phase)?;
        let crit = pairing_criterion_mpa(&targets, c1, &phase);
        let dec = allocate_mpa(&targets, c1, c2, &phase)?;
        let oma = channel::rates_oma(c1, c2, &phase);
        t.push(vec![
            d.into(),
            mode_name(dec.mode).into(),
            dec.alpha1.into(),
            dec.alpha2.into(),
            dec.rates.strong.into(),
            dec.rates.weak.into(),
            dec.asr.into(),
            dec.ee.into(),
            oma.strong.into(),
            oma.weak.into(),
            channel::asr(&oma).into(),
            delta_ub_deg(crit.delta_ub, crit.sinc_sq_threshold).into(),
        ]);
    }
    Ok(t)
}

/// Every scheme's decisions on the `gammas_db` population along the grid.
pub fn cmd_pair_study(cfg: &ExperimentConfig) -> Result<Table> {
    let users = cfg
        .gammas_db
        .iter()
        .enumerate()
        .map(|(i, &g)| {
            Ok(UserRecord {
                id: i as u64,
                csi: EffectiveCsi::from_db(g)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let policy = cfg.targets.policy();
    let eepa = cfg.eepa.options();
    let mut t = Table::new(&[
        "delta_deg",
        "scheme",
        "strong_id",
        "weak_id",
        "gamma1_db",
        "gamma2_db",
        "mode",
        "alpha1",
        "alpha2",
        "r1",
        "r2",
        "asr",
        "ee",
    ]);
    for &d in &cfg.delta_deg {
        let phase = phase_deg(d)?;
        for &scheme in &cfg.schemes {
            let plan = run_scheme_with(&users, scheme, &phase, policy, &eepa)?;
            for dec in &plan.decisions {
                t.push(vec![
                    d.into(),
                    scheme.name().into(),
                    dec.strong_id.into(),
                    dec.weak_id.into(),
                    cfg.gammas_db[dec.strong_id as usize].into(),
                    cfg.gammas_db[dec.weak_id as usize].into(),
                    mode_name(dec.mode).into(),
                    dec.alpha1.into(),
                    dec.alpha2.into(),
                    dec.rates.strong.into(),
                    dec.rates.weak.into(),
                    dec.asr.into(),
                    dec.ee.into(),
                ]);
            }
        }
    }
    Ok(t)
}

/// Monte-Carlo campaign: mean curves per scheme and `δ`, and the ASR CDF
/// at `cdf_delta_deg`.
pub fn cmd_syslevel(cfg: &ExperimentConfig) -> Result<(Table, Table)> {
    let metrics = run_campaign(&cfg.campaign()?)?;
    let mut means = Table::new(&[
        "delta_deg",
        "scheme",
        "pairs",
        "noma_pairs",
        "mean_r1",
        "se_r1",
        "mean_r2",
        "se_r2",
        "mean_asr",
        "se_asr",
        "mean_ee",
        "se_ee",
    ]);
    for (row, d) in metrics.rows.iter().zip(cfg.delta_deg.iter().flat_map(|d| std::iter::repeat_n(*d, cfg.schemes.len()))) {
        means.push(vec![
            d.into(),
            row.scheme.name().into(),
            row.pairs.into(),
            row.noma_pairs.into(),
            row.r1.mean.into(),
            row.r1.std_err.into(),
            row.r2.mean.into(),
            row.r2.std_err.into(),
            row.asr.mean.into(),
            row.asr.std_err.into(),
            row.ee.mean.into(),
            row.ee.std_err.into(),
        ]);
    }
    let mut cdf = Table::new(&["scheme", "delta_deg", "asr", "cdf"]);
    for &scheme in &cfg.schemes {
        for (x, f) in metrics.cdf_points(scheme, cfg.cdf_points) {
            cdf.push(vec![scheme.name().into(), cfg.cdf_delta_deg.into(), x.into(), f.into()]);
        }
    }
    Ok((means, cdf))
}

/// Monte-Carlo phase-error gain against `sinc²(δ)` per array size.
pub fn cmd_validate_approx(cfg: &ExperimentConfig) -> Result<Table> {
    let mut t = Table::new(&["elements", "delta_deg", "trials", "mc", "sinc_sq", "finite_n_mean", "rel_error"]);
    let mut index = 0;
    for &n in &cfg.elements {
        for &d in &cfg.delta_deg {
            let phase = phase_deg(d)?;
            let s = sinc_sq(phase.delta())?;
            let mc = phase_error_gain_mc(n, phase.delta(), cfg.trials, drop_seed(cfg.seed, index))?;
            index += 1;
            t.push(vec![
                n.into(),
                d.into(),
                cfg.trials.into(),
                mc.into(),
                s.into(),
                (s + (1.0 - s) / n as f64).into(),
                ((mc - s).abs() / s).into(),
            ]);
        }
    }
    Ok(t)
}

/// Tables produced by one experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub main: Table,
    /// Secondary table (the syslevel CDF), written next to the main file.
    pub cdf: Option<Table>,
}

/// Dispatches on `cfg.kind`.
pub fn run(cfg: &ExperimentConfig) -> Result<Output> {
    let main = match cfg.kind {
        Kind::SweepAlpha2 => cmd_sweep_alpha2(cfg)?,
        Kind::SweepDelta => cmd_sweep_delta(cfg)?,
        Kind::PairStudy => cmd_pair_study(cfg)?,
        Kind::ValidateApprox => cmd_validate_approx(cfg)?,
        Kind::Syslevel => {
            let (main, cdf) = cmd_syslevel(cfg)?;
            return Ok(Output { main, cdf: Some(cdf) });
        }
    };
    Ok(Output { main, cdf: None })
}

/// `results.csv` → `results.cdf.csv`.
pub fn cdf_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match out.extension() {
        Some(ext) => format!("{stem}.cdf.{}", ext.to_string_lossy()),
        None => format!("{stem}.cdf"),
    };
    out.with_file_name(name)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

impl ExperimentConfig {
    /// Metadata embedded in every table. `timestamp` goes last and only
    /// into CSV, on its own comment line.
    pub fn metadata(&self) -> Vec<(&'static str, String)> {
        vec![
            ("experiment", self.kind.name().to_owned()),
            ("seed", self.seed.to_string()),
            ("config_hash", self.hash()),
        ]
    }

    /// Opens the outputs up front (so an unwritable path fails before any
    /// work), runs the experiment and writes its tables.
    pub fn execute(&self) -> Result<Output> {
        let mut files = match &self.out {
            Some(p) => {
                let main = create(p)?;
                let cdf = if self.kind == Kind::Syslevel { Some(create(&cdf_path(p))?) } else { None };
                Some((main, cdf))
            }
            None => None,
        };
        let output = run(self)?;
        match &mut files {
            Some((main, cdf)) => {
                self.write_table(&output.main, main)?;
                if let (Some(w), Some(t)) = (cdf, &output.cdf) {
                    self.write_table(t, w)?;
                }
            }
            None => {
                let stdout = io::stdout();
                let mut lock = stdout.lock();
                self.write_table(&output.main, &mut lock)?;
            }
        }
        Ok(output)
    }

    pub fn write_table<W: Write>(&self, table: &Table, out: &mut W) -> Result<()> {
        let mut meta = self.metadata();
        match self.format {
            Format::Csv => {
                let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
                meta.push(("timestamp", secs.to_string()));
                table.write_csv(out, &meta)?;
            }
            Format::Json => table.write_json(out, &meta)?,
        }
        out.flush()?;
        Ok(())
    }
}

/// Process exit status for a failed run: 3 for numerical failures, 1 for
/// I/O, 2 for everything caused by the configuration.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_numerical() {
        3
    } else if matches!(err, Error::Io(_)) {
        1
    } else {
        2
    }
}
