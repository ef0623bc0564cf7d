//! Monte-Carlo system-level evaluation.
//!
//! Each drop places BSs and users as independent Poisson point processes
//! on a toroidal square window, attaches every user to the BS it receives
//! the most power from, and derives its effective CSI through a RIS placed
//! a fixed distance from the serving BS on the BS→user bearing. All other
//! BSs count as interferers. The users of each BS form one pairing
//! population; every scheme is run on every cell at every `δ` of the sweep.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{effective_csi, LinkBudget, PhaseModel};
use crate::eepa::EepaOptions;
use crate::error::{Error, Result};
use crate::mpa::{Mode, TargetPolicy};
use crate::pairing::{run_scheme_with, Scheme, UserRecord};
use crate::units::{dbm_to_watts, linear_to_db};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DeploymentConfig {
    /// BSs per km².
    pub bs_density: f64,
    /// Users per km².
    pub user_density: f64,
    /// Square window area in km², wrapped as a torus.
    pub area_km2: f64,
    /// Set from the experiment's top-level seed when run through a config.
    #[serde(skip)]
    pub seed: u64,
    pub drops: usize,
}

impl Default for DeploymentConfig {
    fn default() -> Self {
        Self {
            bs_density: 25.0,
            user_density: 2000.0,
            area_km2: 1.0,
            seed: 1,
            drops: 200,
        }
    }
}

impl DeploymentConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.bs_density > 0.0 && self.bs_density.is_finite()) {
            return Err(Error::Config(format!("deployment.bs_density must be > 0, got {}", self.bs_density)));
        }
        if !(self.user_density > 0.0 && self.user_density.is_finite()) {
            return Err(Error::Config(format!("deployment.user_density must be > 0, got {}", self.user_density)));
        }
        if !(self.area_km2 > 0.0 && self.area_km2.is_finite()) {
            return Err(Error::Config(format!("deployment.area_km2 must be > 0, got {}", self.area_km2)));
        }
        if self.drops == 0 {
            return Err(Error::Config("deployment.drops must be >= 1".into()));
        }
        Ok(())
    }

    pub fn window(&self) -> Window {
        Window::from_area_km2(self.area_km2)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RadioConfig {
    pub bs_antennas: usize,
    pub ris_elements: usize,
    pub transmit_power_dbm: f64,
    pub noise_power_dbm: f64,
    /// Path loss at 1 m, dB.
    pub pathloss_intercept_db: f64,
    pub pathloss_exponent: f64,
    /// RIS distance from its BS, metres.
    pub ris_offset_m: f64,
    /// Distances are clamped to at least this many metres.
    pub min_distance_m: f64,
}

impl Default for RadioConfig {
    fn default() -> Self {
        Self {
            bs_antennas: 8,
            ris_elements: 32,
            transmit_power_dbm: 23.0,
            noise_power_dbm: -94.0,
            pathloss_intercept_db: 32.4,
            pathloss_exponent: 3.0,
            ris_offset_m: 10.0,
            min_distance_m: 1.0,
        }
    }
}

impl RadioConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bs_antennas == 0 {
            return Err(Error::Config("radio.bs_antennas must be >= 1".into()));
        }
        if self.ris_elements == 0 {
            return Err(Error::Config("radio.ris_elements must be >= 1".into()));
        }
        if !(self.pathloss_exponent >= 2.0 && self.pathloss_exponent.is_finite()) {
            return Err(Error::Config(format!("radio.pathloss_exponent must be >= 2, got {}", self.pathloss_exponent)));
        }
        if self.min_distance_m.is_nan() || self.min_distance_m <= 0.0 {
            return Err(Error::Config("radio.min_distance_m must be > 0".into()));
        }
        if self.ris_offset_m.is_nan() || self.ris_offset_m < 0.0 {
            return Err(Error::Config("radio.ris_offset_m must be >= 0".into()));
        }
        for (name, v) in [
            ("transmit_power_dbm", self.transmit_power_dbm),
            ("noise_power_dbm", self.noise_power_dbm),
            ("pathloss_intercept_db", self.pathloss_intercept_db),
        ] {
            if !v.is_finite() {
                return Err(Error::Config(format!("radio.{name} must be finite")));
            }
        }
        Ok(())
    }

    pub fn transmit_power_w(&self) -> f64 {
        dbm_to_watts(self.transmit_power_dbm)
    }

    pub fn noise_power_w(&self) -> f64 {
        dbm_to_watts(self.noise_power_dbm)
    }
}

/// Position in metres.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// Square simulation window with wrap-around distances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub side_m: f64,
}

impl Window {
    pub fn from_area_km2(area_km2: f64) -> Self {
        Self {
            side_m: area_km2.sqrt() * 1000.0,
        }
    }

    pub fn distance(&self, a: Point, b: Point) -> f64 {
        let wrap = |d: f64| {
            let d = d.abs() % self.side_m;
            d.min(self.side_m - d)
        };
        wrap(a.x - b.x).hypot(wrap(a.y - b.y))
    }
}

/// Homogeneous PPP of `density` points per km² over a square of `area_km2`.
pub fn drop_ppp(density: f64, area_km2: f64, seed: u64) -> Vec<Point> {
    drop_ppp_with(&mut ChaCha8Rng::seed_from_u64(seed), density, area_km2)
}

fn drop_ppp_with<R: Rng>(rng: &mut R, density: f64, area_km2: f64) -> Vec<Point> {
    let mean = density * area_km2;
    if mean.is_nan() || mean <= 0.0 {
        return Vec::new();
    }
    let count = Poisson::new(mean).expect("positive finite mean").sample(rng) as usize;
    let side = Window::from_area_km2(area_km2).side_m;
    (0..count)
        .map(|_| Point {
            x: rng.random::<f64>() * side,
            y: rng.random::<f64>() * side,
        })
        .collect()
}

/// Log-distance gain `−(intercept + 10·n·log₁₀ d)` dB, linear scale.
pub fn path_gain(distance_m: f64, radio: &RadioConfig) -> f64 {
    let d = distance_m.max(radio.min_distance_m);
    let loss_db = radio.pathloss_intercept_db + 10.0 * radio.pathloss_exponent * d.log10();
    10f64.powf(-loss_db / 10.0)
}

/// A user's serving BS and link budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UserLink {
    pub serving_bs: usize,
    pub budget: LinkBudget,
}

/// Max-received-power association (ties to the lower BS index) and the
/// per-user link budget. Requires at least one BS.
pub fn associate_and_budget(users: &[Point], bss: &[Point], radio: &RadioConfig, window: &Window) -> Result<Vec<UserLink>> {
    if bss.is_empty() {
        return Err(Error::Config("association needs at least one BS".into()));
    }
    let p_t = radio.transmit_power_w();
    let noise = radio.noise_power_w();
    let mut received = vec![0.0; bss.len()];
    Ok(users
        .iter()
        .map(|&u| {
            let mut serving = 0;
            for (j, &b) in bss.iter().enumerate() {
                received[j] = p_t * path_gain(window.distance(u, b), radio);
                if received[j] > received[serving] {
                    serving = j;
                }
            }
            let interference: f64 = received.iter().enumerate().filter(|&(j, _)| j != serving).map(|(_, p)| p).sum();

            let d_bs = window.distance(u, bss[serving]);
            let d_user_ris = (d_bs - radio.ris_offset_m).abs();
            let composite_gain = path_gain(d_user_ris, radio) * path_gain(radio.ris_offset_m, radio);
            UserLink {
                serving_bs: serving,
                budget: LinkBudget {
                    transmit_power: p_t,
                    composite_gain,
                    ris_elements: radio.ris_elements,
                    bs_antennas: radio.bs_antennas,
                    interference,
                    noise_power: noise,
                },
            }
        })
        .collect())
}

/// BS and user placement of one drop with the resulting cell populations.
#[derive(Debug, Clone)]
pub struct DropLayout {
    pub bss: Vec<Point>,
    pub users: Vec<Point>,
    pub links: Vec<UserLink>,
    /// Users of each BS, ids are indices into `users`.
    pub cells: Vec<Vec<UserRecord>>,
}

impl DropLayout {
    pub fn gammas_db(&self) -> impl Iterator<Item = f64> + '_ {
        self.cells.iter().flatten().map(|u| linear_to_db(u.csi.gamma()))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of drop `index` derived from the campaign seed.
pub fn drop_seed(seed: u64, index: usize) -> u64 {
    splitmix64(seed ^ splitmix64(index as u64))
}

/// Generates drop `index` of a campaign; `None` when no BS was dropped.
pub fn drop_layout(deploy: &DeploymentConfig, radio: &RadioConfig, index: usize) -> Result<Option<DropLayout>> {
    let seed = drop_seed(deploy.seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bss = drop_ppp_with(&mut rng, deploy.bs_density, deploy.area_km2);
    if bss.is_empty() {
        return Ok(None);
    }
    let users = drop_ppp_with(&mut rng, deploy.user_density, deploy.area_km2);
    let links = associate_and_budget(&users, &bss, radio, &deploy.window())?;
    let mut cells = vec![Vec::new(); bss.len()];
    for (i, link) in links.iter().enumerate() {
        cells[link.serving_bs].push(UserRecord {
            id: i as u64,
            csi: effective_csi(&link.budget)?,
        });
    }
    Ok(Some(DropLayout { bss, users, links, cells }))
}

/// Everything [`run_campaign`] needs.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub deploy: DeploymentConfig,
    pub radio: RadioConfig,
    pub schemes: Vec<Scheme>,
    /// Phase-error bounds in radians.
    pub deltas: Vec<f64>,
    pub policy: TargetPolicy,
    pub eepa: EepaOptions,
    /// Sweep index at which the per-pair ASR CDF is collected.
    pub cdf_index: usize,
}

impl CampaignConfig {
    pub fn new(deploy: DeploymentConfig, radio: RadioConfig, schemes: Vec<Scheme>, deltas: Vec<f64>) -> Self {
        Self {
            deploy,
            radio,
            schemes,
            deltas,
            policy: TargetPolicy::default(),
            eepa: EepaOptions::default(),
            cdf_index: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.deploy.validate()?;
        self.radio.validate()?;
        if self.schemes.is_empty() {
            return Err(Error::Config("scheme list is empty".into()));
        }
        if self.deltas.is_empty() {
            return Err(Error::Config("delta sweep is empty".into()));
        }
        for &d in &self.deltas {
            PhaseModel::new(d).map_err(|_| Error::Config(format!("delta {d} rad is outside [0, pi)")))?;
        }
        if self.cdf_index >= self.deltas.len() {
            return Err(Error::Config(format!("cdf index {} is outside the sweep", self.cdf_index)));
        }
        Ok(())
    }
}

/// Mean and standard error of one metric.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Estimate {
    pub mean: f64,
    pub std_err: f64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: u64,
    sum: f64,
    sum_sq: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        self.sum += x;
        self.sum_sq += x * x;
    }

    fn merge(&mut self, other: &Moments) {
        self.n += other.n;
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
    }

    fn estimate(&self) -> Estimate {
        if self.n == 0 {
            return Estimate {
                mean: f64::NAN,
                std_err: f64::NAN,
            };
        }
        let n = self.n as f64;
        let mean = self.sum / n;
        let var = if self.n > 1 {
            ((self.sum_sq - n * mean * mean) / (n - 1.0)).max(0.0)
        } else {
            0.0
        };
        Estimate {
            mean,
            std_err: (var / n).sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Cell {
    r1: Moments,
    r2: Moments,
    asr: Moments,
    ee: Moments,
    noma: u64,
}

/// Aggregates of one scheme at one `δ`, over all pairs of all drops.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricRow {
    pub scheme: Scheme,
    pub delta: f64,
    pub pairs: u64,
    pub noma_pairs: u64,
    pub r1: Estimate,
    pub r2: Estimate,
    pub asr: Estimate,
    pub ee: Estimate,
}

/// Per-drop partial results, merged in drop order.
#[derive(Debug, Clone)]
pub struct DropResult {
    cells: Vec<Cell>,
    cdf: Vec<Vec<f64>>,
    gammas_db: Vec<f64>,
    unpaired_users: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsTable {
    pub schemes: Vec<Scheme>,
    /// Rows ordered by sweep index, then by scheme as configured.
    pub rows: Vec<MetricRow>,
    /// Phase bound at which the CDF samples were taken, radians.
    pub cdf_delta: f64,
    /// Sorted per-pair ASR samples per scheme.
    pub asr_cdf: Vec<(Scheme, Vec<f64>)>,
    /// Sorted effective CSI of every dropped user, dB.
    pub gammas_db: Vec<f64>,
    pub drops_run: usize,
    pub drops_skipped: usize,
    /// Users left in OMA because their cell had an odd or single-user population.
    pub unpaired_users: u64,
}

impl MetricsTable {
    pub fn row(&self, scheme: Scheme, delta_index: usize) -> Option<&MetricRow> {
        let offset = self.schemes.iter().position(|&s| s == scheme)?;
        self.rows.get(delta_index * self.schemes.len() + offset)
    }

    pub fn series(&self, scheme: Scheme) -> Vec<&MetricRow> {
        self.rows.iter().filter(|r| r.scheme == scheme).collect()
    }

    /// Empirical CDF `(asr, F)` of a scheme at the CDF bound, thinned to at
    /// most `points` steps.
    pub fn cdf_points(&self, scheme: Scheme, points: usize) -> Vec<(f64, f64)> {
        let Some((_, samples)) = self.asr_cdf.iter().find(|(s, _)| *s == scheme) else {
            return Vec::new();
        };
        let n = samples.len();
        if n == 0 || points == 0 {
            return Vec::new();
        }
        let stride = n.div_ceil(points).max(1);
        let mut out: Vec<(f64, f64)> = (stride - 1..n).step_by(stride).map(|i| (samples[i], (i + 1) as f64 / n as f64)).collect();
        if out.last().map(|p| p.1) != Some(1.0) {
            out.push((samples[n - 1], 1.0));
        }
        out
    }
}

fn run_drop(config: &CampaignConfig, index: usize) -> Result<Option<DropResult>> {
    let Some(layout) = drop_layout(&config.deploy, &config.radio, index)? else {
        return Ok(None);
    };
    let n_schemes = config.schemes.len();
    let mut cells = vec![Cell::default(); config.deltas.len() * n_schemes];
    let mut cdf = vec![Vec::new(); n_schemes];
    let mut unpaired_users = 0;

    for population in &layout.cells {
        if population.len() < 2 {
            unpaired_users += population.len() as u64;
            continue;
        }
        unpaired_users += (population.len() % 2) as u64;
        for (di, &delta) in config.deltas.iter().enumerate() {
            let phase = PhaseModel::new(delta)?;
            for (si, &scheme) in config.schemes.iter().enumerate() {
                let plan = run_scheme_with(population, scheme, &phase, config.policy, &config.eepa)?;
                let acc = &mut cells[di * n_schemes + si];
                for d in &plan.decisions {
                    acc.r1.push(d.rates.strong);
                    acc.r2.push(d.rates.weak);
                    acc.asr.push(d.asr);
                    acc.ee.push(d.ee);
                    if d.mode == Mode::Noma {
                        acc.noma += 1;
                    }
                    if di == config.cdf_index {
                        cdf[si].push(d.asr);
                    }
                }
            }
        }
    }
    Ok(Some(DropResult {
        cells,
        cdf,
        gammas_db: layout.gammas_db().collect(),
        unpaired_users,
    }))
}

/// Runs every drop (in parallel) and reduces them in drop order, so the
/// result depends only on the configuration.
pub fn run_campaign(config: &CampaignConfig) -> Result<MetricsTable> {
    config.validate()?;
    let drops: Vec<Option<DropResult>> = (0..config.deploy.drops)
        .into_par_iter()
        .map(|i| run_drop(config, i))
        .collect::<Result<_>>()?;

    let n_schemes = config.schemes.len();
    let mut cells = vec![Cell::default(); config.deltas.len() * n_schemes];
    let mut cdf: Vec<Vec<f64>> = vec![Vec::new(); n_schemes];
    let mut gammas_db = Vec::new();
    let (mut run, mut skipped, mut unpaired_users) = (0, 0, 0);
    for drop in drops {
        let Some(drop) = drop else {
            skipped += 1;
            continue;
        };
        run += 1;
        unpaired_users += drop.unpaired_users;
        for (acc, c) in cells.iter_mut().zip(&drop.cells) {
            acc.r1.merge(&c.r1);
            acc.r2.merge(&c.r2);
            acc.asr.merge(&c.asr);
            acc.ee.merge(&c.ee);
            acc.noma += c.noma;
        }
        for (all, mut part) in cdf.iter_mut().zip(drop.cdf) {
            all.append(&mut part);
        }
        gammas_db.extend(drop.gammas_db);
    }
    for samples in &mut cdf {
        samples.sort_by(f64::total_cmp);
    }
    gammas_db.sort_by(f64::total_cmp);

    let mut rows = Vec::with_capacity(cells.len());
    for (di, &delta) in config.deltas.iter().enumerate() {
        for (si, &scheme) in config.schemes.iter().enumerate() {
            let c = &cells[di * n_schemes + si];
            rows.push(MetricRow {
                scheme,
                delta,
                pairs: c.asr.n,
                noma_pairs: c.noma,
                r1: c.r1.estimate(),
                r2: c.r2.estimate(),
                asr: c.asr.estimate(),
                ee: c.ee.estimate(),
            });
        }
    }
    Ok(MetricsTable {
        schemes: config.schemes.clone(),
        rows,
        cdf_delta: config.deltas[config.cdf_index],
        asr_cdf: config.schemes.iter().copied().zip(cdf).collect(),
        gammas_db,
        drops_run: run,
        drops_skipped: skipped,
        unpaired_users,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ppp_edge_cases_and_determinism() {
        assert!(drop_ppp(0.0, 1.0, 3).is_empty());
        assert!(drop_ppp(25.0, 0.0, 3).is_empty());
        let a = drop_ppp(25.0, 1.0, 9);
        let b = drop_ppp(25.0, 1.0, 9);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| (0.0..1000.0).contains(&p.x) && (0.0..1000.0).contains(&p.y)));
    }

    #[test]
    fn ppp_count_statistics() {
        // Mean of 10⁴ Poisson(25) counts has standard deviation 5/100.
        let seeds = 10_000u64;
        let total: usize = (0..seeds).map(|s| drop_ppp(25.0, 1.0, s).len()).sum();
        let mean = total as f64 / seeds as f64;
        assert!((mean - 25.0).abs() < 3.0 * 0.05, "mean count {mean}");
    }

    #[test]
    fn path_gain_model() {
        let r = RadioConfig::default();
        assert!((linear_to_db(path_gain(1.0, &r)) + 32.4).abs() < 1e-12);
        assert!((linear_to_db(path_gain(0.2, &r)) + 32.4).abs() < 1e-12);
        assert!((linear_to_db(path_gain(100.0, &r)) + 92.4).abs() < 1e-12);
        let step = linear_to_db(path_gain(80.0, &r)) - linear_to_db(path_gain(40.0, &r));
        assert!((step + 30.0 * 2f64.log10()).abs() < 1e-12);
    }

    #[test]
    fn torus_distance_wraps() {
        let w = Window { side_m: 1000.0 };
        let d = w.distance(Point { x: 10.0, y: 500.0 }, Point { x: 990.0, y: 500.0 });
        assert!((d - 20.0).abs() < 1e-9);
    }

    #[test]
    fn association_cases() {
        let r = RadioConfig::default();
        let w = Window { side_m: 1000.0 };
        let users = [Point { x: 100.0, y: 100.0 }];
        let one = associate_and_budget(&users, &[Point { x: 150.0, y: 100.0 }], &r, &w).unwrap();
        assert_eq!(one[0].budget.interference, 0.0);

        let bss = [Point { x: 150.0, y: 100.0 }, Point { x: 50.0, y: 100.0 }];
        let two = associate_and_budget(&users, &bss, &r, &w).unwrap();
        assert_eq!(two[0].serving_bs, 0);
        let other = r.transmit_power_w() * path_gain(50.0, &r);
        assert!((two[0].budget.interference - other).abs() <= 1e-15 * other.max(1.0));

        // RIS sits 10 m from the BS, so the user is 40 m from it.
        let expected = path_gain(40.0, &r) * path_gain(10.0, &r);
        assert!((two[0].budget.composite_gain / expected - 1.0).abs() < 1e-12);

        assert!(associate_and_budget(&users, &[], &r, &w).is_err());
    }

    #[test]
    fn default_drop_covers_figure_operating_points() {
        let layout = drop_layout(&DeploymentConfig::default(), &RadioConfig::default(), 0).unwrap().unwrap();
        assert!(layout.gammas_db().any(|g| (2.0..=8.0).contains(&g)));
    }

    #[test]
    fn small_campaign_is_consistent() {
        let deploy = DeploymentConfig {
            drops: 3,
            user_density: 300.0,
            ..Default::default()
        };
        let deltas: Vec<f64> = [0.0f64, 30.0, 60.0, 120.0, 170.0].iter().map(|d| d.to_radians()).collect();
        let cfg = CampaignConfig::new(deploy, RadioConfig::default(), Scheme::ALL.to_vec(), deltas);
        let a = run_campaign(&cfg).unwrap();
        let b = run_campaign(&cfg).unwrap();
        assert_eq!(a, b);
        for row in &a.rows {
            assert!((row.asr.mean - row.r1.mean - row.r2.mean).abs() < 1e-9);
        }
        let oma0 = a.row(Scheme::Oma, 0).unwrap();
        let mpa0 = a.row(Scheme::Mpa, 0).unwrap();
        let srm0 = a.row(Scheme::Srm, 0).unwrap();
        assert_eq!(mpa0.asr, srm0.asr);
        assert!(mpa0.asr.mean >= oma0.asr.mean);
        assert_eq!(a.row(Scheme::Oma, 4).unwrap().noma_pairs, 0);
        for s in &a.asr_cdf {
            assert!(s.1.windows(2).all(|w| w[0] <= w[1]));
        }
        let cdf = a.cdf_points(Scheme::Mpa, 50);
        assert_eq!(cdf.last().unwrap().1, 1.0);
        assert!(cdf.windows(2).all(|w| w[0].1 <= w[1].1 && w[0].0 <= w[1].0));
    }

    #[test]
    fn config_validation() {
        let mut cfg = CampaignConfig::new(DeploymentConfig::default(), RadioConfig::default(), vec![], vec![0.0]);
        assert!(cfg.validate().is_err());
        cfg.schemes = vec![Scheme::Mpa];
        cfg.deltas = vec![];
        assert!(cfg.validate().is_err());
        cfg.deltas = vec![4.0];
        assert!(cfg.validate().is_err());
        cfg.deltas = vec![0.1];
        assert!(cfg.validate().is_ok());
        cfg.deploy.drops = 0;
        assert!(cfg.validate().is_err());
    }
}
