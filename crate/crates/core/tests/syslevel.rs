use ris_noma::channel::PhaseModel;
use ris_noma::mpa::Mode;
use ris_noma::pairing::{run_scheme, Scheme};
use ris_noma::syslevel::{drop_layout, run_campaign, CampaignConfig, DeploymentConfig, RadioConfig};

fn small(drops: usize) -> DeploymentConfig {
    DeploymentConfig {
        drops,
        user_density: 400.0,
        seed: 11,
        ..Default::default()
    }
}

fn sweep() -> Vec<f64> {
    (0..18).map(|k| (10.0 * k as f64).to_radians()).collect()
}

#[test]
fn mean_asr_is_non_increasing_in_delta() {
    let cfg = CampaignConfig::new(small(6), RadioConfig::default(), Scheme::ALL.to_vec(), sweep());
    let m = run_campaign(&cfg).unwrap();
    for scheme in Scheme::ALL {
        let series: Vec<f64> = m.series(scheme).iter().map(|r| r.asr.mean).collect();
        assert!(series.windows(2).all(|w| w[1] <= w[0]), "{scheme}: {series:?}");
    }
}

#[test]
fn oma_only_campaign_matches_oma_pair_sums() {
    let deploy = small(3);
    let deltas = vec![0.0, 0.7];
    let cfg = CampaignConfig::new(deploy.clone(), RadioConfig::default(), vec![Scheme::Oma], deltas.clone());
    let m = run_campaign(&cfg).unwrap();

    for (i, &d) in deltas.iter().enumerate() {
        let phase = PhaseModel::new(d).unwrap();
        let (mut sum, mut n) = (0.0, 0u64);
        for drop in 0..deploy.drops {
            let layout = drop_layout(&deploy, &RadioConfig::default(), drop).unwrap().unwrap();
            for cell in layout.cells.iter().filter(|c| c.len() >= 2) {
                let plan = run_scheme(cell, Scheme::Oma, &phase, Default::default()).unwrap();
                sum += plan.sum_rate();
                n += plan.decisions.len() as u64;
            }
        }
        let row = m.row(Scheme::Oma, i).unwrap();
        assert_eq!(row.pairs, n);
        assert!((row.asr.mean - sum / n as f64).abs() < 1e-12);
        assert_eq!(row.noma_pairs, 0);
    }
}

#[test]
fn mpa_falls_back_to_oma_drop_by_drop() {
    let deploy = small(3);
    let radio = RadioConfig::default();
    let phase = PhaseModel::from_degrees(170.0).unwrap();
    for drop in 0..deploy.drops {
        let layout = drop_layout(&deploy, &radio, drop).unwrap().unwrap();
        for cell in layout.cells.iter().filter(|c| c.len() >= 2) {
            let mpa = run_scheme(cell, Scheme::Mpa, &phase, Default::default()).unwrap();
            let oma = run_scheme(cell, Scheme::Oma, &phase, Default::default()).unwrap();
            assert_eq!(mpa.decisions, oma.decisions);
            assert!(mpa.decisions.iter().all(|d| d.mode == Mode::Oma));
        }
    }
}

#[test]
fn seeds_change_the_deployment() {
    let a = drop_layout(&small(1), &RadioConfig::default(), 0).unwrap().unwrap();
    let b = drop_layout(&DeploymentConfig { seed: 12, ..small(1) }, &RadioConfig::default(), 0).unwrap().unwrap();
    assert_ne!(a.users, b.users);
    let again = drop_layout(&small(1), &RadioConfig::default(), 0).unwrap().unwrap();
    assert_eq!(a.users, again.users);
    assert_eq!(a.links, again.links);
}
