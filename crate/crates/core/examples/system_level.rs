//! Small Monte-Carlo campaign: mean rates per scheme versus δ.
//!
//! Usage: cargo run --example system_level [drops]

use ris_noma::pairing::Scheme;
use ris_noma::syslevel::{run_campaign, CampaignConfig, DeploymentConfig, RadioConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let drops = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(20);
    let deploy = DeploymentConfig { drops, ..Default::default() };
    let deltas: Vec<f64> = (0..18).map(|k| (10.0 * k as f64).to_radians()).collect();
    let config = CampaignConfig::new(deploy, RadioConfig::default(), Scheme::ALL.to_vec(), deltas);
    let table = run_campaign(&config)?;

    let g = &table.gammas_db;
    let q = |p: f64| g[((g.len() - 1) as f64 * p) as usize];
    println!(
        "{} drops ({} skipped), {} users, Γ dB quantiles 5/50/95%: {:.1} / {:.1} / {:.1}",
        table.drops_run,
        table.drops_skipped,
        g.len(),
        q(0.05),
        q(0.5),
        q(0.95)
    );
    println!("{:>5} {:>5} {:>7} {:>8} {:>8} {:>8} {:>8}", "δ°", "sch", "noma%", "R1", "R2", "ASR", "EE");
    for row in &table.rows {
        println!(
            "{:>5.0} {:>5} {:>7.2} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            row.delta.to_degrees(),
            row.scheme,
            100.0 * row.noma_pairs as f64 / row.pairs.max(1) as f64,
            row.r1.mean,
            row.r2.mean,
            row.asr.mean,
            row.ee.mean
        );
    }
    Ok(())
}
