//! One cell's population paired strongest-with-weakest under every scheme.

use ris_noma::channel::{EffectiveCsi, PhaseModel};
use ris_noma::mpa::TargetPolicy;
use ris_noma::pairing::{run_scheme, Scheme, UserRecord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gammas_db = [18.0, 3.5, 12.0, 7.0, 15.5, 1.0, 9.0];
    let users: Vec<UserRecord> = gammas_db
        .iter()
        .enumerate()
        .map(|(i, &g)| Ok(UserRecord { id: i as u64, csi: EffectiveCsi::from_db(g)? }))
        .collect::<Result<_, ris_noma::Error>>()?;

    for delta_deg in [0.0, 45.0, 90.0] {
        let phase = PhaseModel::from_degrees(delta_deg)?;
        println!("δ = {delta_deg}°");
        for scheme in Scheme::ALL {
            let plan = run_scheme(&users, scheme, &phase, TargetPolicy::default())?;
            let pairs: Vec<String> = plan
                .decisions
                .iter()
                .map(|d| format!("{}+{} {:?} α₂={:.2}", d.strong_id, d.weak_id, d.mode, d.alpha2))
                .collect();
            println!("  {scheme:<4} sum {:>7.3}  [{}]", plan.sum_rate(), pairs.join(", "));
        }
        if let Some(u) = run_scheme(&users, Scheme::Oma, &phase, TargetPolicy::default())?.unpaired {
            println!("  unpaired: user {} ({} dB)", u.id, u.csi.to_db());
        }
    }
    Ok(())
}
