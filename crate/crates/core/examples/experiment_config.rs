//! Runs an experiment from an inline TOML description and prints its CSV.

use ris_noma::experiment::ExperimentConfig;

const CONFIG: &str = r#"
kind = "pair-study"
seed = 3
gammas_db = [14.0, 9.0, 6.0, 2.0]
delta_deg = [0.0, 30.0, 60.0]
schemes = ["mpa", "eepa"]

[targets]
policy = "oma-current"
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ExperimentConfig::from_toml_str(CONFIG)?;
    cfg.validate()?;
    println!("resolved configuration:\n{}", cfg.to_toml());
    let out = ris_noma::experiment::run(&cfg)?;
    cfg.write_table(&out.main, &mut std::io::stdout().lock())?;
    Ok(())
}
