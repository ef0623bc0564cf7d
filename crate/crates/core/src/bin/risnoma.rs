use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ris_noma::experiment::{exit_code, ExperimentConfig, Format, Kind, Overrides, PolicyName};
use ris_noma::pairing::Scheme;

/// Pairing and power-allocation experiments for RIS-assisted uplink NOMA.
#[derive(Parser)]
#[command(name = "risnoma", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pair rates versus the weak user's power fraction.
    SweepAlpha2(Common),
    /// Pair rates versus the phase-error bound.
    SweepDelta(Common),
    /// Every scheme's decisions on a user population.
    PairStudy(Common),
    /// Monte-Carlo system-level campaign.
    Syslevel(Common),
    /// Monte-Carlo check of the sinc² phase-error approximation.
    ValidateApprox(Common),
}

#[derive(Args)]
struct Common {
    /// TOML experiment configuration.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_parser = parse::<Format>)]
    format: Option<Format>,
    #[arg(long, value_name = "U64")]
    seed: Option<u64>,
    #[arg(long, value_name = "N")]
    drops: Option<usize>,
    /// Comma-separated phase-error bounds in degrees.
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    delta_deg: Option<Vec<f64>>,
    /// Comma-separated effective CSI values in dB.
    #[arg(long, value_name = "LIST", value_delimiter = ',', allow_negative_numbers = true)]
    gammas_db: Option<Vec<f64>>,
    /// Comma-separated schemes: mpa, eepa, srm, oma.
    #[arg(long = "scheme", value_name = "LIST", value_delimiter = ',', value_parser = parse::<Scheme>)]
    schemes: Option<Vec<Scheme>>,
    #[arg(long, value_name = "oma-ref|oma-current|explicit", value_parser = parse::<PolicyName>)]
    targets_policy: Option<PolicyName>,
    /// Print the resolved configuration and exit.
    #[arg(long)]
    print_config: bool,
}

fn parse<T: std::str::FromStr<Err = ris_noma::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: ris_noma::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, args) = match cli.command {
        Command::SweepAlpha2(a) => (Kind::SweepAlpha2, a),
        Command::SweepDelta(a) => (Kind::SweepDelta, a),
        Command::PairStudy(a) => (Kind::PairStudy, a),
        Command::Syslevel(a) => (Kind::Syslevel, a),
        Command::ValidateApprox(a) => (Kind::ValidateApprox, a),
    };
    let overrides = Overrides {
        kind: Some(kind),
        out: args.out,
        format: args.format,
        seed: args.seed,
        drops: args.drops,
        delta_deg: args.delta_deg,
        gammas_db: args.gammas_db,
        schemes: args.schemes,
        targets_policy: args.targets_policy,
    };
    let result = ExperimentConfig::load(args.config.as_deref(), &overrides).and_then(|cfg| {
        if args.print_config {
            print!("{}", cfg.to_toml());
            Ok(())
        } else {
            cfg.execute().map(|_| ())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("risnoma: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
