use std::path::Path;
use std::process::{Command, Output};

use ris_noma::experiment::ExperimentConfig;

fn risnoma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_risnoma")).args(args).output().unwrap()
}

fn csv_body(path: &Path) -> Vec<Vec<String>> {
    let text = std::fs::read_to_string(path).unwrap();
    let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    csv::Reader::from_reader(body.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_owned).collect())
        .collect()
}

#[test]
fn sweep_alpha2_writes_csv_with_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.csv");
    let o = risnoma(&["sweep-alpha2", "--gammas-db", "8,5", "--delta-deg", "0,11", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let meta: Vec<&str> = text.lines().take_while(|l| l.starts_with('#')).collect();
    assert_eq!(meta[0], "# experiment: sweep-alpha2");
    assert_eq!(meta[1], "# seed: 1");
    assert!(meta[2].starts_with("# config_hash: ") && meta[2].len() == "# config_hash: ".len() + 64);
    assert!(meta[3].starts_with("# timestamp: "));
    let header = text.lines().nth(4).unwrap();
    assert!(header.starts_with("delta_deg,point,alpha2,r1,r2,asr"));
    // 101 grid points plus both markers, per δ.
    assert_eq!(csv_body(&out).len(), 2 * 103);
}

#[test]
fn json_rows_carry_metadata_keys() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let o = risnoma(&["sweep-delta", "--format", "json", "--delta-deg", "0,80", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["mode"], "noma");
    assert_eq!(rows[1]["mode"], "oma");
    assert_eq!(rows[0]["seed"], "1");
    assert!(rows[0]["config_hash"].as_str().unwrap().len() == 64);
    let k0: Vec<_> = rows[0].as_object().unwrap().keys().collect();
    let k1: Vec<_> = rows[1].as_object().unwrap().keys().collect();
    assert_eq!(k0, k1);
}

#[test]
fn print_config_round_trips() {
    let o = risnoma(&["syslevel", "--drops", "7", "--seed", "42", "--scheme", "mpa,oma", "--targets-policy", "oma-current", "--print-config"]);
    assert!(o.status.success());
    let echo = String::from_utf8(o.stdout).unwrap();
    let cfg = ExperimentConfig::from_toml_str(&echo).unwrap();
    assert_eq!(cfg.deployment.drops, 7);
    assert_eq!(cfg.seed, 42);
    assert_eq!(cfg.to_toml(), echo);

    // Feeding the echo back as a config file changes nothing.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.toml");
    std::fs::write(&path, &echo).unwrap();
    let again = risnoma(&["syslevel", "--config", path.to_str().unwrap(), "--print-config"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), echo);
}

#[test]
fn config_file_values_are_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.toml");
    std::fs::write(&path, "kind = \"sweep-delta\"\ngammas_db = [8.0, 2.0]\ndelta_deg = [0.0, 10.0]\nseed = 5\n").unwrap();
    let o = risnoma(&["sweep-delta", "--config", path.to_str().unwrap(), "--seed", "6", "--print-config"]);
    let cfg = ExperimentConfig::from_toml_str(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(cfg.gammas_db, vec![8.0, 2.0]);
    assert_eq!(cfg.delta_deg, vec![0.0, 10.0]);
    assert_eq!(cfg.seed, 6);
}

#[test]
fn config_errors_exit_with_2() {
    let o = risnoma(&["syslevel", "--scheme", "", "--drops", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = risnoma(&["sweep-delta", "--delta-deg", "10,5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("delta_deg"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "[radio]\nris_elements = 0\nkind = 1\n").unwrap();
    let o = risnoma(&["syslevel", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&o.stderr);
    assert!(msg.contains("bad.toml"), "{msg}");

    let o = risnoma(&["pair-study", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn numerical_failures_exit_with_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.toml");
    // A negative tolerance can never be met.
    std::fs::write(&path, "kind = \"pair-study\"\ngammas_db = [8.0, 5.0]\ndelta_deg = [0.0]\nschemes = [\"eepa\"]\n\n[eepa]\ntol = -1.0\nfeasibility = \"exact\"\n").unwrap();
    let o = risnoma(&["pair-study", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn syslevel_writes_means_and_cdf() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sys.csv");
    let o = risnoma(&["syslevel", "--drops", "2", "--delta-deg", "0,40,120", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let means = csv_body(&out);
    assert_eq!(means.len(), 3 * 4);
    // SRM and MPA coincide without phase error.
    let asr = |scheme: &str| means.iter().find(|r| r[0] == "0" && r[1] == scheme).unwrap()[8].clone();
    assert_eq!(asr("srm"), asr("mpa"));

    let cdf = csv_body(&dir.path().join("sys.cdf.csv"));
    assert!(!cdf.is_empty());
    for scheme in ["mpa", "eepa", "srm", "oma"] {
        let f: Vec<f64> = cdf.iter().filter(|r| r[0] == scheme).map(|r| r[3].parse().unwrap()).collect();
        assert!(f.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*f.last().unwrap(), 1.0);
    }
}

#[test]
fn validate_approx_to_stdout() {
    let o = risnoma(&["validate-approx", "--delta-deg", "0,30"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "elements,delta_deg,trials,mc,sinc_sq,finite_n_mean,rel_error");
    assert_eq!(rows.len(), 1 + 5 * 2);
}
