use std::path::Path;
use std::process::Command;

fn fpci() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fpci"))
}

fn write_config(dir: &Path, body: &str) -> std::path::PathBuf {
    let path = dir.join("run.toml");
    std::fs::write(&path, body).unwrap();
    path
}

const SMALL_RUN: &str = r#"
mode = "vr"
iterations = 60
seeds = [1, 2]
mc_budget = 64
output_dir = "unused"

[problem]
kind = "synthetic"
rows = 40
cols = 8
cond = 2.0
reg = 0.1
seed = 3

[map]
kind = "gd"

[compressor]
kind = "natural"

[stepsizes]
alpha = "auto"
eta = "auto"
"#;

#[test]
fn run_writes_outputs_and_exits_zero() {
    let tmp = tempfile::tempdir().unwrap();
    let config = write_config(tmp.path(), SMALL_RUN);
    let out_dir = tmp.path().join("out");
    let output = fpci()
        .arg("run")
        .arg(&config)
        .arg("--output-dir")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    assert!(out_dir.join("seed_1.csv").exists());
    assert!(out_dir.join("seed_2.csv").exists());
    assert!(out_dir.join("transcript.csv").exists());
    assert!(out_dir.join("summary.json").exists());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("2 finished"), "{stdout}");
}

#[test]
fn env_var_overrides_output_dir() {
    let tmp = tempfile::tempdir().unwrap();
    let config = write_config(tmp.path(), SMALL_RUN);
    let out_dir = tmp.path().join("from_env");
    let output = fpci()
        .arg("run")
        .arg(&config)
        .env("FPCI_OUTPUT_DIR", &out_dir)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(out_dir.join("summary.json").exists());
}

#[test]
fn config_errors_exit_two() {
    let tmp = tempfile::tempdir().unwrap();
    let config = write_config(tmp.path(), &SMALL_RUN.replace("cond = 2.0", "cond = 0.2"));
    let output = fpci().arg("run").arg(&config).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("condition number"), "{stderr}");

    let missing = fpci().arg("run").arg("/nonexistent.toml").output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn all_seeds_diverging_exits_three() {
    // Far past the plain-mode frontier: omega = 39, rho ~ 1/100.
    let body = r#"
mode = "plain"
iterations = 500
seeds = [2]
output_dir = "unused"

[problem]
kind = "synthetic"
rows = 80
cols = 40
cond = 50.0
reg = 0.1
seed = 41

[map]
kind = "gd"

[compressor]
kind = "rand_k"
k = 1
"#;
    let tmp = tempfile::tempdir().unwrap();
    let config = write_config(tmp.path(), body);
    let out_dir = tmp.path().join("out");
    let output = fpci()
        .arg("run")
        .arg(&config)
        .arg("--output-dir")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3), "{output:?}");
    // Partial trajectory flushed, divergence recorded in the summary.
    let summary = std::fs::read_to_string(out_dir.join("summary.json")).unwrap();
    assert!(summary.contains("\"divergences\""), "{summary}");
    assert!(out_dir.join("seed_2.csv").exists());
}

#[test]
fn theory_prints_bound_without_running() {
    let tmp = tempfile::tempdir().unwrap();
    let config = write_config(tmp.path(), SMALL_RUN);
    let output = fpci().arg("theory").arg(&config).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8(output.stdout).unwrap();
    let json: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(json["mode"], "vr");
    assert!(json["certificate"]["rho"].as_f64().unwrap() > 0.0);
    assert!(json["bound"]["valid"].as_bool().unwrap());
    // No experiment output was produced.
    assert!(!tmp.path().join("unused").exists());
}

#[test]
fn verify_reports_passing_checks() {
    let tmp = tempfile::tempdir().unwrap();
    let config = write_config(tmp.path(), SMALL_RUN);
    let output = fpci().arg("verify").arg(&config).output().unwrap();
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let stdout = String::from_utf8(output.stdout).unwrap();
    for check in [
        "compressor-unbiasedness",
        "compressor-variance",
        "fixed-point",
        "contraction",
        "expected-lipschitz",
        "gradient-finite-differences",
    ] {
        assert!(stdout.contains(&format!("PASS {check}")), "{stdout}");
    }
}
