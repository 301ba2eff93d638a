use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fpci::config::{parse_config_file, RunConfig};
use fpci::experiment::{resolve, run_experiment};
use fpci::verify::run_assumption_checks;
use fpci::Error;

/// Exit codes: 0 success, 1 failed verification, 2 configuration error,
/// 3 all seeds diverged.
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_ALL_DIVERGED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fpci",
    version,
    about = "Fixed-point iterations with compressed iterates: run, verify, and bound experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every seed of a configuration, writing per-seed CSVs and summary.json
    Run {
        config: PathBuf,
        /// Output directory; overrides the config (and FPCI_OUTPUT_DIR)
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
    /// Run the statistical assumption checks only, without an experiment
    Verify { config: PathBuf },
    /// Print the certificate, stepsizes, and theory bound without running
    Theory { config: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { config, output_dir } => run_cmd(&config, output_dir),
        Command::Verify { config } => verify_cmd(&config),
        Command::Theory { config } => theory_cmd(&config),
    }
}

fn load(config: &Path) -> Result<RunConfig, ExitCode> {
    parse_config_file(config).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_CONFIG)
    })
}

fn config_exit(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::InvalidConfig(_) | Error::Io { .. } | Error::Format { .. } => {
            ExitCode::from(EXIT_CONFIG)
        }
        _ => ExitCode::FAILURE,
    }
}

fn run_cmd(config: &Path, output_dir: Option<PathBuf>) -> ExitCode {
    let cfg = match load(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let out_dir = output_dir
        .or_else(|| std::env::var_os("FPCI_OUTPUT_DIR").map(PathBuf::from))
        .unwrap_or_else(|| cfg.output_dir.clone());
    let report = match run_experiment(&cfg, &out_dir) {
        Ok(r) => r,
        Err(e) => return config_exit(&e),
    };
    let s = &report.summary;
    println!(
        "ran {} seed(s): {} finished, {} diverged",
        cfg.seeds.len(),
        s.seeds_finished.len(),
        s.divergences.len()
    );
    println!(
        "certificate: rho = {:.6e}, B = {:.6e}, c^2 = {:.6e}, sigma^2 = {:.6e}; omega = {:.6e}",
        s.certificate.rho, s.certificate.b, s.certificate.c_sq, s.certificate.sigma_sq, s.omega
    );
    println!(
        "bound: rate = {:.6e}, plateau = {}, valid = {}",
        s.bound.rate_factor,
        s.bound
            .plateau_radius_sq
            .map(|p| format!("{p:.6e}"))
            .unwrap_or_else(|| "unbounded".into()),
        s.bound.valid
    );
    if let Some(p) = &s.plateau {
        println!(
            "measured plateau (final {:.0}%): {:.6e}{}",
            100.0 * p.window_fraction,
            p.mean,
            p.std_error
                .map(|se| format!(" +/- {se:.2e}"))
                .unwrap_or_default()
        );
    }
    println!("verdict: {}", s.verdicts.note);
    println!("wrote {}", report.summary_path.display());
    if report.all_diverged {
        ExitCode::from(EXIT_ALL_DIVERGED)
    } else {
        ExitCode::SUCCESS
    }
}

fn verify_cmd(config: &Path) -> ExitCode {
    let cfg = match load(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let resolved = match resolve(&cfg) {
        Ok(r) => r,
        Err(e) => return config_exit(&e),
    };
    let outcomes = match run_assumption_checks(&resolved, cfg.nodes) {
        Ok(o) => o,
        Err(e) => return config_exit(&e),
    };
    let mut all_passed = true;
    for outcome in &outcomes {
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", outcome.name, outcome.detail);
        all_passed &= outcome.passed;
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn theory_cmd(config: &Path) -> ExitCode {
    let cfg = match load(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let resolved = match resolve(&cfg) {
        Ok(r) => r,
        Err(e) => return config_exit(&e),
    };
    let (alpha, eta) = match resolved.mode {
        fpci::algorithms::Mode::Vr(p) => (Some(p.alpha), Some(p.eta)),
        fpci::algorithms::Mode::Plain => (None, None),
    };
    let out = serde_json::json!({
        "mode": match resolved.mode {
            fpci::algorithms::Mode::Vr(_) => "vr",
            fpci::algorithms::Mode::Plain => "plain",
        },
        "dim": resolved.map.dim(),
        "omega": resolved.omega,
        "gamma": resolved.gamma,
        "alpha": alpha,
        "eta": eta,
        "certificate": resolved.certificate,
        "bound": resolved.bound,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    ExitCode::SUCCESS
}
