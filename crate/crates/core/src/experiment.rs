//! Configuration-driven experiment runner: resolves a [`RunConfig`] into a
//! problem + map + compressor + certificate, runs every seed, writes one
//! trajectory CSV per seed plus a JSON summary comparing the measured
//! behavior to the theory bound.
//!
//! CSV contract: header `seed,k,r_sq,psi,bits_cum,wall_ns`, one row per
//! iteration (row `k = 0` is the initial state), floats rendered with 17
//! significant digits so re-parsing returns the identical 64-bit value,
//! `\n` newlines. `wall_ns` is the only nondeterministic column.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algorithms::{roles, MetricsRow, Mode, RunOutput, RunPlan};
use crate::compressors::CompressorSpec;
use crate::config::{H0Kind, MapConfig, ModeName, ProblemConfig, RunConfig, X0Kind};
use crate::error::{Error, Result};
use crate::numerics::{sample_standard_gaussian, RngStream, Vector};
use crate::operators::{
    certificate_of, generate_saddle, generate_synthetic, load_libsvm, ContractionCertificate,
    MapKind, MapSpec, Nonsmooth, ProblemSpec,
};
use crate::simnet::bits_to_target;
use crate::theory::{plain_bound, vr_bound, vr_stepsizes, BoundReport, VrParams};

/// A config resolved against its problem: validated map, compressor variance,
/// certificate, stepsizes, and the applicable theory bound.
#[derive(Debug, Clone)]
pub struct ResolvedExperiment {
    pub map: MapSpec,
    pub comp: CompressorSpec,
    pub mode: Mode,
    pub omega: f64,
    pub gamma: f64,
    pub certificate: ContractionCertificate,
    pub bound: BoundReport,
}

fn build_problem(cfg: &RunConfig) -> Result<ProblemSpec> {
    match &cfg.problem {
        ProblemConfig::Synthetic {
            rows,
            cols,
            cond,
            reg,
            seed,
            h,
        } => {
            let mut stream = RngStream::from_root(*seed).derive(&[roles::CERTIFICATE, 0]);
            let base = generate_synthetic(*rows, *cols, *cond, cfg.nodes, *reg, &mut stream)?;
            attach_nonsmooth(base, h)
        }
        ProblemConfig::Libsvm { path, reg, h } => {
            let base = load_libsvm(path, *reg, cfg.nodes)?;
            attach_nonsmooth(base, h)
        }
        ProblemConfig::Saddle {
            mu,
            coupling_dim,
            seed,
        } => {
            let mut stream = RngStream::from_root(*seed).derive(&[roles::CERTIFICATE, 1]);
            generate_saddle(*mu, *coupling_dim, &mut stream)
        }
    }
}

fn attach_nonsmooth(base: ProblemSpec, h: &Option<Nonsmooth>) -> Result<ProblemSpec> {
    match (base, h) {
        (base, None) => Ok(base),
        (ProblemSpec::Smooth(smooth), Some(h)) => Ok(ProblemSpec::Composite { smooth, h: *h }),
        _ => Err(Error::invalid_config(
            "a nonsmooth term applies to smooth problems only",
        )),
    }
}

fn build_map(cfg: &RunConfig, problem: ProblemSpec) -> Result<MapSpec> {
    let gamma = cfg
        .map
        .gamma()
        .resolve(|| MapSpec::auto_gamma(cfg.map.kind_name(), &problem))?;
    let kind = match &cfg.map {
        MapConfig::Gd { .. } => MapKind::Gd { gamma },
        MapConfig::Sgd { minibatch, .. } => MapKind::Sgd {
            gamma,
            minibatch: *minibatch,
        },
        MapConfig::ProxSgd { minibatch, .. } => MapKind::ProxSgd {
            gamma,
            minibatch: *minibatch,
        },
        MapConfig::Gda { .. } => MapKind::Gda { gamma },
        MapConfig::DavisYin { g, h, .. } => MapKind::DavisYin {
            gamma,
            g: *g,
            h: *h,
        },
    };
    MapSpec::new(kind, problem)
}

/// Resolves every `auto` field against the problem's certificate.
pub fn resolve(cfg: &RunConfig) -> Result<ResolvedExperiment> {
    cfg.validate()?;
    let problem = build_problem(cfg)?;
    let map = build_map(cfg, problem)?;
    let d = map.dim();
    cfg.compressor.validate_for_dim(d)?;
    let omega = cfg.compressor.omega(d);
    let gamma = map.kind().gamma();

    let cert_seed = match &cfg.problem {
        ProblemConfig::Synthetic { seed, .. } | ProblemConfig::Saddle { seed, .. } => *seed,
        ProblemConfig::Libsvm { .. } => 0,
    };
    let mut cert_stream = RngStream::from_root(cert_seed).derive(&[roles::CERTIFICATE, 2]);
    let certificate = certificate_of(&map, cfg.nodes, cfg.mc_budget, &mut cert_stream)?;

    let (mode, bound) = match cfg.mode {
        ModeName::Plain => (Mode::Plain, plain_bound(&certificate, omega, cfg.nodes)),
        ModeName::Vr => {
            let auto = vr_stepsizes(&certificate, omega, cfg.nodes);
            let params = VrParams {
                alpha: cfg.stepsizes.alpha.resolve(|| Ok(auto.alpha))?,
                eta: cfg.stepsizes.eta.resolve(|| Ok(auto.eta))?,
            };
            params.validate()?;
            (
                Mode::Vr(params),
                vr_bound(&certificate, params, omega, cfg.nodes),
            )
        }
    };

    Ok(ResolvedExperiment {
        map,
        comp: cfg.compressor.clone(),
        mode,
        omega,
        gamma,
        certificate,
        bound,
    })
}

fn initial_vectors(cfg: &RunConfig, d: usize, seed: u64) -> (Vector, Vec<Vector>) {
    let x0 = match cfg.init.x0 {
        X0Kind::Zero => Vector::zeros(d),
        X0Kind::Gaussian => {
            let mut stream = RngStream::from_root(seed).derive(&[roles::INIT]);
            sample_standard_gaussian(&mut stream, d).scale(cfg.init.x0_scale)
        }
    };
    let h0 = match cfg.init.h0 {
        H0Kind::Zero => vec![Vector::zeros(d); cfg.nodes],
        H0Kind::X0 => vec![x0.clone(); cfg.nodes],
    };
    (x0, h0)
}

/// Runs one seed of a resolved experiment.
pub fn run_seed(cfg: &RunConfig, resolved: &ResolvedExperiment, seed: u64) -> Result<RunOutput> {
    let d = resolved.map.dim();
    let (x0, h0) = initial_vectors(cfg, d, seed);
    let plan = RunPlan {
        map: &resolved.map,
        comp: &resolved.comp,
        mode: resolved.mode,
        n: cfg.nodes,
        iterations: cfg.iterations,
        root_seed: seed,
        mc_budget: cfg.mc_budget,
        x0,
        h0,
    };
    crate::algorithms::run_loop(&plan)
}

/// Renders trajectory rows to the CSV contract.
pub fn render_csv(rows: &[MetricsRow]) -> String {
    let mut out = String::from("seed,k,r_sq,psi,bits_cum,wall_ns\n");
    for row in rows {
        let psi = match row.psi {
            Some(p) => format_float(p),
            None => String::new(),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.seed,
            row.k,
            format_float(row.r_sq),
            psi,
            row.bits_cum,
            row.wall_ns
        ));
    }
    out
}

/// 17 significant digits: enough that parsing returns the identical bits.
fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes rows to `path`, creating parent directories.
pub fn write_csv(rows: &[MetricsRow], path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(|source| Error::Io {
            path: parent.to_path_buf(),
            source,
        })?;
    }
    std::fs::write(path, render_csv(rows)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses a CSV produced by [`render_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<MetricsRow>> {
    let mut rows = Vec::new();
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != "seed,k,r_sq,psi,bits_cum,wall_ns" {
        return Err(Error::invalid_config(format!("unexpected CSV header: {header}")));
    }
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(Error::invalid_config(format!(
                "CSV row {} has {} fields",
                i + 2,
                fields.len()
            )));
        }
        let parse_err = |what: &str| Error::invalid_config(format!("CSV row {}: bad {what}", i + 2));
        rows.push(MetricsRow {
            seed: fields[0].parse().map_err(|_| parse_err("seed"))?,
            k: fields[1].parse().map_err(|_| parse_err("k"))?,
            r_sq: fields[2].parse().map_err(|_| parse_err("r_sq"))?,
            psi: if fields[3].is_empty() {
                None
            } else {
                Some(fields[3].parse().map_err(|_| parse_err("psi"))?)
            },
            bits_cum: fields[4].parse().map_err(|_| parse_err("bits_cum"))?,
            wall_ns: fields[5].parse().map_err(|_| parse_err("wall_ns"))?,
        });
    }
    Ok(rows)
}

/// Mean of `r_sq` over the trailing `window_fraction` of one trajectory.
pub fn window_mean(rows: &[MetricsRow], window_fraction: f64) -> Result<f64> {
    if rows.is_empty() {
        return Err(Error::invalid_config("empty trajectory"));
    }
    if !(window_fraction > 0.0 && window_fraction <= 1.0) {
        return Err(Error::invalid_config("window_fraction must lie in (0, 1]"));
    }
    let len = rows.len();
    let count = ((len as f64 * window_fraction).ceil() as usize).clamp(1, len);
    let tail = &rows[len - count..];
    Ok(tail.iter().map(|r| r.r_sq).sum::<f64>() / count as f64)
}

/// Squared-distance level below which a run counts as converged for verdict
/// purposes: double-precision granularity at the problem's own scale.
pub fn convergence_floor(cert: &ContractionCertificate) -> f64 {
    1e-28 * (1.0 + cert.sigma_sq)
}

/// Across-seed mean and standard error of the per-seed trailing-window means.
pub fn summarize_plateau(
    trajectories: &[Vec<MetricsRow>],
    window_fraction: f64,
) -> Result<(f64, f64)> {
    if trajectories.len() < 2 {
        return Err(Error::invalid_config(
            "plateau summaries need at least 2 seeds",
        ));
    }
    let len = trajectories[0].len();
    if trajectories.iter().any(|t| t.len() != len) {
        return Err(Error::invalid_config(
            "plateau summaries need equal-length trajectories",
        ));
    }
    let means: Vec<f64> = trajectories
        .iter()
        .map(|t| window_mean(t, window_fraction))
        .collect::<Result<_>>()?;
    let m = means.len() as f64;
    let mean = means.iter().sum::<f64>() / m;
    let var = means.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (m - 1.0);
    Ok((mean, (var / m).sqrt()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeedValue {
    pub seed: u64,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeedBits {
    pub seed: u64,
    /// `None` when the target level was never reached.
    pub bits: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeedDivergence {
    pub seed: u64,
    pub iteration: u64,
    pub r_sq: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlateauSummary {
    pub window_fraction: f64,
    /// Mean over seeds of the per-seed trailing-window mean of `r_sq`.
    pub mean: f64,
    /// Across-seed standard error; absent for single-seed runs.
    pub std_error: Option<f64>,
    pub per_seed: Vec<SeedValue>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdicts {
    pub theory_valid: bool,
    /// Measured plateau against the theory radius; `None` when the bound is
    /// unbounded or no seed finished.
    pub plateau_within_radius: Option<bool>,
    pub note: String,
}

/// Everything the run produced, recomputable from the CSVs + config +
/// certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Summary {
    pub mode: ModeName,
    pub nodes: usize,
    pub iterations: u64,
    pub dim: usize,
    pub omega: f64,
    pub gamma: f64,
    pub alpha: Option<f64>,
    pub eta: Option<f64>,
    pub certificate: ContractionCertificate,
    pub bound: BoundReport,
    pub plateau: Option<PlateauSummary>,
    pub verdicts: Verdicts,
    pub bits_per_round: u64,
    pub seeds_finished: Vec<u64>,
    pub divergences: Vec<SeedDivergence>,
    pub final_r_sq: Vec<SeedValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bits_to_target: Option<Vec<SeedBits>>,
}

#[derive(Debug)]
pub struct ExperimentReport {
    pub summary: Summary,
    pub summary_path: PathBuf,
    pub csv_paths: Vec<PathBuf>,
    pub all_diverged: bool,
}

/// Runs every seed of the config, writing per-seed CSVs, one communication
/// transcript, and `summary.json` under `out_dir`. A diverging seed is
/// recorded in the summary and the remaining seeds still run.
pub fn run_experiment(cfg: &RunConfig, out_dir: &Path) -> Result<ExperimentReport> {
    let resolved = resolve(cfg)?;
    std::fs::create_dir_all(out_dir).map_err(|source| Error::Io {
        path: out_dir.to_path_buf(),
        source,
    })?;

    let mut csv_paths = Vec::new();
    let mut finished: Vec<(u64, Vec<MetricsRow>)> = Vec::new();
    let mut divergences = Vec::new();
    let mut final_r_sq = Vec::new();
    let mut bits_readout: Vec<SeedBits> = Vec::new();
    let mut transcript_written = false;

    for &seed in &cfg.seeds {
        let out = run_seed(cfg, &resolved, seed)?;
        let csv_path = out_dir.join(format!("seed_{seed}.csv"));
        write_csv(&out.rows, &csv_path)?;
        csv_paths.push(csv_path);
        if !transcript_written {
            std::fs::write(out_dir.join("transcript.csv"), out.transcript.to_csv()).map_err(
                |source| Error::Io {
                    path: out_dir.join("transcript.csv"),
                    source,
                },
            )?;
            transcript_written = true;
        }
        if let Some(last) = out.rows.last() {
            final_r_sq.push(SeedValue {
                seed,
                value: last.r_sq,
            });
        }
        if let Some(target) = cfg.target_r_sq {
            bits_readout.push(SeedBits {
                seed,
                bits: bits_to_target(&out.rows, &out.transcript, target),
            });
        }
        match out.divergence {
            Some(info) => divergences.push(SeedDivergence {
                seed,
                iteration: info.iteration,
                r_sq: info.r_sq,
            }),
            None => finished.push((seed, out.rows)),
        }
    }

    let plateau = match finished.len() {
        0 => None,
        1 => {
            let (seed, rows) = &finished[0];
            let mean = window_mean(rows, cfg.plateau_window)?;
            Some(PlateauSummary {
                window_fraction: cfg.plateau_window,
                mean,
                std_error: None,
                per_seed: vec![SeedValue {
                    seed: *seed,
                    value: mean,
                }],
            })
        }
        _ => {
            let trajectories: Vec<Vec<MetricsRow>> =
                finished.iter().map(|(_, rows)| rows.clone()).collect();
            let (mean, std_error) = summarize_plateau(&trajectories, cfg.plateau_window)?;
            Some(PlateauSummary {
                window_fraction: cfg.plateau_window,
                mean,
                std_error: Some(std_error),
                per_seed: finished
                    .iter()
                    .map(|(seed, rows)| {
                        Ok(SeedValue {
                            seed: *seed,
                            value: window_mean(rows, cfg.plateau_window)?,
                        })
                    })
                    .collect::<Result<_>>()?,
            })
        }
    };

    // A zero-radius bound (lossless compression, deterministic map) is met
    // only up to double precision: plateaus below this floor count as inside.
    let floor = convergence_floor(&resolved.certificate);
    let plateau_within_radius = match (&plateau, resolved.bound.plateau_radius_sq) {
        (Some(p), Some(radius)) if resolved.bound.valid => Some(p.mean <= radius + floor),
        _ => None,
    };
    let note = if !resolved.bound.valid {
        "theory bound invalid for this configuration; plateau reported without a verdict"
            .to_string()
    } else if divergences.is_empty() {
        "all seeds finished".to_string()
    } else {
        format!("{} of {} seeds diverged", divergences.len(), cfg.seeds.len())
    };

    let (alpha, eta) = match resolved.mode {
        Mode::Vr(p) => (Some(p.alpha), Some(p.eta)),
        Mode::Plain => (None, None),
    };
    let d = resolved.map.dim();
    let summary = Summary {
        mode: cfg.mode,
        nodes: cfg.nodes,
        iterations: cfg.iterations,
        dim: d,
        omega: resolved.omega,
        gamma: resolved.gamma,
        alpha,
        eta,
        certificate: resolved.certificate.clone(),
        bound: resolved.bound.clone(),
        plateau,
        verdicts: Verdicts {
            theory_valid: resolved.bound.valid,
            plateau_within_radius,
            note,
        },
        bits_per_round: cfg.nodes as u64 * (64 * d as u64 + resolved.comp.message_bits(d)),
        seeds_finished: finished.iter().map(|(s, _)| *s).collect(),
        divergences,
        final_r_sq,
        bits_to_target: if cfg.target_r_sq.is_some() {
            Some(bits_readout)
        } else {
            None
        },
    };

    let summary_path = out_dir.join("summary.json");
    let json = serde_json::to_string_pretty(&summary)
        .map_err(|e| Error::invalid_config(e.to_string()))?;
    std::fs::write(&summary_path, json).map_err(|source| Error::Io {
        path: summary_path.clone(),
        source,
    })?;

    let all_diverged = summary.seeds_finished.is_empty();
    Ok(ExperimentReport {
        summary,
        summary_path,
        csv_paths,
        all_diverged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(seed: u64, k: u64, r_sq: f64) -> MetricsRow {
        MetricsRow {
            seed,
            k,
            r_sq,
            psi: None,
            bits_cum: k,
            wall_ns: 0,
        }
    }

    #[test]
    fn csv_header_only_for_empty_rows() {
        assert_eq!(render_csv(&[]), "seed,k,r_sq,psi,bits_cum,wall_ns\n");
    }

    #[test]
    fn csv_floats_round_trip_bit_exactly() {
        let rows = vec![MetricsRow {
            seed: 3,
            k: 1,
            r_sq: 0.1,
            psi: Some(2.0 / 3.0),
            bits_cum: 640,
            wall_ns: 12345,
        }];
        let parsed = parse_csv(&render_csv(&rows)).unwrap();
        assert_eq!(parsed[0].r_sq.to_bits(), 0.1f64.to_bits());
        assert_eq!(
            parsed[0].psi.unwrap().to_bits(),
            (2.0f64 / 3.0).to_bits()
        );
    }

    #[test]
    fn plateau_of_constant_trajectories() {
        let t1: Vec<_> = (0..10).map(|k| row(1, k, 3.0)).collect();
        let t2: Vec<_> = (0..10).map(|k| row(2, k, 3.0)).collect();
        let (mean, se) = summarize_plateau(&[t1, t2], 0.2).unwrap();
        assert_eq!(mean, 3.0);
        assert_eq!(se, 0.0);
    }

    #[test]
    fn plateau_two_seed_standard_error() {
        let t1: Vec<_> = (0..10).map(|k| row(1, k, 2.0)).collect();
        let t2: Vec<_> = (0..10).map(|k| row(2, k, 4.0)).collect();
        let (mean, se) = summarize_plateau(&[t1, t2], 0.5).unwrap();
        assert_eq!(mean, 3.0);
        assert_eq!(se, 1.0);
    }

    #[test]
    fn window_fraction_one_covers_everything() {
        let t: Vec<_> = (0..4).map(|k| row(1, k, k as f64)).collect();
        assert_eq!(window_mean(&t, 1.0).unwrap(), 1.5);
    }

    #[test]
    fn plateau_rejects_underpopulated_input() {
        assert!(summarize_plateau(&[], 0.2).is_err());
        let t: Vec<_> = (0..4).map(|k| row(1, k, 1.0)).collect();
        assert!(summarize_plateau(&[t], 0.2).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // Any finite f64 survives the CSV rendering bit-exactly.
            #[test]
            fn float_rendering_round_trips(bits in proptest::num::u64::ANY) {
                let v = f64::from_bits(bits);
                prop_assume!(v.is_finite());
                let rendered = format_float(v);
                let parsed: f64 = rendered.parse().unwrap();
                prop_assert_eq!(parsed.to_bits(), v.to_bits());
            }
        }
    }
}
