//! The compressed-iterate fixed-point engine.
//!
//! One parameterized loop drives all four methods: the plain iteration
//! compresses each node's map output directly, the variance-reduced iteration
//! compresses the difference against a learned per-node shift `h_i` so the
//! compressed payload vanishes at the fixed point. Single-node runs are the
//! `n = 1` case of the same code path.
//!
//! Per round `k`, node `i` (plain):
//! `delta_i = C(T_i(x_k, s_ik); xi_ik)`, master sets `x_{k+1} = mean_i delta_i`.
//!
//! Variance-reduced:
//! `delta_i = C(T_i(x_k, s_ik) - h_ik; xi_ik)`,
//! `h_{i,k+1} = h_ik + alpha delta_i`,
//! `x_{k+1} = (1 - eta) x_k + eta mean_i (delta_i + h_ik)`.
//!
//! Workers transmit only the compressed `delta_i`; the master mirrors every
//! `h_i` (same `alpha`, same received `delta_i`), so the dense
//! `delta_i + h_ik` is reconstructed master-side and the uplink stays
//! compressed. The transcript records the `delta_i` cost.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::compressors::{apply_compressor, CompressorSpec};
use crate::error::{Error, Result};
use crate::numerics::{squared_distance, RngStream, Vector};
use crate::operators::{apply_map, mean_map_node, reference_fixed_point, MapSpec};
use crate::simnet::{broadcast, gather, Transcript};
use crate::theory::VrParams;

/// Substream labels: every (role, node, iteration) triple gets its own
/// independent stream, which realizes independence across nodes and
/// fresh draws across iterations.
pub mod roles {
    pub const MAP_NOISE: u64 = 0;
    pub const COMPRESSION_NOISE: u64 = 1;
    pub const INIT: u64 = 2;
    pub const CERTIFICATE: u64 = 3;
    pub const LYAPUNOV: u64 = 4;
}

/// The global iterate.
#[derive(Debug, Clone)]
pub struct IterateState {
    pub x: Vector,
    pub k: u64,
}

/// One node's shift vector and its last round of messages.
#[derive(Debug, Clone)]
pub struct WorkerState {
    pub h: Vector,
    /// Last compressed payload `delta_i`.
    pub last_delta: Vector,
    /// Last reconstructed `delta_i + h_i` (equals `delta_i` in plain mode,
    /// where `h_i` stays zero).
    pub last_combined: Vector,
}

impl WorkerState {
    pub fn new(h: Vector) -> Self {
        let d = h.dim();
        WorkerState {
            h,
            last_delta: Vector::zeros(d),
            last_combined: Vector::zeros(d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Plain,
    Vr(VrParams),
}

fn node_delta(
    map: &MapSpec,
    comp: &CompressorSpec,
    node: usize,
    k: u64,
    x: &Vector,
    shift: Option<&Vector>,
    root: &RngStream,
) -> Result<Vector> {
    let mut map_stream = root.derive(&[roles::MAP_NOISE, node as u64, k]);
    let t = apply_map(map, node, x, &mut map_stream)?;
    let payload = match shift {
        Some(h) => t.sub(h),
        None => t,
    };
    let mut comp_stream = root.derive(&[roles::COMPRESSION_NOISE, node as u64, k]);
    apply_compressor(comp, &payload, &mut comp_stream)
}

fn divergence_check(x: &Vector, k: u64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Divergence {
            iteration: k,
            r_sq: f64::INFINITY,
        })
    }
}

/// One round of the plain compressed iteration. Returns the next state and
/// the `n` compressed payloads of the round.
pub fn step_plain(
    state: &IterateState,
    map: &MapSpec,
    comp: &CompressorSpec,
    n: usize,
    root: &RngStream,
) -> Result<(IterateState, Vec<Vector>)> {
    let mut deltas = Vec::with_capacity(n);
    for i in 0..n {
        deltas.push(node_delta(map, comp, i, state.k, &state.x, None, root)?);
    }
    let x_next = Vector::mean_of(&deltas);
    divergence_check(&x_next, state.k + 1)?;
    Ok((
        IterateState {
            x: x_next,
            k: state.k + 1,
        },
        deltas,
    ))
}

/// One round of the variance-reduced iteration. Returns the next state, the
/// updated worker shifts, and the `n` compressed payloads.
pub fn step_vr(
    state: &IterateState,
    workers: &[WorkerState],
    params: VrParams,
    map: &MapSpec,
    comp: &CompressorSpec,
    n: usize,
    root: &RngStream,
) -> Result<(IterateState, Vec<WorkerState>, Vec<Vector>)> {
    params.validate()?;
    if workers.len() != n {
        return Err(Error::invalid_config(format!(
            "expected {n} worker states, got {}",
            workers.len()
        )));
    }
    let mut deltas = Vec::with_capacity(n);
    let mut combined = Vec::with_capacity(n);
    let mut next_workers = Vec::with_capacity(n);
    for (i, worker) in workers.iter().enumerate() {
        let delta = node_delta(map, comp, i, state.k, &state.x, Some(&worker.h), root)?;
        let big_delta = delta.add(&worker.h);
        next_workers.push(WorkerState {
            h: worker.h.axpy(params.alpha, &delta),
            last_delta: delta.clone(),
            last_combined: big_delta.clone(),
        });
        deltas.push(delta);
        combined.push(big_delta);
    }
    let x_next = state.x.lerp(params.eta, &Vector::mean_of(&combined));
    divergence_check(&x_next, state.k + 1)?;
    Ok((
        IterateState {
            x: x_next,
            k: state.k + 1,
        },
        next_workers,
        deltas,
    ))
}

/// Moments of `T_i(x*, s)` per node, precomputed once per run so the Lyapunov
/// value can be evaluated at every iteration:
/// `E||h - T_i(x*, s)||^2 = ||h - mean_i||^2 + var_i`.
#[derive(Debug, Clone)]
struct StarMoments {
    means: Vec<Vector>,
    vars: Vec<f64>,
}

fn star_moments(
    map: &MapSpec,
    n: usize,
    x_star: &Vector,
    mc_budget: usize,
    stream: &mut RngStream,
) -> Result<StarMoments> {
    let mut means = Vec::with_capacity(n);
    let mut vars = Vec::with_capacity(n);
    for i in 0..n {
        match mean_map_node(map, i, x_star)? {
            Some(mean) if !map.kind().is_stochastic() => {
                means.push(mean);
                vars.push(0.0);
            }
            closed_form => {
                let budget = mc_budget.max(2);
                let mut draws = Vec::with_capacity(budget);
                for _ in 0..budget {
                    draws.push(apply_map(map, i, x_star, stream)?);
                }
                let mean = match closed_form {
                    Some(m) => m,
                    None => Vector::mean_of(&draws),
                };
                let var = draws
                    .iter()
                    .map(|t| squared_distance(t, &mean).expect("same dim"))
                    .sum::<f64>()
                    / budget as f64;
                means.push(mean);
                vars.push(var);
            }
        }
    }
    Ok(StarMoments { means, vars })
}

fn psi_coefficient(params: VrParams, omega: f64, n: usize) -> f64 {
    4.0 * params.eta * params.eta * omega / (params.alpha * (n * n) as f64)
}

fn psi_value(
    x: &Vector,
    workers: &[WorkerState],
    coef: f64,
    moments: &StarMoments,
    x_star: &Vector,
) -> f64 {
    let r = squared_distance(x, x_star).expect("same dim");
    if coef == 0.0 {
        return r;
    }
    let shift_err: f64 = workers
        .iter()
        .zip(&moments.means)
        .zip(&moments.vars)
        .map(|((w, mean), var)| squared_distance(&w.h, mean).expect("same dim") + var)
        .sum();
    r + coef * shift_err
}

/// Monte-Carlo / exact estimate of the Lyapunov value
/// `Psi = ||x - x*||^2 + (4 eta^2 omega / (alpha n^2)) sum_i E||h_i - T_i(x*, s)||^2`.
#[derive(Debug, Clone, Copy)]
pub struct PsiEstimate {
    pub value: f64,
    /// Zero when every term is exact.
    pub std_error: f64,
}

pub fn lyapunov_psi(
    state: &IterateState,
    workers: &[WorkerState],
    params: VrParams,
    map: &MapSpec,
    omega: f64,
    n: usize,
    mc_budget: usize,
    stream: &mut RngStream,
) -> Result<PsiEstimate> {
    params.validate()?;
    let x_star = reference_fixed_point(map)?;
    let r = squared_distance(&state.x, &x_star)?;
    let coef = psi_coefficient(params, omega, n);
    if coef == 0.0 {
        return Ok(PsiEstimate {
            value: r,
            std_error: 0.0,
        });
    }
    if !map.kind().is_stochastic() {
        let mut dummy = RngStream::from_root(0);
        let mut shift_err = 0.0;
        for (i, w) in workers.iter().enumerate() {
            let t_star = apply_map(map, i, &x_star, &mut dummy)?;
            shift_err += squared_distance(&w.h, &t_star)?;
        }
        return Ok(PsiEstimate {
            value: r + coef * shift_err,
            std_error: 0.0,
        });
    }
    if mc_budget < 2 {
        return Err(Error::invalid_config(
            "stochastic Lyapunov estimates need mc_budget >= 2",
        ));
    }
    let mut total = 0.0;
    let mut se_sq = 0.0;
    for (i, w) in workers.iter().enumerate() {
        let mut vals = Vec::with_capacity(mc_budget);
        for _ in 0..mc_budget {
            let t = apply_map(map, i, &x_star, stream)?;
            vals.push(squared_distance(&w.h, &t)?);
        }
        let mean = vals.iter().sum::<f64>() / mc_budget as f64;
        let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
            / (mc_budget - 1) as f64;
        total += mean;
        se_sq += var / mc_budget as f64;
    }
    Ok(PsiEstimate {
        value: r + coef * total,
        std_error: coef * se_sq.sqrt(),
    })
}

/// One iteration's record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsRow {
    pub seed: u64,
    pub k: u64,
    pub r_sq: f64,
    /// Lyapunov value; present in variance-reduced runs only.
    pub psi: Option<f64>,
    pub bits_cum: u64,
    pub wall_ns: u128,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DivergenceInfo {
    pub iteration: u64,
    pub r_sq: f64,
}

/// A full run: the per-iteration rows (row `k` is the state after `k`
/// communication rounds; row 0 is the initial state), the communication
/// transcript, and the divergence marker if the run aborted early with its
/// partial trajectory flushed.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub rows: Vec<MetricsRow>,
    pub transcript: Transcript,
    pub divergence: Option<DivergenceInfo>,
    pub x_star: Vector,
    pub x_final: Vector,
}

/// Everything a run needs. `h0` must hold one shift per node; plain mode
/// ignores it.
#[derive(Debug, Clone)]
pub struct RunPlan<'a> {
    pub map: &'a MapSpec,
    pub comp: &'a CompressorSpec,
    pub mode: Mode,
    pub n: usize,
    pub iterations: u64,
    pub root_seed: u64,
    pub mc_budget: usize,
    pub x0: Vector,
    pub h0: Vec<Vector>,
}

/// Drives the configured iteration for `iterations` rounds, recording one
/// row per round plus the initial state. Fully deterministic given
/// `root_seed` (the wall-clock column aside).
pub fn run_loop(plan: &RunPlan) -> Result<RunOutput> {
    let d = plan.map.dim();
    if plan.iterations == 0 {
        return Err(Error::invalid_config("iterations must be >= 1"));
    }
    if plan.x0.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: plan.x0.dim(),
        });
    }
    if let Some(fixed_n) = plan.map.num_nodes() {
        if fixed_n != plan.n {
            return Err(Error::invalid_config(format!(
                "problem has {fixed_n} nodes but the run is configured for {}",
                plan.n
            )));
        }
    }
    plan.comp.validate_for_dim(d)?;
    if let Mode::Vr(params) = plan.mode {
        params.validate()?;
        if plan.h0.len() != plan.n || plan.h0.iter().any(|h| h.dim() != d) {
            return Err(Error::invalid_config(
                "h0 must hold one vector of the iterate dimension per node",
            ));
        }
    }

    let start = Instant::now();
    let root = RngStream::from_root(plan.root_seed);
    let x_star = reference_fixed_point(plan.map)?;
    let omega = plan.comp.omega(d);

    let (coef, moments) = match plan.mode {
        Mode::Vr(params) => {
            let coef = psi_coefficient(params, omega, plan.n);
            let moments = if coef == 0.0 {
                None
            } else {
                let mut stream = root.derive(&[roles::LYAPUNOV]);
                Some(star_moments(
                    plan.map,
                    plan.n,
                    &x_star,
                    plan.mc_budget,
                    &mut stream,
                )?)
            };
            (coef, moments)
        }
        Mode::Plain => (0.0, None),
    };

    let mut state = IterateState {
        x: plan.x0.clone(),
        k: 0,
    };
    let mut workers: Vec<WorkerState> = plan.h0.iter().cloned().map(WorkerState::new).collect();
    if matches!(plan.mode, Mode::Plain) {
        workers = (0..plan.n).map(|_| WorkerState::new(Vector::zeros(d))).collect();
    }

    let r0 = squared_distance(&state.x, &x_star)?;
    // A run started at the fixed point has no scale to diverge against; only
    // the non-finite check applies then.
    let blowup = if r0 > 0.0 { 1e12 * r0 } else { f64::INFINITY };

    let psi0 = match (&plan.mode, &moments) {
        (Mode::Vr(_), Some(m)) => Some(psi_value(&state.x, &workers, coef, m, &x_star)),
        (Mode::Vr(_), None) => Some(r0),
        (Mode::Plain, _) => None,
    };
    let mut rows = vec![MetricsRow {
        seed: plan.root_seed,
        k: 0,
        r_sq: r0,
        psi: psi0,
        bits_cum: 0,
        wall_ns: start.elapsed().as_nanos(),
    }];

    let mut transcript = Transcript::new();
    let bits_per_round =
        plan.n as u64 * (64 * d as u64 + plan.comp.message_bits(d));
    let mut bits_cum = 0u64;
    let mut divergence = None;

    for k in 0..plan.iterations {
        let round = k + 1;
        let copies = broadcast(&state.x, plan.n, round, &mut transcript);

        let step = (|| -> Result<(IterateState, Vec<WorkerState>, Vec<Vector>)> {
            match plan.mode {
                Mode::Plain => {
                    let mut deltas = Vec::with_capacity(plan.n);
                    for (i, x_i) in copies.iter().enumerate() {
                        deltas.push(node_delta(plan.map, plan.comp, i, k, x_i, None, &root)?);
                    }
                    let deltas = gather(deltas, plan.comp, round, &mut transcript)?;
                    let x_next = Vector::mean_of(&deltas);
                    divergence_check(&x_next, round)?;
                    let next_workers = deltas
                        .iter()
                        .map(|delta| WorkerState {
                            h: Vector::zeros(d),
                            last_delta: delta.clone(),
                            last_combined: delta.clone(),
                        })
                        .collect();
                    Ok((IterateState { x: x_next, k: round }, next_workers, deltas))
                }
                Mode::Vr(params) => {
                    let mut deltas = Vec::with_capacity(plan.n);
                    for ((i, x_i), worker) in copies.iter().enumerate().zip(&workers) {
                        deltas.push(node_delta(
                            plan.map,
                            plan.comp,
                            i,
                            k,
                            x_i,
                            Some(&worker.h),
                            &root,
                        )?);
                    }
                    let deltas = gather(deltas, plan.comp, round, &mut transcript)?;
                    let mut combined = Vec::with_capacity(plan.n);
                    let mut next_workers = Vec::with_capacity(plan.n);
                    for (delta, worker) in deltas.iter().zip(&workers) {
                        combined.push(delta.add(&worker.h));
                        next_workers.push(WorkerState {
                            h: worker.h.axpy(params.alpha, delta),
                            last_delta: delta.clone(),
                            last_combined: combined.last().expect("just pushed").clone(),
                        });
                    }
                    let x_next = state.x.lerp(params.eta, &Vector::mean_of(&combined));
                    divergence_check(&x_next, round)?;
                    Ok((IterateState { x: x_next, k: round }, next_workers, deltas))
                }
            }
        })();

        let (next_state, next_workers, _deltas) = match step {
            Ok(v) => v,
            Err(Error::Divergence { iteration, r_sq }) => {
                divergence = Some(DivergenceInfo { iteration, r_sq });
                break;
            }
            Err(e) => return Err(e),
        };

        let r = squared_distance(&next_state.x, &x_star)?;
        if r > blowup {
            divergence = Some(DivergenceInfo {
                iteration: round,
                r_sq: r,
            });
            break;
        }

        state = next_state;
        workers = next_workers;
        bits_cum += bits_per_round;
        debug_assert_eq!(bits_cum, transcript.bits_through_round(round));

        let psi = match (&plan.mode, &moments) {
            (Mode::Vr(_), Some(m)) => Some(psi_value(&state.x, &workers, coef, m, &x_star)),
            (Mode::Vr(_), None) => Some(r),
            (Mode::Plain, _) => None,
        };
        rows.push(MetricsRow {
            seed: plan.root_seed,
            k: round,
            r_sq: r,
            psi,
            bits_cum,
            wall_ns: start.elapsed().as_nanos(),
        });
    }

    Ok(RunOutput {
        rows,
        transcript,
        divergence,
        x_star,
        x_final: state.x,
    })
}

/// Dedicated single-node entry: the `n = 1` case of the engine.
pub fn run_single(plan: &RunPlan) -> Result<RunOutput> {
    if plan.n != 1 {
        return Err(Error::invalid_config("run_single requires n = 1"));
    }
    run_loop(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{
        generate_synthetic, MapKind, ProblemSpec, QuadraticNode, SmoothProblem,
    };
    use nalgebra::{DMatrix, DVector};

    fn diag_quadratic_map() -> MapSpec {
        let problem = ProblemSpec::Smooth(SmoothProblem::Quadratic {
            nodes: vec![QuadraticNode {
                a: DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0])),
                b: DVector::from_vec(vec![1.0, 2.0]),
            }],
            reg: 0.0,
        });
        MapSpec::new(MapKind::Gd { gamma: 0.5 }, problem).unwrap()
    }

    fn constant_output_map(n: usize, targets: Vec<Vec<f64>>) -> MapSpec {
        // A_i = I, gamma = 1, b_i = target_i makes T_i(x) = b_i exactly.
        let d = targets[0].len();
        let nodes = targets
            .into_iter()
            .map(|t| QuadraticNode {
                a: DMatrix::identity(d, d),
                b: DVector::from_vec(t),
            })
            .collect();
        assert_eq!(n, 2);
        let problem = ProblemSpec::Smooth(SmoothProblem::Quadratic { nodes, reg: 0.0 });
        MapSpec::new(MapKind::Gd { gamma: 1.0 }, problem).unwrap()
    }

    #[test]
    fn plain_identity_reduces_to_uncompressed() {
        let map = diag_quadratic_map();
        let comp = CompressorSpec::Identity;
        let root = RngStream::from_root(3);
        let mut state = IterateState {
            x: Vector::zeros(2),
            k: 0,
        };
        let mut oracle = Vector::zeros(2);
        for k in 0..50 {
            let (next, _) = step_plain(&state, &map, &comp, 1, &root).unwrap();
            let mut map_stream = root.derive(&[roles::MAP_NOISE, 0, k]);
            oracle = apply_map(&map, 0, &oracle, &mut map_stream).unwrap();
            assert_eq!(next.x.as_slice(), oracle.as_slice(), "k = {k}");
            state = next;
        }
    }

    #[test]
    fn master_averages_node_payloads() {
        // delta_1 = (2, 0), delta_2 = (0, 2) -> x' = (1, 1).
        let map = constant_output_map(2, vec![vec![2.0, 0.0], vec![0.0, 2.0]]);
        let state = IterateState {
            x: Vector::zeros(2),
            k: 0,
        };
        let (next, deltas) =
            step_plain(&state, &map, &CompressorSpec::Identity, 2, &RngStream::from_root(0))
                .unwrap();
        assert_eq!(deltas[0].as_slice(), [2.0, 0.0]);
        assert_eq!(deltas[1].as_slice(), [0.0, 2.0]);
        assert_eq!(next.x.as_slice(), [1.0, 1.0]);
    }

    #[test]
    fn plain_step_mean_is_the_uncompressed_map() {
        // With x* = 0 (b = 0) and any unbiased compressor, averaging one-step
        // draws recovers the affine map (I - gamma A) x.
        let problem = ProblemSpec::Smooth(SmoothProblem::Quadratic {
            nodes: vec![QuadraticNode {
                a: DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0])),
                b: DVector::zeros(2),
            }],
            reg: 0.0,
        });
        let map = MapSpec::new(MapKind::Gd { gamma: 0.5 }, problem).unwrap();
        let comp = CompressorSpec::Natural;
        let x = Vector::new(vec![1.3, -0.7]).unwrap();
        let expected = [0.5 * 1.3, 0.0 * -0.7]; // (I - gamma A) x
        let draws = 10_000usize;
        let mut sums = [0.0; 2];
        let mut sq_sums = [0.0; 2];
        for t in 0..draws {
            let root = RngStream::from_root(900).derive(&[t as u64]);
            let state = IterateState { x: x.clone(), k: 0 };
            let (next, _) = step_plain(&state, &map, &comp, 1, &root).unwrap();
            for j in 0..2 {
                sums[j] += next.x[j];
                sq_sums[j] += next.x[j] * next.x[j];
            }
        }
        for j in 0..2 {
            let mean = sums[j] / draws as f64;
            let var = (sq_sums[j] / draws as f64 - mean * mean).max(0.0);
            let se = (var / draws as f64).sqrt();
            assert!(
                (mean - expected[j]).abs() <= 4.0 * se + 1e-12,
                "component {j}: {mean} vs {}",
                expected[j]
            );
        }
    }

    #[test]
    fn vr_identity_full_steps_telescope_to_plain() {
        // alpha = eta = 1 with identity compression: one step equals T(x).
        let map = diag_quadratic_map();
        let comp = CompressorSpec::Identity;
        let params = VrParams {
            alpha: 1.0,
            eta: 1.0,
        };
        let root = RngStream::from_root(5);
        let state = IterateState {
            x: Vector::zeros(2),
            k: 0,
        };
        let workers = vec![WorkerState::new(Vector::zeros(2))];
        let (next, next_workers, _) =
            step_vr(&state, &workers, params, &map, &comp, 1, &root).unwrap();
        assert_eq!(next.x.as_slice(), [0.5, 1.0]);
        assert_eq!(next_workers[0].h.as_slice(), [0.5, 1.0]);
    }

    #[test]
    fn vr_eta_zero_freezes_iterate() {
        let map = diag_quadratic_map();
        let params = VrParams {
            alpha: 0.5,
            eta: f64::MIN_POSITIVE, // eta must be positive; 0 is the limit,
        };
        // eta = 0 exactly is outside (0, 1]; check the frozen-iterate identity
        // through the master update directly instead.
        let x = Vector::new(vec![0.25, -1.5]).unwrap();
        let avg = Vector::new(vec![9.0, 9.0]).unwrap();
        let frozen = x.lerp(0.0, &avg);
        assert_eq!(frozen.as_slice(), x.as_slice());
        let _ = (map, params);
    }

    #[test]
    fn run_loop_single_step_matches_manual_step() {
        let map = diag_quadratic_map();
        let comp = CompressorSpec::Natural;
        let plan = RunPlan {
            map: &map,
            comp: &comp,
            mode: Mode::Plain,
            n: 1,
            iterations: 1,
            root_seed: 11,
            mc_budget: 8,
            x0: Vector::zeros(2),
            h0: vec![Vector::zeros(2)],
        };
        let out = run_loop(&plan).unwrap();
        let root = RngStream::from_root(11);
        let state = IterateState {
            x: Vector::zeros(2),
            k: 0,
        };
        let (manual, _) = step_plain(&state, &map, &comp, 1, &root).unwrap();
        let x_star = reference_fixed_point(&map).unwrap();
        assert_eq!(out.rows.len(), 2);
        assert_eq!(
            out.rows[1].r_sq,
            squared_distance(&manual.x, &x_star).unwrap()
        );
    }

    #[test]
    fn run_loop_is_deterministic() {
        let map = diag_quadratic_map();
        let comp = CompressorSpec::Natural;
        let plan = RunPlan {
            map: &map,
            comp: &comp,
            mode: Mode::Vr(VrParams {
                alpha: 8.0 / 9.0,
                eta: 0.5,
            }),
            n: 1,
            iterations: 40,
            root_seed: 17,
            mc_budget: 8,
            x0: Vector::zeros(2),
            h0: vec![Vector::zeros(2)],
        };
        let a = run_loop(&plan).unwrap();
        let b = run_loop(&plan).unwrap();
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            assert_eq!(ra.r_sq.to_bits(), rb.r_sq.to_bits());
            assert_eq!(ra.psi.map(f64::to_bits), rb.psi.map(f64::to_bits));
            assert_eq!(ra.bits_cum, rb.bits_cum);
        }
    }

    #[test]
    fn plain_identity_matches_affine_closed_form() {
        // x_k - x* = (I - gamma A)^k (x_0 - x*) for the uncompressed path.
        let map = diag_quadratic_map();
        let comp = CompressorSpec::Identity;
        let plan = RunPlan {
            map: &map,
            comp: &comp,
            mode: Mode::Plain,
            n: 1,
            iterations: 30,
            root_seed: 1,
            mc_budget: 8,
            x0: Vector::zeros(2),
            h0: vec![Vector::zeros(2)],
        };
        let out = run_loop(&plan).unwrap();
        // Eigenfactors of I - 0.5 * diag(1, 2) are (0.5, 0).
        let x_star = [1.0, 1.0];
        for (k, row) in out.rows.iter().enumerate() {
            let e0 = 0.5f64.powi(k as i32) * (0.0 - x_star[0]);
            let expected = e0 * e0; // second coordinate is exact after step 1
            let expected = if k == 0 { expected + 1.0 } else { expected };
            assert!(
                (row.r_sq - expected).abs() <= 1e-12 * expected.max(1.0),
                "k = {k}: {} vs {expected}",
                row.r_sq
            );
        }
    }

    #[test]
    fn distributed_n1_matches_single_node_entry() {
        let mut stream = RngStream::from_root(23);
        let problem = generate_synthetic(20, 4, 3.0, 1, 0.1, &mut stream).unwrap();
        let l = problem.smooth().unwrap().constants().l_max;
        let map = MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, problem).unwrap();
        let comp = CompressorSpec::Natural;
        let plan = RunPlan {
            map: &map,
            comp: &comp,
            mode: Mode::Plain,
            n: 1,
            iterations: 25,
            root_seed: 9,
            mc_budget: 8,
            x0: Vector::zeros(4),
            h0: vec![Vector::zeros(4)],
        };
        let dist = run_loop(&plan).unwrap();
        let single = run_single(&plan).unwrap();
        for (a, b) in dist.rows.iter().zip(&single.rows) {
            assert_eq!(a.r_sq.to_bits(), b.r_sq.to_bits());
        }
    }

    #[test]
    fn plain_equals_vr_with_zero_alpha_unit_eta() {
        let mut stream = RngStream::from_root(29);
        let problem = generate_synthetic(20, 4, 3.0, 1, 0.1, &mut stream).unwrap();
        let l = problem.smooth().unwrap().constants().l_max;
        let map = MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, problem).unwrap();
        let comp = CompressorSpec::Natural;
        let root = RngStream::from_root(31);
        let mut plain = IterateState {
            x: Vector::zeros(4),
            k: 0,
        };
        let mut vr = plain.clone();
        let mut workers = vec![WorkerState::new(Vector::zeros(4))];
        // alpha in (0,1] is required; alpha -> 0 with h0 = 0 means h stays 0
        // only at alpha = 0 exactly, so drive the identity via the shifted
        // payload instead: h = 0 keeps both paths equal as long as alpha
        // multiplies a payload that is added to h once per step.
        for _ in 0..10 {
            let (p_next, _) = step_plain(&plain, &map, &comp, 1, &root).unwrap();
            let (v_next, v_workers, _) = step_vr(
                &vr,
                &workers,
                VrParams {
                    alpha: f64::MIN_POSITIVE,
                    eta: 1.0,
                },
                &map,
                &comp,
                1,
                &root,
            )
            .unwrap();
            // alpha * delta underflows to a negligible shift; the iterates
            // agree to machine precision.
            assert!(
                squared_distance(&p_next.x, &v_next.x).unwrap() <= 1e-24,
                "paths drifted"
            );
            plain = p_next;
            vr = v_next;
            workers = v_workers;
        }
    }

    #[test]
    fn lyapunov_examples() {
        let map = diag_quadratic_map();
        let params = VrParams {
            alpha: 8.0 / 9.0,
            eta: 1.0 / 3.0,
        };
        let x_star = reference_fixed_point(&map).unwrap();
        let t_star = apply_map(&map, 0, &x_star, &mut RngStream::from_root(0)).unwrap();

        // h = T(x*) and x = x* gives Psi = 0.
        let state = IterateState {
            x: x_star.clone(),
            k: 0,
        };
        let workers = vec![WorkerState::new(t_star)];
        let psi = lyapunov_psi(
            &state,
            &workers,
            params,
            &map,
            0.125,
            1,
            8,
            &mut RngStream::from_root(0),
        )
        .unwrap();
        assert_eq!(psi.value, 0.0);

        // omega = 0 collapses Psi to the squared distance.
        let state = IterateState {
            x: Vector::zeros(2),
            k: 0,
        };
        let psi0 = lyapunov_psi(
            &state,
            &workers,
            params,
            &map,
            0.0,
            1,
            8,
            &mut RngStream::from_root(0),
        )
        .unwrap();
        assert!((psi0.value - 2.0).abs() < 1e-14, "{}", psi0.value);

        // Worked constants: x = 0, h = 0, x* = (1,1), eta = 1/3, alpha = 8/9,
        // omega = 1/8, n = 1: Psi = 2 + (1/16) * 2 = 2.125.
        let workers = vec![WorkerState::new(Vector::zeros(2))];
        let psi = lyapunov_psi(
            &state,
            &workers,
            params,
            &map,
            0.125,
            1,
            8,
            &mut RngStream::from_root(0),
        )
        .unwrap();
        assert!((psi.value - 2.125).abs() < 1e-15, "{}", psi.value);
    }

    #[test]
    fn oversized_compression_diverges_with_partial_rows() {
        let mut stream = RngStream::from_root(41);
        let problem = generate_synthetic(80, 40, 50.0, 1, 0.1, &mut stream).unwrap();
        let l = problem.smooth().unwrap().constants().l_max;
        let map = MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, problem).unwrap();
        // omega = d - 1 = 39 >> rho / 2 = 1/100: far past the frontier the
        // plain iteration blows up and the run aborts at the 1e12 r0 guard.
        let comp = CompressorSpec::RandK { k: 1 };
        let plan = RunPlan {
            map: &map,
            comp: &comp,
            mode: Mode::Plain,
            n: 1,
            iterations: 500,
            root_seed: 2,
            mc_budget: 8,
            x0: Vector::zeros(40),
            h0: vec![Vector::zeros(40)],
        };
        let out = run_loop(&plan).unwrap();
        let info = out.divergence.expect("run should diverge");
        assert!(info.iteration < 500);
        assert_eq!(out.rows.len() as u64, info.iteration);
        assert!(out.rows.last().unwrap().r_sq.is_finite());
    }

    #[test]
    fn one_step_shift_recursion_holds() {
        // E||h' - T_i(x*)||^2 <= (1-a) ||h - T_i(x*)||^2 + a ||T_i(x) - T_i(x*)||^2
        // at a fixed state, within Monte-Carlo error, for a <= 1/(1 + omega).
        let mut stream = RngStream::from_root(43);
        let problem = generate_synthetic(24, 6, 2.0, 2, 0.1, &mut stream).unwrap();
        let l = problem.smooth().unwrap().constants().l_max;
        let map = MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, problem).unwrap();
        let comp = CompressorSpec::Natural;
        let alpha = 1.0 / (1.0 + 0.125);
        let x_star = reference_fixed_point(&map).unwrap();
        let mut dummy = RngStream::from_root(0);

        let x = Vector::new(vec![0.4, -0.2, 1.0, 0.3, -0.8, 0.05]).unwrap();
        let h = Vector::new(vec![0.1, 0.0, -0.5, 0.2, 0.0, 0.6]).unwrap();
        for node in 0..2 {
            let t_x = apply_map(&map, node, &x, &mut dummy).unwrap();
            let t_star = apply_map(&map, node, &x_star, &mut dummy).unwrap();
            let rhs = (1.0 - alpha) * squared_distance(&h, &t_star).unwrap()
                + alpha * squared_distance(&t_x, &t_star).unwrap();
            let draws = 10_000usize;
            let mut vals = Vec::with_capacity(draws);
            let mut s = stream.derive(&[node as u64]);
            for _ in 0..draws {
                let delta = apply_compressor(&comp, &t_x.sub(&h), &mut s).unwrap();
                let h_next = h.axpy(alpha, &delta);
                vals.push(squared_distance(&h_next, &t_star).unwrap());
            }
            let mean = vals.iter().sum::<f64>() / draws as f64;
            let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                / (draws - 1) as f64;
            let se = (var / draws as f64).sqrt();
            assert!(mean <= rhs + 3.0 * se, "node {node}: {mean} > {rhs}");
        }
    }
}
