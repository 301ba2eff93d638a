//! End-to-end acceptance suite: one test per criterion, each printing a
//! PASS line with its measured quantities and asserting its runtime budget.

use std::time::Instant;

use fpci::algorithms::{roles, run_loop, step_plain, step_vr, IterateState, MetricsRow, Mode, RunPlan, WorkerState};
use fpci::compressors::{apply_compressor, CompressorSpec};
use fpci::config::parse_config_file;
use fpci::experiment::{parse_csv, run_experiment, window_mean};
use fpci::numerics::{sample_standard_gaussian, squared_distance, RngStream, Vector};
use fpci::operators::{
    apply_map, certificate_of, generate_saddle, generate_synthetic, reference_fixed_point,
    MapKind, MapSpec, ProblemSpec,
};
use fpci::theory::{geometric_bound, plain_bound, vr_bound, vr_stepsizes, VrParams};

fn kappa2_problem(rows: usize, cols: usize, nodes: usize) -> ProblemSpec {
    let mut stream = RngStream::from_root(777).derive(&[roles::CERTIFICATE, 0]);
    generate_synthetic(rows, cols, 2.0, nodes, 0.1, &mut stream).unwrap()
}

fn gd_map(problem: ProblemSpec) -> MapSpec {
    let l = problem.smooth().unwrap().constants().l_max;
    MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, problem).unwrap()
}

fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

fn diag_quadratic_map() -> MapSpec {
    use fpci::operators::{QuadraticNode, SmoothProblem};
    use nalgebra::{DMatrix, DVector};
    let problem = ProblemSpec::Smooth(SmoothProblem::Quadratic {
        nodes: vec![QuadraticNode {
            a: DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0])),
            b: DVector::from_vec(vec![1.0, 2.0]),
        }],
        reg: 0.0,
    });
    MapSpec::new(MapKind::Gd { gamma: 0.5 }, problem).unwrap()
}

/// All subsets of size k over d coordinates, each equally likely.
fn enumerate_rand_k(x: &[f64], k: usize) -> Vec<(f64, Vec<f64>)> {
    let d = x.len();
    let subsets: Vec<u32> = (0u32..(1 << d))
        .filter(|m| m.count_ones() as usize == k)
        .collect();
    let p = 1.0 / subsets.len() as f64;
    subsets
        .into_iter()
        .map(|mask| {
            let y = (0..d)
                .map(|j| {
                    if mask & (1 << j) != 0 {
                        d as f64 / k as f64 * x[j]
                    } else {
                        0.0
                    }
                })
                .collect();
            (p, y)
        })
        .collect()
}

/// Two-point law of natural rounding for a scalar.
fn enumerate_natural(v: f64) -> Vec<(f64, f64)> {
    assert!(v > 0.0);
    let lo = 2.0f64.powi(v.log2().floor() as i32);
    let (lo, hi) = if v == lo { (v, 2.0 * v) } else { (lo, 2.0 * lo) };
    let p_down = (hi - v) / lo;
    vec![(p_down, lo), (1.0 - p_down, hi)]
}

#[test]
fn criterion_01_compressor_contract() {
    let start = Instant::now();
    let d = 8usize;
    let draws = 100_000usize;
    let kinds = [
        CompressorSpec::Identity,
        CompressorSpec::RandK { k: 3 },
        CompressorSpec::Natural,
        CompressorSpec::Dithering { levels: 4 },
    ];
    for (ci, comp) in kinds.iter().enumerate() {
        let omega = comp.omega(d);
        for v in 0..20u64 {
            let mut stream = RngStream::from_root(3000 + v).derive(&[ci as u64]);
            let x = sample_standard_gaussian(&mut stream.derive(&[0]), d);
            // Accumulate deviations y - x: unbiasedness tested through their
            // mean; the lossless case then sums exact zeros.
            let mut dev_sums = vec![0.0; d];
            let mut dev_sq_sums = vec![0.0; d];
            let mut dev_sum = 0.0;
            for _ in 0..draws {
                let y = apply_compressor(comp, &x, &mut stream).unwrap();
                for j in 0..d {
                    let e = y[j] - x[j];
                    dev_sums[j] += e;
                    dev_sq_sums[j] += e * e;
                }
                dev_sum += squared_distance(&y, &x).unwrap();
            }
            for j in 0..d {
                let mean_dev = dev_sums[j] / draws as f64;
                let var = (dev_sq_sums[j] / draws as f64 - mean_dev * mean_dev).max(0.0);
                let se = (var / draws as f64).sqrt();
                assert!(
                    mean_dev.abs() <= 4.0 * se + 1e-12,
                    "{comp:?} vector {v} component {j}: |{mean_dev}| > 4 * {se}"
                );
            }
            let msd = dev_sum / draws as f64;
            assert!(
                msd <= 1.05 * omega * x.squared_norm() + 1e-12,
                "{comp:?} vector {v}: E||C(x)-x||^2 = {msd} vs 1.05 * {omega} * {}",
                x.squared_norm()
            );
        }
    }

    // Exact enumeration for tiny dimensions.
    for (x, k) in [
        (vec![3.0, 4.0], 1usize),
        (vec![1.0, -2.0, 0.5], 1),
        (vec![1.0, -2.0, 0.5], 2),
    ] {
        let outcomes = enumerate_rand_k(&x, k);
        let omega = CompressorSpec::RandK { k }.omega(x.len());
        let norm_sq: f64 = x.iter().map(|v| v * v).sum();
        let mut var = 0.0;
        for j in 0..x.len() {
            let mean: f64 = outcomes.iter().map(|(p, y)| p * y[j]).sum();
            assert!((mean - x[j]).abs() < 1e-12);
        }
        for (p, y) in &outcomes {
            var += p * y
                .iter()
                .zip(&x)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>();
        }
        assert!((var - omega * norm_sq).abs() < 1e-12);
    }
    for v in [3.0, 1.5, 0.7, 2.0] {
        let outcomes = enumerate_natural(v);
        let mean: f64 = outcomes.iter().map(|(p, y)| p * y).sum();
        let var: f64 = outcomes.iter().map(|(p, y)| p * (y - v) * (y - v)).sum();
        assert!((mean - v).abs() < 1e-12);
        assert!(var <= 0.125 * v * v + 1e-12);
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}");
    println!("criterion 01 (compressor contract): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_reduction_oracle() {
    let start = Instant::now();
    let map = diag_quadratic_map();
    let comp = CompressorSpec::Identity;
    let root = RngStream::from_root(2);

    // Plain mode against the raw fixed-point iteration, bit for bit.
    let mut engine = IterateState {
        x: Vector::zeros(2),
        k: 0,
    };
    let mut oracle = Vector::zeros(2);
    for k in 0..100 {
        let (next, _) = step_plain(&engine, &map, &comp, 1, &root).unwrap();
        let mut map_stream = root.derive(&[roles::MAP_NOISE, 0, k]);
        oracle = apply_map(&map, 0, &oracle, &mut map_stream).unwrap();
        for j in 0..2 {
            assert_eq!(next.x[j].to_bits(), oracle[j].to_bits(), "plain k={k} j={j}");
        }
        engine = next;
    }

    // Variance-reduced mode with alpha = eta = 1 telescopes to the same path.
    let params = VrParams {
        alpha: 1.0,
        eta: 1.0,
    };
    let mut state = IterateState {
        x: Vector::zeros(2),
        k: 0,
    };
    let mut workers = vec![WorkerState::new(Vector::zeros(2))];
    let mut oracle = Vector::zeros(2);
    for k in 0..100 {
        let (next, next_workers, _) =
            step_vr(&state, &workers, params, &map, &comp, 1, &root).unwrap();
        let mut map_stream = root.derive(&[roles::MAP_NOISE, 0, k]);
        oracle = apply_map(&map, 0, &oracle, &mut map_stream).unwrap();
        for j in 0..2 {
            assert_eq!(next.x[j].to_bits(), oracle[j].to_bits(), "vr k={k} j={j}");
        }
        state = next;
        workers = next_workers;
    }

    let elapsed = start.elapsed();
    println!("criterion 02 (reduction oracle): PASS in {elapsed:?}");
}

struct SeedBundle {
    per_seed: Vec<Vec<MetricsRow>>,
}

impl SeedBundle {
    fn collect(map: &MapSpec, comp: &CompressorSpec, mode: Mode, n: usize, iters: u64, seeds: std::ops::Range<u64>) -> Self {
        let d = map.dim();
        let per_seed = seeds
            .map(|seed| {
                let plan = RunPlan {
                    map,
                    comp,
                    mode,
                    n,
                    iterations: iters,
                    root_seed: seed,
                    mc_budget: 64,
                    x0: Vector::zeros(d),
                    h0: vec![Vector::zeros(d); n],
                };
                let out = run_loop(&plan).unwrap();
                assert!(out.divergence.is_none(), "seed {seed} diverged");
                out.rows
            })
            .collect();
        SeedBundle { per_seed }
    }

    fn mean_se_at(&self, field: impl Fn(&MetricsRow) -> f64, k: usize) -> (f64, f64) {
        let vals: Vec<f64> = self.per_seed.iter().map(|rows| field(&rows[k])).collect();
        mean_and_se(&vals)
    }

    fn plateau(&self, frac: f64) -> (f64, f64) {
        let vals: Vec<f64> = self
            .per_seed
            .iter()
            .map(|rows| window_mean(rows, frac).unwrap())
            .collect();
        mean_and_se(&vals)
    }
}

#[test]
fn criterion_03_plain_neighborhood() {
    let start = Instant::now();
    let map = gd_map(kappa2_problem(100, 20, 1));
    let comp = CompressorSpec::Natural;
    let cert = certificate_of(&map, 1, 8, &mut RngStream::from_root(0)).unwrap();
    let omega = comp.omega(20);
    let bound = plain_bound(&cert, omega, 1);
    assert!(bound.valid);
    assert!((cert.rho - 0.5).abs() < 1e-9, "rho = {}", cert.rho);
    assert!((bound.rate_factor - 0.75).abs() < 1e-9);
    let radius = bound.plateau_radius_sq.unwrap();

    let k_iters = 400u64;
    let bundle = SeedBundle::collect(&map, &comp, Mode::Plain, 1, k_iters, 0..200);

    let (plateau, plateau_se) = bundle.plateau(0.2);
    assert!(
        plateau <= radius,
        "measured plateau {plateau} above theory radius {radius}"
    );

    let r0 = bundle.per_seed[0][0].r_sq;
    let drive = cert.b + 2.0 * omega * cert.sigma_sq;
    for k in 0..=k_iters as usize {
        let (mean, se) = bundle.mean_se_at(|r| r.r_sq, k);
        let envelope = geometric_bound(bound.rate_factor, drive, r0, k as u64).unwrap();
        assert!(
            mean <= envelope + 3.0 * se,
            "k = {k}: mean {mean} above envelope {envelope} + 3 * {se}"
        );
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!(
        "criterion 03 (plain-mode neighborhood): PASS in {elapsed:?} — plateau {plateau:.3e} +/- {plateau_se:.1e} <= radius {radius:.3e}, envelope held for all k <= {k_iters}"
    );
}

#[test]
fn criterion_04_node_scaling() {
    let start = Instant::now();
    let comp = CompressorSpec::Natural;
    let mut results = Vec::new();
    for n in [1usize, 10] {
        let map = gd_map(kappa2_problem(200, 20, n));
        let cert = certificate_of(&map, n, 8, &mut RngStream::from_root(0)).unwrap();
        let bound = plain_bound(&cert, comp.omega(20), n);
        assert!(bound.valid, "n = {n}");
        let bundle = SeedBundle::collect(&map, &comp, Mode::Plain, n, 400, 0..200);
        let (plateau, se) = bundle.plateau(0.2);
        let radius = bound.plateau_radius_sq.unwrap();
        assert!(
            plateau <= radius,
            "n = {n}: plateau {plateau} above radius {radius}"
        );
        results.push((n, plateau, se, radius));
    }
    let (p1, p10) = (results[0].1, results[1].1);
    assert!(
        p10 <= p1,
        "ten-node plateau {p10} not below single-node plateau {p1}"
    );

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!(
        "criterion 04 (node scaling): PASS in {elapsed:?} — plateau(n=1) {p1:.3e} (radius {:.3e}), plateau(n=10) {p10:.3e} (radius {:.3e})",
        results[0].3, results[1].3
    );
}

fn vr_linear_case(map: &MapSpec, comp: &CompressorSpec, target: f64) -> (u64, f64) {
    let n = 1usize;
    let d = map.dim();
    let cert = certificate_of(map, n, 8, &mut RngStream::from_root(0)).unwrap();
    let omega = comp.omega(d);
    let params = vr_stepsizes(&cert, omega, n);
    let bound = vr_bound(&cert, params, omega, n);
    assert!(bound.valid);
    assert_eq!(bound.plateau_radius_sq, Some(0.0));

    let x_star = reference_fixed_point(map).unwrap();
    let r0 = x_star.squared_norm(); // x0 = 0
    let budget = ((r0 / target).ln() / -bound.rate_factor.ln()).ceil() as u64 * 2;

    let plan = RunPlan {
        map,
        comp,
        mode: Mode::Vr(params),
        n,
        iterations: budget,
        root_seed: 1,
        mc_budget: 8,
        x0: Vector::zeros(d),
        h0: vec![Vector::zeros(d); n],
    };
    let out = run_loop(&plan).unwrap();
    assert!(out.divergence.is_none());
    let r_final = out.rows.last().unwrap().r_sq;
    assert!(
        r_final <= target,
        "r_K = {r_final} above {target} after K = {budget}"
    );
    (budget, r_final)
}

#[test]
fn criterion_05_vr_linear_convergence() {
    let start = Instant::now();
    let map = gd_map(kappa2_problem(100, 20, 1));

    // Natural rounding: auto stepsizes come out to alpha = 8/9, eta = 1/3,
    // rate 11/12 at condition number 2.
    let cert = certificate_of(&map, 1, 8, &mut RngStream::from_root(0)).unwrap();
    let params = vr_stepsizes(&cert, 0.125, 1);
    assert!((params.alpha - 8.0 / 9.0).abs() < 1e-12);
    assert!((params.eta - 1.0 / 3.0).abs() < 1e-9);
    let rate = vr_bound(&cert, params, 0.125, 1).rate_factor;
    assert!((rate - 11.0 / 12.0).abs() < 1e-9);
    let (k_nat, r_nat) = vr_linear_case(&map, &CompressorSpec::Natural, 1e-16);

    // Rand-1 keeps a single coordinate of twenty: omega = 19, linear all the
    // same.
    let (k_rk, r_rk) = vr_linear_case(&map, &CompressorSpec::RandK { k: 1 }, 1e-16);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!(
        "criterion 05 (vr linear convergence): PASS in {elapsed:?} — natural: r = {r_nat:.2e} within K = {k_nat}; rand-1: r = {r_rk:.2e} within K = {k_rk}"
    );
}

#[test]
fn criterion_06_lyapunov_contraction() {
    let start = Instant::now();
    let map = gd_map(kappa2_problem(100, 20, 1));
    let comp = CompressorSpec::Natural;
    let cert = certificate_of(&map, 1, 8, &mut RngStream::from_root(0)).unwrap();
    let params = vr_stepsizes(&cert, 0.125, 1);
    let rate = vr_bound(&cert, params, 0.125, 1).rate_factor;

    let bundle = SeedBundle::collect(&map, &comp, Mode::Vr(params), 1, 50, 0..200);
    for k in 0..50usize {
        let (psi_k, _) = bundle.mean_se_at(|r| r.psi.unwrap(), k);
        let (psi_next, se_next) = bundle.mean_se_at(|r| r.psi.unwrap(), k + 1);
        assert!(
            psi_next <= rate * psi_k + 3.0 * se_next,
            "k = {k}: {psi_next} > {rate} * {psi_k} + 3 * {se_next}"
        );
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!("criterion 06 (Lyapunov contraction): PASS in {elapsed:?} — rate {rate:.6} held for k <= 50 over 200 seeds");
}

#[test]
fn criterion_07_one_step_recursions() {
    let start = Instant::now();
    let n = 2usize;
    let d = 6usize;
    let mut gen = RngStream::from_root(555).derive(&[roles::CERTIFICATE, 0]);
    let problem = generate_synthetic(40, d, 2.0, n, 0.1, &mut gen).unwrap();
    let map = gd_map(problem);
    let comp = CompressorSpec::Natural;
    let omega = comp.omega(d);
    let cert = certificate_of(&map, n, 8, &mut RngStream::from_root(0)).unwrap();
    let params = vr_stepsizes(&cert, omega, n);
    let x_star = reference_fixed_point(&map).unwrap();
    let mut dummy = RngStream::from_root(0);
    let t_star: Vec<Vector> = (0..n)
        .map(|i| apply_map(&map, i, &x_star, &mut dummy).unwrap())
        .collect();

    let draws = 10_000usize;
    let mut state_stream = RngStream::from_root(4242).derive(&[1]);
    for state_idx in 0..5u64 {
        let x = x_star.add(&sample_standard_gaussian(&mut state_stream, d));
        let shifts: Vec<Vector> = (0..n)
            .map(|_| sample_standard_gaussian(&mut state_stream, d))
            .collect();
        let t_x: Vec<Vector> = (0..n)
            .map(|i| apply_map(&map, i, &x, &mut dummy).unwrap())
            .collect();

        // Shift recursion, per node.
        for i in 0..n {
            let rhs = (1.0 - params.alpha) * squared_distance(&shifts[i], &t_star[i]).unwrap()
                + params.alpha * squared_distance(&t_x[i], &t_star[i]).unwrap();
            let mut vals = Vec::with_capacity(draws);
            let mut s = state_stream.derive(&[10 + state_idx, i as u64]);
            for _ in 0..draws {
                let delta = apply_compressor(&comp, &t_x[i].sub(&shifts[i]), &mut s).unwrap();
                let h_next = shifts[i].axpy(params.alpha, &delta);
                vals.push(squared_distance(&h_next, &t_star[i]).unwrap());
            }
            let (mean, se) = mean_and_se(&vals);
            assert!(
                mean <= rhs + 3.0 * se,
                "state {state_idx} node {i}: shift recursion {mean} > {rhs} + 3 * {se}"
            );
        }

        // Distance recursion, joint over nodes.
        let r = squared_distance(&x, &x_star).unwrap();
        let mut structural = 0.0;
        for i in 0..n {
            structural += squared_distance(&t_x[i], &t_star[i]).unwrap()
                + squared_distance(&t_star[i], &shifts[i]).unwrap();
        }
        let rhs = (1.0 - params.eta * cert.rho) * r
            + params.eta * cert.b
            + 2.0 * params.eta * params.eta * omega / (n * n) as f64 * structural;
        let mut vals = Vec::with_capacity(draws);
        let mut s = state_stream.derive(&[20 + state_idx]);
        for _ in 0..draws {
            let mut combined = Vec::with_capacity(n);
            for i in 0..n {
                let delta = apply_compressor(&comp, &t_x[i].sub(&shifts[i]), &mut s).unwrap();
                combined.push(delta.add(&shifts[i]));
            }
            let x_next = x.lerp(params.eta, &Vector::mean_of(&combined));
            vals.push(squared_distance(&x_next, &x_star).unwrap());
        }
        let (mean, se) = mean_and_se(&vals);
        assert!(
            mean <= rhs + 3.0 * se,
            "state {state_idx}: distance recursion {mean} > {rhs} + 3 * {se}"
        );
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("criterion 07 (one-step recursions): PASS in {elapsed:?} — both inequalities held at 5 states, {draws} draws each");
}

#[test]
fn criterion_08_stochastic_maps() {
    let start = Instant::now();

    let config_text = r#"
mode = "vr"
iterations = 10
seeds = [1, 2, 3, 4, 5, 6, 7, 8]
mc_budget = 8192
output_dir = "unused"

[problem]
kind = "synthetic"
rows = 60
cols = 10
cond = 2.0
reg = 0.1
seed = 42

[map]
kind = "sgd"
gamma = "auto"
minibatch = 2

[compressor]
kind = "natural"
"#;
    let cfg = fpci::config::parse_config(config_text).unwrap();
    let resolved = fpci::experiment::resolve(&cfg).unwrap();

    // Assumption checks (contraction, expected Lipschitz, unbiasedness).
    let outcomes = fpci::verify::run_assumption_checks(&resolved, 1).unwrap();
    for o in &outcomes {
        assert!(o.passed, "{}: {}", o.name, o.detail);
    }

    // Plateau of the variance-reduced run against 2 eta B / min(alpha, eta rho).
    let params = match resolved.mode {
        Mode::Vr(p) => p,
        Mode::Plain => unreachable!(),
    };
    let bound = vr_bound(&resolved.certificate, params, resolved.omega, 1);
    assert!(bound.valid);
    let plateau_bound = bound.plateau_radius_sq.unwrap();
    assert!(plateau_bound > 0.0, "Monte-Carlo B produced a zero bound");
    let k_iters = ((6.0 / (1.0 - bound.rate_factor)).ceil() as u64).min(60_000);

    let bundle = SeedBundle::collect(
        &resolved.map,
        &resolved.comp,
        resolved.mode,
        1,
        k_iters,
        0..8,
    );
    let (plateau, se) = bundle.plateau(0.2);
    assert!(
        plateau <= plateau_bound + 3.0 * se,
        "measured plateau {plateau} above bound {plateau_bound} + 3 * {se}"
    );

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!(
        "criterion 08 (stochastic maps): PASS in {elapsed:?} — checks clean; plateau {plateau:.3e} <= bound {plateau_bound:.3e} (K = {k_iters}, B = {:.3e})",
        resolved.certificate.b
    );
}

#[test]
fn criterion_09_gda_saddle() {
    let start = Instant::now();
    let mut gen = RngStream::from_root(7).derive(&[roles::CERTIFICATE, 1]);
    let problem = generate_saddle(1.0, 5, &mut gen).unwrap();
    let gamma = MapSpec::auto_gamma("gda", &problem).unwrap();
    let map = MapSpec::new(MapKind::Gda { gamma }, problem).unwrap();
    let comp = CompressorSpec::Natural;
    let d = map.dim();

    let cert = certificate_of(&map, 1, 8, &mut RngStream::from_root(0)).unwrap();
    let params = vr_stepsizes(&cert, comp.omega(d), 1);
    let bound = vr_bound(&cert, params, comp.omega(d), 1);
    assert!(bound.valid);
    assert_eq!(cert.b, 0.0);

    let x0 = sample_standard_gaussian(&mut RngStream::from_root(99).derive(&[roles::INIT]), d);
    let r0 = x0.squared_norm(); // saddle point is the origin
    let budget = ((r0 / 1e-12).ln() / -bound.rate_factor.ln()).ceil() as u64 * 2;
    let plan = RunPlan {
        map: &map,
        comp: &comp,
        mode: Mode::Vr(params),
        n: 1,
        iterations: budget,
        root_seed: 1,
        mc_budget: 8,
        x0,
        h0: vec![Vector::zeros(d)],
    };
    let out = run_loop(&plan).unwrap();
    assert!(out.divergence.is_none());
    let r_final = out.rows.last().unwrap().r_sq;
    assert!(r_final <= 1e-12, "r_K = {r_final} after K = {budget}");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}");
    println!(
        "criterion 09 (descent-ascent saddle): PASS in {elapsed:?} — r = {r_final:.2e} <= 1e-12 within K = {budget}"
    );
}

fn config_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn per_k_means(per_seed: &[Vec<MetricsRow>]) -> Vec<f64> {
    let len = per_seed[0].len();
    (0..len)
        .map(|k| per_seed.iter().map(|rows| rows[k].r_sq).sum::<f64>() / per_seed.len() as f64)
        .collect()
}

#[test]
fn criterion_10_three_run_comparison() {
    let start = Instant::now();
    let tmp = tempfile::tempdir().unwrap();
    let mut curves = Vec::new();
    let mut reports = Vec::new();
    for name in ["gd_identity", "gdci_natural", "vr_gdci_natural"] {
        let cfg = parse_config_file(&config_dir().join(format!("{name}.toml"))).unwrap();
        let report = run_experiment(&cfg, &tmp.path().join(name)).unwrap();
        assert!(!report.all_diverged, "{name} diverged");
        let per_seed: Vec<Vec<MetricsRow>> = report
            .csv_paths
            .iter()
            .map(|p| parse_csv(&std::fs::read_to_string(p).unwrap()).unwrap())
            .collect();
        curves.push(per_seed);
        reports.push(report);
    }

    // Uncompressed gradient descent decays geometrically to numerical zero.
    let gd_plateau: f64 = curves[0]
        .iter()
        .map(|rows| window_mean(rows, 0.2).unwrap())
        .sum::<f64>()
        / curves[0].len() as f64;
    assert!(gd_plateau <= 1e-20, "gd plateau {gd_plateau}");

    // Compressed iterates plateau strictly above zero but inside the radius.
    let gdci_summary = &reports[1].summary;
    let gdci_plateau = gdci_summary.plateau.as_ref().unwrap().mean;
    assert!(gdci_plateau > 0.0);
    assert!(gdci_summary.verdicts.theory_valid);
    assert_eq!(gdci_summary.verdicts.plateau_within_radius, Some(true));

    // The variance-reduced run crosses below that plateau and keeps going
    // for at least six more orders of magnitude.
    let vr_means = per_k_means(&curves[2]);
    let crossing = vr_means.iter().position(|&m| m < gdci_plateau);
    assert!(crossing.is_some(), "vr curve never crossed the plateau");
    let vr_final = *vr_means.last().unwrap();
    assert!(
        vr_final <= gdci_plateau * 1e-6,
        "vr final {vr_final} vs plateau {gdci_plateau}"
    );

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!(
        "criterion 10 (three-run comparison): PASS in {elapsed:?} — gd {gd_plateau:.1e}, compressed plateau {gdci_plateau:.3e} (crossed at k = {}), vr final {vr_final:.1e}",
        crossing.unwrap()
    );
}

/// Drops the nondeterministic wall-clock column from a trajectory CSV.
fn strip_wall(csv: &str) -> String {
    csv.lines()
        .map(|line| match line.rfind(',') {
            Some(i) => &line[..i],
            None => line,
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn criterion_11_determinism() {
    let start = Instant::now();
    // One representative config per algorithm mode, map family, and
    // compressor kind, each run twice through the full pipeline.
    let cases: Vec<(&str, fn(&mut fpci::config::RunConfig))> = vec![
        ("gdci_natural", |c| {
            c.iterations = 80;
            c.seeds = vec![1, 2];
        }),
        ("vr_gdci_natural", |c| {
            c.iterations = 80;
            c.seeds = vec![1, 2];
        }),
        ("sgd_vr", |c| {
            c.iterations = 120;
            c.seeds = vec![1, 2];
            c.mc_budget = 256;
        }),
        ("saddle_gda", |c| {
            c.iterations = 150;
            c.seeds = vec![1];
        }),
        ("davis_yin_rand_k", |c| {
            c.iterations = 100;
            c.seeds = vec![1, 2];
        }),
        ("libsvm_plain", |c| {
            c.iterations = 60;
            c.seeds = vec![1, 2];
        }),
    ];
    for (name, trim) in cases {
        let mut cfg = parse_config_file(&config_dir().join(format!("{name}.toml"))).unwrap();
        trim(&mut cfg);
        let tmp_a = tempfile::tempdir().unwrap();
        let tmp_b = tempfile::tempdir().unwrap();
        let a = run_experiment(&cfg, tmp_a.path()).unwrap();
        let b = run_experiment(&cfg, tmp_b.path()).unwrap();
        for (pa, pb) in a.csv_paths.iter().zip(&b.csv_paths) {
            let ca = strip_wall(&std::fs::read_to_string(pa).unwrap());
            let cb = strip_wall(&std::fs::read_to_string(pb).unwrap());
            assert_eq!(ca, cb, "{name}: trajectory bytes differ");
        }
        let sa = std::fs::read_to_string(&a.summary_path).unwrap();
        let sb = std::fs::read_to_string(&b.summary_path).unwrap();
        assert_eq!(sa, sb, "{name}: summaries differ");
        let ta = std::fs::read_to_string(tmp_a.path().join("transcript.csv")).unwrap();
        let tb = std::fs::read_to_string(tmp_b.path().join("transcript.csv")).unwrap();
        assert_eq!(ta, tb, "{name}: transcripts differ");
    }

    let elapsed = start.elapsed();
    println!("criterion 11 (determinism): PASS in {elapsed:?} — byte-identical CSVs, summaries, transcripts across re-runs");
}
