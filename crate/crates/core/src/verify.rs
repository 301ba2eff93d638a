//! Statistical verification of the modeling assumptions a configuration
//! relies on: compressor unbiasedness and variance, the one-step contraction
//! and expected-Lipschitz properties of the map, gradient correctness, and
//! the fixed-point residual.

use crate::compressors::{apply_compressor, estimate_moments};
use crate::error::Result;
use crate::experiment::ResolvedExperiment;
use crate::numerics::{sample_standard_gaussian, squared_distance, RngStream, Vector};
use crate::operators::{apply_map, node_lipschitz_sq, reference_fixed_point, ProblemSpec};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// Runs every applicable check with Monte-Carlo budgets suitable for a CLI
/// invocation. Deterministic given the resolved experiment.
pub fn run_assumption_checks(resolved: &ResolvedExperiment, n: usize) -> Result<Vec<CheckOutcome>> {
    let mut outcomes = Vec::new();
    let d = resolved.map.dim();
    let stream = RngStream::from_root(0xC0FFEE).derive(&[99]);

    // Compressor contract at N = 1e5 draws on a random payload.
    let x = sample_standard_gaussian(&mut stream.derive(&[0]), d);
    let draws = 100_000usize;
    let moments = estimate_moments(&resolved.comp, &x, draws, &mut stream.derive(&[1]))?;
    {
        let mut s = stream.derive(&[1]);
        let mut sq_sums = vec![0.0; d];
        for _ in 0..draws {
            let y = apply_compressor(&resolved.comp, &x, &mut s)?;
            for j in 0..d {
                sq_sums[j] += y[j] * y[j];
            }
        }
        let mut worst: f64 = 0.0;
        for j in 0..d {
            let mean = moments.mean[j];
            let var = (sq_sums[j] / draws as f64 - mean * mean).max(0.0);
            let se = (var / draws as f64).sqrt();
            if se > 0.0 {
                worst = worst.max((mean - x[j]).abs() / se);
            } else if (mean - x[j]).abs() > 0.0 {
                worst = f64::INFINITY;
            }
        }
        outcomes.push(CheckOutcome::new(
            "compressor-unbiasedness",
            worst <= 4.0,
            format!("worst componentwise deviation {worst:.2} standard errors (limit 4)"),
        ));
    }
    {
        let bound = resolved.omega * x.squared_norm();
        let passed = moments.mean_sq_deviation <= bound * 1.05 + 1e-15;
        outcomes.push(CheckOutcome::new(
            "compressor-variance",
            passed,
            format!(
                "E||C(x)-x||^2 = {:.6e} vs omega*||x||^2 = {bound:.6e}",
                moments.mean_sq_deviation
            ),
        ));
    }

    // Fixed-point residual of the node-averaged map.
    let x_star = reference_fixed_point(&resolved.map)?;
    let stochastic = resolved.map.kind().is_stochastic();
    if stochastic {
        let draws = 20_000usize;
        let mut s = stream.derive(&[2]);
        let mut acc = Vector::zeros(d);
        for _ in 0..draws {
            let mut avg = Vector::zeros(d);
            for i in 0..n {
                avg = avg.add(&apply_map(&resolved.map, i, &x_star, &mut s)?);
            }
            acc = acc.add(&avg.scale(1.0 / n as f64));
        }
        let mean = acc.scale(1.0 / draws as f64);
        let residual = squared_distance(&mean, &x_star)?.sqrt();
        // Mean-map residual shrinks like 1/sqrt(draws); allow a loose band.
        let tol = 50.0 / (draws as f64).sqrt();
        outcomes.push(CheckOutcome::new(
            "fixed-point",
            residual <= tol,
            format!("mean-map residual {residual:.3e} (Monte-Carlo tolerance {tol:.3e})"),
        ));
    } else {
        let mut dummy = RngStream::from_root(0);
        let mut avg = Vector::zeros(d);
        for i in 0..n {
            avg = avg.add(&apply_map(&resolved.map, i, &x_star, &mut dummy)?);
        }
        avg = avg.scale(1.0 / n as f64);
        let residual = squared_distance(&avg, &x_star)?.sqrt();
        outcomes.push(CheckOutcome::new(
            "fixed-point",
            residual <= 1e-10,
            format!("residual {residual:.3e} (limit 1e-10)"),
        ));
    }

    // One-step contraction toward the fixed point (Assumption 1 shape).
    {
        let cert = &resolved.certificate;
        let mut s = stream.derive(&[3]);
        let mut worst = f64::NEG_INFINITY;
        let mut passed = true;
        for _ in 0..20 {
            let probe = x_star.add(&sample_standard_gaussian(&mut s, d));
            let r = squared_distance(&probe, &x_star)?;
            if stochastic {
                let draws = 2000usize;
                let mut vals = Vec::with_capacity(draws);
                for _ in 0..draws {
                    let mut avg = Vector::zeros(d);
                    for i in 0..n {
                        avg = avg.add(&apply_map(&resolved.map, i, &probe, &mut s)?);
                    }
                    vals.push(squared_distance(&avg.scale(1.0 / n as f64), &x_star)?);
                }
                let mean = vals.iter().sum::<f64>() / draws as f64;
                let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                    / (draws - 1) as f64;
                let se = (var / draws as f64).sqrt();
                let bound = (1.0 - cert.rho) * r + cert.b + 3.0 * se;
                passed &= mean <= bound;
                worst = worst.max(mean - bound);
            } else {
                let mut dummy = RngStream::from_root(0);
                let mut avg = Vector::zeros(d);
                for i in 0..n {
                    avg = avg.add(&apply_map(&resolved.map, i, &probe, &mut dummy)?);
                }
                let lhs = squared_distance(&avg.scale(1.0 / n as f64), &x_star)?;
                let bound = (1.0 - cert.rho) * r * (1.0 + 1e-10) + 1e-12;
                passed &= lhs <= bound;
                worst = worst.max(lhs - bound);
            }
        }
        outcomes.push(CheckOutcome::new(
            "contraction",
            passed,
            format!("worst slack above the certified bound: {worst:.3e}"),
        ));
    }

    // Expected Lipschitz continuity per node (Assumption 2 shape).
    {
        let mut s = stream.derive(&[4]);
        let mut passed = true;
        let mut worst = f64::NEG_INFINITY;
        for i in 0..n {
            let c_sq = node_lipschitz_sq(&resolved.map, i);
            for pair in 0..5 {
                let a = sample_standard_gaussian(&mut s, d);
                let b = sample_standard_gaussian(&mut s, d);
                let dist = squared_distance(&a, &b)?;
                if stochastic {
                    let draws = 2000usize;
                    let mut vals = Vec::with_capacity(draws);
                    for t in 0..draws {
                        let mut sa = s.derive(&[i as u64, pair, t as u64]);
                        let mut sb = sa.clone();
                        let ta = apply_map(&resolved.map, i, &a, &mut sa)?;
                        let tb = apply_map(&resolved.map, i, &b, &mut sb)?;
                        vals.push(squared_distance(&ta, &tb)?);
                    }
                    let mean = vals.iter().sum::<f64>() / draws as f64;
                    let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                        / (draws - 1) as f64;
                    let se = (var / draws as f64).sqrt();
                    passed &= mean <= c_sq * dist + 3.0 * se;
                    worst = worst.max(mean - c_sq * dist - 3.0 * se);
                } else {
                    let mut dummy = RngStream::from_root(0);
                    let ta = apply_map(&resolved.map, i, &a, &mut dummy)?;
                    let tb = apply_map(&resolved.map, i, &b, &mut dummy)?;
                    let lhs = squared_distance(&ta, &tb)?;
                    passed &= lhs <= c_sq * dist * (1.0 + 1e-10) + 1e-12;
                    worst = worst.max(lhs - c_sq * dist);
                }
            }
        }
        outcomes.push(CheckOutcome::new(
            "expected-lipschitz",
            passed,
            format!("worst slack above c_i^2 ||x-y||^2: {worst:.3e}"),
        ));
    }

    // Analytic gradient against central differences, smooth problems only.
    if let Some(smooth) = resolved.map.problem().smooth() {
        let mut s = stream.derive(&[5]);
        let probe = sample_standard_gaussian(&mut s, d);
        let zv = nalgebra::DVector::from_column_slice(probe.as_slice());
        let grad = smooth.grad_full(&zv);
        let eps = 1e-6;
        let mut worst_rel: f64 = 0.0;
        for j in 0..d {
            let mut hi = zv.clone();
            let mut lo = zv.clone();
            hi[j] += eps;
            lo[j] -= eps;
            let value = |v: &nalgebra::DVector<f64>| -> f64 {
                // 0.5 x'Hx - b'x reconstructed through the gradient: use the
                // dot-product identity f(v) - f(w) = int grad; cheaper here to
                // evaluate via grad at midpoints is overkill, so use the
                // quadratic form directly.
                let g0 = smooth.grad_full(&nalgebra::DVector::zeros(d));
                let gv = smooth.grad_full(v);
                // For quadratics grad is affine: f(v) = (g(v) + g(0))' v / 2 + f(0).
                ((gv + g0).dot(v)) / 2.0
            };
            let fd = (value(&hi) - value(&lo)) / (2.0 * eps);
            let rel = (grad[j] - fd).abs() / grad[j].abs().max(1.0);
            worst_rel = worst_rel.max(rel);
        }
        outcomes.push(CheckOutcome::new(
            "gradient-finite-differences",
            worst_rel <= 1e-6,
            format!("worst relative error {worst_rel:.3e} (limit 1e-6)"),
        ));
    }

    // Minibatch gradient unbiasedness for stochastic maps.
    if stochastic {
        if let Some(smooth) = resolved.map.problem().smooth() {
            let mut s = stream.derive(&[6]);
            let probe = sample_standard_gaussian(&mut s, d);
            let zv = nalgebra::DVector::from_column_slice(probe.as_slice());
            let draws = 10_000usize;
            let mut passed = true;
            for i in 0..n {
                let full = smooth.grad_node(i, &zv);
                let mut sums = nalgebra::DVector::zeros(d);
                let mut sq_sums = nalgebra::DVector::zeros(d);
                for _ in 0..draws {
                    let g = smooth.minibatch_grad(i, &zv, 2, &mut s)?;
                    sq_sums += g.map(|v| v * v);
                    sums += g;
                }
                for j in 0..d {
                    let mean = sums[j] / draws as f64;
                    let var = (sq_sums[j] / draws as f64 - mean * mean).max(0.0);
                    let se = (var / draws as f64).sqrt();
                    passed &= (mean - full[j]).abs() <= 4.0 * se + 1e-12;
                }
            }
            outcomes.push(CheckOutcome::new(
                "stochastic-gradient-unbiasedness",
                passed,
                "minibatch gradient mean within 4 standard errors of the full gradient"
                    .to_string(),
            ));
        }
    }

    // Saddle problems have no smooth() accessor; note the skipped checks.
    if matches!(resolved.map.problem(), ProblemSpec::Saddle(_)) {
        outcomes.push(CheckOutcome::new(
            "gradient-finite-differences",
            true,
            "saddle field is affine by construction; check not applicable".to_string(),
        ));
    }

    Ok(outcomes)
}
