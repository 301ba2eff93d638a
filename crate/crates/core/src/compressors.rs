//! Unbiased randomized compression operators with known variance parameter
//! `omega`, Monte-Carlo moment estimation, and a per-message bit-cost model.
//!
//! Every operator `C` here satisfies `E[C(x)] = x` and
//! `E||C(x) - x||^2 <= omega * ||x||^2`, with `omega` given in closed form by
//! [`CompressorSpec::omega`]:
//!
//! | kind                | omega                    |
//! |---------------------|--------------------------|
//! | identity            | 0                        |
//! | rand-k              | d/k - 1                  |
//! | natural rounding    | 1/8                      |
//! | dithering (s levels)| min(d/s^2, sqrt(d)/s)    |
//!
//! Bit costs are a cost model for the simulated network, not a wire format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{RngStream, Vector};

/// Description of a compression operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CompressorSpec {
    /// Lossless passthrough; `omega = 0`.
    Identity,
    /// Keep a uniformly random `k`-subset of coordinates, scaled by `d/k`.
    RandK { k: usize },
    /// Randomized rounding of each coordinate to an adjacent power of two.
    Natural,
    /// Norm-scaled randomized rounding onto `levels` uniform levels per sign.
    Dithering { levels: u32 },
}

impl CompressorSpec {
    /// Checks the spec against a payload dimension.
    pub fn validate_for_dim(&self, d: usize) -> Result<()> {
        match self {
            CompressorSpec::RandK { k } => {
                if *k == 0 || *k > d {
                    Err(Error::invalid_config(format!(
                        "rand_k requires 1 <= k <= d, got k = {k} with d = {d}"
                    )))
                } else {
                    Ok(())
                }
            }
            CompressorSpec::Dithering { levels } => {
                if *levels == 0 {
                    Err(Error::invalid_config("dithering requires levels >= 1"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Tightest variance parameter `omega` for payload dimension `d`.
    pub fn omega(&self, d: usize) -> f64 {
        match self {
            CompressorSpec::Identity => 0.0,
            CompressorSpec::RandK { k } => d as f64 / *k as f64 - 1.0,
            CompressorSpec::Natural => 0.125,
            CompressorSpec::Dithering { levels } => {
                let s = *levels as f64;
                let d = d as f64;
                (d / (s * s)).min(d.sqrt() / s)
            }
        }
    }

    /// Modeled uplink cost of one compressed message of dimension `d`, in bits.
    pub fn message_bits(&self, d: usize) -> u64 {
        let d64 = d as u64;
        match self {
            CompressorSpec::Identity => 64 * d64,
            CompressorSpec::RandK { k } => *k as u64 * (64 + ceil_log2(d64.max(1))),
            CompressorSpec::Natural => 9 * d64,
            CompressorSpec::Dithering { levels } => {
                64 + d64 * (1 + ceil_log2(*levels as u64 + 1))
            }
        }
    }
}

fn ceil_log2(x: u64) -> u64 {
    debug_assert!(x >= 1);
    64 - (x - 1).leading_zeros() as u64
}

/// One application of the compression operator, deterministic given `stream`.
pub fn apply_compressor(
    spec: &CompressorSpec,
    x: &Vector,
    stream: &mut RngStream,
) -> Result<Vector> {
    let d = x.dim();
    spec.validate_for_dim(d)?;
    if !x.is_finite() {
        return Err(Error::non_finite("apply_compressor input"));
    }
    let out = match spec {
        CompressorSpec::Identity => x.clone(),
        CompressorSpec::RandK { k } => rand_k(x, *k, stream),
        CompressorSpec::Natural => natural(x, stream),
        CompressorSpec::Dithering { levels } => dithering(x, *levels, stream),
    };
    out.ensure_finite("apply_compressor output")
}

fn rand_k(x: &Vector, k: usize, stream: &mut RngStream) -> Vector {
    let d = x.dim();
    let scale = d as f64 / k as f64;
    let mut out = vec![0.0; d];
    let picked = rand::seq::index::sample(stream, d, k);
    for j in picked.iter() {
        out[j] = scale * x[j];
    }
    Vector::from_raw(out)
}

/// Rounds `|v|` to the bracketing powers of two `[lo, hi] = [2^a, 2^{a+1}]`.
/// Exact powers of two (and zero) return unchanged without touching `u`.
fn natural_round(v: f64, u: f64) -> f64 {
    if v == 0.0 {
        return v;
    }
    let (lo, hi) = pow2_bracket(v.abs());
    // Down-probability (hi - |v|) / lo keeps the expectation equal to v.
    let p_down = (hi - v.abs()) / lo;
    let mag = if u < p_down { lo } else { hi };
    mag.copysign(v)
}

/// `(2^a, 2^{a+1})` with `2^a <= v < 2^{a+1}` for finite `v > 0`. Subnormals
/// are normalized by an exact power-of-two scaling first, so they round on
/// their true binary exponent like any other value.
fn pow2_bracket(v: f64) -> (f64, f64) {
    debug_assert!(v > 0.0 && v.is_finite());
    let bits = v.to_bits();
    let biased_exp = (bits >> 52) & 0x7ff;
    if biased_exp == 0 {
        let scale = f64::from_bits(1086u64 << 52); // 2^63
        let (lo, hi) = pow2_bracket(v * scale);
        (lo / scale, hi / scale)
    } else {
        let lo = f64::from_bits(biased_exp << 52);
        (lo, lo * 2.0)
    }
}

fn natural(x: &Vector, stream: &mut RngStream) -> Vector {
    // One uniform per coordinate, drawn unconditionally, keeps stream
    // consumption independent of the payload values.
    Vector::from_raw(
        x.as_slice()
            .iter()
            .map(|&v| {
                let u = stream.uniform();
                natural_round(v, u)
            })
            .collect(),
    )
}

fn dithering(x: &Vector, levels: u32, stream: &mut RngStream) -> Vector {
    let norm = x.norm();
    if norm == 0.0 {
        return Vector::zeros(x.dim());
    }
    let s = levels as f64;
    Vector::from_raw(
        x.as_slice()
            .iter()
            .map(|&v| {
                let u = stream.uniform();
                let t = s * v.abs() / norm; // in [0, s]
                let low = t.floor();
                let p_up = t - low;
                let level = if u < p_up { low + 1.0 } else { low };
                (norm * level / s).copysign(v)
            })
            .collect(),
    )
}

/// Empirical first and second moments of `C(x)` over `samples` draws.
#[derive(Debug, Clone)]
pub struct Moments {
    /// Componentwise empirical mean of `C(x)`.
    pub mean: Vector,
    /// Empirical `E||C(x) - x||^2`.
    pub mean_sq_deviation: f64,
    /// Standard error of `mean_sq_deviation`.
    pub std_error: f64,
}

pub fn estimate_moments(
    spec: &CompressorSpec,
    x: &Vector,
    samples: usize,
    stream: &mut RngStream,
) -> Result<Moments> {
    if samples < 2 {
        return Err(Error::invalid_config("estimate_moments requires N >= 2"));
    }
    let d = x.dim();
    let mut sum = vec![0.0; d];
    let mut dev_sum = 0.0;
    let mut dev_sq_sum = 0.0;
    for _ in 0..samples {
        let y = apply_compressor(spec, x, stream)?;
        let mut dev = 0.0;
        for j in 0..d {
            sum[j] += y[j];
            let e = y[j] - x[j];
            dev += e * e;
        }
        dev_sum += dev;
        dev_sq_sum += dev * dev;
    }
    let n = samples as f64;
    let mean = Vector::from_raw(sum.into_iter().map(|v| v / n).collect());
    let msd = dev_sum / n;
    let sample_var = (dev_sq_sum - n * msd * msd).max(0.0) / (n - 1.0);
    Ok(Moments {
        mean,
        mean_sq_deviation: msd,
        std_error: (sample_var / n).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stream(tag: u64) -> RngStream {
        RngStream::from_root(100).derive(&[tag])
    }

    /// Exhaustive outcome distribution of rand-k for tiny dimensions:
    /// all (d choose k) supports, each with equal probability.
    fn enumerate_rand_k(x: &[f64], k: usize) -> Vec<(f64, Vec<f64>)> {
        let d = x.len();
        let mut outcomes = Vec::new();
        let mut count = 0usize;
        for mask in 0u32..(1 << d) {
            if mask.count_ones() as usize != k {
                continue;
            }
            count += 1;
            let y: Vec<f64> = (0..d)
                .map(|j| {
                    if mask & (1 << j) != 0 {
                        d as f64 / k as f64 * x[j]
                    } else {
                        0.0
                    }
                })
                .collect();
            outcomes.push(y);
        }
        let p = 1.0 / count as f64;
        outcomes.into_iter().map(|y| (p, y)).collect()
    }

    /// Two-point outcome distribution of natural rounding for a scalar.
    fn enumerate_natural_scalar(v: f64) -> Vec<(f64, f64)> {
        if v == 0.0 {
            return vec![(1.0, 0.0)];
        }
        let (lo, hi) = pow2_bracket(v.abs());
        let p_down = (hi - v.abs()) / lo;
        vec![
            (p_down, lo.copysign(v)),
            (1.0 - p_down, hi.copysign(v)),
        ]
    }

    #[test]
    fn identity_is_lossless() {
        let x = Vector::new(vec![1.5, -2.0]).unwrap();
        for tag in 0..5 {
            let y = apply_compressor(&CompressorSpec::Identity, &x, &mut stream(tag)).unwrap();
            assert_eq!(y.as_slice(), x.as_slice());
        }
    }

    #[test]
    fn rand_k_enumeration_matches_closed_form() {
        // d <= 3: check E[C(x)] = x and E||C(x)-x||^2 = (d/k - 1)||x||^2 exactly.
        for (x, k) in [
            (vec![3.0, 4.0], 1usize),
            (vec![1.0, -2.0, 0.5], 1),
            (vec![1.0, -2.0, 0.5], 2),
            (vec![1.0, -2.0, 0.5], 3),
        ] {
            let d = x.len();
            let outcomes = enumerate_rand_k(&x, k);
            let norm_sq: f64 = x.iter().map(|v| v * v).sum();
            let mut mean = vec![0.0; d];
            let mut var = 0.0;
            for (p, y) in &outcomes {
                for j in 0..d {
                    mean[j] += p * y[j];
                    var += p * (y[j] - x[j]) * (y[j] - x[j]);
                }
            }
            let omega = CompressorSpec::RandK { k }.omega(d);
            for j in 0..d {
                assert!((mean[j] - x[j]).abs() < 1e-12);
            }
            assert!((var - omega * norm_sq).abs() < 1e-12, "var {var}");
        }
    }

    #[test]
    fn rand_k_two_outcomes_d2() {
        // RandK(1) on [3,4]: [6,0] or [0,8], each with probability 1/2.
        let x = Vector::new(vec![3.0, 4.0]).unwrap();
        let spec = CompressorSpec::RandK { k: 1 };
        let mut seen = [0usize; 2];
        let mut s = stream(1);
        for _ in 0..2000 {
            let y = apply_compressor(&spec, &x, &mut s).unwrap();
            if y.as_slice() == [6.0, 0.0] {
                seen[0] += 1;
            } else if y.as_slice() == [0.0, 8.0] {
                seen[1] += 1;
            } else {
                panic!("unexpected outcome {:?}", y.as_slice());
            }
        }
        // Each outcome has probability 1/2; 2000 draws stay within 5 sigma.
        assert!(seen[0] > 800 && seen[1] > 800, "{seen:?}");
    }

    #[test]
    fn natural_scalar_enumeration() {
        // 3.0 rounds to 2.0 or 4.0 with probability 1/2 each.
        let outcomes = enumerate_natural_scalar(3.0);
        assert_eq!(outcomes.len(), 2);
        let mean: f64 = outcomes.iter().map(|(p, y)| p * y).sum();
        let var: f64 = outcomes.iter().map(|(p, y)| p * (y - 3.0) * (y - 3.0)).sum();
        assert!((mean - 3.0).abs() < 1e-12);
        assert!((var - 1.0).abs() < 1e-12);
        assert!(var <= 0.125 * 9.0 + 1e-12);
    }

    #[test]
    fn natural_lattice_point_is_fixed() {
        let x = Vector::new(vec![2.0]).unwrap();
        let mut s = stream(2);
        for _ in 0..100 {
            let y = apply_compressor(&CompressorSpec::Natural, &x, &mut s).unwrap();
            assert_eq!(y.as_slice(), [2.0]);
        }
    }

    #[test]
    fn natural_handles_negatives_zero_and_subnormals() {
        let sub = f64::from_bits(3); // subnormal
        let x = Vector::new(vec![-3.0, 0.0, sub]).unwrap();
        let mut s = stream(3);
        for _ in 0..200 {
            let y = apply_compressor(&CompressorSpec::Natural, &x, &mut s).unwrap();
            assert!(y[0] == -2.0 || y[0] == -4.0);
            assert_eq!(y[1], 0.0);
            let (lo, hi) = pow2_bracket(sub);
            assert!(y[2] == lo || y[2] == hi);
        }
    }

    #[test]
    fn omega_values() {
        assert_eq!(CompressorSpec::Natural.omega(1), 0.125);
        assert_eq!(CompressorSpec::Natural.omega(1000), 0.125);
        assert_eq!(CompressorSpec::RandK { k: 1 }.omega(2), 1.0);
        assert_eq!(CompressorSpec::Identity.omega(10), 0.0);
        assert_eq!(CompressorSpec::RandK { k: 5 }.omega(5), 0.0);
        // min(d/s^2, sqrt(d)/s) = min(0.5, ~0.707) for d = 8, s = 4.
        assert_eq!(CompressorSpec::Dithering { levels: 4 }.omega(8), 0.5);
    }

    #[test]
    fn message_bit_costs() {
        assert_eq!(CompressorSpec::Identity.message_bits(10), 640);
        assert_eq!(CompressorSpec::RandK { k: 3 }.message_bits(8), 201);
        assert_eq!(CompressorSpec::Natural.message_bits(4), 36);
        // 64 + d * (1 + ceil(log2(s + 1))) = 64 + 8 * (1 + 3)
        assert_eq!(CompressorSpec::Dithering { levels: 4 }.message_bits(8), 96);
    }

    #[test]
    fn rand_k_support_size() {
        let x = Vector::new(vec![1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        let spec = CompressorSpec::RandK { k: 2 };
        let mut s = stream(4);
        for _ in 0..100 {
            let y = apply_compressor(&spec, &x, &mut s).unwrap();
            let nonzeros = y.as_slice().iter().filter(|v| **v != 0.0).count();
            assert_eq!(nonzeros, 2);
        }
    }

    #[test]
    fn rand_k_rejects_k_above_dim() {
        let x = Vector::zeros(2);
        let err = apply_compressor(&CompressorSpec::RandK { k: 3 }, &x, &mut stream(5));
        assert!(err.is_err());
    }

    #[test]
    fn estimate_moments_identity() {
        let x = Vector::new(vec![0.25, -1.5, 3.0]).unwrap();
        let m = estimate_moments(&CompressorSpec::Identity, &x, 100, &mut stream(6)).unwrap();
        assert_eq!(m.mean.as_slice(), x.as_slice());
        assert_eq!(m.mean_sq_deviation, 0.0);
        assert_eq!(m.std_error, 0.0);
    }

    #[test]
    fn estimate_moments_rand_k() {
        // Exact deviation from enumeration is 25 for RandK(1) on [3,4].
        let x = Vector::new(vec![3.0, 4.0]).unwrap();
        let m =
            estimate_moments(&CompressorSpec::RandK { k: 1 }, &x, 100_000, &mut stream(7)).unwrap();
        assert!((m.mean_sq_deviation - 25.0).abs() <= 3.0 * m.std_error);
    }

    #[test]
    fn estimate_moments_natural_scalar() {
        let x = Vector::new(vec![3.0]).unwrap();
        let m = estimate_moments(&CompressorSpec::Natural, &x, 100_000, &mut stream(8)).unwrap();
        assert!((m.mean_sq_deviation - 1.0).abs() <= 3.0 * m.std_error);
        // Componentwise mean: per-draw values in {2,4}, sd = 1, SE = 1/sqrt(N).
        assert!((m.mean[0] - 3.0).abs() <= 4.0 / (100_000f64).sqrt());
    }

    #[test]
    fn unbiasedness_and_variance_bound_smoke() {
        let n = 20_000usize;
        let specs = [
            CompressorSpec::RandK { k: 2 },
            CompressorSpec::Natural,
            CompressorSpec::Dithering { levels: 3 },
        ];
        for (t, spec) in specs.iter().enumerate() {
            let mut s = stream(20 + t as u64);
            let x = crate::numerics::sample_standard_gaussian(&mut s.derive(&[0]), 6);
            let omega = spec.omega(6);
            let m = estimate_moments(spec, &x, n, &mut s).unwrap();
            assert!(
                m.mean_sq_deviation <= omega * x.squared_norm() * 1.05,
                "{spec:?}: {} > {}",
                m.mean_sq_deviation,
                omega * x.squared_norm()
            );
            // Componentwise 4-sigma band, using a second pass for the SEs.
            let mut s2 = stream(20 + t as u64);
            let _ = crate::numerics::sample_standard_gaussian(&mut s2.derive(&[0]), 6);
            let mut sums = vec![0.0; 6];
            let mut sq_sums = vec![0.0; 6];
            for _ in 0..n {
                let y = apply_compressor(spec, &x, &mut s2).unwrap();
                for j in 0..6 {
                    sums[j] += y[j];
                    sq_sums[j] += y[j] * y[j];
                }
            }
            for j in 0..6 {
                let mean = sums[j] / n as f64;
                let var = (sq_sums[j] / n as f64 - mean * mean).max(0.0);
                let se = (var / n as f64).sqrt();
                assert!((mean - x[j]).abs() <= 4.0 * se + 1e-12, "{spec:?} comp {j}");
                assert_eq!(mean, m.mean[j]);
            }
        }
    }

    #[test]
    fn dithering_zero_vector() {
        let x = Vector::zeros(4);
        let y =
            apply_compressor(&CompressorSpec::Dithering { levels: 2 }, &x, &mut stream(9)).unwrap();
        assert_eq!(y.as_slice(), x.as_slice());
    }

    #[test]
    fn variance_decomposition() {
        // E||X - Y||^2 = E||X - EX||^2 + ||EX - Y||^2 for compressor draws X
        // and a fixed Y, within 3 standard errors.
        let x = Vector::new(vec![1.0, -0.7, 2.2, 0.3]).unwrap();
        let y = Vector::new(vec![0.5, 0.5, 0.5, 0.5]).unwrap();
        let spec = CompressorSpec::RandK { k: 2 };
        let n = 50_000usize;
        let mut s = stream(10);
        let mut draws = Vec::with_capacity(n);
        for _ in 0..n {
            draws.push(apply_compressor(&spec, &x, &mut s).unwrap());
        }
        let mean = Vector::mean_of(&draws);
        let dist_y: Vec<f64> = draws
            .iter()
            .map(|d| crate::numerics::squared_distance(d, &y).unwrap())
            .collect();
        let dist_mean: Vec<f64> = draws
            .iter()
            .map(|d| crate::numerics::squared_distance(d, &mean).unwrap())
            .collect();
        let avg = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
        let se = |v: &[f64]| {
            let m = avg(v);
            (v.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (v.len() - 1) as f64
                / v.len() as f64)
                .sqrt()
        };
        let lhs = avg(&dist_y);
        let rhs = avg(&dist_mean) + crate::numerics::squared_distance(&mean, &y).unwrap();
        let tol = 3.0 * (se(&dist_y) + se(&dist_mean));
        assert!((lhs - rhs).abs() <= tol, "lhs {lhs} rhs {rhs} tol {tol}");
    }

    #[test]
    fn independent_sum_variance() {
        // Var(sum of independent draws) = sum of variances, within 3 SEs.
        let x = Vector::new(vec![0.9, -1.4, 0.2]).unwrap();
        let spec = CompressorSpec::Natural;
        let n_draws = 50_000usize;
        let n_terms = 4usize;
        let mut streams: Vec<RngStream> =
            (0..n_terms).map(|i| stream(30).derive(&[i as u64])).collect();
        // Per-term variances and the summed-draw variance from the same draws.
        let mut term_devs: Vec<Vec<f64>> = vec![Vec::with_capacity(n_draws); n_terms];
        let mut sum_devs: Vec<f64> = Vec::with_capacity(n_draws);
        for _ in 0..n_draws {
            let mut sum_dev = Vector::zeros(3);
            for (i, s) in streams.iter_mut().enumerate() {
                let y = apply_compressor(&spec, &x, s).unwrap();
                let dev = y.sub(&x);
                term_devs[i].push(dev.squared_norm());
                sum_dev = sum_dev.add(&dev);
            }
            sum_devs.push(sum_dev.squared_norm());
        }
        let avg = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
        let se = |v: &[f64]| {
            let m = avg(v);
            (v.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (v.len() - 1) as f64
                / v.len() as f64)
                .sqrt()
        };
        let lhs = avg(&sum_devs);
        let rhs: f64 = term_devs.iter().map(|v| avg(v)).sum();
        let tol = 3.0 * (se(&sum_devs) + term_devs.iter().map(|v| se(v)).sum::<f64>());
        assert!((lhs - rhs).abs() <= tol, "lhs {lhs} rhs {rhs} tol {tol}");
    }

    #[test]
    fn deterministic_given_stream() {
        let x = Vector::new(vec![0.3, -1.1, 4.0, 0.05]).unwrap();
        for spec in [
            CompressorSpec::Identity,
            CompressorSpec::RandK { k: 2 },
            CompressorSpec::Natural,
            CompressorSpec::Dithering { levels: 5 },
        ] {
            let a = apply_compressor(&spec, &x, &mut stream(40)).unwrap();
            let b = apply_compressor(&spec, &x, &mut stream(40)).unwrap();
            assert_eq!(a.as_slice(), b.as_slice(), "{spec:?}");
        }
    }
}
