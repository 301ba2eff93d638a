use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{RngStream, Vector};
use crate::operators::problem::{prox_dvector, proximal_gradient_solve, Nonsmooth, ProblemSpec};

/// Stochastic fixed-point map family `T_i(x, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MapKind {
    /// Full-gradient step `x - gamma grad f_i(x)`.
    Gd { gamma: f64 },
    /// Minibatch stochastic gradient step.
    Sgd { gamma: f64, minibatch: usize },
    /// Minibatch stochastic gradient step followed by `prox_{gamma H}`.
    ProxSgd { gamma: f64, minibatch: usize },
    /// Simultaneous descent-ascent step on a saddle problem.
    Gda { gamma: f64 },
    /// Three-operator splitting step for `min F + G + H`: the problem
    /// supplies the smooth `F`, the map carries the `(G, H)` split.
    DavisYin {
        gamma: f64,
        g: Nonsmooth,
        h: Nonsmooth,
    },
}

impl MapKind {
    pub fn gamma(&self) -> f64 {
        match self {
            MapKind::Gd { gamma }
            | MapKind::Sgd { gamma, .. }
            | MapKind::ProxSgd { gamma, .. }
            | MapKind::Gda { gamma }
            | MapKind::DavisYin { gamma, .. } => *gamma,
        }
    }

    pub fn is_stochastic(&self) -> bool {
        matches!(self, MapKind::Sgd { .. } | MapKind::ProxSgd { .. })
    }
}

/// A validated map kind bound to its problem.
#[derive(Debug, Clone)]
pub struct MapSpec {
    kind: MapKind,
    problem: ProblemSpec,
}

const GAMMA_SLACK: f64 = 1.0 + 1e-9;

impl MapSpec {
    pub fn new(kind: MapKind, problem: ProblemSpec) -> Result<Self> {
        problem.validate()?;
        let gamma = kind.gamma();
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::invalid_config("gamma must be positive"));
        }
        match (&kind, &problem) {
            (MapKind::Gd { .. }, ProblemSpec::Smooth(s)) => {
                require_gamma_le(gamma, 1.0 / s.constants().l_max, "1/L")?;
            }
            (MapKind::Sgd { gamma, minibatch }, ProblemSpec::Smooth(s)) => {
                if *minibatch == 0 {
                    return Err(Error::invalid_config("minibatch must be >= 1"));
                }
                let l_sample = s.constants().max_sample_smoothness.ok_or_else(|| {
                    Error::invalid_config("sgd needs row data; use a ridge or synthetic problem")
                })?;
                // The certified (rho, B) pair below is derived under
                // gamma <= 1/(2 L_sample); larger steps void the certificate.
                require_gamma_le(*gamma, 0.5 / l_sample, "1/(2 L_sample)")?;
            }
            (MapKind::ProxSgd { gamma, minibatch }, ProblemSpec::Composite { smooth, .. }) => {
                if *minibatch == 0 {
                    return Err(Error::invalid_config("minibatch must be >= 1"));
                }
                let l_sample = smooth.constants().max_sample_smoothness.ok_or_else(|| {
                    Error::invalid_config(
                        "prox_sgd needs row data; use a ridge or synthetic problem",
                    )
                })?;
                require_gamma_le(*gamma, 0.5 / l_sample, "1/(2 L_sample)")?;
            }
            (MapKind::Gda { gamma }, ProblemSpec::Saddle(s)) => {
                let l = s.field_lipschitz();
                let rho = 2.0 * gamma * s.mu - gamma * gamma * l * l;
                if rho <= 0.0 {
                    return Err(Error::invalid_config(format!(
                        "gda contraction factor rho = 2*gamma*mu - gamma^2*L^2 = {rho:e} \
                         is not positive; need gamma < 2*mu/L^2 = {:e}",
                        2.0 * s.mu / (l * l)
                    )));
                }
            }
            (MapKind::DavisYin { gamma, g, h }, ProblemSpec::Smooth(s)) => {
                g.validate()?;
                h.validate()?;
                if matches!(h, Nonsmooth::L1 { .. }) {
                    return Err(Error::invalid_config(
                        "davis_yin requires a smooth second prox term: h must be none or l2",
                    ));
                }
                require_gamma_le(*gamma, 1.0 / s.constants().l_max, "1/L")?;
            }
            (kind, _) => {
                return Err(Error::invalid_config(format!(
                    "map {kind:?} is not defined on this problem kind"
                )));
            }
        }
        Ok(MapSpec { kind, problem })
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn problem(&self) -> &ProblemSpec {
        &self.problem
    }

    pub fn dim(&self) -> usize {
        self.problem.dim()
    }

    /// Node count fixed by the problem data; saddle maps replicate freely.
    pub fn num_nodes(&self) -> Option<usize> {
        self.problem.num_nodes()
    }

    /// Default stepsize for each map family: `1/L` for gradient maps,
    /// `1/(2 L_sample)` for stochastic gradients, `mu/L^2` for descent-ascent.
    pub fn auto_gamma(kind_name: &str, problem: &ProblemSpec) -> Result<f64> {
        match (kind_name, problem) {
            ("gd", ProblemSpec::Smooth(s)) | ("davis_yin", ProblemSpec::Smooth(s)) => {
                Ok(1.0 / s.constants().l_max)
            }
            ("sgd", ProblemSpec::Smooth(s))
            | ("prox_sgd", ProblemSpec::Composite { smooth: s, .. }) => {
                let l_sample = s.constants().max_sample_smoothness.ok_or_else(|| {
                    Error::invalid_config("stochastic maps need row data for an auto stepsize")
                })?;
                Ok(0.5 / l_sample)
            }
            ("gda", ProblemSpec::Saddle(s)) => {
                let l = s.field_lipschitz();
                Ok(s.mu / (l * l))
            }
            _ => Err(Error::invalid_config(format!(
                "no auto stepsize for map `{kind_name}` on this problem kind"
            ))),
        }
    }
}

fn require_gamma_le(gamma: f64, bound: f64, name: &str) -> Result<()> {
    if gamma <= bound * GAMMA_SLACK {
        Ok(())
    } else {
        Err(Error::invalid_config(format!(
            "gamma = {gamma:e} exceeds {name} = {bound:e}"
        )))
    }
}

/// Exact proximal map of `gamma * H`.
pub fn prox(h: &Nonsmooth, gamma: f64, v: &Vector) -> Vector {
    let dv = DVector::from_column_slice(v.as_slice());
    Vector::from_raw(prox_dvector(h, gamma, &dv).data.into())
}

fn to_dvector(x: &Vector) -> DVector<f64> {
    DVector::from_column_slice(x.as_slice())
}

fn to_vector(x: DVector<f64>) -> Vector {
    Vector::from_raw(x.data.into())
}

/// One application of `T_i(x, s)` with `s` drawn from `stream`.
pub fn apply_map(
    map: &MapSpec,
    node: usize,
    x: &Vector,
    stream: &mut RngStream,
) -> Result<Vector> {
    if x.dim() != map.dim() {
        return Err(Error::DimensionMismatch {
            expected: map.dim(),
            got: x.dim(),
        });
    }
    if let Some(n) = map.num_nodes() {
        if node >= n {
            return Err(Error::invalid_config(format!(
                "node index {node} out of range for {n} nodes"
            )));
        }
    }
    let z = to_dvector(x);
    let out = match (&map.kind, &map.problem) {
        (MapKind::Gd { gamma }, ProblemSpec::Smooth(s)) => &z - s.grad_node(node, &z) * *gamma,
        (MapKind::Sgd { gamma, minibatch }, ProblemSpec::Smooth(s)) => {
            &z - s.minibatch_grad(node, &z, *minibatch, stream)? * *gamma
        }
        (MapKind::ProxSgd { gamma, minibatch }, ProblemSpec::Composite { smooth, h }) => {
            let step = &z - smooth.minibatch_grad(node, &z, *minibatch, stream)? * *gamma;
            prox_dvector(h, *gamma, &step)
        }
        (MapKind::Gda { gamma }, ProblemSpec::Saddle(s)) => &z - s.field(&z) * *gamma,
        (MapKind::DavisYin { gamma, g, h }, ProblemSpec::Smooth(s)) => {
            let u = prox_dvector(g, *gamma, &z);
            let w = &u * 2.0 - &z - s.grad_node(node, &u) * *gamma;
            &z + prox_dvector(h, *gamma, &w) - u
        }
        _ => unreachable!("MapSpec::new enforces map/problem pairing"),
    };
    to_vector(out).ensure_finite("apply_map")
}

/// The deterministic mean map of node `i` at `x`, where it has a closed form.
/// `None` for maps whose expectation has no closed form (prox of a random
/// step).
pub fn mean_map_node(map: &MapSpec, node: usize, x: &Vector) -> Result<Option<Vector>> {
    let z = to_dvector(x);
    let out = match (&map.kind, &map.problem) {
        (MapKind::Sgd { gamma, .. }, ProblemSpec::Smooth(s)) => {
            Some(&z - s.grad_node(node, &z) * *gamma)
        }
        (MapKind::ProxSgd { .. }, _) => None,
        _ => {
            // Deterministic maps: the mean map is the map itself.
            let mut dummy = RngStream::from_root(0);
            return Ok(Some(apply_map(map, node, x, &mut dummy)?));
        }
    };
    Ok(out.map(to_vector))
}

/// Constants `(rho, B)` of the one-step contraction-to-a-ball property,
/// `c^2` of the expected Lipschitz property, and `sigma^2`, the mean squared
/// norm of `T_i` at the fixed point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContractionCertificate {
    pub rho: f64,
    pub b: f64,
    pub c_sq: f64,
    pub sigma_sq: f64,
    pub b_provenance: Provenance,
    pub sigma_sq_provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Exact,
    MonteCarlo,
}

/// Squared expected-Lipschitz constant `c_i^2` of node `i`'s map.
pub fn node_lipschitz_sq(map: &MapSpec, node: usize) -> f64 {
    let gamma = map.kind.gamma();
    match (&map.kind, &map.problem) {
        // The published constant for the full-gradient step with gamma <= 1/L.
        (MapKind::Gd { .. }, _) => 1.0,
        (MapKind::Sgd { .. }, ProblemSpec::Smooth(s))
        | (MapKind::ProxSgd { .. }, ProblemSpec::Composite { smooth: s, .. }) => {
            // Any single-sample step matrix I - gamma H_s has spectrum inside
            // [1 - gamma*L_sample, 1 - gamma*reg]; prox only shrinks.
            let reg = s.reg();
            let l_sample = s
                .constants()
                .max_sample_smoothness
                .expect("validated at construction");
            let c = (1.0 - gamma * reg).abs().max((1.0 - gamma * l_sample).abs());
            c * c
        }
        (MapKind::Gda { .. }, ProblemSpec::Saddle(s)) => {
            let c = 1.0 + gamma * s.field_lipschitz();
            c * c
        }
        (MapKind::DavisYin { h, .. }, ProblemSpec::Smooth(s)) => {
            let (mu_i, _) = s.constants().node_bounds[node];
            davis_yin_contraction_sq(gamma, mu_i, h)
        }
        _ => unreachable!(),
    }
}

/// Squared contraction factor of the three-operator step, derived from firm
/// nonexpansiveness of the first prox and linearity of the second:
/// `xi^2 = (1 - beta)^2 + beta^2 (1 - gamma mu)^2` with `beta = 1/(1 + gamma w_h)`.
fn davis_yin_contraction_sq(gamma: f64, mu: f64, h: &Nonsmooth) -> f64 {
    let w_h = match h {
        Nonsmooth::None => 0.0,
        Nonsmooth::L2 { weight } => *weight,
        Nonsmooth::L1 { .. } => unreachable!("rejected at validation"),
    };
    let beta = 1.0 / (1.0 + gamma * w_h);
    let a = 1.0 - beta;
    let b = beta * (1.0 - gamma * mu);
    a * a + b * b
}

/// Computes the contraction certificate of a map for `n` nodes. Constants
/// with no closed form (the stochastic `B` and `sigma^2`) are Monte-Carlo
/// estimates at the fixed point, flagged as such.
pub fn certificate_of(
    map: &MapSpec,
    n: usize,
    mc_budget: usize,
    stream: &mut RngStream,
) -> Result<ContractionCertificate> {
    if let Some(fixed_n) = map.num_nodes() {
        if fixed_n != n {
            return Err(Error::invalid_config(format!(
                "problem has {fixed_n} nodes but the run is configured for {n}"
            )));
        }
    }
    if n == 0 {
        return Err(Error::invalid_config("need n >= 1"));
    }
    let x_star = reference_fixed_point(map)?;
    let gamma = map.kind.gamma();

    let rho = match (&map.kind, &map.problem) {
        (MapKind::Gd { .. }, ProblemSpec::Smooth(s))
        | (MapKind::Sgd { .. }, ProblemSpec::Smooth(s))
        | (MapKind::ProxSgd { .. }, ProblemSpec::Composite { smooth: s, .. }) => {
            gamma * s.constants().mu
        }
        (MapKind::Gda { .. }, ProblemSpec::Saddle(s)) => {
            let l = s.field_lipschitz();
            2.0 * gamma * s.mu - gamma * gamma * l * l
        }
        (MapKind::DavisYin { h, .. }, ProblemSpec::Smooth(s)) => {
            1.0 - davis_yin_contraction_sq(gamma, s.constants().mu, h)
        }
        _ => unreachable!(),
    };
    // rho = 1 is the exact one-step solve (condition number 1 with gamma = 1/L).
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(Error::invalid_config(format!(
            "contraction factor rho = {rho:e} outside (0, 1]"
        )));
    }

    let c_sq = (0..n).map(|i| node_lipschitz_sq(map, i)).sum::<f64>() / n as f64;

    let (b, b_prov, sigma_sq, sigma_prov) = if map.kind.is_stochastic() {
        if mc_budget < 2 {
            return Err(Error::invalid_config(
                "stochastic certificates need mc_budget >= 2",
            ));
        }
        let mut mc = stream.derive(&[0]);
        // B = 2 E||T(x*, s) - x*||^2 for the node-averaged map: the standard
        // variance-at-the-solution constant of the stochastic-gradient
        // analysis under gamma <= 1/(2 L_sample), estimated by Monte Carlo.
        let mut b_acc = 0.0;
        let mut sigma_acc = 0.0;
        for _ in 0..mc_budget {
            let mut avg = Vector::zeros(map.dim());
            for i in 0..n {
                let t = apply_map(map, i, &x_star, &mut mc)?;
                sigma_acc += t.squared_norm() / n as f64;
                avg = avg.add(&t);
            }
            avg = avg.scale(1.0 / n as f64);
            b_acc += avg.sub(&x_star).squared_norm();
        }
        let b = 2.0 * b_acc / mc_budget as f64;
        let sigma_sq = sigma_acc / mc_budget as f64;
        (b, Provenance::MonteCarlo, sigma_sq, Provenance::MonteCarlo)
    } else {
        let mut dummy = RngStream::from_root(0);
        let mut sigma_acc = 0.0;
        for i in 0..n {
            let t = apply_map(map, i, &x_star, &mut dummy)?;
            sigma_acc += t.squared_norm();
        }
        (0.0, Provenance::Exact, sigma_acc / n as f64, Provenance::Exact)
    };

    Ok(ContractionCertificate {
        rho,
        b,
        c_sq,
        sigma_sq,
        b_provenance: b_prov,
        sigma_sq_provenance: sigma_prov,
    })
}

/// The fixed point the iteration is measured against.
///
/// For gradient-type maps this is the problem's reference solution. The
/// three-operator step converges in its own shadow variable, so its fixed
/// point is computed by iterating the (deterministic) averaged map to
/// `1e-14`.
pub fn reference_fixed_point(map: &MapSpec) -> Result<Vector> {
    match (&map.kind, &map.problem) {
        (MapKind::DavisYin { .. }, _) => {
            let n = map.num_nodes().unwrap_or(1);
            let mut dummy = RngStream::from_root(0);
            let mut z = Vector::zeros(map.dim());
            let max_iters: u64 = 10_000_000;
            for _ in 0..max_iters {
                let mut avg = Vector::zeros(map.dim());
                for i in 0..n {
                    avg = avg.add(&apply_map(map, i, &z, &mut dummy)?);
                }
                avg = avg.scale(1.0 / n as f64);
                let delta = crate::numerics::squared_distance(&avg, &z)?.sqrt();
                z = avg;
                if delta <= 1e-14 {
                    return Ok(z);
                }
            }
            Err(Error::NoConvergence { max_iters })
        }
        (MapKind::ProxSgd { .. }, ProblemSpec::Composite { smooth, h }) => Ok(Vector::from_raw(
            proximal_gradient_solve(smooth, h)?.data.into(),
        )),
        _ => crate::operators::problem::solve_reference(&map.problem),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::problem::{
        generate_saddle, generate_synthetic, QuadraticNode, SaddleProblem, SmoothProblem,
    };
    use nalgebra::DMatrix;

    fn diag_quadratic() -> ProblemSpec {
        ProblemSpec::Smooth(SmoothProblem::Quadratic {
            nodes: vec![QuadraticNode {
                a: DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0])),
                b: DVector::from_vec(vec![1.0, 2.0]),
            }],
            reg: 0.0,
        })
    }

    fn identity_quadratic() -> ProblemSpec {
        ProblemSpec::Smooth(SmoothProblem::Quadratic {
            nodes: vec![QuadraticNode {
                a: DMatrix::identity(3, 3),
                b: DVector::zeros(3),
            }],
            reg: 0.0,
        })
    }

    #[test]
    fn gd_exact_one_step_solve() {
        // f(x) = ||x||^2 / 2 with gamma = 1 maps everything to the origin.
        let map = MapSpec::new(MapKind::Gd { gamma: 1.0 }, identity_quadratic()).unwrap();
        let x = Vector::new(vec![3.0, -1.0, 0.25]).unwrap();
        let out = apply_map(&map, 0, &x, &mut RngStream::from_root(0)).unwrap();
        assert_eq!(out.as_slice(), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn gd_hand_computed_step() {
        let map = MapSpec::new(MapKind::Gd { gamma: 0.5 }, diag_quadratic()).unwrap();
        let out = apply_map(&map, 0, &Vector::zeros(2), &mut RngStream::from_root(0)).unwrap();
        assert_eq!(out.as_slice(), [0.5, 1.0]);
    }

    #[test]
    fn gda_hand_computed_step() {
        // F(x, y) = x^2/2 - y^2/2 + x y, gamma = 0.1: (1,1) -> (0.8, 1.0).
        let problem = ProblemSpec::Saddle(SaddleProblem {
            mu: 1.0,
            coupling: DMatrix::from_element(1, 1, 1.0),
        });
        let map = MapSpec::new(MapKind::Gda { gamma: 0.1 }, problem).unwrap();
        let out = apply_map(
            &map,
            0,
            &Vector::new(vec![1.0, 1.0]).unwrap(),
            &mut RngStream::from_root(0),
        )
        .unwrap();
        assert!((out[0] - 0.8).abs() < 1e-15 && (out[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn davis_yin_trivial_split_is_gd() {
        let kind = MapKind::DavisYin {
            gamma: 0.5,
            g: Nonsmooth::None,
            h: Nonsmooth::None,
        };
        let map = MapSpec::new(kind, diag_quadratic()).unwrap();
        let gd = MapSpec::new(MapKind::Gd { gamma: 0.5 }, diag_quadratic()).unwrap();
        let x = Vector::new(vec![-0.3, 2.4]).unwrap();
        let a = apply_map(&map, 0, &x, &mut RngStream::from_root(0)).unwrap();
        let b = apply_map(&gd, 0, &x, &mut RngStream::from_root(0)).unwrap();
        assert!(crate::numerics::squared_distance(&a, &b).unwrap() < 1e-24);
    }

    #[test]
    fn davis_yin_rejects_kinked_second_prox() {
        let kind = MapKind::DavisYin {
            gamma: 0.5,
            g: Nonsmooth::None,
            h: Nonsmooth::L1 { weight: 0.1 },
        };
        assert!(MapSpec::new(kind, diag_quadratic()).is_err());
    }

    #[test]
    fn prox_closed_forms() {
        let v = Vector::new(vec![2.0, -0.5]).unwrap();
        let soft = prox(&Nonsmooth::L1 { weight: 1.0 }, 1.0, &v);
        assert_eq!(soft.as_slice(), [1.0, 0.0]);

        let v2 = Vector::new(vec![2.0, 4.0]).unwrap();
        let shrink = prox(&Nonsmooth::L2 { weight: 1.0 }, 1.0, &v2);
        assert_eq!(shrink.as_slice(), [1.0, 2.0]);

        let v3 = Vector::new(vec![7.0]).unwrap();
        assert_eq!(prox(&Nonsmooth::None, 1.0, &v3).as_slice(), [7.0]);
    }

    #[test]
    fn gd_certificate_constants() {
        // gamma = 0.5, mu = 1 -> rho = 0.5, B = 0, c_sq = 1.
        let map = MapSpec::new(MapKind::Gd { gamma: 0.5 }, identity_quadratic()).unwrap();
        let cert = certificate_of(&map, 1, 16, &mut RngStream::from_root(0)).unwrap();
        assert_eq!(cert.rho, 0.5);
        assert_eq!(cert.b, 0.0);
        assert_eq!(cert.c_sq, 1.0);
        // x* = 0 here, so sigma^2 = ||T(x*)||^2 = 0.
        assert_eq!(cert.sigma_sq, 0.0);
        assert_eq!(cert.sigma_sq_provenance, Provenance::Exact);
    }

    #[test]
    fn gd_sigma_sq_is_solution_norm_single_node() {
        let map = MapSpec::new(MapKind::Gd { gamma: 0.5 }, diag_quadratic()).unwrap();
        let cert = certificate_of(&map, 1, 16, &mut RngStream::from_root(0)).unwrap();
        // x* = (1,1): T(x*) = x*, sigma^2 = 2.
        assert!((cert.sigma_sq - 2.0).abs() < 1e-12);
    }

    #[test]
    fn full_batch_sgd_has_vanishing_b() {
        let mut stream = RngStream::from_root(5);
        let problem = generate_synthetic(12, 3, 2.0, 1, 0.1, &mut stream).unwrap();
        let l_sample = problem
            .smooth()
            .unwrap()
            .constants()
            .max_sample_smoothness
            .unwrap();
        // Minibatch = whole node dataset still samples with replacement, so B
        // is only near zero statistically, not identically.
        let map = MapSpec::new(
            MapKind::Sgd {
                gamma: 0.5 / l_sample,
                minibatch: 2000,
            },
            problem,
        )
        .unwrap();
        let cert = certificate_of(&map, 1, 256, &mut stream).unwrap();
        assert_eq!(cert.b_provenance, Provenance::MonteCarlo);
        assert!(cert.b < 1e-4, "B = {}", cert.b);
    }

    #[test]
    fn fixed_point_residuals() {
        let mut stream = RngStream::from_root(8);
        let ridge = generate_synthetic(24, 4, 3.0, 2, 0.1, &mut stream).unwrap();
        let l = ridge.smooth().unwrap().constants().l_max;
        let cases: Vec<MapSpec> = vec![
            MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, ridge.clone()).unwrap(),
            MapSpec::new(
                MapKind::DavisYin {
                    gamma: 1.0 / l,
                    g: Nonsmooth::L1 { weight: 0.05 },
                    h: Nonsmooth::L2 { weight: 0.2 },
                },
                ridge,
            )
            .unwrap(),
            MapSpec::new(
                MapKind::Gda { gamma: 0.2 },
                generate_saddle(1.0, 3, &mut stream).unwrap(),
            )
            .unwrap(),
        ];
        for map in &cases {
            let star = reference_fixed_point(map).unwrap();
            let n = map.num_nodes().unwrap_or(1);
            let mut avg = Vector::zeros(map.dim());
            for i in 0..n {
                avg = avg.add(&apply_map(map, i, &star, &mut RngStream::from_root(0)).unwrap());
            }
            avg = avg.scale(1.0 / n as f64);
            let residual = crate::numerics::squared_distance(&avg, &star).unwrap().sqrt();
            assert!(residual <= 1e-10, "{:?}: residual {residual}", map.kind());
        }
    }

    #[test]
    fn deterministic_contraction_is_exact() {
        // ||T(x) - x*||^2 <= (1 - rho) ||x - x*||^2 for deterministic maps.
        let mut stream = RngStream::from_root(21);
        let ridge = generate_synthetic(24, 4, 5.0, 1, 0.1, &mut stream).unwrap();
        let l = ridge.smooth().unwrap().constants().l_max;
        let maps = vec![
            MapSpec::new(MapKind::Gd { gamma: 1.0 / l }, ridge.clone()).unwrap(),
            MapSpec::new(
                MapKind::DavisYin {
                    gamma: 1.0 / l,
                    g: Nonsmooth::L1 { weight: 0.1 },
                    h: Nonsmooth::None,
                },
                ridge,
            )
            .unwrap(),
            MapSpec::new(
                MapKind::Gda { gamma: 0.3 },
                generate_saddle(1.0, 2, &mut stream).unwrap(),
            )
            .unwrap(),
        ];
        for map in &maps {
            let star = reference_fixed_point(map).unwrap();
            let cert = certificate_of(map, map.num_nodes().unwrap_or(1), 4, &mut stream).unwrap();
            let mut s = stream.derive(&[7]);
            for _ in 0..20 {
                let noise = crate::numerics::sample_standard_gaussian(&mut s, map.dim());
                let x = star.add(&noise.scale(2.0));
                let t = apply_map(map, 0, &x, &mut RngStream::from_root(0)).unwrap();
                let lhs = crate::numerics::squared_distance(&t, &star).unwrap();
                let rhs =
                    (1.0 - cert.rho) * crate::numerics::squared_distance(&x, &star).unwrap();
                assert!(
                    lhs <= rhs * (1.0 + 1e-10) + 1e-12,
                    "{:?}: {lhs} > {rhs}",
                    map.kind()
                );
            }
        }
    }

    #[test]
    fn stochastic_contraction_within_mc_error() {
        let mut stream = RngStream::from_root(23);
        let ridge = generate_synthetic(30, 4, 3.0, 1, 0.2, &mut stream).unwrap();
        let l_sample = ridge
            .smooth()
            .unwrap()
            .constants()
            .max_sample_smoothness
            .unwrap();
        let map = MapSpec::new(
            MapKind::Sgd {
                gamma: 0.5 / l_sample,
                minibatch: 2,
            },
            ridge,
        )
        .unwrap();
        let star = reference_fixed_point(&map).unwrap();
        let cert = certificate_of(&map, 1, 20_000, &mut stream.derive(&[1])).unwrap();
        let draws = 4000usize;
        let mut s = stream.derive(&[2]);
        for trial in 0..20 {
            let noise = crate::numerics::sample_standard_gaussian(&mut s, 4);
            let x = star.add(&noise);
            let r = crate::numerics::squared_distance(&x, &star).unwrap();
            let mut vals = Vec::with_capacity(draws);
            for _ in 0..draws {
                let t = apply_map(&map, 0, &x, &mut s).unwrap();
                vals.push(crate::numerics::squared_distance(&t, &star).unwrap());
            }
            let mean = vals.iter().sum::<f64>() / draws as f64;
            let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                / (draws - 1) as f64;
            let se = (var / draws as f64).sqrt();
            let bound = (1.0 - cert.rho) * r + cert.b;
            assert!(
                mean <= bound + 3.0 * se,
                "trial {trial}: {mean} > {bound} + 3*{se}"
            );
        }
    }

    #[test]
    fn expected_lipschitz_within_mc_error() {
        let mut stream = RngStream::from_root(29);
        let ridge = generate_synthetic(30, 4, 3.0, 2, 0.2, &mut stream).unwrap();
        let l_sample = ridge
            .smooth()
            .unwrap()
            .constants()
            .max_sample_smoothness
            .unwrap();
        let map = MapSpec::new(
            MapKind::Sgd {
                gamma: 0.5 / l_sample,
                minibatch: 1,
            },
            ridge,
        )
        .unwrap();
        let draws = 4000usize;
        let mut s = stream.derive(&[3]);
        for node in 0..2 {
            let c_sq = node_lipschitz_sq(&map, node);
            for _ in 0..10 {
                let x = crate::numerics::sample_standard_gaussian(&mut s, 4);
                let y = crate::numerics::sample_standard_gaussian(&mut s, 4);
                let dist = crate::numerics::squared_distance(&x, &y).unwrap();
                let mut vals = Vec::with_capacity(draws);
                for _ in 0..draws {
                    // The same sample s in both applications: clone the stream
                    // state so T_i(x, s) and T_i(y, s) share their draw.
                    let mut sx = s.derive(&[vals.len() as u64]);
                    let mut sy = sx.clone();
                    let tx = apply_map(&map, node, &x, &mut sx).unwrap();
                    let ty = apply_map(&map, node, &y, &mut sy).unwrap();
                    vals.push(crate::numerics::squared_distance(&tx, &ty).unwrap());
                }
                let mean = vals.iter().sum::<f64>() / draws as f64;
                let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                    / (draws - 1) as f64;
                let se = (var / draws as f64).sqrt();
                assert!(
                    mean <= c_sq * dist + 3.0 * se,
                    "node {node}: {mean} > {c_sq} * {dist}"
                );
            }
        }
    }

    #[test]
    fn isotropic_problem_solves_in_one_gradient_step() {
        // cond = 1: all Hessian eigenvalues equal, so gamma = 1/L lands on
        // the minimizer from anywhere.
        let mut stream = RngStream::from_root(31);
        let problem = generate_synthetic(12, 4, 1.0, 1, 0.1, &mut stream).unwrap();
        let consts = problem.smooth().unwrap().constants();
        assert!((consts.l_max / consts.mu - 1.0).abs() < 1e-10);
        let map = MapSpec::new(MapKind::Gd { gamma: 1.0 / consts.l_max }, problem).unwrap();
        let x_star = reference_fixed_point(&map).unwrap();
        let x = Vector::new(vec![2.0, -1.0, 0.5, 3.0]).unwrap();
        let step = apply_map(&map, 0, &x, &mut RngStream::from_root(0)).unwrap();
        let dist = crate::numerics::squared_distance(&step, &x_star).unwrap();
        assert!(dist < 1e-20, "one step left distance {dist}");
        // The exact one-step solve is the rho = 1 edge of the certificate.
        let cert = certificate_of(&map, 1, 4, &mut stream).unwrap();
        assert!((cert.rho - 1.0).abs() < 1e-10);
    }

    #[test]
    fn gda_certificate_requires_positive_rho() {
        let problem = generate_saddle(0.1, 4, &mut RngStream::from_root(2)).unwrap();
        let err = MapSpec::new(MapKind::Gda { gamma: 5.0 }, problem).unwrap_err();
        assert!(err.to_string().contains("rho"), "{err}");
    }
}
