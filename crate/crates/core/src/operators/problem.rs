use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{RngStream, Vector};

/// Prox-friendly nonsmooth term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Nonsmooth {
    None,
    /// `weight * ||x||_1`
    L1 { weight: f64 },
    /// `(weight / 2) * ||x||^2`
    L2 { weight: f64 },
}

impl Nonsmooth {
    pub fn validate(&self) -> Result<()> {
        let w = match self {
            Nonsmooth::None => return Ok(()),
            Nonsmooth::L1 { weight } | Nonsmooth::L2 { weight } => *weight,
        };
        if w.is_finite() && w >= 0.0 {
            Ok(())
        } else {
            Err(Error::invalid_config("nonsmooth weight must be >= 0"))
        }
    }
}

/// One node's share of a quadratic objective:
/// `f_i(x) = x' A_i x / 2 - b_i' x + reg ||x||^2 / 2`.
#[derive(Debug, Clone)]
pub struct QuadraticNode {
    pub a: DMatrix<f64>,
    pub b: DVector<f64>,
}

/// One node's share of a least-squares objective:
/// `f_i(x) = ||X_i x - y_i||^2 / (2 m_i) + reg ||x||^2 / 2`.
#[derive(Debug, Clone)]
pub struct RidgeNode {
    rows: DMatrix<f64>,
    targets: DVector<f64>,
    // Cached normal-equation form: gram = X'X / m_i, xty = X'y / m_i.
    gram: DMatrix<f64>,
    xty: DVector<f64>,
    max_row_sq: f64,
}

impl RidgeNode {
    pub fn new(rows: DMatrix<f64>, targets: DVector<f64>) -> Result<Self> {
        if rows.nrows() == 0 {
            return Err(Error::invalid_config("ridge node needs at least one row"));
        }
        if rows.nrows() != targets.len() {
            return Err(Error::DimensionMismatch {
                expected: rows.nrows(),
                got: targets.len(),
            });
        }
        let m = rows.nrows() as f64;
        let gram = rows.transpose() * &rows / m;
        let xty = rows.transpose() * &targets / m;
        let max_row_sq = (0..rows.nrows())
            .map(|r| rows.row(r).norm_squared())
            .fold(0.0f64, f64::max);
        Ok(RidgeNode {
            rows,
            targets,
            gram,
            xty,
            max_row_sq,
        })
    }

    pub fn sample_count(&self) -> usize {
        self.rows.nrows()
    }
}

/// The smooth, strongly convex part of a finite-sum problem, stored per node.
#[derive(Debug, Clone)]
pub enum SmoothProblem {
    Quadratic { nodes: Vec<QuadraticNode>, reg: f64 },
    Ridge { nodes: Vec<RidgeNode>, reg: f64 },
}

/// Spectral constants computed once at construction.
#[derive(Debug, Clone)]
pub struct SmoothConstants {
    /// Strong convexity of the averaged objective: `lambda_min` of the mean
    /// Hessian (regularizer included).
    pub mu: f64,
    /// `max_i L_i` over per-node Hessians.
    pub l_max: f64,
    /// Per-node `(mu_i, L_i)`.
    pub node_bounds: Vec<(f64, f64)>,
    /// Largest single-sample smoothness constant, defined for row data only.
    pub max_sample_smoothness: Option<f64>,
}

impl SmoothProblem {
    pub fn dim(&self) -> usize {
        match self {
            SmoothProblem::Quadratic { nodes, .. } => nodes[0].a.nrows(),
            SmoothProblem::Ridge { nodes, .. } => nodes[0].rows.ncols(),
        }
    }

    pub fn num_nodes(&self) -> usize {
        match self {
            SmoothProblem::Quadratic { nodes, .. } => nodes.len(),
            SmoothProblem::Ridge { nodes, .. } => nodes.len(),
        }
    }

    pub fn reg(&self) -> f64 {
        match self {
            SmoothProblem::Quadratic { reg, .. } | SmoothProblem::Ridge { reg, .. } => *reg,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        let reg = self.reg();
        if !(reg.is_finite() && reg >= 0.0) {
            return Err(Error::invalid_config("regularizer must be >= 0"));
        }
        match self {
            SmoothProblem::Quadratic { nodes, .. } => {
                if nodes.is_empty() {
                    return Err(Error::invalid_config("problem needs at least one node"));
                }
                for node in nodes {
                    if node.a.nrows() != d || node.a.ncols() != d || node.b.len() != d {
                        return Err(Error::DimensionMismatch {
                            expected: d,
                            got: node.b.len(),
                        });
                    }
                }
            }
            SmoothProblem::Ridge { nodes, .. } => {
                if nodes.is_empty() {
                    return Err(Error::invalid_config("problem needs at least one node"));
                }
                for node in nodes {
                    if node.rows.ncols() != d {
                        return Err(Error::DimensionMismatch {
                            expected: d,
                            got: node.rows.ncols(),
                        });
                    }
                }
            }
        }
        let c = self.constants();
        if c.mu <= 0.0 {
            return Err(Error::invalid_config(format!(
                "objective is not strongly convex: lambda_min = {}",
                c.mu
            )));
        }
        Ok(())
    }

    fn node_hessian(&self, i: usize) -> DMatrix<f64> {
        let d = self.dim();
        let reg = self.reg();
        let base = match self {
            SmoothProblem::Quadratic { nodes, .. } => nodes[i].a.clone(),
            SmoothProblem::Ridge { nodes, .. } => nodes[i].gram.clone(),
        };
        base + DMatrix::identity(d, d) * reg
    }

    /// Mean Hessian over nodes, regularizer included.
    pub fn global_hessian(&self) -> DMatrix<f64> {
        let n = self.num_nodes();
        let mut acc = self.node_hessian(0);
        for i in 1..n {
            acc += self.node_hessian(i);
        }
        acc / n as f64
    }

    fn global_linear_term(&self) -> DVector<f64> {
        let n = self.num_nodes() as f64;
        match self {
            SmoothProblem::Quadratic { nodes, .. } => {
                let mut acc = nodes[0].b.clone();
                for node in &nodes[1..] {
                    acc += &node.b;
                }
                acc / n
            }
            SmoothProblem::Ridge { nodes, .. } => {
                let mut acc = nodes[0].xty.clone();
                for node in &nodes[1..] {
                    acc += &node.xty;
                }
                acc / n
            }
        }
    }

    pub fn constants(&self) -> SmoothConstants {
        let n = self.num_nodes();
        let node_bounds: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let eig = self.node_hessian(i).symmetric_eigen().eigenvalues;
                (eig.min(), eig.max())
            })
            .collect();
        let global_eig = self.global_hessian().symmetric_eigen().eigenvalues;
        let max_sample_smoothness = match self {
            SmoothProblem::Ridge { nodes, reg } => Some(
                reg + nodes
                    .iter()
                    .map(|node| node.max_row_sq)
                    .fold(0.0f64, f64::max),
            ),
            SmoothProblem::Quadratic { .. } => None,
        };
        SmoothConstants {
            mu: global_eig.min(),
            l_max: node_bounds.iter().map(|(_, l)| *l).fold(0.0f64, f64::max),
            node_bounds,
            max_sample_smoothness,
        }
    }

    /// `grad f_i(x)`, exact.
    pub fn grad_node(&self, i: usize, x: &DVector<f64>) -> DVector<f64> {
        let reg = self.reg();
        match self {
            SmoothProblem::Quadratic { nodes, .. } => &nodes[i].a * x - &nodes[i].b + x * reg,
            SmoothProblem::Ridge { nodes, .. } => &nodes[i].gram * x - &nodes[i].xty + x * reg,
        }
    }

    /// `grad F(x) = mean_i grad f_i(x)`.
    pub fn grad_full(&self, x: &DVector<f64>) -> DVector<f64> {
        let n = self.num_nodes();
        let mut acc = self.grad_node(0, x);
        for i in 1..n {
            acc += self.grad_node(i, x);
        }
        acc / n as f64
    }

    /// Unbiased minibatch gradient for node `i`: `batch` samples drawn
    /// uniformly with replacement from the node's rows. Row data only.
    pub fn minibatch_grad(
        &self,
        i: usize,
        x: &DVector<f64>,
        batch: usize,
        stream: &mut RngStream,
    ) -> Result<DVector<f64>> {
        let (nodes, reg) = match self {
            SmoothProblem::Ridge { nodes, reg } => (nodes, *reg),
            SmoothProblem::Quadratic { .. } => {
                return Err(Error::invalid_config(
                    "stochastic gradients need row data; use a ridge or synthetic problem",
                ))
            }
        };
        let node = &nodes[i];
        let m = node.sample_count();
        let mut acc = DVector::zeros(x.len());
        for _ in 0..batch {
            let j = rand::Rng::gen_range(stream, 0..m);
            let row = node.rows.row(j);
            let residual = row.dot(&x.transpose()) - node.targets[j];
            acc += row.transpose() * residual;
        }
        Ok(acc / batch as f64 + x * reg)
    }

    /// Exact minimizer of `F` via the normal equations.
    pub fn solve(&self) -> Result<DVector<f64>> {
        let h = self.global_hessian();
        let b = self.global_linear_term();
        h.cholesky()
            .map(|c| c.solve(&b))
            .ok_or_else(|| Error::invalid_config("global Hessian is not positive definite"))
    }
}

/// Bilinearly coupled strongly convex-concave saddle problem
/// `F(x, y) = mu ||x||^2 / 2 - mu ||y||^2 / 2 + x' M y`.
///
/// Every node evaluates the same field, so the finite-sum structure is a
/// replication; the saddle point is the origin.
#[derive(Debug, Clone)]
pub struct SaddleProblem {
    pub mu: f64,
    pub coupling: DMatrix<f64>,
}

impl SaddleProblem {
    pub fn validate(&self) -> Result<()> {
        if !(self.mu.is_finite() && self.mu > 0.0) {
            return Err(Error::invalid_config("saddle problem requires mu > 0"));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.coupling.nrows() + self.coupling.ncols()
    }

    /// The descent-ascent field `(grad_x F, -grad_y F)` at `z = (x, y)`.
    pub fn field(&self, z: &DVector<f64>) -> DVector<f64> {
        let p = self.coupling.nrows();
        let x = z.rows(0, p).into_owned();
        let y = z.rows(p, self.coupling.ncols()).into_owned();
        let top = &x * self.mu + &self.coupling * &y;
        let bottom = &y * self.mu - self.coupling.transpose() * &x;
        let mut out = DVector::zeros(z.len());
        out.rows_mut(0, p).copy_from(&top);
        out.rows_mut(p, self.coupling.ncols()).copy_from(&bottom);
        out
    }

    /// Lipschitz constant of the field: `sqrt(mu^2 + sigma_max(M)^2)`.
    pub fn field_lipschitz(&self) -> f64 {
        let sigma_max = self.coupling.clone().singular_values().max();
        (self.mu * self.mu + sigma_max * sigma_max).sqrt()
    }

    /// Solves the first-order optimality system. The system matrix
    /// `mu I + [[0, M], [-M', 0]]` is nonsingular, so this is the origin.
    pub fn solve(&self) -> Result<DVector<f64>> {
        let d = self.dim();
        let p = self.coupling.nrows();
        let mut k = DMatrix::identity(d, d) * self.mu;
        k.view_mut((0, p), (p, self.coupling.ncols()))
            .copy_from(&self.coupling);
        k.view_mut((p, 0), (self.coupling.ncols(), p))
            .copy_from(&(-self.coupling.transpose()));
        k.lu()
            .solve(&DVector::zeros(d))
            .ok_or_else(|| Error::invalid_config("singular saddle optimality system"))
    }
}

/// A problem a fixed-point map can be built on.
#[derive(Debug, Clone)]
pub enum ProblemSpec {
    Smooth(SmoothProblem),
    Composite {
        smooth: SmoothProblem,
        h: Nonsmooth,
    },
    Saddle(SaddleProblem),
}

impl ProblemSpec {
    pub fn dim(&self) -> usize {
        match self {
            ProblemSpec::Smooth(s) | ProblemSpec::Composite { smooth: s, .. } => s.dim(),
            ProblemSpec::Saddle(s) => s.dim(),
        }
    }

    /// Node count fixed by the data; `None` for replicated (saddle) problems.
    pub fn num_nodes(&self) -> Option<usize> {
        match self {
            ProblemSpec::Smooth(s) | ProblemSpec::Composite { smooth: s, .. } => {
                Some(s.num_nodes())
            }
            ProblemSpec::Saddle(_) => None,
        }
    }

    pub fn smooth(&self) -> Option<&SmoothProblem> {
        match self {
            ProblemSpec::Smooth(s) | ProblemSpec::Composite { smooth: s, .. } => Some(s),
            ProblemSpec::Saddle(_) => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ProblemSpec::Smooth(s) => s.validate(),
            ProblemSpec::Composite { smooth, h } => {
                smooth.validate()?;
                h.validate()
            }
            ProblemSpec::Saddle(s) => s.validate(),
        }
    }
}

/// Exact (or high-precision) reference solution of the problem itself:
/// the minimizer for smooth and composite problems, the saddle point for
/// saddle problems.
pub fn solve_reference(problem: &ProblemSpec) -> Result<Vector> {
    match problem {
        ProblemSpec::Smooth(s) => Ok(Vector::from_raw(s.solve()?.data.into())),
        ProblemSpec::Composite { smooth, h } => {
            let z = proximal_gradient_solve(smooth, h)?;
            Ok(Vector::from_raw(z.data.into()))
        }
        ProblemSpec::Saddle(s) => Ok(Vector::from_raw(s.solve()?.data.into())),
    }
    .and_then(|v| v.ensure_finite("solve_reference"))
}

/// Proximal-gradient iteration run to `||x_{k+1} - x_k|| <= 1e-14`, an order
/// below any tolerance asserted against it.
pub(crate) fn proximal_gradient_solve(
    smooth: &SmoothProblem,
    h: &Nonsmooth,
) -> Result<DVector<f64>> {
    let consts = smooth.constants();
    let gamma = 1.0 / consts.l_max;
    let mut z = DVector::zeros(smooth.dim());
    let max_iters: u64 = 10_000_000;
    for _ in 0..max_iters {
        let step = &z - smooth.grad_full(&z) * gamma;
        let next = prox_dvector(h, gamma, &step);
        let delta = (&next - &z).norm();
        z = next;
        if delta <= 1e-14 {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence { max_iters })
}

pub(crate) fn prox_dvector(h: &Nonsmooth, gamma: f64, v: &DVector<f64>) -> DVector<f64> {
    match h {
        Nonsmooth::None => v.clone(),
        Nonsmooth::L1 { weight } => {
            let tau = gamma * weight;
            v.map(|c| c.signum() * (c.abs() - tau).max(0.0))
        }
        Nonsmooth::L2 { weight } => v / (1.0 + gamma * weight),
    }
}

/// Builds a least-squares problem whose regularized Hessian has condition
/// number `cond`, by planting geometrically spaced singular values in the
/// feature matrix. Rows are split contiguously and near-evenly over `nodes`.
pub fn generate_synthetic(
    rows: usize,
    cols: usize,
    cond: f64,
    nodes: usize,
    reg: f64,
    stream: &mut RngStream,
) -> Result<ProblemSpec> {
    if !(cond.is_finite() && cond >= 1.0) {
        return Err(Error::invalid_config("condition number must be >= 1"));
    }
    if rows < cols {
        return Err(Error::invalid_config(format!(
            "need rows >= cols, got {rows} x {cols}"
        )));
    }
    if cols < 2 && cond > 1.0 {
        return Err(Error::invalid_config(
            "condition number > 1 requires cols >= 2",
        ));
    }
    if nodes == 0 || rows < nodes {
        return Err(Error::invalid_config(
            "need at least one row per node and nodes >= 1",
        ));
    }
    if !(reg.is_finite() && reg >= 0.0) {
        return Err(Error::invalid_config("regularizer must be >= 0"));
    }

    // Eigenvalues h_j of the unregularized Gram X'X/m, chosen so that
    // (h_max + reg) / (h_min + reg) = cond for any reg >= 0.
    let h_min = 0.5;
    let h_max = cond * h_min + (cond - 1.0) * reg;
    let spectrum: Vec<f64> = (0..cols)
        .map(|j| {
            if cols == 1 {
                h_min
            } else {
                let t = j as f64 / (cols - 1) as f64;
                h_min * (h_max / h_min).powf(t)
            }
        })
        .collect();

    let mut gen = stream.derive(&[0]);
    let u_raw = DMatrix::from_fn(rows, cols, |_, _| gen.gaussian());
    let v_raw = DMatrix::from_fn(cols, cols, |_, _| gen.gaussian());
    let u = u_raw.qr().q();
    let v = v_raw.qr().q();
    let sigma = DMatrix::from_diagonal(&DVector::from_iterator(
        cols,
        spectrum.iter().map(|h| (rows as f64 * h).sqrt()),
    ));
    let features = u * sigma * v.transpose();
    let targets = DVector::from_fn(rows, |_, _| gen.gaussian());

    let mut node_list = Vec::with_capacity(nodes);
    let base = rows / nodes;
    let extra = rows % nodes;
    let mut start = 0;
    for i in 0..nodes {
        let count = base + usize::from(i < extra);
        node_list.push(RidgeNode::new(
            features.rows(start, count).into_owned(),
            targets.rows(start, count).into_owned(),
        )?);
        start += count;
    }
    let problem = ProblemSpec::Smooth(SmoothProblem::Ridge {
        nodes: node_list,
        reg,
    });
    problem.validate()?;
    Ok(problem)
}

/// Builds a replicated saddle problem with a dense Gaussian coupling matrix.
pub fn generate_saddle(mu: f64, coupling_dim: usize, stream: &mut RngStream) -> Result<ProblemSpec> {
    if coupling_dim == 0 {
        return Err(Error::invalid_config("coupling_dim must be >= 1"));
    }
    let mut gen = stream.derive(&[0]);
    let scale = 1.0 / (coupling_dim as f64).sqrt();
    let m = DMatrix::from_fn(coupling_dim, coupling_dim, |_, _| gen.gaussian() * scale);
    let problem = ProblemSpec::Saddle(SaddleProblem { mu, coupling: m });
    problem.validate()?;
    Ok(problem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_condition_number_is_exact() {
        let mut stream = RngStream::from_root(1).derive(&[0]);
        let problem = generate_synthetic(60, 12, 10.0, 3, 0.1, &mut stream).unwrap();
        let smooth = problem.smooth().unwrap();
        let eig = smooth.global_hessian().symmetric_eigen().eigenvalues;
        let kappa = eig.max() / eig.min();
        assert!((9.9..=10.1).contains(&kappa), "kappa {kappa}");
    }

    #[test]
    fn synthetic_is_deterministic() {
        let a = generate_synthetic(20, 4, 3.0, 2, 0.05, &mut RngStream::from_root(7)).unwrap();
        let b = generate_synthetic(20, 4, 3.0, 2, 0.05, &mut RngStream::from_root(7)).unwrap();
        let (ga, gb) = (
            a.smooth().unwrap().global_hessian(),
            b.smooth().unwrap().global_hessian(),
        );
        assert_eq!(ga.as_slice(), gb.as_slice());
    }

    #[test]
    fn synthetic_rejects_bad_cond() {
        let mut stream = RngStream::from_root(1);
        let err = generate_synthetic(10, 4, 0.5, 1, 0.1, &mut stream).unwrap_err();
        assert!(err.to_string().contains(">= 1"), "{err}");
    }

    #[test]
    fn solve_matches_hand_computed_quadratic() {
        // A = diag(1, 2), b = (1, 2): x* = (1, 1).
        let problem = ProblemSpec::Smooth(SmoothProblem::Quadratic {
            nodes: vec![QuadraticNode {
                a: DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0])),
                b: DVector::from_vec(vec![1.0, 2.0]),
            }],
            reg: 0.0,
        });
        let x = solve_reference(&problem).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn saddle_reference_is_origin() {
        let mut stream = RngStream::from_root(3);
        let problem = generate_saddle(1.0, 4, &mut stream).unwrap();
        let z = solve_reference(&problem).unwrap();
        assert!(z.squared_norm() < 1e-24);
    }

    #[test]
    fn l1_dominated_composite_solves_to_zero() {
        // grad F(0) = -b with |b_j| <= 0.2 < weight, so 0 is optimal.
        let smooth = SmoothProblem::Quadratic {
            nodes: vec![QuadraticNode {
                a: DMatrix::identity(2, 2),
                b: DVector::from_vec(vec![0.1, -0.2]),
            }],
            reg: 0.0,
        };
        let problem = ProblemSpec::Composite {
            smooth,
            h: Nonsmooth::L1 { weight: 0.5 },
        };
        let x = solve_reference(&problem).unwrap();
        assert_eq!(x.as_slice(), [0.0, 0.0]);
    }

    #[test]
    fn minibatch_gradient_is_unbiased() {
        let mut stream = RngStream::from_root(11);
        let problem = generate_synthetic(40, 6, 5.0, 2, 0.1, &mut stream).unwrap();
        let smooth = problem.smooth().unwrap();
        let x = DVector::from_fn(6, |j, _| 0.3 * j as f64 - 0.5);
        let full = smooth.grad_node(1, &x);
        let draws = 10_000usize;
        let mut sums = DVector::zeros(6);
        let mut sq_sums = DVector::zeros(6);
        let mut s = stream.derive(&[9]);
        for _ in 0..draws {
            let g = smooth.minibatch_grad(1, &x, 3, &mut s).unwrap();
            sq_sums += g.map(|v| v * v);
            sums += g;
        }
        for j in 0..6 {
            let mean = sums[j] / draws as f64;
            let var = (sq_sums[j] / draws as f64 - mean * mean).max(0.0);
            let se = (var / draws as f64).sqrt();
            assert!(
                (mean - full[j]).abs() <= 4.0 * se + 1e-12,
                "component {j}: {} vs {}",
                mean,
                full[j]
            );
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let mut stream = RngStream::from_root(13);
        let problem = generate_synthetic(30, 5, 4.0, 3, 0.2, &mut stream).unwrap();
        let smooth = problem.smooth().unwrap();
        let x = DVector::from_fn(5, |j, _| 0.1 * (j as f64 + 1.0));
        let grad = smooth.grad_full(&x);
        let eps = 1e-6;
        for j in 0..5 {
            let mut hi = x.clone();
            let mut lo = x.clone();
            hi[j] += eps;
            lo[j] -= eps;
            let f = |v: &DVector<f64>| -> f64 {
                let n = smooth.num_nodes();
                (0..n)
                    .map(|i| match smooth {
                        SmoothProblem::Ridge { nodes, reg } => {
                            let node = &nodes[i];
                            let r = &node.rows * v - &node.targets;
                            r.norm_squared() / (2.0 * node.sample_count() as f64)
                                + reg * v.norm_squared() / 2.0
                        }
                        SmoothProblem::Quadratic { .. } => unreachable!(),
                    })
                    .sum::<f64>()
                    / n as f64
            };
            let fd = (f(&hi) - f(&lo)) / (2.0 * eps);
            let rel = (grad[j] - fd).abs() / grad[j].abs().max(1.0);
            assert!(rel < 1e-6, "component {j}: {} vs {}", grad[j], fd);
        }
    }
}
