//! Problem definitions, stochastic fixed-point maps, and their contraction
//! certificates.

mod libsvm;
mod maps;
mod problem;

pub use libsvm::load_libsvm;
pub use maps::{
    apply_map, certificate_of, mean_map_node, node_lipschitz_sq, prox, reference_fixed_point,
    ContractionCertificate, MapKind, MapSpec, Provenance,
};
pub use problem::{
    generate_saddle, generate_synthetic, solve_reference, Nonsmooth, ProblemSpec, QuadraticNode,
    RidgeNode, SaddleProblem, SmoothConstants, SmoothProblem,
};
