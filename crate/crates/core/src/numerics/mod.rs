//! Dense vector arithmetic and deterministic, splittable random streams.

mod rng;
mod vector;

pub use rng::{sample_standard_gaussian, RngStream};
pub use vector::{squared_distance, Vector};

#[cfg(test)]
mod property_tests {
    use super::*;
    use proptest::prelude::*;

    fn finite_vec(dim: usize) -> impl Strategy<Value = Vec<f64>> {
        proptest::collection::vec(-1.0e6f64..1.0e6, dim)
    }

    proptest! {
        // ||a + b||^2 <= 2||a||^2 + 2||b||^2, exactly up to rounding.
        #[test]
        fn sum_norm_inequality(a in finite_vec(6), b in finite_vec(6)) {
            let a = Vector::new(a).unwrap();
            let b = Vector::new(b).unwrap();
            let lhs = a.add(&b).squared_norm();
            let rhs = 2.0 * a.squared_norm() + 2.0 * b.squared_norm();
            prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-12);
        }

        // ||eta a + (1 - eta) b||^2 <= eta ||a||^2 + (1 - eta) ||b||^2.
        #[test]
        fn convexity_of_squared_norm(a in finite_vec(6), b in finite_vec(6), eta in 0.0f64..=1.0) {
            let a = Vector::new(a).unwrap();
            let b = Vector::new(b).unwrap();
            let lhs = b.lerp(eta, &a).squared_norm();
            let rhs = eta * a.squared_norm() + (1.0 - eta) * b.squared_norm();
            prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-12);
        }
    }
}
