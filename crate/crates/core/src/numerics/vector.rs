use crate::error::{Error, Result};

/// Dense vector of 64-bit reals. The payload type for iterates, gradients and
/// compressed messages.
///
/// Construction rejects NaN/Inf so that a divergent run fails loudly at the
/// operation that produced the bad value instead of propagating garbage.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    /// Builds a vector, rejecting non-finite entries.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::non_finite("Vector::new"));
        }
        Ok(Vector { coords })
    }

    /// Builds a vector without the finiteness scan. Used internally on values
    /// that are re-validated at the enclosing operation boundary.
    pub(crate) fn from_raw(coords: Vec<f64>) -> Self {
        Vector { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector {
            coords: vec![0.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.coords
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    /// Validates finiteness at an operation boundary, naming the operation.
    pub fn ensure_finite(self, context: &str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::non_finite(context))
        }
    }

    pub fn squared_norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.squared_norm().sqrt()
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::from_raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::from_raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: f64) -> Vector {
        Vector::from_raw(self.coords.iter().map(|a| a * factor).collect())
    }

    /// `self + factor * other`, elementwise.
    pub fn axpy(&self, factor: f64, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::from_raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    /// Convex combination `(1 - t) * self + t * other`.
    ///
    /// `t = 1` returns `other` outright so that a full replacement step is
    /// bit-exact rather than `0 * self + 1 * other`.
    pub fn lerp(&self, t: f64, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        if t == 1.0 {
            return other.clone();
        }
        Vector::from_raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| (1.0 - t) * a + t * b)
                .collect(),
        )
    }

    /// Mean of a nonempty set of equal-dimension vectors.
    pub fn mean_of(vectors: &[Vector]) -> Vector {
        assert!(!vectors.is_empty());
        let dim = vectors[0].dim();
        let mut acc = vec![0.0; dim];
        for v in vectors {
            debug_assert_eq!(v.dim(), dim);
            for (a, b) in acc.iter_mut().zip(&v.coords) {
                *a += b;
            }
        }
        let inv = 1.0 / vectors.len() as f64;
        Vector::from_raw(acc.into_iter().map(|a| a * inv).collect())
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

/// `sum_j (a_j - b_j)^2`, the squared Euclidean distance.
pub fn squared_distance(a: &Vector, b: &Vector) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    Ok(a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| (x - y) * (x - y))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squared_distance_identity() {
        let a = Vector::new(vec![1.0, 2.0]).unwrap();
        assert_eq!(squared_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn squared_distance_pythagorean() {
        let a = Vector::new(vec![3.0, 4.0]).unwrap();
        let b = Vector::zeros(2);
        assert_eq!(squared_distance(&a, &b).unwrap(), 25.0);
    }

    #[test]
    fn squared_distance_hand_sum() {
        let a = Vector::new(vec![1.0, 0.0, -1.0]).unwrap();
        let b = Vector::zeros(3);
        assert_eq!(squared_distance(&a, &b).unwrap(), 2.0);
    }

    #[test]
    fn squared_distance_dimension_mismatch() {
        let a = Vector::zeros(2);
        let b = Vector::zeros(3);
        assert!(matches!(
            squared_distance(&a, &b),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(Vector::new(vec![f64::NAN]).is_err());
        assert!(Vector::new(vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn lerp_full_replacement_is_exact() {
        let a = Vector::new(vec![0.3, -7.25]).unwrap();
        let b = Vector::new(vec![0.1, 2.5]).unwrap();
        let out = a.lerp(1.0, &b);
        assert_eq!(out.as_slice(), b.as_slice());
    }
}
