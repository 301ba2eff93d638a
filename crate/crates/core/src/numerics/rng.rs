use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};
use sha2::{Digest, Sha256};

use crate::numerics::Vector;

/// Deterministic, splittable random stream keyed on `(root_seed, path)`.
///
/// The path identifies a randomness role in the simulation — e.g.
/// `[role, node, iteration]` — so every node and every iteration draws from
/// its own stream. Streams with distinct paths are backed by ChaCha ciphers
/// keyed with distinct SHA-256 digests, which makes them statistically
/// independent; the same `(root_seed, path)` always reproduces the identical
/// sequence across runs and platforms.
///
/// Deriving a substream depends only on the parent's identity, never on how
/// much of the parent has been consumed.
#[derive(Debug, Clone)]
pub struct RngStream {
    root_seed: u64,
    path: Vec<u64>,
    rng: ChaCha12Rng,
}

fn stream_key(root_seed: u64, path: &[u64]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(b"fpci.stream.v1");
    hasher.update(root_seed.to_le_bytes());
    hasher.update((path.len() as u64).to_le_bytes());
    for label in path {
        hasher.update(label.to_le_bytes());
    }
    hasher.finalize().into()
}

impl RngStream {
    /// Root stream with an empty path.
    pub fn from_root(root_seed: u64) -> Self {
        Self::with_path(root_seed, Vec::new())
    }

    fn with_path(root_seed: u64, path: Vec<u64>) -> Self {
        let rng = ChaCha12Rng::from_seed(stream_key(root_seed, &path));
        RngStream {
            root_seed,
            path,
            rng,
        }
    }

    /// Stream whose path is this stream's path extended by `label`.
    pub fn derive(&self, label: &[u64]) -> Self {
        let mut path = self.path.clone();
        path.extend_from_slice(label);
        Self::with_path(self.root_seed, path)
    }

    pub fn root_seed(&self) -> u64 {
        self.root_seed
    }

    pub fn path(&self) -> &[u64] {
        &self.path
    }

    /// Uniform draw in `[0, 1)` with 53 bits of precision.
    pub fn uniform(&mut self) -> f64 {
        const DEN: f64 = (1u64 << 53) as f64;
        ((self.next_u64() >> 11) as f64) / DEN
    }

    /// One standard normal draw.
    pub fn gaussian(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.rng.try_fill_bytes(dest)
    }
}

/// `count` i.i.d. standard normal draws, consuming the stream.
pub fn sample_standard_gaussian(stream: &mut RngStream, count: usize) -> Vector {
    let coords = (0..count).map(|_| stream.gaussian()).collect();
    Vector::from_raw(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_extends_path() {
        let root = RngStream::from_root(7);
        let child = root.derive(&[1, 0]);
        assert_eq!(child.path(), &[1, 0]);
        assert_eq!(child.root_seed(), 7);
        let grandchild = child.derive(&[4]);
        assert_eq!(grandchild.path(), &[1, 0, 4]);
    }

    #[test]
    fn derivation_is_order_sensitive() {
        let root = RngStream::from_root(11);
        let mut a = root.derive(&[1]).derive(&[2]);
        let mut b = root.derive(&[2]).derive(&[1]);
        let xs: Vec<u64> = (0..8).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn same_identity_same_sequence() {
        let root = RngStream::from_root(3);
        let mut a = root.derive(&[5, 6]);
        let mut b = root.derive(&[5, 6]);
        for _ in 0..32 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn derivation_ignores_parent_consumption() {
        let mut parent = RngStream::from_root(9);
        let fresh_child = parent.derive(&[1]);
        parent.next_u64();
        parent.next_u64();
        let mut consumed_child = parent.derive(&[1]);
        let mut fresh_child = fresh_child;
        for _ in 0..16 {
            assert_eq!(fresh_child.next_u64(), consumed_child.next_u64());
        }
    }

    #[test]
    fn gaussian_determinism() {
        let root = RngStream::from_root(42);
        let a = sample_standard_gaussian(&mut root.derive(&[0]), 100);
        let b = sample_standard_gaussian(&mut root.derive(&[0]), 100);
        assert_eq!(a.as_slice(), b.as_slice());
    }

    #[test]
    fn gaussian_moments() {
        // CLT bound for the mean is ~3/sqrt(N) = 0.003; 0.01 gives slack.
        let n = 1_000_000usize;
        let mut stream = RngStream::from_root(2024).derive(&[17]);
        let draws = sample_standard_gaussian(&mut stream, n);
        let mean: f64 = draws.as_slice().iter().sum::<f64>() / n as f64;
        let var: f64 =
            draws.as_slice().iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.01, "var {var}");
    }

    #[test]
    fn sibling_streams_uncorrelated() {
        let root = RngStream::from_root(5);
        let n = 100_000usize;
        let a = sample_standard_gaussian(&mut root.derive(&[0]), n);
        let b = sample_standard_gaussian(&mut root.derive(&[1]), n);
        let corr: f64 = a
            .as_slice()
            .iter()
            .zip(b.as_slice())
            .map(|(x, y)| x * y)
            .sum::<f64>()
            / n as f64;
        // 3 standard errors of the empirical cross-moment of independent N(0,1).
        assert!(corr.abs() < 3.0 / (n as f64).sqrt(), "corr {corr}");
    }
}
