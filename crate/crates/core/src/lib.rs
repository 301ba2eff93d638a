//! Fixed-point iterations with compressed iterates.
//!
//! A library and simulation harness for iterative methods whose iterates are
//! randomly compressed before every exchange: a zoo of unbiased compression
//! operators with known variance constants, stochastic fixed-point maps
//! bundled with contraction certificates, a plain and a variance-reduced
//! iteration engine over a simulated master/worker network with per-message
//! bit accounting, and closed-form convergence-bound calculators so any run
//! can be checked against the rate it is supposed to obey.
//!
//! ```
//! use fpci::compressors::{apply_compressor, CompressorSpec};
//! use fpci::numerics::{RngStream, Vector};
//!
//! let comp = CompressorSpec::Natural;
//! let x = Vector::new(vec![3.0, -0.75])?;
//! let mut stream = RngStream::from_root(7).derive(&[0]);
//! let y = apply_compressor(&comp, &x, &mut stream)?;
//! // Each coordinate lands on an adjacent power of two.
//! assert!(y[0] == 2.0 || y[0] == 4.0);
//! assert!(y[1] == -0.5 || y[1] == -1.0);
//! # Ok::<(), fpci::Error>(())
//! ```
//!
//! The `book/` directory of the repository holds a narrative guide; its code
//! snippets compile and run as doctests of this crate.

pub mod algorithms;
pub mod compressors;
pub mod config;
mod error;
pub mod experiment;
pub mod numerics;
pub mod operators;
pub mod simnet;
pub mod theory;
pub mod verify;

pub use error::{Error, Result};

// Book chapters double as doctests so the guide cannot drift from the code.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            #[allow(dead_code)]
            pub struct $name;
        };
    }

    chapter!(VectorsAndStreams, "../../../book/src/vectors-and-streams.md");
    chapter!(Compressors, "../../../book/src/compressors.md");
    chapter!(MapsAndCertificates, "../../../book/src/maps-and-certificates.md");
    chapter!(IterationEngine, "../../../book/src/iteration-engine.md");
    chapter!(TheoryCalculator, "../../../book/src/theory.md");
    chapter!(NetworkAccounting, "../../../book/src/network-accounting.md");
    chapter!(Experiments, "../../../book/src/experiments.md");
}
