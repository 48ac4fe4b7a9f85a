//! Numerics for classical and quantum anharmonic-oscillator gases.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computations: special functions, quadrature/series/eigenvalue/Monte Carlo
//! oracles, and the partition-function and energy-density machinery built on
//! top of them. File formats, configuration and the command line live in the
//! companion `anharmonic` crate.
//!
//! Closed-form expressions are evaluated literally and, wherever possible,
//! paired with an independent numerical route. The pair is packaged as a
//! [`ComparisonReport`]; a literal expression that disagrees with its oracle
//! is reported as [`Status::Flagged`] rather than patched.

#![no_std]
// Float methods come from `num_traits::Float` (backed by libm). When std is
// linked as well (tests, std consumers) the inherent methods take precedence
// and those imports look unused.
#![allow(unused_imports)]

extern crate alloc;

pub mod classical;
pub mod error;
pub mod oracles;
pub mod params;
pub mod quantum;
pub mod report;
pub mod specfun;

pub use error::{Error, Result};
pub use params::{FormalVolumes, OscillatorParams, ThermalState, UnitSystem};
pub use report::{ComparisonReport, Status};
