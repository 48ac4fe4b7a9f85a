//! Independent numerical ground truth: adaptive quadrature, series
//! summation with tail bounds, truncated-basis diagonalization and a seeded
//! Metropolis sampler.

mod eigen;
mod metropolis;
mod quadrature;
mod series;

pub use eigen::{diagonalize_truncated, lowest_eigenvalues, TruncatedSpectrum, TruncationOptions};
pub use metropolis::{metropolis_expectation, McEstimate, MetropolisConfig, MIN_SAMPLES};
pub use quadrature::{
    integrate, integrate_semi_infinite, integrate_semi_infinite_with, QuadratureOptions,
    QuadratureResult, SemiInfiniteMap,
};
pub use series::{sum_until_tail_bound, SeriesTruncation, TailPolicy};
