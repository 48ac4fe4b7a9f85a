use num_traits::Float;
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
    pub seed: u64,
    pub acceptance_rate: f64,
    /// False when the acceptance rate fell outside [0.1, 0.9].
    pub well_tuned: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetropolisConfig {
    pub proposal_scale: f64,
    pub n_samples: usize,
    pub burn_in: usize,
    pub seed: u64,
    pub batches: usize,
}

impl Default for MetropolisConfig {
    fn default() -> Self {
        MetropolisConfig {
            proposal_scale: 1.0,
            n_samples: 100_000,
            burn_in: 10_000,
            seed: 0,
            batches: 50,
        }
    }
}

pub const MIN_SAMPLES: usize = 10_000;

/// Random-walk Metropolis estimate of `<observable>` under `exp(log_weight)`.
///
/// Proposals are uniform on `[-scale, scale]^D` around the current state;
/// `log_weight` may return `-inf` outside the support. The standard error
/// comes from batch means.
pub fn metropolis_expectation<const D: usize, W, O>(
    log_weight: W,
    observable: O,
    start: [f64; D],
    cfg: MetropolisConfig,
) -> Result<McEstimate>
where
    W: Fn(&[f64; D]) -> f64,
    O: Fn(&[f64; D]) -> f64,
{
    if cfg.n_samples < MIN_SAMPLES {
        return Err(Error::param(
            "n_samples",
            format!("need at least {MIN_SAMPLES} samples, got {}", cfg.n_samples),
        ));
    }
    if !(cfg.proposal_scale > 0.0) || cfg.batches < 2 || cfg.n_samples < cfg.batches {
        return Err(Error::param("metropolis", "proposal scale > 0 and at least 2 batches required"));
    }
    let mut lw = log_weight(&start);
    if !lw.is_finite() {
        return Err(Error::param("start", "log weight is not finite at the start state"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut x = start;
    let mut accepted = 0usize;
    let mut proposals = 0usize;
    let batch_len = cfg.n_samples / cfg.batches;
    let mut batch_means: Vec<f64> = Vec::with_capacity(cfg.batches);
    let mut batch_sum = 0.0;
    let mut in_batch = 0usize;

    for step in 0..(cfg.burn_in + batch_len * cfg.batches) {
        let mut y = x;
        for c in y.iter_mut() {
            *c += cfg.proposal_scale * (2.0 * rng.random::<f64>() - 1.0);
        }
        let ly = log_weight(&y);
        let u: f64 = rng.random();
        proposals += 1;
        if ly.is_finite() && (ly >= lw || u.ln() < ly - lw) {
            x = y;
            lw = ly;
            accepted += 1;
        }
        if step >= cfg.burn_in {
            batch_sum += observable(&x);
            in_batch += 1;
            if in_batch == batch_len {
                batch_means.push(batch_sum / batch_len as f64);
                batch_sum = 0.0;
                in_batch = 0;
            }
        }
    }
    let b = batch_means.len() as f64;
    let mean = batch_means.iter().sum::<f64>() / b;
    let var = batch_means.iter().map(|m| (m - mean) * (m - mean)).sum::<f64>() / (b - 1.0);
    let acceptance_rate = accepted as f64 / proposals as f64;
    Ok(McEstimate {
        mean,
        std_error: (var / b).sqrt(),
        samples: batch_len * cfg.batches,
        seed: cfg.seed,
        acceptance_rate,
        well_tuned: (0.1..=0.9).contains(&acceptance_rate),
    })
}
