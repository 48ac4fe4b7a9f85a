use num_traits::Float;
use crate::error::{Error, Result};
use alloc::format;

/// Records where a series (or a box of nested series) was cut and a bound on
/// what was dropped. For single series only `n_max` is meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeriesTruncation {
    pub n_max: usize,
    pub i_max: usize,
    pub j_max: usize,
    pub tail_estimate: f64,
}

impl SeriesTruncation {
    pub fn for_box(n_max: usize, i_max: usize, j_max: usize) -> Self {
        SeriesTruncation {
            n_max,
            i_max,
            j_max,
            tail_estimate: 0.0,
        }
    }
}

/// When to trust the geometric tail bound.
///
/// The bound `t_n r / (1 - r)`, with `r` the largest term ratio over the last
/// `window` terms, holds when ratios do not increase afterwards (log-concave
/// terms). Terms that are still growing after `grace` terms, or a series that
/// has not met its tolerance after `max_terms`, are reported as divergent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailPolicy {
    pub window: usize,
    pub grace: usize,
    pub max_terms: usize,
}

impl Default for TailPolicy {
    fn default() -> Self {
        TailPolicy {
            window: 8,
            grace: 100_000,
            max_terms: 10_000_000,
        }
    }
}

/// Sum `term(0) + term(1) + ...` until the tail bound drops below
/// `rel_tol * |sum|`.
pub fn sum_until_tail_bound<F: FnMut(usize) -> f64>(
    mut term: F,
    policy: TailPolicy,
    rel_tol: f64,
) -> Result<(f64, SeriesTruncation)> {
    if !(rel_tol > 0.0) || policy.window < 2 {
        return Err(Error::param(
            "tail_policy",
            "rel_tol must be > 0 and the window at least 2 terms",
        ));
    }
    let w = policy.window;
    let mut ring = alloc::vec![0.0f64; w];
    let mut sum = 0.0;
    let mut comp = 0.0;
    for n in 0..policy.max_terms {
        let t = term(n);
        if !t.is_finite() {
            return Err(Error::NotConvergent(format!(
                "series not convergent under policy: term {n} is {t}"
            )));
        }
        // Neumaier summation: long partial sums of smooth terms.
        let s = sum + t;
        comp += if sum.abs() >= t.abs() { (sum - s) + t } else { (t - s) + sum };
        sum = s;
        ring[n % w] = t;
        if n + 1 < w {
            continue;
        }
        let total = sum + comp;
        let window_terms = (0..w).map(|k| ring[(n + 1 + k) % w]);
        if window_terms.clone().all(|x| x == 0.0) {
            return Ok((total, truncation(n, 0.0)));
        }
        let mut ratio: f64 = 0.0;
        let mut prev = None;
        let mut monotone = true;
        for x in window_terms {
            if let Some(p) = prev {
                if !(x >= 0.0 && p > 0.0 && x <= p) {
                    monotone = false;
                    break;
                }
                ratio = ratio.max(x / p);
            }
            prev = Some(x);
        }
        if monotone && ratio < 1.0 {
            let tail = t * ratio / (1.0 - ratio);
            if tail <= rel_tol * total.abs() {
                return Ok((total, truncation(n, tail)));
            }
        } else if n >= policy.grace {
            return Err(Error::NotConvergent(format!(
                "series not convergent under policy: terms not decaying after {n} terms"
            )));
        }
    }
    Err(Error::NotConvergent(format!(
        "series not convergent under policy: tolerance {rel_tol:e} not met within {} terms",
        policy.max_terms
    )))
}

fn truncation(n: usize, tail: f64) -> SeriesTruncation {
    SeriesTruncation {
        n_max: n,
        i_max: 0,
        j_max: 0,
        tail_estimate: tail,
    }
}
