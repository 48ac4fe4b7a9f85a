use num_traits::Float;
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use nalgebra::DMatrix;

/// `k` lowest eigenvalues of a dense symmetric matrix, ascending.
pub fn lowest_eigenvalues(h: &DMatrix<f64>, k: usize) -> Result<Vec<f64>> {
    let n = h.nrows();
    if n != h.ncols() {
        return Err(Error::param("matrix", format!("not square: {}x{}", n, h.ncols())));
    }
    if k > n {
        return Err(Error::param("k", format!("requested {k} eigenvalues of a {n}x{n} matrix")));
    }
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            worst = worst.max((h[(i, j)] - h[(j, i)]).abs());
        }
    }
    if worst > 1e-12 {
        return Err(Error::Asymmetric(worst));
    }
    let mut values: Vec<f64> = h.clone().symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values.truncate(k);
    Ok(values)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationOptions {
    pub n_start: usize,
    pub n_limit: usize,
    pub rel_tol: f64,
}

impl Default for TruncationOptions {
    fn default() -> Self {
        TruncationOptions {
            n_start: 200,
            n_limit: 2000,
            rel_tol: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSpectrum {
    pub eigenvalues: Vec<f64>,
    /// Per eigenvalue: did doubling the basis move it by at most `rel_tol`?
    pub converged: Vec<bool>,
    /// Basis size the reported eigenvalues come from.
    pub dimension: usize,
}

impl TruncatedSpectrum {
    pub fn all_converged(&self) -> bool {
        self.converged.iter().all(|&c| c)
    }
}

/// Diagonalize `build(N)` at `N = n_start` and `2N`, doubling until the `k`
/// lowest eigenvalues stop moving or `2N` would exceed `n_limit`.
pub fn diagonalize_truncated<B: FnMut(usize) -> DMatrix<f64>>(
    mut build: B,
    k: usize,
    opts: TruncationOptions,
) -> Result<TruncatedSpectrum> {
    if opts.n_start < k || opts.n_start == 0 {
        return Err(Error::param("n_start", format!("basis of {} cannot hold {k} levels", opts.n_start)));
    }
    if opts.n_start > opts.n_limit {
        return Err(Error::param("n_start", "exceeds the basis-size limit"));
    }
    let mut n = opts.n_start;
    let mut current = lowest_eigenvalues(&build(n), k)?;
    loop {
        if 2 * n > opts.n_limit {
            return Ok(TruncatedSpectrum {
                converged: alloc::vec![false; k],
                eigenvalues: current,
                dimension: n,
            });
        }
        let refined = lowest_eigenvalues(&build(2 * n), k)?;
        let converged: Vec<bool> = current
            .iter()
            .zip(&refined)
            .map(|(a, b)| (a - b).abs() <= opts.rel_tol * b.abs().max(f64::MIN_POSITIVE))
            .collect();
        if converged.iter().all(|&c| c) {
            return Ok(TruncatedSpectrum {
                eigenvalues: current,
                converged,
                dimension: n,
            });
        }
        current = refined;
        n *= 2;
    }
}
