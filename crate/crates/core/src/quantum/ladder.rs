use num_traits::Float;
use crate::error::{Error, Result};
use crate::params::{positive, UnitSystem};
use alloc::format;
use alloc::vec;
use nalgebra::DMatrix;

/// Matrix of `x^power` in the first `dimension` harmonic-oscillator states.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderBasisOperator {
    pub dimension: usize,
    pub power: u32,
    pub matrix: DMatrix<f64>,
}

impl LadderBasisOperator {
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.matrix[(row, col)]
    }
}

/// `x^power` with `x = sqrt(s) (a + a^dag)`, `s = hbar / (2 m omega)`.
///
/// Each column is obtained by applying `a + a^dag` to `|n>` `power` times in
/// a space large enough that nothing is lost, so the retained block is exact
/// (it is not the power of a truncated `x`).
pub fn position_power_matrix(
    power: u32,
    dimension: usize,
    mass: f64,
    omega: f64,
    u: &UnitSystem,
) -> Result<LadderBasisOperator> {
    if !(1..=4).contains(&power) {
        return Err(Error::param("power", format!("must be in 1..=4, got {power}")));
    }
    if dimension < power as usize + 2 {
        return Err(Error::param(
            "dimension",
            format!("need at least power + 2 = {} states, got {dimension}", power + 2),
        ));
    }
    positive("mass", mass)?;
    positive("omega", omega)?;
    u.validate()?;
    let s = u.hbar / (2.0 * mass * omega);
    let scale = s.powf(power as f64 / 2.0);
    let k = power as usize;
    let mut m = DMatrix::zeros(dimension, dimension);
    let mut v = vec![0.0; dimension + k + 1];
    let mut w = vec![0.0; dimension + k + 1];
    for col in 0..dimension {
        v.iter_mut().for_each(|x| *x = 0.0);
        v[col] = 1.0;
        let mut hi = col;
        for _ in 0..k {
            w.iter_mut().for_each(|x| *x = 0.0);
            for (level, &c) in v.iter().enumerate().take(hi + 1) {
                if c == 0.0 {
                    continue;
                }
                w[level + 1] += (level as f64 + 1.0).sqrt() * c;
                if level > 0 {
                    w[level - 1] += (level as f64).sqrt() * c;
                }
            }
            core::mem::swap(&mut v, &mut w);
            hi += 1;
        }
        let lo = col.saturating_sub(k);
        for row in lo..(col + k + 1).min(dimension) {
            m[(row, col)] = scale * v[row];
        }
    }
    // Both triangles hold the same exact value up to rounding; make the
    // symmetry exact.
    for col in 0..dimension {
        for row in (col + 1)..dimension {
            let avg = 0.5 * (m[(row, col)] + m[(col, row)]);
            m[(row, col)] = avg;
            m[(col, row)] = avg;
        }
    }
    Ok(LadderBasisOperator {
        dimension,
        power,
        matrix: m,
    })
}
