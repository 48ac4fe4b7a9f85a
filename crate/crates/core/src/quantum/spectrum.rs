use num_traits::Float;
use crate::error::Result;
use crate::params::{positive, OscillatorParams, UnitSystem};

/// `E_n = A n^2 + B n + C` at one frequency, with the printed coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpectrumCoeffs {
    pub a_coeff: f64,
    pub b_coeff: f64,
    pub c_coeff: f64,
    pub omega: f64,
}

impl SpectrumCoeffs {
    pub fn energy_level(&self, n: usize) -> f64 {
        let n = n as f64;
        self.a_coeff * n * n + self.b_coeff * n + self.c_coeff
    }
}

/// `A = -mu^2 hbar^2/(16 m^3 w^4) + 3 lambda hbar^2/(2 m^2 w^2)`,
/// `B = -3 mu^2 hbar^2/(8 m^3 w^4) + 3 lambda hbar^2/(2 m^2 w^2) + hbar w`,
/// `C = -5 mu^2 hbar^2/(16 m^3 w^4) + 3 lambda hbar^2/(4 m^2 w^2) + hbar w/2`.
///
/// `omega` is the mode frequency; the oscillator's own `omega` is ignored.
pub fn spectrum_coeffs(omega: f64, p: &OscillatorParams, u: &UnitSystem) -> Result<SpectrumCoeffs> {
    positive("omega", omega)?;
    p.validate()?;
    u.validate()?;
    let m = p.mass;
    let h2 = u.hbar * u.hbar;
    let cubic = p.cubic * p.cubic * h2 / (m * m * m * omega.powi(4));
    let quartic = p.quartic * h2 / (m * m * omega * omega);
    let hw = u.hbar * omega;
    Ok(SpectrumCoeffs {
        a_coeff: -cubic / 16.0 + 1.5 * quartic,
        b_coeff: -3.0 * cubic / 8.0 + 1.5 * quartic + hw,
        c_coeff: -5.0 * cubic / 16.0 + 0.75 * quartic + 0.5 * hw,
        omega,
    })
}
