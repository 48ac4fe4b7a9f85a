//! Special functions for the closed forms: modified Bessel `K_nu` of real
//! order and its derivative, the Whittaker function `W_{kappa,mu}` (through
//! Tricomi's `U`), and the upper incomplete gamma function.
//!
//! Every operation has a log-scaled twin returning `ln |f|` and the sign;
//! the series terms built from these functions multiply very large and very
//! small factors.

mod bessel;
mod gamma;
mod whittaker;

pub use bessel::{bessel_k, bessel_k_derivative, ln_bessel_k, ln_bessel_k_derivative};
pub use gamma::{
    gamma, ln_gamma, ln_upper_incomplete_gamma, ln_upper_incomplete_gamma_any,
    upper_incomplete_gamma, upper_incomplete_gamma_any,
};
pub use whittaker::{ln_tricomi_u, ln_whittaker_w, tricomi_u, whittaker_w};

#[doc(hidden)]
pub mod branches {
    //! Individual evaluation branches, exposed for cross-branch tests.
    pub use super::bessel::{k_pair_asymptotic, k_pair_continued_fraction, k_pair_series};
    pub use super::whittaker::{ln_u_asymptotic, ln_u_quadrature};
}

use num_traits::Float;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Method {
    Series,
    Asymptotic,
    Quadrature,
    Recurrence,
    ContinuedFraction,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpecialFunctionResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub method: Method,
}

/// `f = sign * exp(ln_abs)`. `abs_error_estimate` is the absolute error of
/// `ln_abs`, i.e. the relative error of `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LogScaled {
    pub ln_abs: f64,
    pub sign: f64,
    pub abs_error_estimate: f64,
    pub method: Method,
}

impl LogScaled {
    pub(crate) fn positive(ln_abs: f64, rel_err: f64, method: Method) -> Self {
        LogScaled {
            ln_abs,
            sign: 1.0,
            abs_error_estimate: rel_err,
            method,
        }
    }

    pub fn value(&self) -> f64 {
        self.sign * self.ln_abs.exp()
    }

    /// Convert to a plain value, failing when it is not representable.
    pub(crate) fn into_value(self, function: &'static str) -> Result<SpecialFunctionResult> {
        if self.sign == 0.0 {
            return Ok(SpecialFunctionResult {
                value: 0.0,
                abs_error_estimate: self.abs_error_estimate,
                method: self.method,
            });
        }
        if !(self.ln_abs < MAX_LN && self.ln_abs > MIN_LN) {
            return Err(Error::range(
                function,
                alloc::format!("|result| = exp({}) is not representable", self.ln_abs),
            ));
        }
        let value = self.value();
        Ok(SpecialFunctionResult {
            value,
            abs_error_estimate: value.abs() * self.abs_error_estimate,
            method: self.method,
        })
    }
}

/// Largest and smallest `ln |f|` accepted by the plain-value variants.
pub(crate) const MAX_LN: f64 = 709.0;
pub(crate) const MIN_LN: f64 = -708.0;

pub(crate) const EPS: f64 = f64::EPSILON;

/// `ln(e^a + e^b)`.
pub(crate) fn ln_add_exp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + (lo - hi).exp().ln_1p()
}
