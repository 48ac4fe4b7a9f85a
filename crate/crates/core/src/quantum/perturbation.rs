//! Rayleigh–Schrödinger corrections for `H_I = mu x^3 + lambda x^4`.
//!
//! Two engines are kept side by side. The printed shift formulas
//!
//! ```text
//! dE_1 = -mu^2 hbar^2 / (16 m^3 w^4) (n^2 + 6n + 5)        (cubic)
//! dE_2 = 3 lambda hbar^2 / (4 m^2 w^2) (2n^2 + 2n + 1)     (quartic)
//! ```
//!
//! and the generic first/second-order sums over exact ladder matrix elements.
//! They are compared, never blended.

use num_traits::Float;
use super::ladder::position_power_matrix;
use crate::error::{Error, Result};
use crate::oracles::{diagonalize_truncated, TruncatedSpectrum, TruncationOptions};
use crate::params::{OscillatorParams, UnitSystem};
use crate::report::ComparisonReport;
use alloc::format;
use alloc::vec::Vec;
use nalgebra::DMatrix;

/// Agreement required between the printed and generic shifts. Both are built
/// from exact matrix elements, so only rounding separates them.
pub const SHIFT_THRESHOLD: f64 = 1e-12;

/// Extra basis states above `n` used by the generic engine.
pub const BASIS_MARGIN: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Order {
    First,
    Second,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PerturbationMode {
    PaperLiteral,
    GenericRspt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PerturbationOrder {
    pub order: Order,
    pub mode: PerturbationMode,
}

impl PerturbationOrder {
    pub fn new(order: Order, mode: PerturbationMode) -> Self {
        PerturbationOrder { order, mode }
    }
}

impl Order {
    pub fn as_str(self) -> &'static str {
        match self {
            Order::First => "first",
            Order::Second => "second",
            Order::Both => "both",
        }
    }
}

impl PerturbationMode {
    pub fn as_str(self) -> &'static str {
        match self {
            PerturbationMode::PaperLiteral => "paper_literal",
            PerturbationMode::GenericRspt => "generic_rspt",
        }
    }
}

/// First- and second-order shifts of one level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shifts {
    pub first: f64,
    pub second: f64,
}

impl Shifts {
    pub fn select(&self, order: Order) -> f64 {
        match order {
            Order::First => self.first,
            Order::Second => self.second,
            Order::Both => self.first + self.second,
        }
    }
}

fn check(p: &OscillatorParams, u: &UnitSystem) -> Result<()> {
    p.validate()?;
    u.validate()
}

/// The printed formulas. `first` is the quartic shift, `second` the cubic one.
pub fn paper_literal_shifts(n: usize, p: &OscillatorParams, u: &UnitSystem) -> Result<Shifts> {
    check(p, u)?;
    let nf = n as f64;
    let (m, w, h) = (p.mass, p.omega, u.hbar);
    let cubic = -p.cubic * p.cubic * h * h / (16.0 * m * m * m * w.powi(4)) * (nf * nf + 6.0 * nf + 5.0);
    let quartic = 3.0 * p.quartic * h * h / (4.0 * m * m * w * w) * (2.0 * nf * nf + 2.0 * nf + 1.0);
    Ok(Shifts {
        first: quartic,
        second: cubic,
    })
}

/// `H_I = mu x^3 + lambda x^4` in the first `dimension` states.
pub fn interaction_matrix(dimension: usize, p: &OscillatorParams, u: &UnitSystem) -> Result<DMatrix<f64>> {
    let x3 = position_power_matrix(3, dimension, p.mass, p.omega, u)?;
    let x4 = position_power_matrix(4, dimension, p.mass, p.omega, u)?;
    Ok(x3.matrix * p.cubic + x4.matrix * p.quartic)
}

/// `H_0 + H_I` in the first `dimension` states.
pub fn hamiltonian_matrix(dimension: usize, p: &OscillatorParams, u: &UnitSystem) -> Result<DMatrix<f64>> {
    let mut h = interaction_matrix(dimension, p, u)?;
    for k in 0..dimension {
        h[(k, k)] += u.hbar * p.omega * (k as f64 + 0.5);
    }
    Ok(h)
}

fn rspt_in_basis(n: usize, dimension: usize, p: &OscillatorParams, u: &UnitSystem) -> Result<Shifts> {
    let hi = interaction_matrix(dimension, p, u)?;
    let hw = u.hbar * p.omega;
    let mut second = 0.0;
    for k in 0..dimension {
        if k == n {
            continue;
        }
        let elem = hi[(n, k)];
        second += elem * elem / (hw * (n as f64 - k as f64));
    }
    Ok(Shifts {
        first: hi[(n, n)],
        second,
    })
}

/// Generic `<n|H_I|n>` and `sum_{k != n} |<n|H_I|k>|^2 / (E_n - E_k)`, together
/// with whether doubling the basis left both unchanged.
pub fn generic_rspt_shifts(n: usize, p: &OscillatorParams, u: &UnitSystem) -> Result<(Shifts, bool)> {
    check(p, u)?;
    let dim = n + BASIS_MARGIN;
    let a = rspt_in_basis(n, dim, p, u)?;
    let b = rspt_in_basis(n, 2 * dim, p, u)?;
    let same = |x: f64, y: f64| (x - y).abs() <= 4.0 * f64::EPSILON * y.abs().max(f64::MIN_POSITIVE);
    Ok((a, same(a.first, b.first) && same(a.second, b.second)))
}

/// The shift selected by `sel`, from the engine selected by `sel.mode`.
pub fn shift_value(n: usize, p: &OscillatorParams, sel: PerturbationOrder, u: &UnitSystem) -> Result<f64> {
    match sel.mode {
        PerturbationMode::PaperLiteral => Ok(paper_literal_shifts(n, p, u)?.select(sel.order)),
        PerturbationMode::GenericRspt => Ok(generic_rspt_shifts(n, p, u)?.0.select(sel.order)),
    }
}

/// Printed shift (literal) against the generic engine (oracle) for the
/// selected order.
///
/// The generic second order contains every intermediate state of
/// `mu x^3 + lambda x^4`, including the `lambda^2` terms the printed
/// cubic formula has no counterpart for.
pub fn perturbative_shift(
    n: usize,
    p: &OscillatorParams,
    sel: PerturbationOrder,
    u: &UnitSystem,
) -> Result<ComparisonReport> {
    let literal = paper_literal_shifts(n, p, u)?.select(sel.order);
    let (generic, converged) = generic_rspt_shifts(n, p, u)?;
    let name = match sel.order {
        Order::First => format!("quartic shift n={n}"),
        Order::Second => format!("cubic shift n={n}"),
        Order::Both => format!("total shift n={n}"),
    };
    let r = ComparisonReport::compare(
        name,
        literal,
        generic.select(sel.order),
        SHIFT_THRESHOLD,
        "printed level shifts vs Rayleigh-Schroedinger sums over exact ladder matrix elements",
    )
    .with_option("order", sel.order.as_str())
    .with_option("mode", sel.mode.as_str())
    .with_option("basis", n + BASIS_MARGIN);
    if converged {
        Ok(r)
    } else {
        Ok(r.flag(format!("generic shifts moved when the basis was doubled to {}", 2 * (n + BASIS_MARGIN))))
    }
}

/// `E_n^0 + dE^(1) + dE^(2)` from the generic engine.
pub fn second_order_levels(levels: usize, p: &OscillatorParams, u: &UnitSystem) -> Result<Vec<f64>> {
    let hw = u.hbar * p.omega;
    (0..levels)
        .map(|n| {
            let (s, _) = generic_rspt_shifts(n, p, u)?;
            Ok(hw * (n as f64 + 0.5) + s.first + s.second)
        })
        .collect()
}

/// Lowest `levels` eigenvalues of the truncated Hamiltonian, with basis
/// doubling until they settle.
pub fn diagonalized_levels(
    levels: usize,
    p: &OscillatorParams,
    u: &UnitSystem,
    opts: TruncationOptions,
) -> Result<TruncatedSpectrum> {
    check(p, u)?;
    let mut failure = None;
    let spectrum = diagonalize_truncated(
        |dim| match hamiltonian_matrix(dim, p, u) {
            Ok(h) => h,
            Err(e) => {
                failure = Some(e);
                DMatrix::zeros(dim, dim)
            }
        },
        levels,
        opts,
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(spectrum),
    }
}

/// `lambda hbar / (m^2 w^3)` and `mu sqrt(hbar / (m^3 w^5))`: the couplings
/// in units of `hbar w` and the oscillator length.
pub fn reduced_couplings(p: &OscillatorParams, u: &UnitSystem) -> (f64, f64) {
    let (m, w, h) = (p.mass, p.omega, u.hbar);
    (p.quartic * h / (m * m * w * w * w), p.cubic * (h / (m * m * m * w.powi(5))).sqrt())
}

/// Parameters with the given reduced couplings on top of `(m, w)`.
pub fn with_reduced_couplings(
    base: &OscillatorParams,
    quartic: f64,
    cubic: f64,
    u: &UnitSystem,
) -> Result<OscillatorParams> {
    check(base, u)?;
    if !(quartic >= 0.0) || !cubic.is_finite() {
        return Err(Error::param("quartic", "reduced quartic coupling must be >= 0"));
    }
    let (m, w, h) = (base.mass, base.omega, u.hbar);
    Ok(OscillatorParams {
        quartic: quartic * m * m * w * w * w / h,
        cubic: cubic / (h / (m * m * m * w.powi(5))).sqrt(),
        ..*base
    })
}
