//! Energy densities of massless and massive gases of anharmonic modes.
//!
//! The per-mode mean energy uses Boltzmann weights `e^{-f_n}` throughout and
//! excludes the zero-point term. Modes outside the positivity window carry
//! no weight.

use num_traits::Float;
use super::modes::{dimensionless_couplings, mode_energy_numerator, mode_mean_occupancy_energy, DimensionlessCouplings};
use crate::error::{Error, Result};
use crate::oracles::{integrate_semi_infinite_with, QuadratureOptions, SemiInfiniteMap};
use crate::params::{positive, OscillatorParams, ThermalState, UnitSystem};
use crate::report::ComparisonReport;
use alloc::format;
use core::f64::consts::PI;

pub const ENERGY_DENSITY_THRESHOLD: f64 = 1e-8;

/// Beyond this `y` every integrand here is below `e^{-700}` and is taken as 0.
const Y_NEGLIGIBLE: f64 = 700.0;

/// Lower limit of the frequency integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CutoffConvention {
    /// `y_star`, the root of the positivity functions.
    RootFound,
    /// `3 kappa^2`, as printed.
    ThreeKappaSq,
}

impl CutoffConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            CutoffConvention::RootFound => "root_found",
            CutoffConvention::ThreeKappaSq => "three_kappa_sq",
        }
    }

    pub fn other(self) -> Self {
        match self {
            CutoffConvention::RootFound => CutoffConvention::ThreeKappaSq,
            CutoffConvention::ThreeKappaSq => CutoffConvention::RootFound,
        }
    }

    pub fn lower_limit(self, d: &DimensionlessCouplings) -> f64 {
        match self {
            CutoffConvention::RootFound => d.y_star,
            CutoffConvention::ThreeKappaSq => 3.0 * d.kappa_sq.unwrap_or(0.0),
        }
    }
}

/// Square root in the massive display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Radicand {
    /// `(k_B T / M c^2)^2 y - 1`, as printed.
    Printed,
    /// `((k_B T / M c^2) y)^2 - 1`, i.e. `p c = sqrt(E^2 - M^2 c^4)`.
    DispersionCorrected,
}

impl Radicand {
    pub fn as_str(self) -> &'static str {
        match self {
            Radicand::Printed => "printed",
            Radicand::DispersionCorrected => "dispersion_corrected",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnergyDensityOptions {
    pub cutoff: CutoffConvention,
    pub g1_includes_y: bool,
    /// Relative tolerance of the frequency quadrature.
    pub quad_rel_tol: f64,
    /// Relative tolerance of the mode sums inside the integrand.
    pub series_rel_tol: f64,
}

impl Default for EnergyDensityOptions {
    fn default() -> Self {
        EnergyDensityOptions {
            cutoff: CutoffConvention::RootFound,
            g1_includes_y: false,
            quad_rel_tol: 1e-11,
            series_rel_tol: 1e-13,
        }
    }
}

/// `Theta(g_1) Theta(g_2) <eps>(y) y^2`: exactly zero at and below `y_star`.
pub fn massless_integrand(y: f64, d: &DimensionlessCouplings, series_rel_tol: f64) -> Result<f64> {
    if !(y > d.y_star) || d.window_weight(y) == 0.0 || y > Y_NEGLIGIBLE {
        return Ok(0.0);
    }
    Ok(mode_mean_occupancy_energy(y, d, series_rel_tol)? * y * y)
}

/// The same integrand with the normalising sum replaced by `1/(1 - e^{-y})`.
pub fn denominator_replaced_integrand(y: f64, d: &DimensionlessCouplings, series_rel_tol: f64) -> Result<f64> {
    if !(y > d.y_star) || d.window_weight(y) == 0.0 || y > Y_NEGLIGIBLE {
        return Ok(0.0);
    }
    Ok(mode_energy_numerator(y, d, series_rel_tol)? * -(-y).exp_m1() * y * y)
}

/// Quadrature of `integrand` over `[lower, inf)`; integrand failures abort.
pub(crate) fn integrate_checked<I: Fn(f64) -> Result<f64>>(
    integrand: I,
    lower: f64,
    map: SemiInfiniteMap,
    rel_tol: f64,
    what: &str,
) -> Result<f64> {
    let mut failure = None;
    let r = integrate_semi_infinite_with(
        |y| match integrand(y) {
            Ok(v) => v,
            Err(e) => {
                if failure.is_none() {
                    failure = Some(e);
                }
                0.0
            }
        },
        lower,
        map,
        QuadratureOptions::tolerances(rel_tol, 1e-300),
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    if !r.converged {
        return Err(Error::Quadrature(format!(
            "{what}: no convergence after {} evaluations (error estimate {:e})",
            r.evaluations, r.abs_error_estimate
        )));
    }
    Ok(r.value)
}

/// `int_{y_cut}^inf Theta Theta <eps>(y) y^2 dy`.
pub fn massless_integral(
    d: &DimensionlessCouplings,
    y_cut: f64,
    map: SemiInfiniteMap,
    quad_rel_tol: f64,
    series_rel_tol: f64,
) -> Result<f64> {
    integrate_checked(
        |y| massless_integrand(y, d, series_rel_tol),
        y_cut,
        map,
        quad_rel_tol,
        "massless energy density",
    )
}

/// `pi^2 (k_B T)^4 / (15 hbar^3 c^3)`.
pub fn stefan_boltzmann(t: &ThermalState, u: &UnitSystem) -> f64 {
    PI * PI * t.thermal_energy().powi(4) / (15.0 * (u.hbar * u.c).powi(3))
}

fn massless_prefactor(t: &ThermalState, u: &UnitSystem) -> f64 {
    t.thermal_energy().powi(4) / (u.hbar.powi(3) * PI * PI * u.c.powi(3))
}

/// Massless energy density (rational-map quadrature) against an
/// exponential-map quadrature with mode sums at half the tolerance. Both
/// cutoff conventions are evaluated; the unselected one is echoed in the
/// options.
pub fn energy_density_massless(
    p: &OscillatorParams,
    t: &ThermalState,
    u: &UnitSystem,
    opts: &EnergyDensityOptions,
) -> Result<ComparisonReport> {
    let d = dimensionless_couplings(p, t, u, opts.g1_includes_y)?;
    let pre = massless_prefactor(t, u);
    let y_cut = opts.cutoff.lower_limit(&d);
    let literal = pre * massless_integral(&d, y_cut, SemiInfiniteMap::Rational, opts.quad_rel_tol, opts.series_rel_tol)?;
    let oracle = pre
        * massless_integral(
            &d,
            y_cut,
            SemiInfiniteMap::Exponential,
            opts.quad_rel_tol,
            0.5 * opts.series_rel_tol,
        )?;
    let other = opts.cutoff.other();
    let other_value = pre
        * massless_integral(
            &d,
            other.lower_limit(&d),
            SemiInfiniteMap::Rational,
            opts.quad_rel_tol,
            opts.series_rel_tol,
        )?;
    Ok(ComparisonReport::compare(
        "massless energy density",
        literal,
        oracle,
        ENERGY_DENSITY_THRESHOLD,
        "frequency integral of the mode mean energy; two quadrature maps",
    )
    .with_option("cutoff", opts.cutoff.as_str())
    .with_option("y_cut", format!("{y_cut:.16e}"))
    .with_option("y_star", format!("{:.16e}", d.y_star))
    .with_option("g1_includes_y", opts.g1_includes_y)
    .with_option(format!("value_{}", other.as_str()), format!("{other_value:.16e}"))
    .with_option("cutoff_sensitivity", format!("{:.16e}", (literal - other_value).abs()))
    .with_option("a_A", format!("{:.16e}", d.a_a))
    .with_option("a_B", format!("{:.16e}", d.a_b)))
}

/// Massless energy density against the Stefan–Boltzmann law.
pub fn stefan_boltzmann_report(
    p: &OscillatorParams,
    t: &ThermalState,
    u: &UnitSystem,
    opts: &EnergyDensityOptions,
) -> Result<ComparisonReport> {
    let r = energy_density_massless(p, t, u, opts)?;
    Ok(ComparisonReport::compare(
        "Stefan-Boltzmann limit",
        r.literal,
        stefan_boltzmann(t, u),
        ENERGY_DENSITY_THRESHOLD,
        "massless energy density vs pi^2 (k_B T)^4 / (15 hbar^3 c^3)",
    )
    .with_option("T", t.temperature())
    .with_option("quartic", p.quartic)
    .with_option("cubic", p.cubic))
}

/// `int ratio(y) y sqrt(radicand(y)) dy` over `y > y_cut` where the radicand
/// is non-negative; `mass_ratio = M c^2 / (k_B T)`. Returns `(value,
/// window_empty)`.
///
/// The substitution `y = y_0 + s^2` removes the square-root endpoint.
pub fn massive_integral(
    d: &DimensionlessCouplings,
    mass_ratio: f64,
    radicand: Radicand,
    y_cut: f64,
    map: SemiInfiniteMap,
    quad_rel_tol: f64,
    series_rel_tol: f64,
) -> Result<(f64, bool)> {
    positive("mass ratio", mass_ratio)?;
    let alpha = 1.0 / mass_ratio;
    let threshold = match radicand {
        Radicand::Printed => mass_ratio * mass_ratio,
        Radicand::DispersionCorrected => mass_ratio,
    };
    let lower = threshold.max(y_cut);
    if !(lower < Y_NEGLIGIBLE) {
        return Ok((0.0, true));
    }
    let root = |y: f64| match radicand {
        Radicand::Printed => (alpha * alpha * y - 1.0).max(0.0).sqrt(),
        Radicand::DispersionCorrected => ((alpha * y - 1.0) * (alpha * y + 1.0)).max(0.0).sqrt(),
    };
    let value = integrate_checked(
        |s| {
            let y = lower + s * s;
            let w = massless_integrand(y, d, series_rel_tol)?;
            // massless_integrand carries y^2; the massive measure has y.
            Ok(if w == 0.0 { 0.0 } else { w / y * root(y) * 2.0 * s })
        },
        0.0,
        map,
        quad_rel_tol,
        "massive energy density",
    )?;
    Ok((value, false))
}

fn massive_setup(
    p: &OscillatorParams,
    big_m: f64,
    t: &ThermalState,
    u: &UnitSystem,
    opts: &EnergyDensityOptions,
) -> Result<(DimensionlessCouplings, f64, f64, f64)> {
    positive("M", big_m)?;
    let d = dimensionless_couplings(p, t, u, opts.g1_includes_y)?;
    let mc2 = big_m * u.c * u.c;
    let kt = t.thermal_energy();
    let pre = mc2 * kt / (2.0 * u.hbar.powi(3) * PI * PI * u.c.powi(3));
    Ok((d, mc2 / kt, pre, opts.cutoff.lower_limit(&d)))
}

/// Printed radicand (literal) against the dispersion-corrected one. The
/// prefactor uses the gas-particle mass `M` (the display writes `m` there).
pub fn energy_density_massive(
    p: &OscillatorParams,
    big_m: f64,
    t: &ThermalState,
    u: &UnitSystem,
    opts: &EnergyDensityOptions,
) -> Result<ComparisonReport> {
    let (d, ratio, pre, y_cut) = massive_setup(p, big_m, t, u, opts)?;
    let integral = |rad| {
        massive_integral(&d, ratio, rad, y_cut, SemiInfiniteMap::Rational, opts.quad_rel_tol, opts.series_rel_tol)
    };
    let (lit, lit_empty) = integral(Radicand::Printed)?;
    let (cor, cor_empty) = integral(Radicand::DispersionCorrected)?;
    let r = ComparisonReport::compare(
        "massive energy density",
        pre * lit,
        pre * cor,
        ENERGY_DENSITY_THRESHOLD,
        "printed radicand (k_B T/Mc^2)^2 y - 1 vs dispersion-corrected ((k_B T/Mc^2) y)^2 - 1",
    )
    .with_option("mass_ratio", format!("{ratio:.16e}"))
    .with_option("cutoff", opts.cutoff.as_str())
    .with_option("prefactor_mass", "M");
    Ok(match (lit_empty, cor_empty) {
        (true, true) => r.flag("window empty: no mode satisfies the radicand and cutoff conditions"),
        (true, false) => r.flag("window empty for the printed radicand"),
        (false, true) => r.flag("window empty for the dispersion-corrected radicand"),
        _ => r,
    })
}

/// Dispersion-corrected massive energy density under two quadrature maps.
pub fn energy_density_massive_corrected(
    p: &OscillatorParams,
    big_m: f64,
    t: &ThermalState,
    u: &UnitSystem,
    opts: &EnergyDensityOptions,
) -> Result<ComparisonReport> {
    let (d, ratio, pre, y_cut) = massive_setup(p, big_m, t, u, opts)?;
    let integral = |map, tol| massive_integral(&d, ratio, Radicand::DispersionCorrected, y_cut, map, opts.quad_rel_tol, tol);
    let (a, empty) = integral(SemiInfiniteMap::Rational, opts.series_rel_tol)?;
    let (b, _) = integral(SemiInfiniteMap::Exponential, 0.5 * opts.series_rel_tol)?;
    let r = ComparisonReport::compare(
        "massive energy density (corrected radicand)",
        pre * a,
        pre * b,
        ENERGY_DENSITY_THRESHOLD,
        "dispersion-corrected massive energy density; two quadrature maps",
    )
    .with_option("mass_ratio", format!("{ratio:.16e}"));
    Ok(if empty { r.flag("window empty") } else { r })
}
