//! Quantum outputs: the level table, spectral-density samples, energy
//! densities under every cutoff/`g1` convention, and the termwise solution.

use super::{row, row_flag_regime};
use crate::config::RunConfig;
use crate::output::{fmt_f64, Row};
use anharmonic_core::oracles::TruncationOptions;
use anharmonic_core::quantum::*;
use anharmonic_core::{OscillatorParams, ThermalState, UnitSystem};
use rayon::prelude::*;
use std::fmt::Write as _;

pub const SECTIONS: &[&str] = &["spectrum", "spectral_density", "energy_density", "series"];

pub const SPECTRUM_HEADER: &str =
    "n,harmonic,paper_literal,generic_rspt,diagonalized,diagonalized_converged,deviation,selected_minus_diagonalized";
pub const SPECTRAL_HEADER: &str = "T,y,integrand";

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumOutput {
    pub spectrum: String,
    pub spectral_density: String,
    /// `energy_density` and `series` rows.
    pub rows: Vec<Row>,
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

/// `E_n` for `n <= n_max`: printed shifts, the generic second-order engine,
/// and truncated diagonalization. `deviation` is printed minus generic.
/// Diagonalization is left empty when the potential is unbounded below
/// (cubic without quartic); levels that did not settle under basis doubling
/// are written with `diagonalized_converged = false`.
pub fn spectrum_table(cfg: &RunConfig) -> String {
    let (p, u) = (cfg.oscillator(), cfg.units());
    let levels = cfg.options.n_max + 1;
    let hw = u.hbar * p.omega;
    let generic = second_order_levels(levels, &p, &u).ok();
    let diag = if p.quartic == 0.0 && p.cubic != 0.0 {
        None
    } else {
        diagonalized_levels(levels, &p, &u, TruncationOptions::default()).ok()
    };
    let mut out = String::from(SPECTRUM_HEADER);
    out.push('\n');
    for n in 0..levels {
        let harmonic = hw * (n as f64 + 0.5);
        let literal = paper_literal_shifts(n, &p, &u).ok().map(|s| harmonic + s.first + s.second);
        let g = generic.as_ref().map(|g| g[n]);
        let d = diag.as_ref().map(|d| d.eigenvalues[n]);
        let converged = diag.as_ref().map(|d| d.converged[n].to_string()).unwrap_or_default();
        let selected = match cfg.options.perturbation_mode {
            PerturbationMode::PaperLiteral => literal,
            PerturbationMode::GenericRspt => g,
        };
        let dev = literal.zip(g).map(|(a, b)| a - b);
        let sel_dev = selected.zip(d).map(|(a, b)| a - b);
        writeln!(
            out,
            "{n},{},{},{},{},{converged},{},{}",
            fmt_f64(harmonic),
            opt(literal),
            opt(g),
            opt(d),
            opt(dev),
            opt(sel_dev)
        )
        .expect("writing to a String");
    }
    out
}

fn spectral_samples(cfg: &RunConfig, p: &OscillatorParams, u: &UnitSystem, temperature: f64) -> String {
    let mut out = String::new();
    let Ok(th) = ThermalState::new(temperature, u) else { return out };
    let Ok(d) = dimensionless_couplings(p, &th, u, cfg.options.g1_includes_y) else { return out };
    let n = cfg.options.spectral_samples;
    for k in 1..=n {
        let y = cfg.options.spectral_y_max * k as f64 / n as f64;
        let v = massless_integrand(y, &d, cfg.options.series_rel_tol).unwrap_or(f64::NAN);
        writeln!(out, "{},{},{}", fmt_f64(temperature), fmt_f64(y), fmt_f64(v)).expect("writing to a String");
    }
    out
}

const CONVENTIONS: [(CutoffConvention, bool); 4] = [
    (CutoffConvention::RootFound, false),
    (CutoffConvention::RootFound, true),
    (CutoffConvention::ThreeKappaSq, false),
    (CutoffConvention::ThreeKappaSq, true),
];

fn tagged(base: &str, cutoff: CutoffConvention, g1: bool) -> String {
    format!("{base} [cutoff={}, g1={}]", cutoff.as_str(), if g1 { "includes_y" } else { "printed" })
}

fn rename(r: anharmonic_core::Result<anharmonic_core::ComparisonReport>, name: &str) -> anharmonic_core::Result<anharmonic_core::ComparisonReport> {
    r.map(|mut r| {
        r.quantity_name = name.to_string();
        r
    })
}

pub fn energy_rows_at(cfg: &RunConfig, p: &OscillatorParams, u: &UnitSystem, temperature: f64) -> Vec<Row> {
    let t = Some(temperature);
    let th = match ThermalState::new(temperature, u) {
        Ok(th) => th,
        Err(e) => return vec![row("energy_density", t, "thermal state", Err(e))],
    };
    let mut rows = Vec::new();
    let base = cfg.options.energy_density();
    if p.quartic == 0.0 && p.cubic == 0.0 {
        rows.push(row("energy_density", t, "Stefan-Boltzmann limit", stefan_boltzmann_report(p, &th, u, &base)));
    }
    let m = cfg.options.massive_mass;
    for (cutoff, g1) in CONVENTIONS {
        let opts = EnergyDensityOptions { cutoff, g1_includes_y: g1, ..base };
        for (label, r) in [
            ("massless energy density", energy_density_massless(p, &th, u, &opts)),
            ("massive energy density", energy_density_massive(p, m, &th, u, &opts)),
            (
                "massive energy density (corrected radicand)",
                energy_density_massive_corrected(p, m, &th, u, &opts),
            ),
        ] {
            let name = tagged(label, cutoff, g1);
            rows.push(row_flag_regime("energy_density", t, &name, rename(r, &name)));
        }
    }
    rows
}

pub fn series_row_at(cfg: &RunConfig, p: &OscillatorParams, u: &UnitSystem, temperature: f64) -> Row {
    let t = Some(temperature);
    let name = "termwise energy density";
    match ThermalState::new(temperature, u) {
        Ok(th) => row_flag_regime("series", t, name, series_energy_density(p, &th, u, cfg.options.truncation_box.into())),
        Err(e) => row("series", t, name, Err(e)),
    }
}

/// Runs the selected parts (all when `only` is `None`).
pub fn run(cfg: &RunConfig, only: Option<&str>) -> QuantumOutput {
    let want = |s: &str| only.is_none_or(|o| o == s);
    let (p, u) = (cfg.oscillator(), cfg.units());
    let spectrum = if want("spectrum") { spectrum_table(cfg) } else { String::new() };
    let per_t: Vec<(String, Vec<Row>)> = cfg
        .thermal_grid
        .par_iter()
        .map(|&t| {
            let samples = if want("spectral_density") { spectral_samples(cfg, &p, &u, t) } else { String::new() };
            let mut rows = if want("energy_density") { energy_rows_at(cfg, &p, &u, t) } else { Vec::new() };
            if want("series") {
                rows.push(series_row_at(cfg, &p, &u, t));
            }
            (samples, rows)
        })
        .collect();
    let mut spectral_density = String::new();
    let mut rows = Vec::new();
    if want("spectral_density") {
        spectral_density.push_str(SPECTRAL_HEADER);
        spectral_density.push('\n');
    }
    for (s, r) in per_t {
        spectral_density.push_str(&s);
        rows.extend(r);
    }
    QuantumOutput { spectrum, spectral_density, rows }
}
