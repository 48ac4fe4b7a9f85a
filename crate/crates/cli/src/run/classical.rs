//! Per-temperature classical rows: the harmonic and relativistic partition
//! functions, the vibrational function `F`, the kinetic function `G`, the
//! anharmonic partition function and the average energy.

use super::row;
use crate::config::RunConfig;
use crate::output::Row;
use anharmonic_core::classical::*;
use anharmonic_core::{ComparisonReport, FormalVolumes, OscillatorParams, ThermalState, UnitSystem};
use rayon::prelude::*;
use std::f64::consts::PI;

pub const SECTIONS: &[&str] = &["partition", "energy"];

const Z_XI: &str = "Z_xi vibrational partition function";
const F_CLOSED: &str = "F closed form";
const G_IDENTITY: &str = "relativistic G identity";
const ANHARMONIC: &str = "anharmonic relativistic partition function";
const ENERGY: &str = "classical average energy";

/// Printed `4 pi (k_B T / lambda)^{3/4} F(x)` with the closed-form `F`,
/// against the radial quadrature.
pub fn vibrational_partition_report(p: &OscillatorParams, t: &ThermalState) -> anharmonic_core::Result<ComparisonReport> {
    let x = vibrational_argument(p, t);
    let literal = 4.0 * PI * (t.thermal_energy() / p.quartic).powf(0.75) * f_closed_form(x)?;
    let oracle = vibrational_partition(p, t)?;
    Ok(ComparisonReport::compare(
        Z_XI,
        literal,
        oracle,
        F_THRESHOLD,
        "closed-form F in the vibrational partition function vs radial quadrature",
    )
    .with_option("x", x))
}

fn renamed(r: anharmonic_core::Result<ComparisonReport>, name: &str) -> anharmonic_core::Result<ComparisonReport> {
    r.map(|mut r| {
        r.quantity_name = name.to_string();
        r
    })
}

pub fn rows_at(p: &OscillatorParams, u: &UnitSystem, temperature: f64) -> Vec<Row> {
    let t = Some(temperature);
    let th = match ThermalState::new(temperature, u) {
        Ok(th) => th,
        Err(e) => return vec![Row::new("partition", t, ComparisonReport::error("thermal state", e, ""))],
    };
    let vol = FormalVolumes::default();
    let z = p.mass * u.c * u.c / th.thermal_energy();
    let mut rows = vec![
        row("partition", t, "Z1", harmonic_partition_z1_report(p, &th, u, &vol)),
        row("partition", t, "Z2", relativistic_harmonic_partition_z2(p, &th, u, &vol)),
        row("partition", t, G_IDENTITY, renamed(g_identity_report(z), G_IDENTITY)),
    ];
    if p.quartic > 0.0 {
        let x = vibrational_argument(p, &th);
        rows.push(row("partition", t, Z_XI, vibrational_partition_report(p, &th)));
        rows.push(row("partition", t, F_CLOSED, renamed(f_closed_form_report(x), F_CLOSED)));
        rows.push(row("partition", t, ANHARMONIC, anharmonic_relativistic_partition(p, &th, u, &vol)));
        rows.push(row("energy", t, ENERGY, average_energy_classical(p, &th, u, &vol)));
    } else {
        for name in [Z_XI, F_CLOSED, ANHARMONIC] {
            rows.push(Row::empty("partition", t, name));
        }
        rows.push(Row::empty("energy", t, ENERGY));
    }
    rows
}

pub fn rows(cfg: &RunConfig) -> Vec<Row> {
    let (p, u) = (cfg.oscillator(), cfg.units());
    cfg.thermal_grid
        .par_iter()
        .map(|&t| rows_at(&p, &u, t))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
