//! The fixed invariant suite behind `verify`. Row points are desk-scale and
//! independent of the configured oscillator; the configuration supplies the
//! seed, the Monte Carlo sample count, the series truncation box and any
//! threshold overrides.

use super::row;
use crate::config::RunConfig;
use crate::output::Row;
use anharmonic_core::classical::*;
use anharmonic_core::oracles::*;
use anharmonic_core::quantum::*;
use anharmonic_core::specfun::{bessel_k, gamma, upper_incomplete_gamma, whittaker_w};
use anharmonic_core::{ComparisonReport, FormalVolumes, OscillatorParams, Result, Status, ThermalState, UnitSystem};
use rayon::prelude::*;
use std::f64::consts::{E, PI};

pub const SECTIONS: &[&str] = &["specfun", "oracles", "classical", "quantum"];

const U: UnitSystem = UnitSystem::NATURAL;

pub const F_POINTS: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];
pub const Z_POINTS: [f64; 4] = [0.5, 1.0, 2.0, 5.0];
pub const SB_TEMPERATURES: [f64; 3] = [0.5, 1.0, 2.0];
pub const SERIES_A_B: [f64; 2] = [1e-3, 1e-4];

/// `(m, omega, lambda, T)` for the average-energy rows.
pub const ENERGY_POINTS: [(f64, f64, f64, f64); 5] = [
    (1.0, 1.0, 1.0, 1.0),
    (2.0, 0.5, 0.3, 1.0),
    (1.0, 2.0, 0.1, 0.5),
    (0.5, 1.0, 2.0, 3.0),
    (1.5, 1.5, 0.01, 2.0),
];

fn at(t: f64) -> ThermalState {
    ThermalState::new(t, &U).expect("fixed temperatures are positive")
}

/// Monte Carlo estimate against an exact value: PASS iff within three
/// standard errors, and only when the chain was well tuned.
pub fn mc_report(name: String, est: &McEstimate, exact: f64, provenance: &str) -> ComparisonReport {
    let r = ComparisonReport::compare(name, est.mean, exact, 3.0 * est.std_error / exact.abs(), provenance)
        .with_option("std_error", format!("{:.6e}", est.std_error))
        .with_option("samples", est.samples)
        .with_option("seed", est.seed)
        .with_option("acceptance_rate", format!("{:.4}", est.acceptance_rate));
    if est.well_tuned {
        r
    } else {
        r.flag(format!("acceptance rate {:.3} outside [0.1, 0.9]", est.acceptance_rate))
    }
}

fn cmp(name: &str, literal: f64, oracle: f64, threshold: f64, provenance: &str) -> Result<ComparisonReport> {
    Ok(ComparisonReport::compare(name, literal, oracle, threshold, provenance))
}

fn specfun_rows(_: &RunConfig) -> Vec<Row> {
    let s = "specfun";
    let nu = 0.3;
    let x = 2.5;
    vec![
        row(s, None, "upper incomplete gamma Gamma(4,1)", (|| {
            cmp("upper incomplete gamma Gamma(4,1)", upper_incomplete_gamma(4.0, 1.0)?.value, 16.0 / E, 1e-12, "Gamma(4,1) = 16/e")
        })()),
        row(s, None, "K_1/2 elementary form x=1", (|| {
            cmp("K_1/2 elementary form x=1", bessel_k(0.5, 1.0)?.value, (PI / 2.0).sqrt() / E, 1e-14, "K_1/2(x) = sqrt(pi/2x) e^-x")
        })()),
        row(s, None, "K_nu three-term recurrence", (|| {
            let rhs = bessel_k(nu - 1.0, x)?.value + 2.0 * nu / x * bessel_k(nu, x)?.value;
            cmp("K_nu three-term recurrence", bessel_k(nu + 1.0, x)?.value, rhs, 1e-13, "K_{nu+1} = K_{nu-1} + (2 nu/x) K_nu at nu=0.3, x=2.5")
        })()),
        row(s, None, "Whittaker W vs incomplete gamma", (|| {
            let (a, z) = (2.5, 1.7);
            let w = whittaker_w((a - 1.0) / 2.0, a / 2.0, z)?.value;
            let lit = z.powf((a - 1.0) / 2.0) * (-z / 2.0).exp() * w;
            cmp("Whittaker W vs incomplete gamma", lit, upper_incomplete_gamma(a, z)?.value, 1e-10, "Gamma(a,z) = z^((a-1)/2) e^(-z/2) W_{(a-1)/2,a/2}(z) at a=2.5, z=1.7")
        })()),
    ]
}

fn oracle_rows(cfg: &RunConfig) -> Vec<Row> {
    let s = "oracles";
    let mut rows = vec![
        row(s, None, "Planck integral pi^4/15", (|| {
            let q = integrate_semi_infinite(|y: f64| if y == 0.0 { 0.0 } else { y.powi(3) / y.exp_m1() }, 0.0, 1e-13, 1e-300)?;
            cmp("Planck integral pi^4/15", q.value, PI.powi(4) / 15.0, 1e-12, "quadrature of y^3/(e^y - 1)")
        })()),
        row(s, None, "sinh^2 integral at unit argument", (|| {
            let q = integrate_semi_infinite(
                |x: f64| if x > 7.0 { 0.0 } else { x.sinh().powi(2) * (-x.cosh()).exp() },
                0.0,
                1e-13,
                1e-300,
            )?;
            cmp("sinh^2 integral at unit argument", q.value, bessel_k(1.0, 1.0)?.value, 1e-10, "quadrature of sinh^2 x e^(-cosh x) vs K_1(1)")
        })()),
        row(s, None, "geometric series e^-n", (|| {
            let (v, _) = sum_until_tail_bound(|n| (-(n as f64)).exp(), TailPolicy::default(), 1e-14)?;
            cmp("geometric series e^-n", v, 1.0 / (1.0 - (-1.0f64).exp()), 1e-12, "tail-bounded summation vs 1/(1 - 1/e)")
        })()),
        row(s, None, "truncated harmonic diagonalization", (|| {
            let h = hamiltonian_matrix(30, &OscillatorParams::harmonic(1.0, 1.0), &U)?;
            let e = lowest_eigenvalues(&h, 4)?;
            cmp("truncated harmonic diagonalization", e[3], 3.5, 1e-12, "fourth eigenvalue of the N=30 harmonic matrix")
        })()),
    ];
    let mc = MetropolisConfig { proposal_scale: 2.5, n_samples: cfg.options.mc_samples, seed: cfg.options.seed, ..Default::default() };
    rows.push(row(s, None, "Metropolis Gaussian <x^2>", (|| {
        let est = metropolis_expectation(|x: &[f64; 1]| -0.5 * x[0] * x[0], |x| x[0] * x[0], [0.0], mc)?;
        Ok(mc_report("Metropolis Gaussian <x^2>".into(), &est, 1.0, "random-walk Metropolis on e^(-x^2/2)"))
    })()));
    rows
}

/// Three `(m, omega, lambda, T)` sharing `x = m omega^2 / (8 sqrt(T lambda))`.
pub fn representatives(x: f64) -> [(OscillatorParams, f64); 3] {
    let osc = |m: f64, w: f64, l: f64| OscillatorParams::harmonic(m, w).with_quartic(l);
    [
        (osc(4.0, (2.0 * x).sqrt(), 1.0), 1.0),
        (osc(1.0, (8.0 * x * 6f64.sqrt()).sqrt(), 2.0), 3.0),
        (osc(0.5, (16.0 * x * 0.1f64.sqrt()).sqrt(), 0.05), 2.0),
    ]
}

/// Worst of the three representatives against `f_oracle(x)`.
pub fn representative_report(x: f64) -> Result<ComparisonReport> {
    let base = f_oracle(x)?;
    let mut worst = base;
    for (p, t) in representatives(x) {
        let f = f_from_params(&p, &at(t))?;
        if (f - base).abs() >= (worst - base).abs() {
            worst = f;
        }
    }
    cmp(
        &format!("F representative independence x={x}"),
        worst,
        base,
        1e-9,
        "F from three (m, omega, lambda, T) with the same x vs the canonical representative",
    )
}

fn classical_rows(cfg: &RunConfig) -> Vec<Row> {
    let s = "classical";
    let mut rows = vec![row(s, None, "F(0) = Gamma(3/4)/4", (|| {
        cmp("F(0) = Gamma(3/4)/4", f_oracle(0.0)?, gamma(0.75) / 4.0, 1e-9, "pure quartic limit of the F quadrature")
    })())];
    for x in F_POINTS {
        rows.push(row(s, None, &format!("F representative independence x={x}"), representative_report(x)));
    }
    for x in F_POINTS {
        rows.push(row(s, None, &format!("F closed form x={x}"), f_closed_form_report(x)));
    }
    for z in Z_POINTS {
        rows.push(row(s, None, &format!("sinh^2 Bessel identity z={z}"), bessel_identity_report(z)));
    }
    for z in Z_POINTS {
        rows.push(row(s, None, &format!("relativistic G identity z={z}"), g_identity_report(z)));
    }
    let vol = FormalVolumes::default();
    let p = OscillatorParams::harmonic(1.0, 1.0).with_quartic(1.0);
    let t = at(1.0);
    rows.push(row(s, Some(1.0), "Z1", harmonic_partition_z1_report(&p, &t, &U, &vol)));
    rows.push(row(s, Some(1.0), "Z2", relativistic_harmonic_partition_z2(&p, &t, &U, &vol)));
    rows.push(row(s, Some(1.0), "anharmonic", anharmonic_relativistic_partition(&p, &t, &U, &vol)));
    for (k, (m, w, l, temp)) in ENERGY_POINTS.into_iter().enumerate() {
        let p = OscillatorParams::harmonic(m, w).with_quartic(l);
        let r = average_energy_classical(&p, &at(temp), &U, &vol).map(|mut r| {
            r.quantity_name = format!("classical average energy point {k}");
            r.with_option("mass", m).with_option("omega", w).with_option("quartic", l)
        });
        rows.push(row(s, Some(temp), "classical average energy", r));
    }
    for (k, (m, w, l, temp)) in ENERGY_POINTS.into_iter().enumerate() {
        let p = OscillatorParams::harmonic(m, w).with_quartic(l);
        let th = at(temp);
        let name = format!("Metropolis vibrational energy point {k}");
        let cfg = MetropolisConfig {
            proposal_scale: 1.5,
            n_samples: cfg.options.mc_samples,
            seed: cfg.options.seed.wrapping_add(k as u64 + 1),
            ..Default::default()
        };
        let r = (|| {
            let est = vibrational_energy_metropolis(&p, &th, cfg)?;
            let q = vibrational_energy_quadrature(&p, &th)?;
            Ok(mc_report(name.clone(), &est, q, "Metropolis vibrational energy vs weighted quadrature"))
        })();
        rows.push(row(s, Some(temp), &name, r));
    }
    rows
}

/// `|E_diag - E_PT|` for the lowest `levels` levels.
pub fn pt_residuals(p: &OscillatorParams, levels: usize) -> Result<Vec<f64>> {
    let diag = diagonalized_levels(levels, p, &U, TruncationOptions::default())?;
    if !diag.all_converged() {
        return Err(anharmonic_core::Error::NotConvergent("truncated diagonalization did not settle".into()));
    }
    let pt = second_order_levels(levels, p, &U)?;
    Ok(diag.eigenvalues.iter().zip(&pt).map(|(d, e)| (d - e).abs()).collect())
}

/// Residual ratio when halving the reduced coupling, against the expected
/// power of two.
fn scaling_rows(name: &str, quartic: f64, cubic: f64, expected: f64) -> Vec<Row> {
    let base = OscillatorParams::harmonic(1.0, 1.0);
    let levels = 4;
    let res = (|| {
        let a = pt_residuals(&with_reduced_couplings(&base, quartic, cubic, &U)?, levels)?;
        let b = pt_residuals(&with_reduced_couplings(&base, quartic / 2.0, cubic / 2.0, &U)?, levels)?;
        Ok((a, b))
    })();
    (0..levels)
        .map(|n| {
            let q = format!("{name} n={n}");
            let r = res.clone().map(|(a, b)| {
                ComparisonReport::compare(q.clone(), a[n] / b[n], expected, 0.2, "halving the reduced coupling; truncated diagonalization vs second-order perturbation theory")
                    .with_option("residual", format!("{:.6e}", a[n]))
                    .with_option("residual_halved", format!("{:.6e}", b[n]))
            });
            row("quantum", None, &q, r)
        })
        .collect()
}

fn kappa_third(a_b: f64) -> Result<DimensionlessCouplings> {
    DimensionlessCouplings::new(-a_b / 3.0, a_b, false)
}

fn positivity_rows() -> Vec<Row> {
    let d = DimensionlessCouplings::new(-1.0, 3.0, false);
    let name = "positivity cutoff y_star (a_A=-1, a_B=3)";
    let mut rows = vec![row("quantum", None, name, d.clone().and_then(|d| cmp(name, d.y_star, 1.0, 1e-10, "root of g1 = a_A / y^2 + a_B")))];
    let name = "integrand zero below cutoff";
    rows.push(row("quantum", None, name, d.and_then(|d| {
        let mut worst: f64 = 0.0;
        for k in 0..100 {
            let y = d.y_star * (k as f64 + 0.5) / 100.0;
            worst = worst.max(massless_integrand(y, &d, 1e-12)?.abs());
        }
        cmp(name, worst, 0.0, 0.0, "largest |integrand| at 100 points below y_star")
    })));
    rows
}

fn series_rows(cfg: &RunConfig) -> Vec<Row> {
    let mut rows = Vec::new();
    let d = match kappa_third(1e-3) {
        Ok(d) => d,
        Err(e) => return vec![row("quantum", None, "series terms", Err(e))],
    };
    for form in [TermForm::Whittaker, TermForm::Printed] {
        for n in 1..=20 {
            for i in 0..=2 {
                for j in 0..=2 {
                    for r in series_term_reports(form, i, j, n, &d) {
                        rows.push(Row::new("quantum", None, r));
                    }
                }
            }
        }
    }
    for a_b in SERIES_A_B {
        let name = format!("termwise energy density a_B={a_b}");
        let r = kappa_third(a_b).and_then(|d| series_report(&d, cfg.options.truncation_box.into(), 1.0));
        let doubling = r.clone().and_then(|r| {
            let tail: f64 = r.options_used["tail_estimate"].parse().unwrap_or(f64::NAN);
            let doubled: f64 = r.options_used["doubled_box_value"].parse().unwrap_or(f64::NAN);
            // PASS iff |doubled - value| <= tail.
            cmp(&format!("termwise box doubling a_B={a_b}"), doubled, r.literal, tail / r.literal.abs(), "doubling the truncation box stays within the tail estimate")
        });
        rows.push(row("quantum", None, &name, r.map(|mut r| {
            r.quantity_name = name.clone();
            r
        })));
        rows.push(row("quantum", None, &format!("termwise box doubling a_B={a_b}"), doubling));
    }
    rows
}

fn quantum_rows(cfg: &RunConfig) -> Vec<Row> {
    let s = "quantum";
    let mut rows = Vec::new();
    let quartic = OscillatorParams::harmonic(1.0, 1.0).with_quartic(0.01);
    for n in 0..=5 {
        let sel = PerturbationOrder::new(Order::First, PerturbationMode::GenericRspt);
        rows.push(row(s, None, &format!("quartic shift n={n}"), perturbative_shift(n, &quartic, sel, &U)));
    }
    let cubic = OscillatorParams::harmonic(1.0, 1.0).with_cubic(0.01);
    for n in 0..=3 {
        let sel = PerturbationOrder::new(Order::Second, PerturbationMode::PaperLiteral);
        rows.push(row(s, None, &format!("cubic shift n={n}"), perturbative_shift(n, &cubic, sel, &U)));
    }
    rows.extend(scaling_rows("quartic residual scaling", 1e-3, 0.0, 8.0));
    rows.extend(scaling_rows("cubic residual scaling", 0.0, 1e-2, 16.0));
    rows.extend(positivity_rows());
    let opts = cfg.options.energy_density();
    let free = OscillatorParams::harmonic(1.0, 1.0);
    for t in SB_TEMPERATURES {
        rows.push(row(s, Some(t), "Stefan-Boltzmann limit", stefan_boltzmann_report(&free, &at(t), &U, &opts)));
    }
    let coupled = free.with_quartic(1e-3).with_cubic(0.004f64.sqrt());
    rows.push(row(s, Some(1.0), "massless energy density", energy_density_massless(&coupled, &at(1.0), &U, &opts)));
    rows.push(row(s, Some(1.0), "massive energy density", energy_density_massive(&free, 0.01, &at(1.0), &U, &opts)));
    rows.push(row(
        s,
        Some(1.0),
        "massive energy density (corrected radicand)",
        energy_density_massive_corrected(&free, 1.0, &at(1.0), &U, &opts),
    ));
    rows.extend(series_rows(cfg));
    rows
}

type Task = fn(&RunConfig) -> Vec<Row>;

const TASKS: [(&str, Task); 4] = [
    ("specfun", specfun_rows),
    ("oracles", oracle_rows),
    ("classical", classical_rows),
    ("quantum", quantum_rows),
];

/// All rows, in a fixed order, optionally restricted to one section.
pub fn rows(cfg: &RunConfig, only: Option<&str>) -> Vec<Row> {
    TASKS
        .par_iter()
        .filter(|(s, _)| only.is_none_or(|o| o == *s))
        .map(|(_, task)| task(cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Count of rows with the given status.
pub fn count(rows: &[Row], status: Status) -> usize {
    rows.iter().filter(|r| r.status() == Some(status)).count()
}
