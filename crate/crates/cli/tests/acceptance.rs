//! Acceptance gate: one line per criterion. A criterion listed in
//! `UNATTAINABLE` is expected to fail; the gate checks that it still fails
//! for the recorded reason rather than hiding it.

use anharmonic::run::verify::{self, representative_report, ENERGY_POINTS, F_POINTS, SB_TEMPERATURES, SERIES_A_B, Z_POINTS};
use anharmonic_core::classical::*;
use anharmonic_core::oracles::MetropolisConfig;
use anharmonic_core::quantum::*;
use anharmonic_core::specfun::{gamma, upper_incomplete_gamma};
use anharmonic_core::{FormalVolumes, OscillatorParams, Status, ThermalState, UnitSystem};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

const U: UnitSystem = UnitSystem::NATURAL;

const BLACKBODY_TOL: f64 = 1e-8;
const BESSEL_IDENTITY_TOL: f64 = 1e-8;
const F_REPRESENTATIVE_TOL: f64 = 1e-9;
const F_ZERO_TOL: f64 = 1e-9;
const ENERGY_TOL: f64 = 1e-3;
const MC_SIGMAS: f64 = 3.0;
const MC_SAMPLES: usize = 100_000;
const QUARTIC_FIRST_ORDER_TOL: f64 = 1e-13;
const SCALING_BAND: f64 = 0.2;
const Y_STAR_TOL: f64 = 1e-10;
const TERM_TOL: f64 = 1e-7;
const GAMMA_TOL: f64 = 1e-12;
const SERIES_TOL: f64 = 1e-2;

/// Criterion 2's corollary: the printed `G(z)/z^3` is not the value of the
/// differentiated integral except at `z = 1`.
const UNATTAINABLE: &[u32] = &[2];

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn at(t: f64) -> ThermalState {
    ThermalState::new(t, &U).unwrap()
}

fn within(elapsed: Duration, limit_s: f64) -> (bool, String) {
    let s = elapsed.as_secs_f64();
    (s < limit_s, format!("{s:.2}s < {limit_s}s"))
}

fn blackbody() -> Outcome {
    let start = Instant::now();
    let opts = EnergyDensityOptions::default();
    let p = OscillatorParams::harmonic(1.0, 1.0);
    let worst = SB_TEMPERATURES
        .iter()
        .map(|&t| stefan_boltzmann_report(&p, &at(t), &U, &opts).unwrap().rel_dev)
        .fold(0.0, f64::max);
    let (fast, time) = within(start.elapsed(), 1.0);
    Outcome {
        id: 1,
        name: "blackbody reduction",
        pass: worst <= BLACKBODY_TOL && fast,
        detail: format!("max rel dev {worst:.2e} <= {BLACKBODY_TOL:e}; {time}"),
    }
}

fn bessel_identity() -> Outcome {
    let start = Instant::now();
    let k1 = Z_POINTS.iter().map(|&z| bessel_identity_report(z).unwrap().rel_dev).fold(0.0, f64::max);
    let g: Vec<f64> = Z_POINTS.iter().map(|&z| g_identity_report(z).unwrap().rel_dev).collect();
    let g_worst = g.iter().cloned().fold(0.0, f64::max);
    let (fast, time) = within(start.elapsed(), 1.0);
    Outcome {
        id: 2,
        name: "sinh^2 Bessel identity and its G corollary",
        pass: k1 <= BESSEL_IDENTITY_TOL && g_worst <= BESSEL_IDENTITY_TOL && fast,
        detail: format!(
            "K_1(z)/z max rel dev {k1:.2e}; G(z)/z^3 rel devs {} (tol {BESSEL_IDENTITY_TOL:e}); {time}",
            g.iter().map(|d| format!("{d:.2e}")).collect::<Vec<_>>().join(", ")
        ),
    }
}

fn vibrational_function() -> Outcome {
    let start = Instant::now();
    let rep = F_POINTS.iter().map(|&x| representative_report(x).unwrap().rel_dev).fold(0.0, f64::max);
    let f0 = (f_oracle(0.0).unwrap() - gamma(0.75) / 4.0).abs() / (gamma(0.75) / 4.0);
    let closed: Vec<_> = F_POINTS.iter().map(|&x| f_closed_form_report(x).unwrap()).collect();
    // PASS or FLAGGED, never silent: the status must follow the recorded deviation.
    let recorded = closed
        .iter()
        .all(|r| r.rel_dev.is_finite() && (r.status == Status::Pass) == (r.rel_dev <= r.threshold) && r.status != Status::Error);
    let flagged = closed.iter().filter(|r| r.status == Status::Flagged).count();
    let (fast, time) = within(start.elapsed(), 5.0);
    Outcome {
        id: 3,
        name: "operational F",
        pass: rep <= F_REPRESENTATIVE_TOL && f0 <= F_ZERO_TOL && recorded && fast,
        detail: format!(
            "representative spread {rep:.2e}; F(0) rel dev {f0:.2e}; closed form {flagged}/5 FLAGGED (ratio {:.6}); {time}",
            closed[0].literal / closed[0].oracle
        ),
    }
}

fn average_energy(seed: u64) -> Outcome {
    let start = Instant::now();
    let vol = FormalVolumes::default();
    let mut ok = true;
    let mut devs = Vec::new();
    let mut worst_sigma: f64 = 0.0;
    for (k, (m, w, l, t)) in ENERGY_POINTS.into_iter().enumerate() {
        let p = OscillatorParams::harmonic(m, w).with_quartic(l);
        let r = average_energy_classical(&p, &at(t), &U, &vol).unwrap();
        ok &= r.rel_dev.is_finite() && (r.rel_dev <= ENERGY_TOL || r.status == Status::Flagged);
        devs.push(format!("{:.2e}", r.rel_dev));
        let cfg = MetropolisConfig { proposal_scale: 1.5, n_samples: MC_SAMPLES, seed: seed.wrapping_add(k as u64 + 1), ..Default::default() };
        let mc = vibrational_energy_metropolis(&p, &at(t), cfg).unwrap();
        let q = vibrational_energy_quadrature(&p, &at(t)).unwrap();
        worst_sigma = worst_sigma.max((mc.mean - q).abs() / mc.std_error);
    }
    let (fast, time) = within(start.elapsed(), 30.0);
    Outcome {
        id: 4,
        name: "dual-path average energy",
        pass: ok && worst_sigma <= MC_SIGMAS && fast,
        detail: format!("literal rel devs [{}] (FLAGGED above {ENERGY_TOL:e}); Metropolis worst {worst_sigma:.2} sigma; {time}", devs.join(", ")),
    }
}

fn residual_ratios(quartic: f64, cubic: f64) -> Vec<f64> {
    let base = OscillatorParams::harmonic(1.0, 1.0);
    let a = verify::pt_residuals(&with_reduced_couplings(&base, quartic, cubic, &U).unwrap(), 4).unwrap();
    let b = verify::pt_residuals(&with_reduced_couplings(&base, quartic / 2.0, cubic / 2.0, &U).unwrap(), 4).unwrap();
    a.iter().zip(&b).map(|(x, y)| x / y).collect()
}

fn quartic_shift() -> Outcome {
    let start = Instant::now();
    let p = OscillatorParams::harmonic(1.0, 1.0).with_quartic(0.01);
    let sel = PerturbationOrder::new(Order::First, PerturbationMode::GenericRspt);
    let first = (0..=5).map(|n| perturbative_shift(n, &p, sel, &U).unwrap().rel_dev).fold(0.0, f64::max);
    let ratios = residual_ratios(1e-3, 0.0);
    let in_band = ratios.iter().all(|r| (r - 8.0).abs() <= SCALING_BAND * 8.0);
    let (fast, time) = within(start.elapsed(), 10.0);
    Outcome {
        id: 5,
        name: "quartic shift",
        pass: first <= QUARTIC_FIRST_ORDER_TOL && in_band && fast,
        detail: format!(
            "first order max rel dev {first:.2e}; halving ratios {}; {time}",
            ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>().join(", ")
        ),
    }
}

fn cubic_shift() -> Outcome {
    let start = Instant::now();
    let ratios = residual_ratios(0.0, 1e-2);
    let in_band = ratios.iter().all(|r| (r - 16.0).abs() <= SCALING_BAND * 16.0);
    let p = OscillatorParams::harmonic(1.0, 1.0).with_cubic(0.01);
    let sel = PerturbationOrder::new(Order::Second, PerturbationMode::PaperLiteral);
    let reports: Vec<_> = (0..=3).map(|n| perturbative_shift(n, &p, sel, &U).unwrap()).collect();
    let reported = reports.iter().all(|r| r.abs_dev == (r.literal - r.oracle).abs() && r.status != Status::Error);
    let (fast, time) = within(start.elapsed(), 10.0);
    Outcome {
        id: 6,
        name: "cubic shift",
        pass: in_band && reported && fast,
        detail: format!(
            "halving ratios {}; printed vs engine rows {} with rel devs {}; {time}",
            ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>().join(", "),
            reports.iter().map(|r| r.status.as_str()).collect::<Vec<_>>().join("/"),
            reports.iter().map(|r| format!("{:.3}", r.rel_dev)).collect::<Vec<_>>().join(", ")
        ),
    }
}

fn positivity_cutoff() -> Outcome {
    let start = Instant::now();
    let d = DimensionlessCouplings::new(-1.0, 3.0, false).unwrap();
    let y_dev = (d.y_star - 1.0).abs();
    let zeros = (0..100)
        .filter(|k| massless_integrand(d.y_star * (*k as f64 + 0.5) / 100.0, &d, 1e-12).unwrap() == 0.0)
        .count();
    let (fast, time) = within(start.elapsed(), 1.0);
    Outcome {
        id: 7,
        name: "positivity cutoff",
        pass: y_dev <= Y_STAR_TOL && zeros == 100 && fast,
        detail: format!("|y_star - 1| = {y_dev:.2e}; integrand zero at {zeros}/100 points; {time}"),
    }
}

fn term_identity() -> Outcome {
    let start = Instant::now();
    let d = DimensionlessCouplings::new(-1e-3 / 3.0, 1e-3, false).unwrap();
    let mut worst: f64 = 0.0;
    let mut printed_flagged = 0;
    let mut printed_ok = true;
    for n in 1..=20 {
        for i in 0..=2 {
            for j in 0..=2 {
                for r in series_term_reports(TermForm::Whittaker, i, j, n, &d) {
                    worst = worst.max(r.rel_dev);
                }
                for r in series_term_reports(TermForm::Printed, i, j, n, &d) {
                    printed_ok &= r.rel_dev.is_finite() && r.status != Status::Error;
                    printed_flagged += (r.status == Status::Flagged) as usize;
                }
            }
        }
    }
    let g = (upper_incomplete_gamma(4.0, 1.0).unwrap().value - 16.0 / std::f64::consts::E).abs() / (16.0 / std::f64::consts::E);
    let (fast, time) = within(start.elapsed(), 10.0);
    Outcome {
        id: 8,
        name: "series term identity",
        pass: worst <= TERM_TOL && printed_ok && g <= GAMMA_TOL && fast,
        detail: format!(
            "Whittaker-form worst rel dev {worst:.2e}; printed blocks {printed_flagged}/360 FLAGGED with recorded deviation; Gamma(4,1) rel dev {g:.2e}; {time}"
        ),
    }
}

fn series_vs_quadrature() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for a_b in SERIES_A_B {
        let d = DimensionlessCouplings::new(-a_b / 3.0, a_b, false).unwrap();
        let r = series_report(&d, anharmonic_core::oracles::SeriesTruncation::for_box(50, 3, 3), 1.0).unwrap();
        let tail: f64 = r.options_used["tail_estimate"].parse().unwrap();
        let doubled: f64 = r.options_used["doubled_box_value"].parse().unwrap();
        let moved = (doubled - r.literal).abs();
        ok &= r.rel_dev <= SERIES_TOL && moved < tail;
        details.push(format!("a_B={a_b}: rel dev {:.2e}, doubling moved {moved:.2e} < tail {tail:.2e}", r.rel_dev));
    }
    let (fast, time) = within(start.elapsed(), 60.0);
    Outcome {
        id: 9,
        name: "series vs quadrature",
        pass: ok && fast,
        detail: format!("{}; {time}", details.join("; ")),
    }
}

fn verify_run(threads: &str, tag: &str) -> (Vec<u8>, Vec<u8>, Vec<u8>) {
    let dir: PathBuf = std::env::temp_dir().join(format!("anharmonic-acceptance-{}-{tag}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let out = Command::new(env!("CARGO_BIN_EXE_anharmonic"))
        .env_remove(anharmonic::THREADS_ENV)
        .args(["verify", "--seed", "7", "--threads", threads, "--out"])
        .arg(&dir)
        .output()
        .unwrap();
    assert_ne!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    (std::fs::read(dir.join("verify.csv")).unwrap(), std::fs::read(dir.join("verify.json")).unwrap(), out.stdout)
}

fn determinism() -> Outcome {
    let start = Instant::now();
    let a = verify_run("4", "a");
    let b = verify_run("4", "b");
    let one = verify_run("1", "one");
    let eight = verify_run("8", "eight");
    let (fast, time) = within(start.elapsed(), 120.0);
    Outcome {
        id: 10,
        name: "determinism and reproducibility",
        pass: a == b && one == eight && a == one && fast,
        detail: format!(
            "repeat identical: {}; 1 vs 8 threads identical: {}; four verify runs {time}",
            a == b,
            one == eight
        ),
    }
}

#[test]
fn acceptance() {
    let outcomes = [
        blackbody(),
        bessel_identity(),
        vibrational_function(),
        // Same seeds as the default `verify` run.
        average_energy(anharmonic::RunConfig::default().options.seed),
        quartic_shift(),
        cubic_shift(),
        positivity_cutoff(),
        term_identity(),
        series_vs_quadrature(),
        determinism(),
    ];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let expected_fail = UNATTAINABLE.contains(&o.id);
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let note = if expected_fail { " [unattainable: recorded]" } else { "" };
        println!("criterion {:>2} {verdict} {}{note}: {}", o.id, o.name, o.detail);
        if o.pass == expected_fail {
            unexpected.push(o.id);
        }
    }
    // The unattainable part must fail the same way: K_1 identity holds, G
    // identity holds only at z = 1.
    let g: Vec<bool> = Z_POINTS.iter().map(|&z| g_identity_report(z).unwrap().is_pass()).collect();
    assert_eq!(g, [false, true, false, false]);
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
