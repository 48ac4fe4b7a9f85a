//! Termwise solution of the massless energy density with the normalising sum
//! replaced by `1/(1 - e^{-y})`.
//!
//! Expanding `exp(-alpha_n/y^4 - beta_n/y^2)` (with `alpha_n = a_A (n^2+6n)`,
//! `beta_n = a_B (2n^2+2n)`) leaves integrals
//!
//! ```text
//! I(p, r) = int_{y0}^inf y^p e^{-r y} dy = Gamma(p+1, r y0) / r^{p+1},   y0 = 3 kappa^2
//! ```
//!
//! with `p in {-2-4i-2j, -4i-2j, 3-4i-2j}` and `r = n` (the `F` block) or
//! `r = n + 1` (the `G` block). Three evaluations are kept: the printed
//! Whittaker blocks verbatim, the same Whittaker representation with
//! consistent indices, and the incomplete gamma function itself.

use num_traits::Float;
use super::energy::{denominator_replaced_integrand, integrate_checked};
use super::modes::{dimensionless_couplings, DimensionlessCouplings};
use crate::error::{Error, Result};
use crate::oracles::{SemiInfiniteMap, SeriesTruncation};
use crate::params::{OscillatorParams, ThermalState, UnitSystem};
use crate::report::{relative_deviation, ComparisonReport};
use crate::specfun::{gamma, ln_gamma, ln_upper_incomplete_gamma_any, ln_whittaker_w};
use alloc::format;
use alloc::string::ToString;
use core::f64::consts::PI;

/// Agreement required between a printed term and its incomplete-gamma form.
pub const TERM_THRESHOLD: f64 = 1e-7;
/// Agreement required between the truncated series and the quadrature.
pub const SERIES_THRESHOLD: f64 = 1e-2;
/// Largest `a_B` for which the denominator replacement is accepted.
pub const MAX_SERIES_A_B: f64 = 0.1;

const ORACLE_QUAD_TOL: f64 = 1e-11;
const ORACLE_SERIES_TOL: f64 = 1e-13;

/// `F_{i,j,n}` and `G_{i,j,n}` (without the `(-1)^{i+j} alpha^i beta^j / (i! j!)`
/// weight).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTerm {
    pub f_term: f64,
    pub g_term: f64,
}

/// Which evaluation of the `F`/`G` blocks to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum TermForm {
    /// The printed blocks, verbatim.
    Printed,
    /// Whittaker representation with indices consistent with `I(p, r)`.
    Whittaker,
    /// `Gamma(p+1, r y0) / r^{p+1}`.
    IncompleteGamma,
}

impl TermForm {
    pub fn as_str(self) -> &'static str {
        match self {
            TermForm::Printed => "printed",
            TermForm::Whittaker => "whittaker",
            TermForm::IncompleteGamma => "incomplete_gamma",
        }
    }
}

/// `3 kappa^2`, or 0 when both couplings vanish.
pub fn series_lower_limit(d: &DimensionlessCouplings) -> Result<f64> {
    match d.kappa_sq {
        Some(k) if k > 0.0 => Ok(3.0 * k),
        _ if d.is_zero() => Ok(0.0),
        _ => Err(Error::param(
            "kappa_sq",
            "the termwise solution needs kappa^2 > 0 (both couplings nonzero) or vanishing couplings",
        )),
    }
}

fn weights(n: usize, d: &DimensionlessCouplings) -> (f64, f64) {
    let nf = n as f64;
    (d.a_a * (nf * nf + 6.0 * nf), d.a_b * (2.0 * nf * nf + 2.0 * nf))
}

fn powers(i: usize, j: usize) -> [i32; 3] {
    let s = (4 * i + 2 * j) as i32;
    [-2 - s, -s, 3 - s]
}

fn exp_checked(ln: f64, what: &str) -> Result<f64> {
    if ln > 709.0 {
        return Err(Error::range("whittaker_series_term", format!("{what}: |term| ~ exp({ln:.1}) overflows")));
    }
    Ok(ln.exp())
}

/// `I(p, r)` through the incomplete gamma function.
fn integral_gamma(p: i32, r: f64, y0: f64) -> Result<f64> {
    let a = p as f64 + 1.0;
    if y0 == 0.0 {
        if a <= 0.0 {
            return Err(Error::domain("series term", format!("int_0 y^{p} e^(-ry) diverges")));
        }
        return Ok(gamma(a) / r.powf(a));
    }
    let g = ln_upper_incomplete_gamma_any(a, r * y0)?;
    exp_checked(g.ln_abs - a * r.ln(), "incomplete gamma term")
}

/// `I(p, r) = e^{-x/2} x^{p/2} W_{p/2,(p+1)/2}(x) / r^{p+1}`, `x = r y0`.
fn integral_whittaker(p: i32, r: f64, y0: f64) -> Result<f64> {
    if y0 == 0.0 {
        return integral_gamma(p, r, y0);
    }
    let x = r * y0;
    let pf = p as f64;
    let w = ln_whittaker_w(0.5 * pf, 0.5 * (pf + 1.0), x)?;
    exp_checked(-0.5 * x + 0.5 * pf * x.ln() + w.ln_abs - (pf + 1.0) * r.ln(), "Whittaker term")
        .map(|v| w.sign * v)
}

fn block<I: Fn(i32, f64, f64) -> Result<f64>>(
    i: usize,
    j: usize,
    n: usize,
    r: f64,
    d: &DimensionlessCouplings,
    y0: f64,
    integral: I,
) -> Result<f64> {
    let (alpha, beta) = weights(n, d);
    let [p1, p2, p3] = powers(i, j);
    let mut v = n as f64 * integral(p3, r, y0)?;
    if alpha != 0.0 {
        v += alpha * integral(p1, r, y0)?;
    }
    if beta != 0.0 {
        v += beta * integral(p2, r, y0)?;
    }
    Ok(v)
}

/// `sign * n^a * x^b * e^c * W_{kappa,mu}(z)` in log space.
fn printed_line(sign: f64, ln_pre: f64, kappa: f64, mu: f64, z: f64) -> Result<f64> {
    if sign == 0.0 {
        return Ok(0.0);
    }
    let w = ln_whittaker_w(kappa, mu, z)?;
    exp_checked(ln_pre + w.ln_abs, "printed block").map(|v| sign * w.sign * v)
}

/// The two printed blocks: the first (arguments `3 n kappa^2`) as `F`, the
/// second (arguments `3 (n+1) kappa^2`) as `G`. Every exponent, index and
/// argument is reproduced as printed, including the `e^{-3(n+1)kappa^2/2}`
/// factor in `F`, the `n^{-4+4j+2j}` power and the `3 n kappa^2` base in the
/// first line of `G`.
pub fn whittaker_series_term(i: usize, j: usize, n: usize, d: &DimensionlessCouplings) -> Result<SeriesTerm> {
    if n == 0 {
        return Err(Error::param("n", "series terms start at n = 1"));
    }
    let k2 = match d.kappa_sq {
        Some(k) if k > 0.0 => k,
        _ => return Err(Error::param("kappa_sq", "printed blocks need kappa^2 > 0")),
    };
    let (alpha, beta) = weights(n, d);
    let (fi, fj) = (i as f64, j as f64);
    let nf = n as f64;
    let s = 4.0 * fi + 2.0 * fj;
    let e = -1.5 * (nf + 1.0) * k2;
    let xn = 3.0 * nf * k2;
    let block = |base: f64, z: f64, base1: f64| -> Result<f64> {
        // base: the power base (n or n+1); z: the Whittaker argument and the
        // base of the x-powers on lines 2 and 3; base1: x-base on line 1.
        let l1 = printed_line(
            alpha.signum() * (alpha != 0.0) as u8 as f64,
            alpha.abs().ln() + (1.0 + s) * base.ln() + (-1.0 - 2.0 * fi - fj) * base1.ln() + e,
            -(1.0 + 2.0 * fi + fj),
            -(1.0 + s) / 2.0,
            z,
        )?;
        let l2 = printed_line(
            (beta != 0.0) as u8 as f64,
            beta.abs().ln() + (-1.0 + s) * base.ln() + (-2.0 * fi - fj) * z.ln() + e,
            -(2.0 * fi + fj),
            -(-1.0 + s) / 2.0,
            z,
        )?;
        let l3 = printed_line(
            1.0,
            (-4.0 + 4.0 * fj + 2.0 * fj) * base.ln() + nf.ln() - (-3.0 + s) / 2.0 * z.ln() + e,
            -(-3.0 + s) / 2.0,
            -(-4.0 + s) / 2.0,
            z,
        )?;
        Ok(l1 + l2 + l3)
    };
    let xn1 = 3.0 * (nf + 1.0) * k2;
    Ok(SeriesTerm {
        f_term: block(nf, xn, xn)?,
        g_term: block(nf + 1.0, xn1, xn)?,
    })
}

/// `F` and `G` in the requested form.
pub fn series_term(form: TermForm, i: usize, j: usize, n: usize, d: &DimensionlessCouplings) -> Result<SeriesTerm> {
    if n == 0 {
        return Err(Error::param("n", "series terms start at n = 1"));
    }
    let y0 = series_lower_limit(d)?;
    let nf = n as f64;
    match form {
        TermForm::Printed => whittaker_series_term(i, j, n, d),
        TermForm::Whittaker => Ok(SeriesTerm {
            f_term: block(i, j, n, nf, d, y0, integral_whittaker)?,
            g_term: block(i, j, n, nf + 1.0, d, y0, integral_whittaker)?,
        }),
        TermForm::IncompleteGamma => Ok(SeriesTerm {
            f_term: block(i, j, n, nf, d, y0, integral_gamma)?,
            g_term: block(i, j, n, nf + 1.0, d, y0, integral_gamma)?,
        }),
    }
}

/// `F` and `G` of one form against the incomplete-gamma oracle.
pub fn series_term_reports(
    form: TermForm,
    i: usize,
    j: usize,
    n: usize,
    d: &DimensionlessCouplings,
) -> [ComparisonReport; 2] {
    let name = |b: &str| format!("{b}_{{{i},{j},{n}}} {} term", form.as_str());
    let provenance = "block of the termwise solution vs Gamma(p+1, r y0) / r^(p+1)";
    let oracle = series_term(TermForm::IncompleteGamma, i, j, n, d);
    let literal = series_term(form, i, j, n, d);
    match (literal, oracle) {
        (Ok(l), Ok(o)) => {
            let tag = |r: ComparisonReport| {
                r.with_option("i", i).with_option("j", j).with_option("n", n).with_option("form", form.as_str())
            };
            [
                tag(ComparisonReport::compare(name("F"), l.f_term, o.f_term, TERM_THRESHOLD, provenance)),
                tag(ComparisonReport::compare(name("G"), l.g_term, o.g_term, TERM_THRESHOLD, provenance)),
            ]
        }
        (Err(e), _) | (_, Err(e)) => {
            let msg = e.to_string();
            [
                ComparisonReport::error(name("F"), &msg, provenance),
                ComparisonReport::error(name("G"), &msg, provenance),
            ]
        }
    }
}

#[derive(Default)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn add(&mut self, t: f64) {
        let s = self.sum + t;
        self.comp += if self.sum.abs() >= t.abs() { (self.sum - s) + t } else { (t - s) + self.sum };
        self.sum = s;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Result of summing the termwise solution over a box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    /// Dimensionless sum over the requested box.
    pub value: f64,
    /// Sum over the box with every extent doubled.
    pub doubled_value: f64,
    /// Requested box, with `tail_estimate` = twice the absolute sum of the
    /// terms added by doubling.
    pub truncation: SeriesTruncation,
}

/// `sum_{n=1}^{N} sum_{i<=I} sum_{j<=J} (-1)^{i+j} alpha_n^i beta_n^j / (i! j!) (F - G)`.
pub fn series_sum(form: TermForm, d: &DimensionlessCouplings, trunc: SeriesTruncation) -> Result<SeriesSum> {
    if trunc.n_max == 0 {
        return Err(Error::param("n_max", "the truncation box needs n_max >= 1"));
    }
    series_lower_limit(d)?;
    let (n2, i2, j2) = (2 * trunc.n_max, 2 * trunc.i_max, 2 * trunc.j_max);
    let mut inner = Compensated::default();
    let mut outer = Compensated::default();
    let mut shell_abs = 0.0;
    for n in 1..=n2 {
        let (alpha, beta) = weights(n, d);
        for i in 0..=i2 {
            if alpha == 0.0 && i > 0 {
                break;
            }
            for j in 0..=j2 {
                if beta == 0.0 && j > 0 {
                    break;
                }
                let mut ln_c = -ln_gamma(i as f64 + 1.0) - ln_gamma(j as f64 + 1.0);
                if i > 0 {
                    ln_c += i as f64 * alpha.abs().ln();
                }
                if j > 0 {
                    ln_c += j as f64 * beta.abs().ln();
                }
                let mut sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
                if alpha < 0.0 && i % 2 == 1 {
                    sign = -sign;
                }
                let t = series_term(form, i, j, n, d)?;
                let diff = t.f_term - t.g_term;
                if diff == 0.0 {
                    continue;
                }
                let ln_term = ln_c + diff.abs().ln();
                let term = sign * diff.signum() * exp_checked(ln_term, "series contribution")?;
                outer.add(term);
                if n <= trunc.n_max && i <= trunc.i_max && j <= trunc.j_max {
                    inner.add(term);
                } else {
                    shell_abs += term.abs();
                }
            }
        }
    }
    Ok(SeriesSum {
        value: inner.value(),
        doubled_value: outer.value(),
        truncation: SeriesTruncation {
            tail_estimate: 2.0 * shell_abs,
            ..trunc
        },
    })
}

/// `int_{3 kappa^2}^inf y^2 (1 - e^{-y}) sum f_n e^{-f_n} dy`, positivity
/// window applied.
pub fn denominator_replaced_quadrature(d: &DimensionlessCouplings) -> Result<f64> {
    let y0 = series_lower_limit(d)?;
    integrate_checked(
        |y| denominator_replaced_integrand(y, d, ORACLE_SERIES_TOL),
        y0,
        SemiInfiniteMap::Rational,
        ORACLE_QUAD_TOL,
        "denominator-replaced energy density",
    )
}

/// Truncated termwise sum (Whittaker form) against the quadrature of the
/// same denominator-replaced integrand, both multiplied by `prefactor`. The
/// printed-block sum over the same box is echoed in the options.
pub fn series_report(d: &DimensionlessCouplings, trunc: SeriesTruncation, prefactor: f64) -> Result<ComparisonReport> {
    let s = series_sum(TermForm::Whittaker, d, trunc)?;
    let oracle = denominator_replaced_quadrature(d)?;
    let mut r = ComparisonReport::compare(
        "termwise energy density",
        prefactor * s.value,
        prefactor * oracle,
        SERIES_THRESHOLD,
        "truncated triple sum of Whittaker-form terms vs quadrature with the same denominator replacement",
    )
    .with_option("n_max", trunc.n_max)
    .with_option("i_max", trunc.i_max)
    .with_option("j_max", trunc.j_max)
    .with_option("tail_estimate", format!("{:.16e}", prefactor * s.truncation.tail_estimate))
    .with_option("doubled_box_value", format!("{:.16e}", prefactor * s.doubled_value))
    .with_option("a_A", format!("{:.16e}", d.a_a))
    .with_option("a_B", format!("{:.16e}", d.a_b));
    r = match series_sum(TermForm::Printed, d, trunc) {
        Ok(p) => r
            .with_option("printed_block_value", format!("{:.16e}", prefactor * p.value))
            .with_option("printed_block_rel_dev", format!("{:.3e}", relative_deviation(p.value, oracle))),
        Err(e) => r.with_option("printed_block_value", format!("error: {e}")),
    };
    if !(s.truncation.tail_estimate <= SERIES_THRESHOLD * s.value.abs()) {
        r = r.flag(format!(
            "truncation box too small: terms beyond the box sum to {:.3e} against a value of {:.3e}",
            s.truncation.tail_estimate, s.value
        ));
    }
    Ok(r)
}

/// Physical-unit wrapper of [`series_report`].
pub fn series_energy_density(
    p: &OscillatorParams,
    t: &ThermalState,
    u: &UnitSystem,
    trunc: SeriesTruncation,
) -> Result<ComparisonReport> {
    let d = dimensionless_couplings(p, t, u, false)?;
    if d.a_b > MAX_SERIES_A_B {
        return Err(Error::param(
            "quartic",
            format!("a_B = {} exceeds {MAX_SERIES_A_B}; the denominator replacement does not apply", d.a_b),
        ));
    }
    let pre = t.thermal_energy().powi(4) / (u.hbar.powi(3) * PI * PI * u.c.powi(3));
    series_report(&d, trunc, pre)
}
