//! Single-mode sums in the dimensionless frequency `y = hbar w / (k_B T)`.
//!
//! Dropping the zero-point term, `beta E_n = f_n(y)` with
//!
//! ```text
//! f_n(y) = a_A (n^2 + 6n) / y^4 + a_B (2n^2 + 2n) / y^2 + n y
//! ```
//!
//! and the printed positivity functions `g_2 = a_A/y^4 + a_B/y^2`,
//! `g_1 = 6 a_A/y^4 + 2 a_B/y^2` (optionally `+ y`).

use num_traits::Float;
use crate::error::{Error, Result};
use crate::oracles::{sum_until_tail_bound, SeriesTruncation, TailPolicy};
use crate::params::{OscillatorParams, ThermalState, UnitSystem};
use alloc::format;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DimensionlessCouplings {
    pub a_a: f64,
    pub a_b: f64,
    /// `-a_A / a_B`; `None` when `a_B = 0`.
    pub kappa_sq: Option<f64>,
    /// Smallest `y` at which both positivity functions are non-negative.
    pub y_star: f64,
    pub g1_includes_y: bool,
}

/// `Theta(0) = 1`, so that vanishing couplings (`g_1 = g_2 = 0`) keep every
/// mode.
pub fn heaviside(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        0.0
    }
}

impl DimensionlessCouplings {
    pub fn zero() -> Self {
        DimensionlessCouplings {
            a_a: 0.0,
            a_b: 0.0,
            kappa_sq: None,
            y_star: 0.0,
            g1_includes_y: false,
        }
    }

    /// Couplings given directly. Requires `a_A <= 0 <= a_B`, and `a_B > 0`
    /// whenever `a_A < 0`.
    pub fn new(a_a: f64, a_b: f64, g1_includes_y: bool) -> Result<Self> {
        if !(a_a <= 0.0) || !a_a.is_finite() {
            return Err(Error::param("a_A", format!("must be finite and <= 0, got {a_a}")));
        }
        if !(a_b >= 0.0) || !a_b.is_finite() {
            return Err(Error::param("a_B", format!("must be finite and >= 0, got {a_b}")));
        }
        let kappa_sq = if a_b > 0.0 { Some(-a_a / a_b) } else { None };
        let mut d = DimensionlessCouplings {
            a_a,
            a_b,
            kappa_sq,
            y_star: 0.0,
            g1_includes_y,
        };
        if a_a < 0.0 {
            if a_b == 0.0 {
                return Err(Error::NoPositivityWindow(format!(
                    "a_B = 0 with a_A = {a_a} < 0 makes g_2 negative for every y"
                )));
            }
            d.y_star = d.find_y_star()?;
        }
        Ok(d)
    }

    pub fn is_zero(&self) -> bool {
        self.a_a == 0.0 && self.a_b == 0.0
    }

    pub fn g1(&self, y: f64) -> f64 {
        let y2 = y * y;
        let g = 6.0 * self.a_a / (y2 * y2) + 2.0 * self.a_b / y2;
        if self.g1_includes_y {
            g + y
        } else {
            g
        }
    }

    pub fn g2(&self, y: f64) -> f64 {
        let y2 = y * y;
        self.a_a / (y2 * y2) + self.a_b / y2
    }

    /// `Theta(g_1) Theta(g_2)`.
    pub fn window_weight(&self, y: f64) -> f64 {
        heaviside(self.g1(y)) * heaviside(self.g2(y))
    }

    /// Whether the mode sums are evaluated at `y` (strictly above `y_star`).
    pub fn in_window(&self, y: f64) -> bool {
        y > self.y_star && self.window_weight(y) > 0.0
    }

    pub fn f_n(&self, n: usize, y: f64) -> f64 {
        let nf = n as f64;
        let y2 = y * y;
        self.a_a * (nf * nf + 6.0 * nf) / (y2 * y2) + self.a_b * (2.0 * nf * nf + 2.0 * nf) / y2 + nf * y
    }

    /// `y^4 g_1` and `y^4 g_2` are increasing in `y` for `a_A < 0 < a_B`, so
    /// the window is `(y_star, inf)`. Closed forms (`sqrt(3 kappa^2)` from
    /// the printed `g_1`, `kappa` from `g_2`) are checked against bisection.
    fn find_y_star(&self) -> Result<f64> {
        let (a, b) = (self.a_a, self.a_b);
        let h1 = |y: f64| {
            let base = 6.0 * a + 2.0 * b * y * y;
            if self.g1_includes_y {
                base + y.powi(5)
            } else {
                base
            }
        };
        let h2 = |y: f64| a + b * y * y;
        let root1 = bisect_increasing(h1)?;
        let root2 = bisect_increasing(h2)?;
        let closed2 = (-a / b).sqrt();
        let root1 = if self.g1_includes_y {
            root1
        } else {
            let closed1 = (-3.0 * a / b).sqrt();
            if (closed1 - root1).abs() > 1e-12 * closed1 {
                return Err(Error::NotConvergent(format!(
                    "positivity cutoff: bisection {root1} disagrees with closed form {closed1}"
                )));
            }
            closed1
        };
        if (closed2 - root2).abs() > 1e-12 * closed2 {
            return Err(Error::NotConvergent(format!(
                "positivity cutoff: bisection {root2} disagrees with closed form {closed2}"
            )));
        }
        Ok(root1.max(closed2))
    }
}

/// Root of an increasing function with `h(0) < 0`.
fn bisect_increasing<H: Fn(f64) -> f64>(h: H) -> Result<f64> {
    let mut lo = 0.0;
    let mut hi = 1.0;
    while h(hi) <= 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::NoPositivityWindow("positivity functions never turn positive".into()));
        }
    }
    while h(lo) > 0.0 {
        hi = lo;
        lo *= 0.5;
        if lo < 1e-300 {
            return Ok(0.0);
        }
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if !(mid > lo && mid < hi) {
            break;
        }
        if h(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `a_A = -hbar^6 mu^2 / (16 m^3 (k_B T)^5)`, `a_B = 3 lambda hbar^4 / (4 m^2 (k_B T)^3)`.
pub fn dimensionless_couplings(
    p: &OscillatorParams,
    t: &ThermalState,
    u: &UnitSystem,
    g1_includes_y: bool,
) -> Result<DimensionlessCouplings> {
    p.validate()?;
    u.validate()?;
    let kt = t.thermal_energy();
    let m = p.mass;
    let h2 = u.hbar * u.hbar;
    let a_a = -(h2 * h2 * h2) * p.cubic * p.cubic / (16.0 * m * m * m * kt.powi(5));
    let a_b = 3.0 * p.quartic * h2 * h2 / (4.0 * m * m * kt * kt * kt);
    if p.quartic == 0.0 && p.cubic != 0.0 {
        return Err(Error::NoPositivityWindow(format!(
            "lambda = 0 with mu = {} leaves g_2 < 0 for all y",
            p.cubic
        )));
    }
    DimensionlessCouplings::new(a_a, a_b, g1_includes_y)
}

fn check_window(y: f64, d: &DimensionlessCouplings) -> Result<()> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("mode sum", format!("y must be finite and > 0, got {y}")));
    }
    if d.a_a < 0.0 && !(y > d.y_star) {
        return Err(Error::OutsideWindow { y, y_star: d.y_star });
    }
    Ok(())
}

fn mode_series<T: Fn(usize) -> f64>(term: T, rel_tol: f64, what: &str) -> Result<(f64, SeriesTruncation)> {
    sum_until_tail_bound(term, TailPolicy::default(), rel_tol).map_err(|e| match e {
        Error::NotConvergent(msg) => Error::NotConvergent(format!(
            "{what}: {msg}; the sum requires a positive level spacing (B > 0 and A >= 0)"
        )),
        other => other,
    })
}

/// `sum_{n >= 0} exp(-f_n(y))`. For vanishing couplings this is the
/// geometric sum `1 / (1 - e^{-y})`, returned in closed form.
pub fn mode_partition_sum(y: f64, d: &DimensionlessCouplings, rel_tol: f64) -> Result<(f64, SeriesTruncation)> {
    check_window(y, d)?;
    if d.is_zero() {
        return Ok((-1.0 / (-y).exp_m1(), SeriesTruncation::default()));
    }
    mode_series(|n| (-d.f_n(n, y)).exp(), rel_tol, "mode partition sum")
}

/// `sum f_n e^{-f_n} / sum e^{-f_n}`: mean energy of the mode in units of
/// `k_B T`. Planck's `y / (e^y - 1)` for vanishing couplings.
pub fn mode_mean_occupancy_energy(y: f64, d: &DimensionlessCouplings, rel_tol: f64) -> Result<f64> {
    check_window(y, d)?;
    if d.is_zero() {
        return Ok(y / y.exp_m1());
    }
    let (z, _) = mode_series(|n| (-d.f_n(n, y)).exp(), rel_tol, "mode partition sum")?;
    let (num, _) = mode_series(
        |n| {
            let f = d.f_n(n, y);
            f * (-f).exp()
        },
        rel_tol,
        "mode energy sum",
    )?;
    Ok(num / z)
}

/// `sum f_n e^{-f_n}` without normalisation (the numerator above).
pub fn mode_energy_numerator(y: f64, d: &DimensionlessCouplings, rel_tol: f64) -> Result<f64> {
    check_window(y, d)?;
    if d.is_zero() {
        let q = (-y).exp();
        let one_minus = -(-y).exp_m1();
        return Ok(y * q / (one_minus * one_minus));
    }
    let (num, _) = mode_series(
        |n| {
            let f = d.f_n(n, y);
            f * (-f).exp()
        },
        rel_tol,
        "mode energy sum",
    )?;
    Ok(num)
}
