use num_traits::Float;
use super::gamma::ln_gamma;
use super::{LogScaled, Method, SpecialFunctionResult, EPS};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;

const MAX_UPARAM: f64 = 130.0;
const MAX_WPARAM: f64 = 60.0;
const ASYMPTOTIC_MIN_Z: f64 = 20.0;

/// Tricomi's confluent hypergeometric function `U(a, b, z)`, `z > 0`.
pub fn tricomi_u(a: f64, b: f64, z: f64) -> Result<SpecialFunctionResult> {
    ln_tricomi_u(a, b, z)?.into_value("tricomi_u")
}

pub fn ln_tricomi_u(a: f64, b: f64, z: f64) -> Result<LogScaled> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain("tricomi_u", format!("z must be > 0, got {z}")));
    }
    if !(a.abs() <= MAX_UPARAM && b.abs() <= MAX_UPARAM) {
        return Err(Error::range(
            "tricomi_u",
            format!("parameters a = {a}, b = {b} outside |a|, |b| <= {MAX_UPARAM}"),
        ));
    }
    let kummer = a - b + 1.0;
    if is_nonpositive_integer(a) {
        return Ok(polynomial(-a as usize, b, z));
    }
    if is_nonpositive_integer(kummer) {
        let mut r = polynomial(-kummer as usize, 2.0 - b, z);
        r.ln_abs += (1.0 - b) * z.ln();
        r.abs_error_estimate += EPS * ((1.0 - b) * z.ln()).abs();
        return Ok(r);
    }
    if z >= ASYMPTOTIC_MIN_Z {
        if let Some(r) = ln_u_asymptotic(a, b, z) {
            return Ok(r);
        }
    }
    if a > 0.0 {
        return ln_u_quadrature(a, b, z);
    }
    if kummer > 0.0 {
        let mut r = ln_u_quadrature(kummer, 2.0 - b, z)?;
        r.ln_abs += (1.0 - b) * z.ln();
        r.abs_error_estimate += EPS * ((1.0 - b) * z.ln()).abs();
        return Ok(r);
    }
    backward_recurrence(a, b, z)
}

/// Whittaker's `W_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} U(mu-kappa+1/2, 1+2mu, z)`.
pub fn whittaker_w(kappa: f64, mu: f64, z: f64) -> Result<SpecialFunctionResult> {
    ln_whittaker_w(kappa, mu, z)?.into_value("whittaker_w")
}

pub fn ln_whittaker_w(kappa: f64, mu: f64, z: f64) -> Result<LogScaled> {
    if !(kappa.abs() <= MAX_WPARAM && mu.abs() <= MAX_WPARAM) {
        return Err(Error::range(
            "whittaker_w",
            format!("parameters kappa = {kappa}, mu = {mu} outside |kappa|, |mu| <= {MAX_WPARAM}"),
        ));
    }
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain("whittaker_w", format!("z must be > 0, got {z}")));
    }
    let u = ln_tricomi_u(mu - kappa + 0.5, 1.0 + 2.0 * mu, z)?;
    let prefactor = -0.5 * z + (mu + 0.5) * z.ln();
    Ok(LogScaled {
        ln_abs: prefactor + u.ln_abs,
        sign: u.sign,
        abs_error_estimate: u.abs_error_estimate + EPS * (0.5 * z + ((mu + 0.5) * z.ln()).abs()),
        method: u.method,
    })
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// `U(-m, b, z) = (-1)^m sum_s C(m,s) (b+s)_{m-s} (-z)^s`, summed in log space.
fn polynomial(m: usize, b: f64, z: f64) -> LogScaled {
    let ln_z = z.ln();
    let mut terms: Vec<(f64, f64)> = Vec::with_capacity(m + 1);
    let ln_fact = |n: usize| ln_gamma(n as f64 + 1.0);
    for s in 0..=m {
        let mut ln_poch = 0.0;
        let mut sign = if (m + s) % 2 == 0 { 1.0 } else { -1.0 };
        for k in 0..(m - s) {
            let f = b + (s + k) as f64;
            if f == 0.0 {
                sign = 0.0;
                break;
            }
            ln_poch += f.abs().ln();
            if f < 0.0 {
                sign = -sign;
            }
        }
        if sign != 0.0 {
            let ln_binom = ln_fact(m) - ln_fact(s) - ln_fact(m - s);
            terms.push((ln_binom + ln_poch + s as f64 * ln_z, sign));
        }
    }
    signed_log_sum(&terms, Method::Series)
}

/// `sum sign_i exp(ln_i)` as a log-scaled value with a cancellation-aware error.
fn signed_log_sum(terms: &[(f64, f64)], method: Method) -> LogScaled {
    let top = terms
        .iter()
        .map(|t| t.0)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    let mut mag = 0.0;
    for &(ln, sign) in terms {
        let v = (ln - top).exp();
        sum += sign * v;
        mag += v;
    }
    if sum == 0.0 {
        return LogScaled {
            ln_abs: f64::NEG_INFINITY,
            sign: 0.0,
            abs_error_estimate: f64::INFINITY,
            method,
        };
    }
    LogScaled {
        ln_abs: top + sum.abs().ln(),
        sign: sum.signum(),
        abs_error_estimate: EPS * (8.0 + terms.len() as f64) * mag / sum.abs(),
        method,
    }
}

/// `U ~ z^{-a} sum_k (a)_k (a-b+1)_k / k! (-z)^{-k}`; `None` unless the
/// expansion converges to full precision before its terms start growing.
pub fn ln_u_asymptotic(a: f64, b: f64, z: f64) -> Option<LogScaled> {
    let c = a - b + 1.0;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut mag = 1.0f64;
    for k in 0..1000 {
        let kf = k as f64;
        let next = term * (a + kf) * (c + kf) / ((kf + 1.0) * -z);
        if next.abs() > term.abs() && k > 0 {
            return None;
        }
        term = next;
        sum += term;
        mag += term.abs();
        if term.abs() <= EPS * sum.abs() {
            if sum == 0.0 {
                return None;
            }
            return Some(LogScaled {
                ln_abs: -a * z.ln() + sum.abs().ln(),
                sign: sum.signum(),
                abs_error_estimate: EPS * (4.0 + (k as f64).sqrt()) * mag / sum.abs()
                    + EPS * (a * z.ln()).abs(),
                method: Method::Asymptotic,
            });
        }
    }
    None
}

fn softplus(u: f64) -> f64 {
    u.max(0.0) + (-u.abs()).exp().ln_1p()
}

fn sigmoid(u: f64) -> f64 {
    1.0 / (1.0 + (-u).exp())
}

/// Laplace integral `U = (1/Gamma(a)) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt`
/// for `a > 0`, evaluated as `t = e^u`, `u = u* + w sinh(s)` around the
/// integrand's peak with trapezoidal refinement.
pub fn ln_u_quadrature(a: f64, b: f64, z: f64) -> Result<LogScaled> {
    if !(a > 0.0) {
        return Err(Error::domain(
            "tricomi_u",
            format!("the integral representation needs a > 0, got {a}"),
        ));
    }
    let c = b - a - 1.0;
    let phi = |u: f64| a * u + c * softplus(u) - z * u.exp();
    let dphi = |u: f64| a + c * sigmoid(u) - z * u.exp();

    let mut lo = -1.0;
    let mut hi = 1.0;
    for _ in 0..64 {
        if dphi(lo) > 0.0 {
            break;
        }
        lo = 2.0 * lo - 1.0;
    }
    for _ in 0..64 {
        if dphi(hi) < 0.0 {
            break;
        }
        hi = 2.0 * hi + 1.0;
    }
    if !(dphi(lo) > 0.0 && dphi(hi) < 0.0) {
        return Err(Error::Quadrature(format!(
            "no interior peak for U({a}, {b}, {z})"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if dphi(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let u_star = 0.5 * (lo + hi);
    let phi_star = phi(u_star);
    let s_u = sigmoid(u_star);
    let curvature = c * s_u * (1.0 - s_u) - z * u_star.exp();
    let w = if curvature < 0.0 {
        (1.0 / (-curvature).sqrt()).clamp(1e-6, 1e6)
    } else {
        1.0
    };

    let g = |s: f64| {
        let u = u_star + w * s.sinh();
        (phi(u) - phi_star).exp() * w * s.cosh()
    };

    // Truncate the s-range where the integrand drops below 1e-20 of its peak.
    let peak = g(0.0);
    let step = 0.25;
    let reach = |dir: f64| {
        let mut k = 1usize;
        while k < 100 && g(dir * step * k as f64) > 1e-20 * peak {
            k += 1;
        }
        step * k as f64
    };
    let (s_lo, s_hi) = (-reach(-1.0), reach(1.0));

    let mut h = step;
    let mut points = 0usize;
    let mut sum = 0.0;
    let mut k = (s_lo / h).ceil() as i64;
    while (k as f64) * h <= s_hi {
        sum += g(k as f64 * h);
        points += 1;
        k += 1;
    }
    let mut total = sum * h;
    let mut change = f64::INFINITY;
    for _ in 0..14 {
        let half = 0.5 * h;
        let mut odd = 0.0;
        let mut k = ((s_lo / half).ceil() as i64) | 1;
        while (k as f64) * half <= s_hi {
            odd += g(k as f64 * half);
            points += 1;
            k += 2;
        }
        sum += odd;
        h = half;
        let next = sum * h;
        change = (next - total).abs() / next;
        total = next;
        if change <= 4.0 * EPS {
            break;
        }
    }
    if !total.is_finite() || total <= 0.0 || change > 1e-10 {
        return Err(Error::NotConvergent(format!(
            "trapezoidal quadrature for U({a}, {b}, {z}): last relative change {change:e}"
        )));
    }
    let lg = ln_gamma(a);
    let roundoff = EPS
        * (16.0
            + (points as f64).sqrt()
            + (a * u_star).abs()
            + (c * softplus(u_star)).abs()
            + z * u_star.exp()
            + lg.abs());
    Ok(LogScaled::positive(
        phi_star + total.ln() - lg,
        roundoff + change,
        Method::Quadrature,
    ))
}

/// `U(a-1) = -(b - 2a - z) U(a) - a (a-b+1) U(a+1)`, started from positive `a`.
fn backward_recurrence(a: f64, b: f64, z: f64) -> Result<LogScaled> {
    let steps = (-a).ceil() + 1.0;
    let top = a + steps;
    let u0 = ln_u_quadrature(top, b, z)?;
    let u1 = ln_u_quadrature(top + 1.0, b, z)?;
    let scale = u0.ln_abs;
    let mut cur = 1.0;
    let mut next = (u1.ln_abs - scale).exp();
    let mut rel = u0.abs_error_estimate.max(u1.abs_error_estimate);
    let mut alpha = top;
    for _ in 0..steps as usize {
        let t1 = -(b - 2.0 * alpha - z) * cur;
        let t2 = -alpha * (alpha - b + 1.0) * next;
        let prev = t1 + t2;
        rel = (rel + EPS) * (t1.abs() + t2.abs()) / prev.abs();
        next = cur;
        cur = prev;
        alpha -= 1.0;
    }
    if cur == 0.0 || !cur.is_finite() {
        return Err(Error::NotConvergent(format!(
            "recurrence for U({a}, {b}, {z}) lost all precision"
        )));
    }
    Ok(LogScaled {
        ln_abs: scale + cur.abs().ln(),
        sign: cur.signum(),
        abs_error_estimate: rel,
        method: Method::Recurrence,
    })
}
