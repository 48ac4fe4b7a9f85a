use num_traits::Float;
use super::gamma::temme_gammas;
use super::{ln_add_exp, LogScaled, Method, SpecialFunctionResult, EPS, MAX_LN, MIN_LN};
use crate::error::{Error, Result};
use alloc::format;
use core::f64::consts::PI;

const MAX_ORDER: f64 = 50.0;
const MAX_ITER: usize = 10_000;
const SERIES_MAX_X: f64 = 2.0;
const ASYMPTOTIC_MIN_X: f64 = 30.0;
const RESCALE: f64 = 1e250;

/// `K_mu(x)` and `K_{mu+1}(x)` for `|mu| <= 1/2`, from Temme's series.
/// Accurate for `x <= 2`.
pub fn k_pair_series(mu: f64, x: f64) -> (f64, f64) {
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let g = temme_gammas(mu);
    let mut ff = fact * (g.gam1 * e.cosh() + g.gam2 * fact2 * d);
    let mut sum = ff;
    let e = e.exp();
    let mut p = 0.5 * e / g.gampl;
    let mut q = 0.5 / (e * g.gammi);
    let mut c = 1.0;
    let dd = x2 * x2;
    let mut sum1 = p;
    let mu2 = mu * mu;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        sum1 += c * (p - fi * ff);
        if del.abs() < sum.abs() * EPS {
            break;
        }
    }
    (sum, sum1 * 2.0 / x)
}

/// `e^x K_mu(x)` and `e^x K_{mu+1}(x)` for `|mu| <= 1/2`, from Steed's
/// continued fraction. Accurate for `x >= 2`.
pub fn k_pair_continued_fraction(mu: f64, x: f64) -> (f64, f64) {
    let mu2 = mu * mu;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    let h = a1 * h;
    let kmu = (PI / (2.0 * x)).sqrt() / s;
    (kmu, kmu * (mu + x + 0.5 - h) / x)
}

/// `e^x K_mu(x)` and `e^x K_{mu+1}(x)` from the Hankel expansion; `None`
/// when the expansion does not reach full precision.
pub fn k_pair_asymptotic(mu: f64, x: f64) -> Option<(f64, f64)> {
    let one = |nu: f64| {
        let m = 4.0 * nu * nu;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..200 {
            let odd = (2 * k - 1) as f64;
            let next = term * (m - odd * odd) / (8.0 * k as f64 * x);
            if next.abs() > term.abs() {
                return None;
            }
            term = next;
            sum += term;
            if term.abs() < EPS * sum.abs() {
                return Some(sum * (PI / (2.0 * x)).sqrt());
            }
        }
        None
    };
    Some((one(mu)?, one(mu + 1.0)?))
}

/// `K_nu(x) = k0 e^{ln_scale}`, `K_{nu+1}(x) = k1 e^{ln_scale}`.
struct OrderPair {
    k0: f64,
    k1: f64,
    ln_scale: f64,
    rel_err: f64,
    method: Method,
}

fn check(nu: f64, x: f64, function: &'static str) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(function, format!("x must be > 0, got {x}")));
    }
    if !nu.is_finite() || nu.abs() > MAX_ORDER {
        return Err(Error::range(
            function,
            format!("order {nu} outside |nu| <= {MAX_ORDER}"),
        ));
    }
    Ok(())
}

fn order_pair(nu: f64, x: f64) -> OrderPair {
    let nu = nu.abs();
    let nl = (nu + 0.5).floor();
    let mu = nu - nl;
    let (mut k0, mut k1, mut ln_scale, base_err, mut method) = if x <= SERIES_MAX_X {
        let (a, b) = k_pair_series(mu, x);
        (a, b, 0.0, 24.0, Method::Series)
    } else {
        let asym = if x >= ASYMPTOTIC_MIN_X {
            k_pair_asymptotic(mu, x)
        } else {
            None
        };
        match asym {
            Some((a, b)) => (a, b, -x, 8.0 + x.sqrt(), Method::Asymptotic),
            None => {
                let (a, b) = k_pair_continued_fraction(mu, x);
                (a, b, -x, 16.0 + x.sqrt(), Method::ContinuedFraction)
            }
        }
    };
    let steps = nl as usize;
    for i in 1..=steps {
        let next = (mu + i as f64) * (2.0 / x) * k1 + k0;
        k0 = k1;
        k1 = next;
        if k1 > RESCALE {
            k0 /= RESCALE;
            k1 /= RESCALE;
            ln_scale += RESCALE.ln();
        }
    }
    if steps > 0 {
        method = Method::Recurrence;
    }
    OrderPair {
        k0,
        k1,
        ln_scale,
        // The scale factor e^{-x} carries an absolute log error of eps*x.
        rel_err: EPS * (base_err + 2.0 * steps as f64 + if x > SERIES_MAX_X { x } else { 0.0 }),
        method,
    }
}

/// `K_nu(x)` for real `nu` (`|nu| <= 50`) and `x > 0`.
pub fn bessel_k(nu: f64, x: f64) -> Result<SpecialFunctionResult> {
    check(nu, x, "bessel_k")?;
    let p = order_pair(nu, x);
    let ln = p.k0.ln() + p.ln_scale;
    if !(ln < MAX_LN && ln > MIN_LN) {
        return Err(Error::range(
            "bessel_k",
            format!("K_{nu}({x}) = exp({ln}) is not representable"),
        ));
    }
    // Multiply rather than exponentiate the log: exp(ln) would amplify the
    // rounding of a large `ln_scale`.
    let value = p.k0 * p.ln_scale.exp();
    Ok(SpecialFunctionResult {
        value,
        abs_error_estimate: value * p.rel_err,
        method: p.method,
    })
}

/// `ln K_nu(x)`; the function is positive.
pub fn ln_bessel_k(nu: f64, x: f64) -> Result<LogScaled> {
    check(nu, x, "bessel_k")?;
    let p = order_pair(nu, x);
    Ok(LogScaled::positive(p.k0.ln() + p.ln_scale, p.rel_err, p.method))
}

/// `dK_nu/dx = -(K_{nu-1} + K_{nu+1}) / 2`.
pub fn bessel_k_derivative(nu: f64, x: f64) -> Result<SpecialFunctionResult> {
    ln_bessel_k_derivative(nu, x)?.into_value("bessel_k_derivative")
}

/// `ln |dK_nu/dx|`, with `sign = -1`.
pub fn ln_bessel_k_derivative(nu: f64, x: f64) -> Result<LogScaled> {
    check(nu, x, "bessel_k_derivative")?;
    let nu = nu.abs();
    let lower = order_pair(nu - 1.0, x);
    let upper = order_pair(nu, x);
    let ln = ln_add_exp(
        lower.k0.ln() + lower.ln_scale,
        upper.k1.ln() + upper.ln_scale,
    ) - core::f64::consts::LN_2;
    Ok(LogScaled {
        ln_abs: ln,
        sign: -1.0,
        abs_error_estimate: lower.rel_err.max(upper.rel_err) + 2.0 * EPS,
        method: upper.method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn half_integer_orders_are_elementary() {
        // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
        for &x in &[0.1, 1.0, 1.99, 2.0, 5.0, 29.0, 31.0, 300.0] {
            let exact = (PI / (2.0 * x)).sqrt() * (-x as f64).exp();
            assert!(rel(bessel_k(0.5, x).unwrap().value, exact) < 1e-14, "x={x}");
            let k32 = exact * (1.0 + 1.0 / x);
            assert!(rel(bessel_k(1.5, x).unwrap().value, k32) < 1e-14, "x={x}");
            assert!(rel(bessel_k(-1.5, x).unwrap().value, k32) < 1e-14, "x={x}");
        }
    }

    #[test]
    fn branches_agree_at_their_seams() {
        for &mu in &[-0.5, -0.3, 0.0, 0.25, 0.5] {
            let (a, b) = k_pair_series(mu, 2.0);
            let (c, d) = k_pair_continued_fraction(mu, 2.0);
            let s = 2.0f64.exp();
            assert!(rel(a * s, c) < 1e-14 && rel(b * s, d) < 1e-14, "mu={mu}");
            let (c, d) = k_pair_continued_fraction(mu, 30.0);
            let (e, f) = k_pair_asymptotic(mu, 30.0).unwrap();
            assert!(rel(c, e) < 1e-14 && rel(d, f) < 1e-14, "mu={mu}");
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(matches!(bessel_k(0.0, 0.0), Err(Error::Domain { .. })));
        assert!(matches!(bessel_k(0.0, -1.0), Err(Error::Domain { .. })));
        assert!(matches!(bessel_k(51.0, 1.0), Err(Error::Range { .. })));
        assert!(matches!(bessel_k(0.0, 800.0), Err(Error::Range { .. })));
        assert!(ln_bessel_k(0.0, 800.0).is_ok());
    }

    #[test]
    fn derivative_of_k0_is_minus_k1() {
        for &x in &[0.3, 1.0, 4.0, 40.0] {
            let d = bessel_k_derivative(0.0, x).unwrap().value;
            let k1 = bessel_k(1.0, x).unwrap().value;
            assert!(rel(-d, k1) < 1e-14);
        }
    }
}
