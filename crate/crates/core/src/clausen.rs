//! The Clausen function `Cl2(theta) = sum_{m>=1} sin(m theta) / m^2`.
//!
//! Two independent evaluation routes are provided:
//!
//! * [`cl2`] reduces `theta` into `(-pi, pi]`, uses oddness, and sums the
//!   log-weighted expansion
//!   `Cl2(t) = t - t ln t + sum_{n>=1} |B_2n| t^(2n+1) / (2n (2n+1)!)`,
//!   valid for `0 < t < 2 pi`. On `(0, pi]` the ratio of consecutive terms is
//!   below `(t / 2pi)^2 <= 1/4`, which gives an explicit tail bound.
//! * [`cl2_via_integral`] integrates `-ln|2 sin(t/2)|` with tanh-sinh
//!   quadrature, always with the logarithmic singularity at an endpoint.
//!
//! [`cl2_series_partial`] sums the defining series literally and serves only
//! as a slow oracle.

use rug::{Float, Integer};
use serde::Serialize;

use crate::bernoulli::even_table;
use crate::error::{Error, Result};
use crate::precision::PrecisionContext;
use crate::quadrature::{tanh_sinh, Integrand, Node, QuadratureOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    Integral,
    Functional,
}

#[derive(Debug, Clone)]
pub struct EvalResult {
    pub value: Float,
    /// Absolute error bound (heuristic, not interval-certified).
    pub error_bound: Float,
    pub method: Method,
}

impl EvalResult {
    fn exact_zero(ctx: &PrecisionContext, method: Method) -> Self {
        Self {
            value: ctx.zero(),
            error_bound: ctx.zero(),
            method,
        }
    }
}

fn require_finite(theta: &Float) -> Result<()> {
    if theta.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Clausen argument must be finite, got {theta}"
        )))
    }
}

/// Reduces `theta` modulo `2 pi` into `[-pi, pi]` at working precision.
///
/// The quotient is taken at extra precision proportional to `|theta|`, so
/// large arguments lose no significant bits.
pub fn reduce_angle(theta: &Float, ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec();
    let extra = theta.get_exp().unwrap_or(0).max(0) as u32 + 16;
    let wide = prec + extra;
    let two_pi = Float::with_val(wide, rug::float::Constant::Pi) * 2u32;
    let q = Float::with_val(wide, theta / &two_pi).round();
    let r = Float::with_val(wide, theta - q * &two_pi);
    Float::with_val(prec, r)
}

/// `Cl2(theta)` via range reduction and the accelerated expansion.
pub fn cl2(theta: &Float, ctx: &PrecisionContext) -> Result<EvalResult> {
    require_finite(theta)?;
    let prec = ctx.prec();
    let r = reduce_angle(theta, ctx);
    if r.is_zero() {
        return Ok(EvalResult::exact_zero(ctx, Method::Series));
    }
    let negative = r.is_sign_negative();
    let t = r.abs();
    let (value, error_bound) = cl2_reduced(&t, ctx);
    let value = if negative { -value } else { value };
    debug_assert!(value.prec() == prec);
    Ok(EvalResult {
        value,
        error_bound,
        method: Method::Series,
    })
}

/// Value of [`cl2`], for callers that only need the number.
pub fn cl2_value(theta: &Float, ctx: &PrecisionContext) -> Result<Float> {
    cl2(theta, ctx).map(|r| r.value)
}

/// Log10 of an upper bound on the series tail after `n` terms, for
/// `0 < t <= pi` and `ratio = (t / 2pi)^2`.
fn tail_log10(t: f64, ratio: f64, n: u64) -> f64 {
    if ratio <= 0.0 {
        return f64::NEG_INFINITY;
    }
    // |B_2k| / (2k)! = 2 zeta(2k) / (2pi)^2k and zeta(2k) <= pi^2 / 6.
    let zeta_max = std::f64::consts::PI.powi(2) / 6.0;
    let k = (n + 1) as f64;
    let ln = (2.0 * zeta_max * t).ln() + k * ratio.ln()
        - ((2.0 * k) * (2.0 * k + 1.0)).ln()
        - (1.0 - ratio).ln();
    ln / std::f64::consts::LN_10
}

/// `Cl2(t)` for `0 < t <= pi`, with its error bound.
fn cl2_reduced(t: &Float, ctx: &PrecisionContext) -> (Float, Float) {
    let prec = ctx.prec();
    let t_f64 = t.to_f64();
    let two_pi = ctx.pi() * 2u32;
    let ratio = (t_f64 / two_pi.to_f64()).powi(2);
    let target = -f64::from(ctx.working_digits());

    let mut terms = 1u64;
    while tail_log10(t_f64, ratio, terms) > target {
        terms += 1;
    }
    let bern = even_table(terms as usize);

    let t2 = Float::with_val(prec, t.square_ref());
    let mut power = Float::with_val(prec, &t2 * t);
    // (2n+1)! for n = 1.
    let mut factorial = Integer::from(6);
    let mut sum = Float::new(prec);
    for n in 1..=terms {
        let idx = n as usize;
        if n > 1 {
            factorial *= (2 * n) * (2 * n + 1);
        }
        let denom = Integer::from(&factorial * (2 * n));
        let coeff = Float::with_val(prec, &bern[idx]).abs() / Float::with_val(prec, &denom);
        sum += coeff * &power;
        power *= &t2;
    }

    let log_part = Float::with_val(prec, t.ln_ref()) * t;
    let value = Float::with_val(prec, t - log_part) + &sum;

    let tail = Float::with_val(
        prec,
        tail_log10(t_f64, ratio, terms).max(-1.0e6) * std::f64::consts::LN_10,
    )
    .exp();
    let roundoff = Float::with_val(53, 1u32) >> (prec as i32 - 4);
    let magnitude = t_f64 * (1.0 + t_f64.ln().abs()) + sum.to_f64().abs();
    let bound = tail + roundoff * (magnitude * (terms as f64 + 4.0));
    (value, bound)
}

/// The partial sum `sum_{m=1}^{N} sin(m theta) / m^2`, at the precision of `theta`.
pub fn cl2_series_partial(theta: &Float, n_terms: u64) -> Float {
    let prec = theta.prec();
    let mut sum = Float::new(prec);
    for m in 1..=n_terms {
        let s = Float::with_val(prec, theta * m).sin();
        let m2 = Float::with_val(prec, m) * m;
        sum += s / m2;
    }
    sum
}

/// `Cl2(theta) = -int_0^theta ln|2 sin(t/2)| dt` by tanh-sinh quadrature.
///
/// Requires `|theta| <= 2 pi`. For `theta` in `(pi, 2pi]` the complementary
/// integral `int_theta^{2pi} ln|2 sin(t/2)| dt` is used (the integral over a
/// full period vanishes), keeping the singularity at an endpoint.
pub fn cl2_via_integral(theta: &Float, ctx: &PrecisionContext) -> Result<EvalResult> {
    cl2_via_integral_with(theta, ctx, QuadratureOptions::default())
}

pub fn cl2_via_integral_with(
    theta: &Float,
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<EvalResult> {
    require_finite(theta)?;
    let prec = ctx.prec();
    let pi = ctx.pi();
    let two_pi = Float::with_val(prec, &pi * 2u32);
    let abs = Float::with_val(prec, theta.abs_ref());
    if abs > two_pi {
        return Err(Error::Domain(format!(
            "integral route needs |theta| <= 2 pi, got {}",
            crate::format::to_sci(theta, 20)
        )));
    }
    if abs.is_zero() || abs == two_pi {
        return Ok(EvalResult::exact_zero(ctx, Method::Integral));
    }

    let result = if abs <= pi {
        // -int_0^t ln(2 sin(x/2)) dx, x is the offset from 0.
        let f = Integrand::new(|n: &Node| {
            let p = n.x.prec();
            let s = Float::with_val(p, &n.from_a / 2u32).sin() * 2u32;
            -s.ln()
        })
        .singular_at(ctx.zero());
        tanh_sinh(&f, &ctx.zero(), &abs, ctx, opts)?
    } else {
        // sin(x/2) = sin((2pi - x)/2): evaluate from the offset to 2pi.
        let f = Integrand::new(|n: &Node| {
            let p = n.x.prec();
            let s = Float::with_val(p, &n.from_b / 2u32).sin() * 2u32;
            s.ln()
        })
        .singular_at(two_pi.clone());
        tanh_sinh(&f, &abs, &two_pi, ctx, opts)?
    };

    let value = if theta.is_sign_negative() {
        -result.value
    } else {
        result.value
    };
    Ok(EvalResult {
        value,
        error_bound: result.error_estimate,
        method: Method::Integral,
    })
}

/// `m * sum_{l=0}^{m-1} Cl2(theta + 2 pi l / m)`, which equals `Cl2(m theta)`.
pub fn multiplication_rhs(theta: &Float, m: u32, ctx: &PrecisionContext) -> Result<Float> {
    if m == 0 {
        return Err(Error::Domain("multiplication formula needs m >= 1".into()));
    }
    let prec = ctx.prec();
    let two_pi = ctx.pi() * 2u32;
    let mut sum = Float::new(prec);
    for l in 0..m {
        let shift = Float::with_val(prec, &two_pi * l) / m;
        let arg = Float::with_val(prec, theta + shift);
        sum += cl2_value(&arg, ctx)?;
    }
    Ok(sum * m)
}

/// `sum_{l=0}^{m-1} sin(n (theta + 2 pi l / m))`: `m sin(n theta)` when `m | n`, else 0.
pub fn character_sine_sum(n: u64, m: u64, theta: &Float) -> Float {
    let prec = theta.prec();
    let two_pi = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
    let mut sum = Float::new(prec);
    for l in 0..m {
        let shift = Float::with_val(prec, &two_pi * l) / m;
        let arg = Float::with_val(prec, theta + shift) * n;
        sum += arg.sin();
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn parse(c: &PrecisionContext, s: &str) -> Float {
        Float::with_val(c.prec(), Float::parse(s).unwrap())
    }

    fn assert_close(x: &Float, y: &Float, tol: &Float) {
        let d = Float::with_val(x.prec(), x - y).abs();
        assert!(d <= *tol, "|{x} - {y}| = {d} > {tol}");
    }

    // Catalan's constant, independently summed from the defining series with
    // an Euler-transformed alternating tail (mpmath reference to 60 digits).
    const CATALAN: &str = "0.915965594177219015054603514932384110774149374281672134266498";
    const CL2_PI_3: &str = "1.01494160640965362502120255427452028594168930753029979201749";

    #[test]
    fn zero_and_multiples_of_pi() {
        let c = ctx(50);
        assert!(cl2(&c.zero(), &c).unwrap().value.is_zero());
        for m in [-2i32, -1, 1, 2, 3] {
            let theta = c.pi() * m;
            let v = cl2(&theta, &c).unwrap();
            assert!(v.value.abs() <= c.tolerance(), "m = {m}");
        }
    }

    #[test]
    fn catalan_and_pi_over_three() {
        let c = ctx(55);
        let half_pi = c.pi() / 2u32;
        let r = cl2(&half_pi, &c).unwrap();
        assert_close(&r.value, &parse(&c, CATALAN), &c.tolerance());
        assert!(r.error_bound <= c.tolerance());
        assert_eq!(r.method, Method::Series);
        let third = c.pi() / 3u32;
        assert_close(
            &cl2_value(&third, &c).unwrap(),
            &parse(&c, CL2_PI_3),
            &c.tolerance(),
        );
    }

    #[test]
    fn non_finite_rejected() {
        let c = ctx(20);
        let nan = Float::with_val(c.prec(), rug::float::Special::Nan);
        assert!(matches!(cl2(&nan, &c), Err(Error::Domain(_))));
        let inf = Float::with_val(c.prec(), rug::float::Special::Infinity);
        assert!(matches!(cl2_via_integral(&inf, &c), Err(Error::Domain(_))));
    }

    #[test]
    fn large_arguments_reduce_cleanly() {
        let c = ctx(40);
        let theta = c.pi() / 2u32 + c.pi() * 2_000_000u32;
        assert_close(
            &cl2_value(&theta, &c).unwrap(),
            &parse(&c, CATALAN),
            &c.tolerance(),
        );
    }

    #[test]
    fn series_partial_literal() {
        let p = 128;
        let pi = Float::with_val(p, rug::float::Constant::Pi);
        assert!(cl2_series_partial(&pi, 50).abs() < 1e-30);
        let half = Float::with_val(p, &pi / 2u32);
        assert_eq!(cl2_series_partial(&half, 1), 1);
    }

    #[test]
    fn series_partial_million_terms_near_catalan() {
        let pi = Float::with_val(64, rug::float::Constant::Pi);
        let half = Float::with_val(64, &pi / 2u32);
        let s = cl2_series_partial(&half, 1_000_000);
        let catalan = Float::with_val(64, Float::parse(CATALAN).unwrap());
        assert!(Float::with_val(64, s - catalan).abs() < 1e-6);
    }

    #[test]
    fn integral_route() {
        let c = ctx(40);
        let pi = c.pi();
        let r = cl2_via_integral(&pi, &c).unwrap();
        assert!(r.value.abs() <= c.tolerance());
        let half = Float::with_val(c.prec(), &pi / 2u32);
        let r = cl2_via_integral(&half, &c).unwrap();
        assert_eq!(r.method, Method::Integral);
        assert_close(&r.value, &parse(&c, CATALAN), &c.tolerance());
        let neg = cl2_via_integral(&(-half), &c).unwrap();
        assert_close(&neg.value, &(-parse(&c, CATALAN)), &c.tolerance());
        let beyond = pi * 7u32;
        assert!(matches!(
            cl2_via_integral(&beyond, &c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn integral_route_upper_half_period() {
        let c = ctx(40);
        let theta = c.real(5);
        let a = cl2_value(&theta, &c).unwrap();
        let b = cl2_via_integral(&theta, &c).unwrap().value;
        assert_close(&a, &b, &c.pow10(-35));
    }

    #[test]
    fn multiplication_small_m() {
        let c = ctx(40);
        let theta = c.real(0.37);
        assert_close(
            &multiplication_rhs(&theta, 1, &c).unwrap(),
            &cl2_value(&theta, &c).unwrap(),
            &c.tolerance(),
        );
        // m = 2 at pi/3 against the duplication form Cl2(t) - Cl2(pi - t).
        let t = c.pi() / 3u32;
        let dup = Float::with_val(c.prec(), cl2_value(&t, &c).unwrap())
            - cl2_value(&Float::with_val(c.prec(), c.pi() - &t), &c).unwrap();
        let lhs = multiplication_rhs(&t, 2, &c).unwrap();
        assert_close(&lhs, &(dup * 2u32), &(c.tolerance() * 10u32));
        assert!(multiplication_rhs(&t, 0, &c).is_err());
    }

    #[test]
    fn sine_sum_branches() {
        let theta = Float::with_val(128, 0.7);
        assert!(character_sine_sum(1, 2, &theta).abs() < 1e-35);
        let want = Float::with_val(128, 2.8f64).sin() * 2u32;
        let got = character_sine_sum(4, 2, &theta);
        assert!(Float::with_val(128, got - want).abs() < 1e-35);
    }
}
