//! The I7 integral and the log-tangent integrals it decomposes into.
//!
//! For `0 < theta, phi < pi/2`,
//! `(tan theta + tan phi) / (tan theta - tan phi) = sin(theta + phi) / sin(theta - phi)`.
//! Every integrand here is evaluated in the sine form, with `theta - phi`
//! taken from the node's exact offset to the singular endpoint. The tangent
//! form cancels catastrophically next to `phi` and overflows at `pi/2`.

use rug::Float;

use crate::clausen::cl2_value;
use crate::constants::PaperConstants;
use crate::error::{Error, Result};
use crate::precision::PrecisionContext;
use crate::quadrature::{
    integrate_split, tanh_sinh, Integrand, Node, QuadratureOptions, QuadratureResult,
};

fn half_pi(ctx: &PrecisionContext) -> Float {
    ctx.pi() / 2u32
}

fn ln_sine_ratio(sum: Float, diff: &Float) -> Float {
    let prec = sum.prec();
    let num = sum.sin();
    let den = Float::with_val(prec, diff.sin_ref());
    (num / den).ln()
}

/// `I7 = 24/(7 sqrt 7) int_{pi/3}^{pi/2} ln|(tan t + sqrt 7)/(tan t - sqrt 7)| dt`,
/// split at `phi7 = arctan(sqrt 7)` into the two sign-definite pieces.
pub fn integral_i7(ctx: &PrecisionContext) -> Result<QuadratureResult> {
    integral_i7_with(ctx, QuadratureOptions::default())
}

pub fn integral_i7_with(
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<QuadratureResult> {
    let (lower, upper) = i7_split_pieces(ctx, opts)?;
    Ok(lower.combine(upper).scaled(&i7_prefactor(ctx)))
}

/// The two integrals of the split at `phi7`: over `(pi/3, phi7)` and `(phi7, pi/2)`.
pub fn i7_split_pieces(
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<(QuadratureResult, QuadratureResult)> {
    let k = PaperConstants::new(ctx);
    let third = Float::with_val(ctx.prec(), &k.pi / 3u32);
    let lower = lemma1_integral_b_with(&k.phi7, &third, ctx, opts)?;
    let upper = lemma1_integral_a_with(&k.phi7, &half_pi(ctx), ctx, opts)?;
    Ok((lower, upper))
}

/// `24 / (7 sqrt 7)`.
pub fn i7_prefactor(ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec();
    let seven_root7 = Float::with_val(prec, 7).sqrt() * 7u32;
    Float::with_val(prec, 24) / seven_root7
}

fn check_angles(lo: &Float, hi: &Float, ctx: &PrecisionContext, what: &str) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && *lo > 0 && lo <= hi && *hi <= half_pi(ctx)) {
        return Err(Error::Domain(format!(
            "{what}: need 0 < {lo} <= {hi} <= pi/2"
        )));
    }
    Ok(())
}

/// `int_phi^x ln((tan t + tan phi)/(tan t - tan phi)) dt` for `0 < phi <= x <= pi/2`.
pub fn lemma1_integral_a(
    phi: &Float,
    x: &Float,
    ctx: &PrecisionContext,
) -> Result<QuadratureResult> {
    lemma1_integral_a_with(phi, x, ctx, QuadratureOptions::default())
}

pub fn lemma1_integral_a_with(
    phi: &Float,
    x: &Float,
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<QuadratureResult> {
    check_angles(phi, x, ctx, "lemma1_integral_a")?;
    if phi == x {
        return Ok(QuadratureResult::zero(ctx));
    }
    let f = Integrand::new(|n: &Node| {
        let p = n.x.prec();
        ln_sine_ratio(Float::with_val(p, &n.x + phi), &n.from_a)
    })
    .singular_at(phi.clone());
    tanh_sinh(&f, phi, x, ctx, opts)
}

/// `int_x^phi ln((tan phi + tan t)/(tan phi - tan t)) dt` for `0 < x <= phi < pi/2`.
pub fn lemma1_integral_b(
    phi: &Float,
    x: &Float,
    ctx: &PrecisionContext,
) -> Result<QuadratureResult> {
    lemma1_integral_b_with(phi, x, ctx, QuadratureOptions::default())
}

pub fn lemma1_integral_b_with(
    phi: &Float,
    x: &Float,
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<QuadratureResult> {
    check_angles(x, phi, ctx, "lemma1_integral_b")?;
    if phi == x {
        return Ok(QuadratureResult::zero(ctx));
    }
    let f = Integrand::new(|n: &Node| {
        let p = n.x.prec();
        ln_sine_ratio(Float::with_val(p, &n.x + phi), &n.from_b)
    })
    .singular_at(phi.clone());
    tanh_sinh(&f, x, phi, ctx, opts)
}

/// `-1/2 Cl2(2x + 2phi) + 1/2 Cl2(2x - 2phi) + 1/2 Cl2(4phi)`.
pub fn lemma1_closed_a(phi: &Float, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let (plus, minus, quad) = lemma1_clausen_terms(phi, x, ctx)?;
    Ok((minus - plus + quad) / 2u32)
}

/// `1/2 Cl2(2x + 2phi) - 1/2 Cl2(2x - 2phi) - 1/2 Cl2(4phi)`.
pub fn lemma1_closed_b(phi: &Float, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let (plus, minus, quad) = lemma1_clausen_terms(phi, x, ctx)?;
    Ok((plus - minus - quad) / 2u32)
}

/// `(Cl2(2x + 2phi), Cl2(2x - 2phi), Cl2(4phi))`.
fn lemma1_clausen_terms(
    phi: &Float,
    x: &Float,
    ctx: &PrecisionContext,
) -> Result<(Float, Float, Float)> {
    let prec = ctx.prec();
    let plus = Float::with_val(prec, x + phi) * 2u32;
    let minus = Float::with_val(prec, x - phi) * 2u32;
    let quad = Float::with_val(prec, phi * 4u32);
    Ok((
        cl2_value(&plus, ctx)?,
        cl2_value(&minus, ctx)?,
        cl2_value(&quad, ctx)?,
    ))
}

/// `F(t) = -t ln cos phi - 1/2 Cl2(2t + 2phi) - 1/2 Cl2(pi - 2t)`, an
/// antiderivative of `ln(tan t + tan phi)`.
pub fn log_tan_sum_antiderivative(phi: &Float, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.prec();
    let ln_cos = Float::with_val(prec, phi.cos_ref()).ln();
    let a = Float::with_val(prec, t + phi) * 2u32;
    let b = ctx.pi() - Float::with_val(prec, t * 2u32);
    let halves = (cl2_value(&a, ctx)? + cl2_value(&b, ctx)?) / 2u32;
    Ok(-(ln_cos * t) - halves)
}

/// Quadrature and antiderivative values of `int_{t1}^{t2} ln(tan t + tan phi) dt`.
pub fn antiderivative_sides(
    phi: &Float,
    t1: &Float,
    t2: &Float,
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<(Float, Float)> {
    let prec = ctx.prec();
    if t1 == t2 {
        return Ok((ctx.zero(), ctx.zero()));
    }
    let (lo, hi, sign) = if t1 < t2 { (t1, t2, 1) } else { (t2, t1, -1) };
    let hp = half_pi(ctx);
    let neg_hp = Float::with_val(prec, -&hp);
    if *lo <= neg_hp || *hi >= hp {
        return Err(Error::Domain(
            "antiderivative check needs |t| < pi/2".into(),
        ));
    }
    let tan_phi = Float::with_val(prec, phi.tan_ref());
    for end in [lo, hi] {
        if Float::with_val(prec, end.tan_ref()) + &tan_phi <= 0 {
            return Err(Error::Domain("tan t + tan phi must stay positive".into()));
        }
    }
    let f = Integrand::new(|n: &Node| {
        let p = n.x.prec();
        (Float::with_val(p, n.x.tan_ref()) + &tan_phi).ln()
    });
    let q = tanh_sinh(&f, lo, hi, ctx, opts)?;
    let closed =
        log_tan_sum_antiderivative(phi, hi, ctx)? - log_tan_sum_antiderivative(phi, lo, ctx)?;
    if sign > 0 {
        Ok((q.value, closed))
    } else {
        Ok((-q.value, -closed))
    }
}

/// `|int_{t1}^{t2} ln(tan t + tan phi) dt - (F(t2) - F(t1))|`.
pub fn antiderivative_check_35(
    phi: &Float,
    t1: &Float,
    t2: &Float,
    ctx: &PrecisionContext,
) -> Result<Float> {
    let (q, closed) = antiderivative_sides(phi, t1, t2, ctx, QuadratureOptions::default())?;
    Ok((q - closed).abs())
}

/// Parameters of the quoted log-sine and log-cosine integrals.
#[derive(Debug, Clone)]
pub struct TrigLogCase {
    pub kappa: u32,
    pub alpha: Float,
    pub x: Float,
}

/// `kappa int_0^x ln(sin(kappa t) + sin alpha) dt` and its Clausen form
/// `Cl2(a) - Cl2(kx + a) + Cl2(a - kx + pi) - Cl2(a + pi) - x k ln 2`,
/// for `kappa > 0`, `0 < x <= alpha`.
pub fn coffey_log_sin(
    case: &TrigLogCase,
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<(Float, Float)> {
    let prec = ctx.prec();
    let TrigLogCase { kappa, alpha, x } = case;
    if *kappa == 0 || !(*x > 0 && x <= alpha) {
        return Err(Error::Domain(
            "log-sine integral needs kappa > 0 and 0 < x <= alpha".into(),
        ));
    }
    let sin_alpha = Float::with_val(prec, alpha.sin_ref());
    let f = Integrand::new(|n: &Node| {
        let p = n.x.prec();
        (Float::with_val(p, &n.x * *kappa).sin() + &sin_alpha).ln()
    });
    let q = tanh_sinh(&f, &ctx.zero(), x, ctx, opts)?;
    let lhs = q.value * *kappa;

    let pi = ctx.pi();
    let kx = Float::with_val(prec, x * *kappa);
    let mut rhs = cl2_value(alpha, ctx)?;
    rhs -= cl2_value(&Float::with_val(prec, &kx + alpha), ctx)?;
    rhs += cl2_value(&(Float::with_val(prec, alpha - &kx) + &pi), ctx)?;
    rhs -= cl2_value(&Float::with_val(prec, alpha + &pi), ctx)?;
    rhs -= kx * Float::with_val(prec, rug::float::Constant::Log2);
    Ok((lhs, rhs))
}

/// `-kappa int_0^x ln|cos alpha - cos(kappa t)| dt` and its Clausen form
/// `Cl2(kx - a) + Cl2(kx + a) + x k ln 2`.
///
/// The logarithmic singularity at `t = alpha / kappa` is split out when it
/// falls inside `(0, x)`; `x` must stay below the next one at
/// `(2 pi - alpha) / kappa`.
pub fn coffey_log_cos(
    case: &TrigLogCase,
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<(Float, Float)> {
    let prec = ctx.prec();
    let TrigLogCase { kappa, alpha, x } = case;
    let pi = ctx.pi();
    if *kappa == 0 || !(*alpha > 0 && *alpha < pi) {
        return Err(Error::Domain(
            "log-cosine integral needs kappa > 0 and 0 < alpha < pi".into(),
        ));
    }
    let next = (Float::with_val(prec, &pi * 2u32) - alpha) / *kappa;
    if !(*x > 0 && *x < next) {
        return Err(Error::Domain(
            "log-cosine integral: x outside (0, (2pi - alpha)/kappa)".into(),
        ));
    }
    let s = Float::with_val(prec, alpha / *kappa);
    let k = *kappa;
    // cos a - cos(k t) = 2 sin((k t + a)/2) sin((k t - a)/2), k t - a = k (t - s).
    let f = Integrand::new(|n: &Node| {
        let p = n.x.prec();
        let plus = (Float::with_val(p, &n.x * k) + alpha) / 2u32;
        let minus = n.offset_from(&s) * k / 2u32;
        let prod = plus.sin() * minus.sin() * 2u32;
        prod.abs().ln()
    })
    .singular_at(s.clone());
    let q = integrate_split(&f, &ctx.zero(), x, ctx, opts)?;
    let lhs = -(q.value * k);

    let kx = Float::with_val(prec, x * k);
    let mut rhs = cl2_value(&Float::with_val(prec, &kx - alpha), ctx)?;
    rhs += cl2_value(&Float::with_val(prec, &kx + alpha), ctx)?;
    rhs += kx * Float::with_val(prec, rug::float::Constant::Log2);
    Ok((lhs, rhs))
}

/// The fixed parameter grid for the log-sine and log-cosine checks:
/// `kappa in {1, 2}`, `alpha in {pi/5, pi/3}`.
pub fn trig_log_grid(ctx: &PrecisionContext, log_cos: bool) -> Vec<TrigLogCase> {
    let prec = ctx.prec();
    let pi = ctx.pi();
    let mut out = Vec::new();
    for kappa in [1u32, 2] {
        for denom in [5u32, 3] {
            let alpha = Float::with_val(prec, &pi / denom);
            let xs: Vec<Float> = if log_cos {
                let s = Float::with_val(prec, &alpha / kappa);
                vec![
                    Float::with_val(prec, &s * 0.6f64),
                    Float::with_val(prec, &s * 1.4f64),
                ]
            } else {
                vec![Float::with_val(prec, &alpha * 0.7f64), alpha.clone()]
            };
            for x in xs {
                out.push(TrigLogCase {
                    kappa,
                    alpha: alpha.clone(),
                    x,
                });
            }
        }
    }
    out
}
