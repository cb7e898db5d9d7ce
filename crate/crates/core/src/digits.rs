use rug::Float;

use crate::precision::PrecisionContext;

/// Slack absorbing representation noise in `-log10`, so that a difference
/// of exactly `1e-40` counts as 40 digits rather than 39.
const FLOOR_SLACK: f64 = 1e-6;

/// Decimal digits of agreement:
/// `floor(-log10(|x - y| / max(|x|, |y|, 1)))`, floored at 0 and capped at
/// `ctx.digits()`. Identical values agree to `ctx.digits()`.
pub fn digits_agreed(x: &Float, y: &Float, ctx: &PrecisionContext) -> u32 {
    let prec = ctx.prec();
    let diff = Float::with_val(prec, x - y).abs();
    let cap = ctx.digits();
    if diff.is_zero() {
        return cap;
    }
    if diff.is_nan() {
        return 0;
    }
    let scale = Float::with_val(prec, x.abs_ref())
        .max(&Float::with_val(prec, y.abs_ref()))
        .max(&Float::with_val(prec, 1));
    let rel = diff / scale;
    let d = -rel.log10().to_f64();
    if d <= 0.0 {
        return 0;
    }
    let d = (d + FLOOR_SLACK).floor();
    if d >= f64::from(cap) {
        cap
    } else {
        d as u32
    }
}
