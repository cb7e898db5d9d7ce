//! Hurwitz zeta `zeta(s, a) = sum_{m>=0} (m + a)^(-s)` for real `s > 1`, `a > 0`.
//!
//! Euler-Maclaurin summation: `N` terms directly, then
//!
//! ```text
//! (N+a)^(1-s)/(s-1) + (N+a)^(-s)/2
//!   + sum_{j>=1} B_2j/(2j)! * s(s+1)...(s+2j-2) * (N+a)^(-s-2j+1)
//! ```
//!
//! For real `s` the remainder is bounded by the first omitted correction
//! term. Corrections are added until that term falls below the working
//! epsilon; if they start growing first, `N` is doubled and the sum redone.

use rug::ops::Pow;
use rug::Float;

use crate::bernoulli::even_table;
use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

const MAX_CORRECTIONS: usize = 4000;

/// `x^(-s)`, using an integer power when `s` is a small integer.
pub(crate) fn pow_neg(x: &Float, s: &Float, prec: u32) -> Float {
    if s.is_integer() && *s > 0 && *s < 1 << 20 {
        let k = s.to_u32_saturating().expect("small positive integer");
        Float::with_val(prec, x.pow(k)).recip()
    } else {
        Float::with_val(prec, x.pow(&Float::with_val(prec, -s)))
    }
}

/// `zeta(s, a)` together with an absolute error bound.
pub fn hurwitz_zeta_bounded(
    s: &Float,
    a: &Float,
    ctx: &PrecisionContext,
) -> Result<(Float, Float)> {
    if !(s.is_finite() && *s > 1) {
        return Err(Error::Domain(format!(
            "Hurwitz zeta needs real s > 1, got s = {s}"
        )));
    }
    if !(a.is_finite() && *a > 0) {
        return Err(Error::Domain(format!(
            "Hurwitz zeta needs a > 0, got a = {a}"
        )));
    }
    let mut n = u64::from(ctx.working_digits()) + 10;
    loop {
        if let Some(out) = euler_maclaurin(s, a, n, ctx) {
            return Ok(out);
        }
        n *= 2;
    }
}

/// `zeta(s, a)` at working precision.
pub fn hurwitz_zeta(s: &Float, a: &Float, ctx: &PrecisionContext) -> Result<Float> {
    hurwitz_zeta_bounded(s, a, ctx).map(|(v, _)| v)
}

fn euler_maclaurin(s: &Float, a: &Float, n: u64, ctx: &PrecisionContext) -> Option<(Float, Float)> {
    let prec = ctx.prec();
    let eps = ctx.epsilon();

    let mut head = Float::new(prec + 32);
    for k in 0..n {
        let x = Float::with_val(prec, a + k);
        head += pow_neg(&x, s, prec);
    }

    let x = Float::with_val(prec, a + n);
    let x_neg_s = pow_neg(&x, s, prec);
    let s_minus_1 = Float::with_val(prec, s - 1u32);
    let integral = Float::with_val(prec, &x_neg_s * &x) / &s_minus_1;
    let mut sum = Float::with_val(prec, &head + &integral);
    sum += Float::with_val(prec, &x_neg_s / 2u32);

    let inv_x2 = Float::with_val(prec, x.square_ref()).recip();
    // x^(-s-2j+1), starting at j = 1.
    let mut power = Float::with_val(prec, &x_neg_s / &x);
    // s(s+1)...(s+2j-2), starting at j = 1.
    let mut rising = Float::with_val(prec, s);
    // (2j)!, starting at j = 1.
    let mut factorial = Float::with_val(prec, 2u32);
    let mut previous: Option<Float> = None;
    let mut table = even_table(64);

    for j in 1..=MAX_CORRECTIONS {
        if j >= table.len() {
            table = even_table(2 * j);
        }
        let term = Float::with_val(prec, &table[j]) / &factorial * &rising * &power;
        let size = Float::with_val(prec, term.abs_ref());
        if size <= eps {
            return Some((Float::with_val(prec, sum), size));
        }
        if let Some(prev) = &previous {
            if size >= *prev {
                return None;
            }
        }
        sum += &term;
        previous = Some(size);

        let jj = 2 * j as u32;
        rising *= Float::with_val(prec, s + (jj - 1)) * Float::with_val(prec, s + jj);
        factorial *= (jj + 1) * (jj + 2);
        power *= &inv_x2;
    }
    None
}
