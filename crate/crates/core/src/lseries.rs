//! Dirichlet L-series `L_d(s) = sum_{n>=1} (d/n) n^(-s)` and the three
//! representations of `L_{-7}(2)`: the raw seven-term block series, the
//! finite Hurwitz-zeta sum, and the Clausen form.

use rug::Float;
use serde::Serialize;

use crate::bernoulli::even_table;
use crate::clausen::cl2_value;
use crate::error::{Error, Result};
use crate::kronecker::{character_table, KroneckerCharacter};
use crate::precision::PrecisionContext;
use crate::zeta::{hurwitz_zeta, pow_neg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    DirectSeries,
    HurwitzSum,
    ClausenForm,
}

#[derive(Debug, Clone)]
pub struct LSeriesValue {
    pub d: i64,
    pub s: Float,
    pub value: Float,
    pub representation: Representation,
}

fn check_s(s: &Float) -> Result<()> {
    if s.is_finite() && *s > 1 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "L-series needs real s > 1, got s = {s}"
        )))
    }
}

/// `|d|^(-s) sum_{l=1}^{|d|-1} (d/l) zeta(s, l/|d|)`.
pub fn dirichlet_l(d: i64, s: &Float, ctx: &PrecisionContext) -> Result<LSeriesValue> {
    check_s(s)?;
    let chi = character_table(d)?;
    let prec = ctx.prec();
    let q = chi.period();
    let mut sum = Float::new(prec);
    for l in 1..q {
        let c = chi.at(l);
        if c == 0 {
            continue;
        }
        let a = Float::with_val(prec, l) / q;
        let z = hurwitz_zeta(s, &a, ctx)?;
        if c > 0 {
            sum += z;
        } else {
            sum -= z;
        }
    }
    let value = sum * pow_neg(&Float::with_val(prec, q), s, prec);
    Ok(LSeriesValue {
        d,
        s: s.clone(),
        value,
        representation: Representation::HurwitzSum,
    })
}

/// Sum of the first `blocks` seven-term blocks
/// `1/(7m+1)^s + 1/(7m+2)^s - 1/(7m+3)^s + 1/(7m+4)^s - 1/(7m+5)^s - 1/(7m+6)^s`.
pub fn l_minus7_blocks(s: &Float, blocks: u64, prec: u32) -> Float {
    const SIGNS: [i32; 6] = [1, 1, -1, 1, -1, -1];
    let mut sum = Float::new(prec + 32);
    for m in 0..blocks {
        let mut block = Float::new(prec);
        for (r, sign) in (1..=6u64).zip(SIGNS) {
            let term = pow_neg(&Float::with_val(prec, 7 * m + r), s, prec);
            if sign > 0 {
                block += term;
            } else {
                block -= term;
            }
        }
        sum += block;
    }
    Float::with_val(prec, sum)
}

/// Euler-Maclaurin tail `sum_{m>=M} (7m + r)^(-s)`.
fn residue_tail(s: &Float, r: u64, start: u64, ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.prec();
    let eps = ctx.epsilon();
    let y = Float::with_val(prec, 7 * start + r);
    let y_neg_s = pow_neg(&y, s, prec);
    let s_minus_1 = Float::with_val(prec, s - 1u32);
    // int_M^inf (7m+r)^(-s) dm
    let mut tail = Float::with_val(prec, &y_neg_s * &y) / s_minus_1 / 7u32;
    tail += Float::with_val(prec, &y_neg_s / 2u32);

    // -B_2j/(2j)! f^(2j-1)(M), with f^(k)(m) = (-1)^k (s)_k 7^k (7m+r)^(-s-k).
    let seven_over_y = Float::with_val(prec, 7u32) / &y;
    let step = Float::with_val(prec, seven_over_y.square_ref());
    let mut scaled = Float::with_val(prec, &y_neg_s * &seven_over_y);
    let mut rising = Float::with_val(prec, s);
    let mut factorial = Float::with_val(prec, 2u32);
    let mut previous: Option<Float> = None;
    let mut table = even_table(64);
    for j in 1..4000usize {
        if j >= table.len() {
            table = even_table(2 * j);
        }
        let term = Float::with_val(prec, &table[j]) / &factorial * &rising * &scaled;
        let size = Float::with_val(prec, term.abs_ref());
        if size <= eps {
            return Ok(tail);
        }
        if previous.as_ref().is_some_and(|p| size >= *p) {
            break;
        }
        tail += &term;
        previous = Some(size);
        let jj = 2 * j as u32;
        rising *= Float::with_val(prec, s + (jj - 1)) * Float::with_val(prec, s + jj);
        factorial *= (jj + 1) * (jj + 2);
        scaled *= &step;
    }
    Err(Error::Domain(format!(
        "block tail did not reach working precision from m = {start}"
    )))
}

/// `L_{-7}(s)` summed block by block with an Euler-Maclaurin tail.
pub fn l_minus7_direct(s: &Float, ctx: &PrecisionContext) -> Result<LSeriesValue> {
    check_s(s)?;
    let prec = ctx.prec();
    let chi: KroneckerCharacter = character_table(-7)?;
    let blocks = u64::from(ctx.working_digits()) + 7;
    let mut value = l_minus7_blocks(s, blocks, prec);
    for r in 1..=6u64 {
        let t = residue_tail(s, r, blocks, ctx)?;
        if chi.at(r) > 0 {
            value += t;
        } else {
            value -= t;
        }
    }
    Ok(LSeriesValue {
        d: -7,
        s: s.clone(),
        value,
        representation: Representation::DirectSeries,
    })
}

/// `(2/sqrt 7) [Cl2(2pi/7) + Cl2(4pi/7) - Cl2(6pi/7)]`, which is `L_{-7}(2)`.
pub fn l_minus7_clausen(ctx: &PrecisionContext) -> Result<LSeriesValue> {
    let prec = ctx.prec();
    let pi = ctx.pi();
    let angle = |k: u32| Float::with_val(prec, &pi * (2 * k)) / 7u32;
    let mut bracket = cl2_value(&angle(1), ctx)?;
    bracket += cl2_value(&angle(2), ctx)?;
    bracket -= cl2_value(&angle(3), ctx)?;
    let value = bracket * 2u32 / Float::with_val(prec, 7).sqrt();
    Ok(LSeriesValue {
        d: -7,
        s: Float::with_val(prec, 2),
        value,
        representation: Representation::ClausenForm,
    })
}

/// `(1/sqrt|d|) sum_{l=1}^{|d|-1} (d/l) sin(2 pi l n / |d|)`, which reproduces `(d/n)`.
pub fn character_fourier_check(d: i64, n: u64, ctx: &PrecisionContext) -> Result<Float> {
    if d >= 0 {
        return Err(Error::Domain(format!(
            "the sine expansion applies to negative d, got {d}"
        )));
    }
    let chi = character_table(d)?;
    let prec = ctx.prec();
    let q = chi.period();
    let two_pi = ctx.pi() * 2u32;
    let mut sum = Float::new(prec);
    for l in 1..q {
        let c = chi.at(l);
        if c == 0 {
            continue;
        }
        // l n mod q keeps the sine argument in [0, 2pi).
        let k = (u128::from(l) * u128::from(n) % u128::from(q)) as u64;
        let arg = Float::with_val(prec, &two_pi * k) / q;
        let v = arg.sin();
        if c > 0 {
            sum += v;
        } else {
            sum -= v;
        }
    }
    Ok(sum / Float::with_val(prec, q).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn close(x: &Float, y: &Float, digits: i32, c: &PrecisionContext) -> bool {
        Float::with_val(c.prec(), x - y).abs() <= c.pow10(-digits)
    }

    #[test]
    fn first_block_literal() {
        let c = ctx(30);
        let got = l_minus7_blocks(&c.real(2), 1, c.prec());
        let r = |n: u32| Float::with_val(c.prec(), n * n).recip();
        let want = r(1) + r(2) - r(3) + r(4) - r(5) - r(6);
        assert!(close(&got, &want, 40, &c));
    }

    #[test]
    fn fourier_examples() {
        let c = ctx(30);
        let v = character_fourier_check(-7, 3, &c).unwrap();
        assert!(close(&v, &c.real(-1), 30, &c));
        let v = character_fourier_check(-7, 7, &c).unwrap();
        assert!(v.abs() <= c.tolerance());
        assert!(character_fourier_check(5, 1, &c).is_err());
    }

    #[test]
    fn s_domain() {
        let c = ctx(20);
        assert!(dirichlet_l(-7, &c.real(1), &c).is_err());
        assert!(l_minus7_direct(&c.real(0.5), &c).is_err());
        assert!(dirichlet_l(0, &c.real(2), &c).is_err());
    }

    #[test]
    fn three_representations_at_forty() {
        let c = ctx(40);
        let s = c.real(2);
        let a = l_minus7_direct(&s, &c).unwrap();
        let b = dirichlet_l(-7, &s, &c).unwrap();
        let k = l_minus7_clausen(&c).unwrap();
        assert_eq!(a.representation, Representation::DirectSeries);
        assert_eq!(b.representation, Representation::HurwitzSum);
        assert_eq!(k.representation, Representation::ClausenForm);
        assert!(close(&a.value, &b.value, 35, &c));
        assert!(close(&a.value, &k.value, 35, &c));
    }
}
