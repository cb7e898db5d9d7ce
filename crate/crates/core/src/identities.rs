//! Closed forms of I7 and the verification routine for every identity.
//!
//! Each [`IdentityId`] maps to one routine producing a left and a right
//! side. Grid-based identities report their worst-agreeing pair.
//! Conjectures are only ever reported as agreeing to some number of digits.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::clausen::{cl2_value, multiplication_rhs};
use crate::constants::PaperConstants;
use crate::digits::digits_agreed;
use crate::error::{Error, Result};
use crate::integrals::{
    antiderivative_sides, coffey_log_cos, coffey_log_sin, integral_i7_with, lemma1_closed_a,
    lemma1_closed_b, lemma1_integral_a_with, lemma1_integral_b_with, trig_log_grid,
};
use crate::lseries::{dirichlet_l, l_minus7_clausen, l_minus7_direct};
use crate::precision::PrecisionContext;
use crate::quadrature::QuadratureOptions;

/// Margin between working digits and the default required agreement.
pub const DEFAULT_MARGIN: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum IdentityId {
    COFFEY_12A,
    NEW_16,
    L7_THREE_WAYS,
    CONJ_13,
    CONJ_15,
    EQ_37_CHAIN,
    EQ_38_FINAL,
    LEMMA1_A,
    LEMMA1_B,
    ANTIDERIV_35,
    COFFEY_LOGSIN,
    COFFEY_LOGCOS,
    MULT_FORMULA,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::COFFEY_12A,
        IdentityId::NEW_16,
        IdentityId::L7_THREE_WAYS,
        IdentityId::CONJ_13,
        IdentityId::CONJ_15,
        IdentityId::EQ_37_CHAIN,
        IdentityId::EQ_38_FINAL,
        IdentityId::LEMMA1_A,
        IdentityId::LEMMA1_B,
        IdentityId::ANTIDERIV_35,
        IdentityId::COFFEY_LOGSIN,
        IdentityId::COFFEY_LOGCOS,
        IdentityId::MULT_FORMULA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::COFFEY_12A => "COFFEY_12A",
            IdentityId::NEW_16 => "NEW_16",
            IdentityId::L7_THREE_WAYS => "L7_THREE_WAYS",
            IdentityId::CONJ_13 => "CONJ_13",
            IdentityId::CONJ_15 => "CONJ_15",
            IdentityId::EQ_37_CHAIN => "EQ_37_CHAIN",
            IdentityId::EQ_38_FINAL => "EQ_38_FINAL",
            IdentityId::LEMMA1_A => "LEMMA1_A",
            IdentityId::LEMMA1_B => "LEMMA1_B",
            IdentityId::ANTIDERIV_35 => "ANTIDERIV_35",
            IdentityId::COFFEY_LOGSIN => "COFFEY_LOGSIN",
            IdentityId::COFFEY_LOGCOS => "COFFEY_LOGCOS",
            IdentityId::MULT_FORMULA => "MULT_FORMULA",
        }
    }

    pub fn kind(self) -> ClaimKind {
        match self {
            IdentityId::CONJ_13 | IdentityId::CONJ_15 => ClaimKind::Conjecture,
            IdentityId::COFFEY_12A
            | IdentityId::NEW_16
            | IdentityId::LEMMA1_A
            | IdentityId::LEMMA1_B
            | IdentityId::ANTIDERIV_35
            | IdentityId::MULT_FORMULA => ClaimKind::Theorem,
            _ => ClaimKind::Identity,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::COFFEY_12A => "I7 quadrature vs Coffey's Clausen closed form",
            IdentityId::NEW_16 => {
                "I7 quadrature vs the Cl2(2phi7), Cl2(4phi7), Cl2(6phi7) closed form"
            }
            IdentityId::L7_THREE_WAYS => "L_{-7}(2): block series, Hurwitz sum, Clausen form",
            IdentityId::CONJ_13 => "I7 = L_{-7}(2)",
            IdentityId::CONJ_15 => {
                "L_{-7}(2) = 4/(7 sqrt 7) [3 Cl2(2phi7) - 3 Cl2(4phi7) + Cl2(6phi7)]"
            }
            IdentityId::EQ_37_CHAIN => "split-integral closed forms vs the reduced Clausen bracket",
            IdentityId::EQ_38_FINAL => {
                "reduced Clausen bracket vs (1/6)[3 Cl2(2phi7) - 3 Cl2(4phi7) + Cl2(6phi7)]"
            }
            IdentityId::LEMMA1_A => "log-tangent integral above the singularity",
            IdentityId::LEMMA1_B => "log-tangent integral below the singularity",
            IdentityId::ANTIDERIV_35 => "Clausen antiderivative of ln(tan t + tan phi)",
            IdentityId::COFFEY_LOGSIN => "log-sine integral closed form",
            IdentityId::COFFEY_LOGCOS => "log-cosine integral closed form",
            IdentityId::MULT_FORMULA => {
                "Clausen multiplication, duplication and triplication formulae"
            }
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_uppercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == want)
            .ok_or_else(|| Error::Config(format!("unknown identity `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// Proven result.
    Theorem,
    Conjecture,
    /// Known identity or intermediate step, checked without a proof label.
    Identity,
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub kind: ClaimKind,
    pub lhs: Float,
    pub rhs: Float,
    pub digits_agreed: u32,
    pub required_digits: u32,
    pub passed: bool,
    pub wall_time: Duration,
    /// Set when the identity could not be evaluated (e.g. quadrature failure).
    pub error: Option<String>,
}

impl IdentityReport {
    /// `agreed-to-N-digits` or `failed`.
    pub fn verdict(&self) -> String {
        if self.passed {
            format!("agreed-to-{}-digits", self.digits_agreed)
        } else {
            "failed".to_string()
        }
    }

    pub fn is_execution_error(&self) -> bool {
        self.error.is_some()
    }
}

fn constants(ctx: &PrecisionContext) -> PaperConstants {
    PaperConstants::new(ctx)
}

fn seven_root_seven(ctx: &PrecisionContext) -> Float {
    Float::with_val(ctx.prec(), 7).sqrt() * 7u32
}

/// `(12/(7 sqrt 7)) [Cl2(2 omega) + 2 Cl2(theta) - Cl2(2 omega + 2 theta)]`.
pub fn closed_form_coffey(ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.prec();
    let k = constants(ctx);
    let two_omega = Float::with_val(prec, &k.omega_plus * 2u32);
    let two_sum = Float::with_val(prec, &k.omega_plus + &k.theta_plus) * 2u32;
    let mut bracket = cl2_value(&two_omega, ctx)?;
    bracket += cl2_value(&k.theta_plus, ctx)? * 2u32;
    bracket -= cl2_value(&two_sum, ctx)?;
    Ok(bracket * 12u32 / seven_root_seven(ctx))
}

/// `3 Cl2(2 phi7) - 3 Cl2(4 phi7) + Cl2(6 phi7)`.
pub fn phi7_bracket(ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.prec();
    let k = constants(ctx);
    let at = |m: u32| Float::with_val(prec, &k.phi7 * m);
    let mut b = cl2_value(&at(2), ctx)? * 3u32;
    b -= cl2_value(&at(4), ctx)? * 3u32;
    b += cl2_value(&at(6), ctx)?;
    Ok(b)
}

/// `(4/(7 sqrt 7)) [3 Cl2(2 phi7) - 3 Cl2(4 phi7) + Cl2(6 phi7)]`.
pub fn closed_form_new(ctx: &PrecisionContext) -> Result<Float> {
    Ok(phi7_bracket(ctx)? * 4u32 / seven_root_seven(ctx))
}

/// Closed-form value of the split integral: the `(pi/3, phi7)` piece plus
/// the `(phi7, pi/2)` piece, i.e. `(7 sqrt 7 / 24) I7`.
pub fn split_closed_sum(ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.prec();
    let k = constants(ctx);
    let third = Float::with_val(prec, &k.pi / 3u32);
    let half = Float::with_val(prec, &k.pi / 2u32);
    Ok(lemma1_closed_b(&k.phi7, &third, ctx)? + lemma1_closed_a(&k.phi7, &half, ctx)?)
}

/// `1/2 [Cl2(2phi7 + 2pi/3) + Cl2(2phi7 - 2pi/3)] - Cl2(pi + 2phi7)`.
pub fn reduced_bracket(ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.prec();
    let k = constants(ctx);
    let two_phi = Float::with_val(prec, &k.phi7 * 2u32);
    let two_thirds = Float::with_val(prec, &k.pi * 2u32) / 3u32;
    let mut pair = cl2_value(&Float::with_val(prec, &two_phi + &two_thirds), ctx)?;
    pair += cl2_value(&Float::with_val(prec, &two_phi - &two_thirds), ctx)?;
    let last = cl2_value(&Float::with_val(prec, &k.pi + &two_phi), ctx)?;
    Ok(pair / 2u32 - last)
}

/// `(1/6) [3 Cl2(2 phi7) - 3 Cl2(4 phi7) + Cl2(6 phi7)]`.
pub fn final_bracket(ctx: &PrecisionContext) -> Result<Float> {
    Ok(phi7_bracket(ctx)? / 6u32)
}

struct Sides {
    lhs: Float,
    rhs: Float,
}

impl Sides {
    fn new(lhs: Float, rhs: Float) -> Self {
        Self { lhs, rhs }
    }
}

/// Keeps the pair with the fewest agreeing digits.
fn worst(pairs: Vec<Sides>, ctx: &PrecisionContext) -> Sides {
    pairs
        .into_iter()
        .min_by_key(|p| digits_agreed(&p.lhs, &p.rhs, ctx))
        .expect("non-empty grid")
}

fn lemma1_a_grid(ctx: &PrecisionContext) -> Vec<(Float, Float)> {
    let prec = ctx.prec();
    let k = constants(ctx);
    let pi = &k.pi;
    let half = Float::with_val(prec, pi / 2u32);
    vec![
        (
            Float::with_val(prec, pi / 6u32),
            Float::with_val(prec, pi / 4u32),
        ),
        (ctx.real(0.3), ctx.real(1.1)),
        (ctx.real(0.9), ctx.real(1.5)),
        (k.phi7.clone(), Float::with_val(prec, &half - ctx.pow10(-3))),
        (k.phi7.clone(), half),
    ]
}

fn lemma1_b_grid(ctx: &PrecisionContext) -> Vec<(Float, Float)> {
    let prec = ctx.prec();
    let k = constants(ctx);
    let pi = &k.pi;
    vec![
        (
            Float::with_val(prec, pi / 5u32),
            Float::with_val(prec, pi / 8u32),
        ),
        (ctx.real(1.2), ctx.real(0.4)),
        (ctx.real(0.7), ctx.real(0.05)),
        (k.phi7.clone(), Float::with_val(prec, pi / 3u32)),
    ]
}

fn antiderivative_grid(ctx: &PrecisionContext) -> Vec<(Float, Float, Float)> {
    let prec = ctx.prec();
    let pi = ctx.pi();
    vec![
        (
            Float::with_val(prec, &pi / 7u32),
            ctx.real(0.1),
            ctx.real(0.6),
        ),
        (
            Float::with_val(prec, &pi / 5u32),
            ctx.real(0.2),
            ctx.real(1.0),
        ),
        (ctx.real(0.5), ctx.real(-0.3), ctx.real(0.9)),
        (ctx.real(1.0), ctx.real(0.0), ctx.real(1.2)),
        (ctx.real(0.25), ctx.real(0.05), ctx.real(1.3)),
    ]
}

/// Angles used for the multiplication-formula report.
fn multiplication_angles(ctx: &PrecisionContext) -> Vec<Float> {
    (0..5)
        .map(|k| ctx.real(0.3 + 0.77 * f64::from(k)))
        .collect()
}

/// Cl2(m t) against `m sum Cl2(t + 2 pi l / m)` and the sum against
/// `Cl2(m t) / m`, plus the duplication and triplication forms.
fn multiplication_pairs(theta: &Float, ctx: &PrecisionContext) -> Result<Vec<Sides>> {
    let prec = ctx.prec();
    let pi = ctx.pi();
    let mut out = Vec::new();
    for m in [2u32, 3, 4, 5, 7] {
        let lhs = cl2_value(&Float::with_val(prec, theta * m), ctx)?;
        let rhs = multiplication_rhs(theta, m, ctx)?;
        out.push(Sides::new(lhs.clone(), rhs.clone()));
        out.push(Sides::new(Float::with_val(prec, &rhs / m), lhs / m));
    }
    let c = |x: Float| cl2_value(&x, ctx);
    let half_double = c(Float::with_val(prec, theta * 2u32))? / 2u32;
    let dup_plus = c(theta.clone())? + c(Float::with_val(prec, &pi + theta))?;
    let dup_minus = c(theta.clone())? - c(Float::with_val(prec, &pi - theta))?;
    out.push(Sides::new(half_double.clone(), dup_plus));
    out.push(Sides::new(half_double, dup_minus));
    let third_triple = c(Float::with_val(prec, theta * 3u32))? / 3u32;
    let two_thirds = Float::with_val(prec, &pi * 2u32) / 3u32;
    let tri = c(theta.clone())?
        + c(Float::with_val(prec, theta + &two_thirds))?
        + c(Float::with_val(prec, theta - &two_thirds))?;
    out.push(Sides::new(third_triple, tri));
    Ok(out)
}

fn evaluate(id: IdentityId, ctx: &PrecisionContext, opts: QuadratureOptions) -> Result<Sides> {
    let two = ctx.real(2);
    match id {
        IdentityId::COFFEY_12A => Ok(Sides::new(
            integral_i7_with(ctx, opts)?.value,
            closed_form_coffey(ctx)?,
        )),
        IdentityId::NEW_16 => Ok(Sides::new(
            integral_i7_with(ctx, opts)?.value,
            closed_form_new(ctx)?,
        )),
        IdentityId::L7_THREE_WAYS => {
            let direct = l_minus7_direct(&two, ctx)?.value;
            let hurwitz = dirichlet_l(-7, &two, ctx)?.value;
            let clausen = l_minus7_clausen(ctx)?.value;
            Ok(worst(
                vec![
                    Sides::new(direct.clone(), hurwitz.clone()),
                    Sides::new(direct, clausen.clone()),
                    Sides::new(hurwitz, clausen),
                ],
                ctx,
            ))
        }
        IdentityId::CONJ_13 => Ok(Sides::new(
            integral_i7_with(ctx, opts)?.value,
            dirichlet_l(-7, &two, ctx)?.value,
        )),
        IdentityId::CONJ_15 => Ok(Sides::new(
            dirichlet_l(-7, &two, ctx)?.value,
            closed_form_new(ctx)?,
        )),
        IdentityId::EQ_37_CHAIN => Ok(Sides::new(split_closed_sum(ctx)?, reduced_bracket(ctx)?)),
        IdentityId::EQ_38_FINAL => Ok(Sides::new(reduced_bracket(ctx)?, final_bracket(ctx)?)),
        IdentityId::LEMMA1_A => {
            let mut pairs = Vec::new();
            for (phi, x) in lemma1_a_grid(ctx) {
                let q = lemma1_integral_a_with(&phi, &x, ctx, opts)?;
                pairs.push(Sides::new(q.value, lemma1_closed_a(&phi, &x, ctx)?));
            }
            Ok(worst(pairs, ctx))
        }
        IdentityId::LEMMA1_B => {
            let mut pairs = Vec::new();
            for (phi, x) in lemma1_b_grid(ctx) {
                let q = lemma1_integral_b_with(&phi, &x, ctx, opts)?;
                pairs.push(Sides::new(q.value, lemma1_closed_b(&phi, &x, ctx)?));
            }
            Ok(worst(pairs, ctx))
        }
        IdentityId::ANTIDERIV_35 => {
            let mut pairs = Vec::new();
            for (phi, t1, t2) in antiderivative_grid(ctx) {
                let (q, closed) = antiderivative_sides(&phi, &t1, &t2, ctx, opts)?;
                pairs.push(Sides::new(q, closed));
            }
            Ok(worst(pairs, ctx))
        }
        IdentityId::COFFEY_LOGSIN => {
            let mut pairs = Vec::new();
            for case in trig_log_grid(ctx, false) {
                let (l, r) = coffey_log_sin(&case, ctx, opts)?;
                pairs.push(Sides::new(l, r));
            }
            Ok(worst(pairs, ctx))
        }
        IdentityId::COFFEY_LOGCOS => {
            let mut pairs = Vec::new();
            for case in trig_log_grid(ctx, true) {
                let (l, r) = coffey_log_cos(&case, ctx, opts)?;
                pairs.push(Sides::new(l, r));
            }
            Ok(worst(pairs, ctx))
        }
        IdentityId::MULT_FORMULA => {
            let mut pairs = Vec::new();
            for theta in multiplication_angles(ctx) {
                pairs.extend(multiplication_pairs(&theta, ctx)?);
            }
            Ok(worst(pairs, ctx))
        }
    }
}

/// Checks `required_digits <= digits - 10`; `None` selects that maximum.
pub fn resolve_required(ctx: &PrecisionContext, required: Option<u32>) -> Result<u32> {
    let max = ctx.digits().saturating_sub(DEFAULT_MARGIN);
    match required {
        None => Ok(max),
        Some(r) if r <= max => Ok(r),
        Some(r) => Err(Error::Config(format!(
            "required digits {r} exceed digits - {DEFAULT_MARGIN} = {max}"
        ))),
    }
}

/// Runs one identity check.
///
/// Configuration problems are returned as `Err`; evaluation failures such as
/// quadrature non-convergence become a failed report carrying the diagnostic.
pub fn verify(
    id: IdentityId,
    ctx: &PrecisionContext,
    required: Option<u32>,
    opts: QuadratureOptions,
) -> Result<IdentityReport> {
    let required_digits = resolve_required(ctx, required)?;
    let start = Instant::now();
    let outcome = evaluate(id, ctx, opts);
    let wall_time = start.elapsed();
    Ok(match outcome {
        Ok(Sides { lhs, rhs }) => {
            let digits = digits_agreed(&lhs, &rhs, ctx);
            IdentityReport {
                id,
                kind: id.kind(),
                lhs,
                rhs,
                digits_agreed: digits,
                required_digits,
                passed: digits >= required_digits,
                wall_time,
                error: None,
            }
        }
        Err(e) => {
            let nan = Float::with_val(ctx.prec(), rug::float::Special::Nan);
            IdentityReport {
                id,
                kind: id.kind(),
                lhs: nan.clone(),
                rhs: nan,
                digits_agreed: 0,
                required_digits,
                passed: false,
                wall_time,
                error: Some(e.to_string()),
            }
        }
    })
}

/// Runs several identities, concurrently on up to `jobs` threads when the
/// `parallel` feature is enabled. Reports come back in the order of `ids`.
pub fn verify_many(
    ids: &[IdentityId],
    ctx: &PrecisionContext,
    required: Option<u32>,
    opts: QuadratureOptions,
    jobs: usize,
) -> Result<Vec<IdentityReport>> {
    resolve_required(ctx, required)?;
    let run = |id: &IdentityId| verify(*id, ctx, required, opts);
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        return pool.install(|| ids.par_iter().map(run).collect());
    }
    let _ = jobs;
    ids.iter().map(run).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    #[test]
    fn ids_parse_and_print() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(
            "conj_13".parse::<IdentityId>().unwrap(),
            IdentityId::CONJ_13
        );
        assert!("COFFEY_LOGCOC".parse::<IdentityId>().is_err());
    }

    #[test]
    fn conjectures_are_not_theorems() {
        assert_eq!(IdentityId::CONJ_13.kind(), ClaimKind::Conjecture);
        assert_eq!(IdentityId::CONJ_15.kind(), ClaimKind::Conjecture);
        assert_eq!(IdentityId::NEW_16.kind(), ClaimKind::Theorem);
        assert_eq!(IdentityId::COFFEY_LOGSIN.kind(), ClaimKind::Identity);
    }

    #[test]
    fn required_digits_ceiling() {
        let c = ctx(64);
        assert_eq!(resolve_required(&c, None).unwrap(), 54);
        assert_eq!(resolve_required(&c, Some(54)).unwrap(), 54);
        assert!(resolve_required(&c, Some(55)).is_err());
    }

    #[test]
    fn closed_forms_agree() {
        let c = ctx(40);
        let a = closed_form_coffey(&c).unwrap();
        let b = closed_form_new(&c).unwrap();
        assert!(a > 0);
        assert!(digits_agreed(&a, &b, &c) >= 38);
    }

    #[test]
    fn derivation_chain() {
        let c = ctx(40);
        let split = split_closed_sum(&c).unwrap();
        let reduced = reduced_bracket(&c).unwrap();
        let fin = final_bracket(&c).unwrap();
        assert!(digits_agreed(&split, &reduced, &c) >= 35);
        assert!(digits_agreed(&reduced, &fin, &c) >= 35);
        // 24/(7 sqrt 7) * reduced == closed_form_new
        let scaled = reduced * 24u32 / seven_root_seven(&c);
        assert!(digits_agreed(&scaled, &closed_form_new(&c).unwrap(), &c) >= 35);
    }

    #[test]
    fn failing_quadrature_becomes_failed_report() {
        let c = ctx(30);
        let r = verify(
            IdentityId::NEW_16,
            &c,
            None,
            QuadratureOptions::with_max_levels(2),
        )
        .unwrap();
        assert!(!r.passed);
        assert!(r.is_execution_error());
        assert_eq!(r.verdict(), "failed");
    }

    #[test]
    fn cheap_identities_pass() {
        let c = ctx(30);
        for id in [
            IdentityId::EQ_37_CHAIN,
            IdentityId::EQ_38_FINAL,
            IdentityId::MULT_FORMULA,
        ] {
            let r = verify(id, &c, None, QuadratureOptions::default()).unwrap();
            assert!(r.passed, "{id}: {} digits", r.digits_agreed);
            assert!(r.verdict().starts_with("agreed-to-"));
        }
    }
}
