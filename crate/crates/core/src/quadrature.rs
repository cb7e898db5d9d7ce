//! Double-exponential (tanh-sinh) quadrature at arbitrary precision.
//!
//! The substitution `x = tanh((pi/2) sinh t)` maps `(-1, 1)` onto the real
//! line, and the trapezoidal rule with step `h = 2^-level` is refined by
//! halving `h` and reusing every earlier node. Nodes never sit on `a` or `b`:
//! each one carries its exact distance to both endpoints, so integrands with
//! logarithmic endpoint singularities can be evaluated without cancellation.
//!
//! Node evaluations inside a level are independent and run on the rayon pool
//! when the `parallel` feature is enabled. The reduction always walks the
//! nodes in ascending `|t|` order in an extended-precision accumulator, so
//! results are bit-identical whatever the scheduling.

use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::to_sci;
use crate::precision::PrecisionContext;

pub const DEFAULT_MAX_LEVELS: u32 = 12;
/// Convergence is never declared before this many levels have been summed.
const MIN_LEVELS: u32 = 4;
/// Extra accumulator bits.
const SUM_EXTRA_BITS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    pub max_levels: u32,
    pub execution: Execution,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            max_levels: DEFAULT_MAX_LEVELS,
            execution: Execution::default(),
        }
    }
}

impl QuadratureOptions {
    pub fn with_max_levels(max_levels: u32) -> Self {
        Self {
            max_levels,
            ..Self::default()
        }
    }

    pub fn sequential(mut self) -> Self {
        self.execution = Execution::Sequential;
        self
    }
}

/// A quadrature node inside `(a, b)`.
pub struct Node<'a> {
    pub x: Float,
    /// `x - a`, exact to working precision even when tiny.
    pub from_a: Float,
    /// `b - x`, exact to working precision even when tiny.
    pub from_b: Float,
    a: &'a Float,
    b: &'a Float,
}

impl Node<'_> {
    /// `x - s`, computed from the endpoint offsets when `s` is an endpoint.
    pub fn offset_from(&self, s: &Float) -> Float {
        if s == self.a {
            self.from_a.clone()
        } else if s == self.b {
            -self.from_b.clone()
        } else {
            Float::with_val(self.x.prec(), &self.x - s)
        }
    }
}

/// A real integrand with its declared (integrable) singular points.
pub struct Integrand<F> {
    f: F,
    singularities: Vec<Float>,
}

impl<F> Integrand<F>
where
    F: Fn(&Node) -> Float + Sync,
{
    pub fn new(f: F) -> Self {
        Self {
            f,
            singularities: Vec::new(),
        }
    }

    pub fn singular_at(mut self, s: Float) -> Self {
        self.singularities.push(s);
        self
    }

    pub fn singularities(&self) -> &[Float] {
        &self.singularities
    }

    fn eval(&self, node: &Node) -> Float {
        (self.f)(node)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuadratureResult {
    #[serde(serialize_with = "ser_float")]
    pub value: Float,
    #[serde(serialize_with = "ser_float")]
    pub error_estimate: Float,
    pub levels_used: u32,
    pub nodes_evaluated: usize,
    /// `|S_level - S_(level-1)|` for every level after the first.
    #[serde(skip)]
    pub level_differences: Vec<Float>,
}

fn ser_float<S: serde::Serializer>(x: &Float, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_sci(x, 20))
}

impl QuadratureResult {
    pub fn zero(ctx: &PrecisionContext) -> Self {
        Self {
            value: ctx.zero(),
            error_estimate: ctx.zero(),
            levels_used: 1,
            nodes_evaluated: 0,
            level_differences: Vec::new(),
        }
    }

    /// Sum of two results over adjacent intervals.
    pub fn combine(self, other: Self) -> Self {
        let prec = self.value.prec().max(other.value.prec());
        Self {
            value: Float::with_val(prec, &self.value + &other.value),
            error_estimate: Float::with_val(prec, &self.error_estimate + &other.error_estimate),
            levels_used: self.levels_used.max(other.levels_used),
            nodes_evaluated: self.nodes_evaluated + other.nodes_evaluated,
            level_differences: Vec::new(),
        }
    }

    pub fn scaled(mut self, k: &Float) -> Self {
        self.value *= k;
        self.error_estimate *= Float::with_val(k.prec(), k.abs_ref());
        self
    }
}

/// Abscissa data shared by the mirrored pair of nodes at `+t` and `-t`.
struct Abscissa {
    /// `1 - tanh((pi/2) sinh t)`.
    gap: Float,
    weight: Float,
}

fn abscissa(t: &Float, half_pi: &Float, prec: u32) -> Abscissa {
    let u = Float::with_val(prec, t.sinh_ref()) * half_pi;
    let e = Float::with_val(prec, u.exp_ref());
    let cosh_u = (Float::with_val(prec, e.recip_ref()) + &e) / 2u32;
    let gap = Float::with_val(prec, &e * &cosh_u).recip();
    let cosh_t = Float::with_val(prec, t.cosh_ref());
    let weight = cosh_t * half_pi / Float::with_val(prec, cosh_u.square_ref());
    Abscissa { gap, weight }
}

/// Truncation point: weights beyond it fall below `10^-(digits+guard)`.
fn t_max(ctx: &PrecisionContext) -> f64 {
    let u = f64::from(ctx.working_digits()) * std::f64::consts::LN_10 / 2.0 + 4.0;
    (2.0 * u / std::f64::consts::PI).asinh()
}

/// Integer multiples `j` (of `2^-level`) sampled at `level`.
fn level_indices(level: u32, t_max: f64) -> Vec<u64> {
    let scale = f64::from(1u32 << level.min(30));
    let k_max = (t_max * scale).floor() as u64;
    if level == 0 {
        (0..=k_max).collect()
    } else {
        (0..=k_max).filter(|j| j % 2 == 1).collect()
    }
}

fn check_value(v: Float, x: &Float) -> Result<Float> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Evaluation(to_sci(x, 30)))
    }
}

/// Fixed data of one integration interval.
struct Span<'a> {
    a: &'a Float,
    b: &'a Float,
    half: Float,
    half_pi: Float,
    prec: u32,
}

/// Weighted contribution of the node pair at `t = j 2^-level`.
fn pair_contribution<F>(f: &Integrand<F>, span: &Span, j: u64, level: u32) -> Result<Float>
where
    F: Fn(&Node) -> Float + Sync,
{
    let Span {
        a,
        b,
        ref half,
        ref half_pi,
        prec,
    } = *span;
    let t = Float::with_val(prec, j) >> level;
    let Abscissa { gap, weight } = abscissa(&t, half_pi, prec);
    let near = Float::with_val(prec, half * &gap);
    let far = Float::with_val(prec, half * 2u32) - &near;
    if j == 0 {
        let x = Float::with_val(prec, a + half);
        let node = Node {
            from_a: half.clone(),
            from_b: half.clone(),
            x,
            a,
            b,
        };
        let v = check_value(f.eval(&node), &node.x)?;
        return Ok(v * weight);
    }
    let left = Node {
        x: Float::with_val(prec, a + &near),
        from_a: near.clone(),
        from_b: far.clone(),
        a,
        b,
    };
    let fl = check_value(f.eval(&left), &left.x)?;
    let right = Node {
        x: Float::with_val(prec, b - &near),
        from_a: far,
        from_b: near,
        a,
        b,
    };
    let fr = check_value(f.eval(&right), &right.x)?;
    Ok((fl + fr) * weight)
}

fn evaluate_level<F>(
    f: &Integrand<F>,
    span: &Span,
    indices: &[u64],
    level: u32,
    execution: Execution,
) -> Result<Vec<Float>>
where
    F: Fn(&Node) -> Float + Sync,
{
    let one = |&j: &u64| pair_contribution(f, span, j, level);
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            indices.par_iter().map(one).collect()
        }
        _ => indices.iter().map(one).collect(),
    }
}

/// Integrates `f` over `(a, b)`.
///
/// Singular points of `f` may only sit at `a` or `b`; declared interior
/// singularities are rejected (see [`integrate_split`]).
pub fn tanh_sinh<F>(
    f: &Integrand<F>,
    a: &Float,
    b: &Float,
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<QuadratureResult>
where
    F: Fn(&Node) -> Float + Sync,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("integration limits must be finite".into()));
    }
    if a >= b {
        return Err(Error::Domain(format!(
            "integration requires a < b, got a = {}, b = {}",
            to_sci(a, 20),
            to_sci(b, 20)
        )));
    }
    if let Some(s) = f.singularities.iter().find(|s| *s > a && *s < b) {
        return Err(Error::InteriorSingularity(to_sci(s, 30)));
    }

    let prec = ctx.prec();
    let sum_prec = prec + SUM_EXTRA_BITS;
    let tol = ctx.tolerance();
    let span = Span {
        a,
        b,
        half: Float::with_val(prec, b - a) / 2u32,
        half_pi: ctx.pi() / 2u32,
        prec,
    };
    let t_max = t_max(ctx);

    let mut total = Float::new(sum_prec);
    let mut previous: Option<Float> = None;
    let mut differences = Vec::new();
    let mut nodes = 0usize;
    let mut estimate = ctx.zero();

    for level in 0..opts.max_levels.max(1) {
        let indices = level_indices(level, t_max);
        let terms = evaluate_level(f, &span, &indices, level, opts.execution)?;
        nodes += indices
            .iter()
            .map(|&j| if j == 0 { 1 } else { 2 })
            .sum::<usize>();
        for term in terms {
            total += term;
        }
        estimate = Float::with_val(prec, &total * &span.half) >> level;

        if let Some(prev) = previous.replace(estimate.clone()) {
            let diff = Float::with_val(prec, &estimate - &prev).abs();
            differences.push(diff.clone());
            if level + 1 >= MIN_LEVELS && diff <= tol {
                return Ok(QuadratureResult {
                    value: estimate,
                    error_estimate: diff,
                    levels_used: level + 1,
                    nodes_evaluated: nodes,
                    level_differences: differences,
                });
            }
        }
    }

    let error_estimate = differences
        .last()
        .map(|d| d.to_f64())
        .unwrap_or(f64::INFINITY);
    Err(Error::NoConvergence {
        levels: opts.max_levels,
        estimate: to_sci(&estimate, ctx.digits() as usize),
        error_estimate,
    })
}

/// Integrates over `(a, b)`, splitting at every declared interior singularity.
pub fn integrate_split<F>(
    f: &Integrand<F>,
    a: &Float,
    b: &Float,
    ctx: &PrecisionContext,
    opts: QuadratureOptions,
) -> Result<QuadratureResult>
where
    F: Fn(&Node) -> Float + Sync,
{
    let mut cuts: Vec<Float> = f
        .singularities
        .iter()
        .filter(|s| *s > a && *s < b)
        .cloned()
        .collect();
    cuts.sort_by(|x, y| x.partial_cmp(y).expect("finite singularities"));
    cuts.dedup();
    let mut points = Vec::with_capacity(cuts.len() + 2);
    points.push(a.clone());
    points.extend(cuts);
    points.push(b.clone());

    let mut acc: Option<QuadratureResult> = None;
    for w in points.windows(2) {
        let piece = tanh_sinh(f, &w[0], &w[1], ctx, opts)?;
        acc = Some(match acc {
            None => piece,
            Some(r) => r.combine(piece),
        });
    }
    Ok(acc.expect("at least one piece"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn close(x: &Float, y: &Float, tol: &Float) -> bool {
        Float::with_val(x.prec(), x - y).abs() <= *tol
    }

    #[test]
    fn constant_integrand() {
        let c = ctx(40);
        let f = Integrand::new(|n: &Node| Float::with_val(n.x.prec(), 1));
        let r = tanh_sinh(&f, &c.real(0), &c.real(1), &c, QuadratureOptions::default()).unwrap();
        assert!(close(&r.value, &c.real(1), &c.tolerance()));
        assert!(r.levels_used >= 1);
        assert!(r.error_estimate <= c.tolerance());
    }

    #[test]
    fn log_endpoint_singularity() {
        let c = ctx(50);
        let f = Integrand::new(|n: &Node| n.from_a.clone().ln()).singular_at(c.real(0));
        let r = tanh_sinh(&f, &c.real(0), &c.real(1), &c, QuadratureOptions::default()).unwrap();
        assert!(close(&r.value, &c.real(-1), &c.tolerance()));
    }

    #[test]
    fn log_sine_over_half_period_vanishes() {
        // int_0^pi ln(2 sin(t/2)) dt = -Cl2(pi) = 0
        let c = ctx(40);
        let f = Integrand::new(|n: &Node| {
            let p = n.x.prec();
            let s = Float::with_val(p, &n.from_a / 2u32).sin() * 2u32;
            s.ln()
        })
        .singular_at(c.real(0));
        let r = tanh_sinh(&f, &c.real(0), &c.pi(), &c, QuadratureOptions::default()).unwrap();
        assert!(r.value.clone().abs() <= c.tolerance());
    }

    #[test]
    fn rejects_bad_interval_and_interior_singularity() {
        let c = ctx(20);
        let f = Integrand::new(|n: &Node| n.x.clone()).singular_at(c.real(0.5));
        assert!(matches!(
            tanh_sinh(&f, &c.real(1), &c.real(0), &c, QuadratureOptions::default()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            tanh_sinh(&f, &c.real(0), &c.real(1), &c, QuadratureOptions::default()),
            Err(Error::InteriorSingularity(_))
        ));
        let r =
            integrate_split(&f, &c.real(0), &c.real(1), &c, QuadratureOptions::default()).unwrap();
        assert!(close(&r.value, &c.real(0.5), &c.tolerance()));
    }

    #[test]
    fn nan_at_node_is_an_error() {
        let c = ctx(20);
        let f = Integrand::new(|n: &Node| Float::with_val(n.x.prec(), -1).sqrt());
        assert!(matches!(
            tanh_sinh(&f, &c.real(0), &c.real(1), &c, QuadratureOptions::default()),
            Err(Error::Evaluation(_))
        ));
    }

    #[test]
    fn too_few_levels_fail_with_estimate() {
        let c = ctx(40);
        let f = Integrand::new(|n: &Node| n.from_a.clone().ln());
        let e = tanh_sinh(
            &f,
            &c.real(0),
            &c.real(1),
            &c,
            QuadratureOptions::with_max_levels(2),
        )
        .unwrap_err();
        assert!(matches!(e, Error::NoConvergence { levels: 2, .. }));
    }

    #[test]
    fn sequential_and_parallel_bit_identical() {
        let c = ctx(60);
        let f = Integrand::new(|n: &Node| {
            Float::with_val(n.x.prec(), n.x.exp_ref()) * n.from_a.clone().ln()
        })
        .singular_at(c.real(0));
        let a = c.real(0);
        let b = c.real(2);
        let p = tanh_sinh(&f, &a, &b, &c, QuadratureOptions::default()).unwrap();
        let s = tanh_sinh(&f, &a, &b, &c, QuadratureOptions::default().sequential()).unwrap();
        assert_eq!(p.value, s.value);
        assert_eq!(p.nodes_evaluated, s.nodes_evaluated);
    }

    #[test]
    fn node_offsets_are_exact_at_endpoints() {
        let c = ctx(30);
        let a = c.real(1);
        let b = c.real(2);
        let node = Node {
            x: c.real(1),
            from_a: c.pow10(-200),
            from_b: c.real(1),
            a: &a,
            b: &b,
        };
        assert_eq!(node.offset_from(&a), c.pow10(-200));
        assert_eq!(node.offset_from(&b), -c.real(1));
    }
}
