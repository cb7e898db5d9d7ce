//! PSLQ integer relation detection.
//!
//! One-level PSLQ with `gamma = sqrt(4/3)`: the input is scaled by its
//! largest entry, then alternately swapped, corner-rotated and
//! Hermite-reduced until some entry of `y` vanishes to working precision.
//! The matching column of `B` is the candidate relation; it is re-verified
//! against the original values before being returned.
//!
//! After every iteration `1 / max |H_jj|` is a lower bound on the Euclidean
//! norm of any relation, which gives the exclusion result when no relation
//! exists within the caller's coefficient bound.

use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

/// Minimum working digits per input value.
pub const DIGITS_PER_VALUE: u32 = 20;
const DEFAULT_MAX_ITERATIONS: usize = 100_000;

#[derive(Debug, Clone)]
pub struct IntegerRelation {
    pub coefficients: Vec<i64>,
    /// `|sum c_i v_i|` recomputed from the original values.
    pub residual: Float,
    pub norm_bound: u64,
}

#[derive(Debug, Clone)]
pub enum PslqOutcome {
    Found(IntegerRelation),
    /// No relation with `max |c_i| <= norm_bound` exists.
    Excluded {
        /// Lower bound on the Euclidean norm of any integer relation.
        norm_lower_bound: f64,
        iterations: usize,
    },
}

impl PslqOutcome {
    pub fn relation(&self) -> Option<&IntegerRelation> {
        match self {
            PslqOutcome::Found(r) => Some(r),
            PslqOutcome::Excluded { .. } => None,
        }
    }
}

fn nint(x: &Float) -> Integer {
    x.to_integer_round(rug::float::Round::Nearest)
        .map(|(i, _)| i)
        .unwrap_or_default()
}

fn to_i64(v: &Integer) -> Option<i64> {
    v.to_i64()
}

/// Residual `|sum c_i v_i|` at working precision.
pub fn relation_residual(values: &[Float], coefficients: &[i64], prec: u32) -> Float {
    let mut sum = Float::new(prec + 32);
    for (v, &c) in values.iter().zip(coefficients) {
        sum += Float::with_val(prec + 32, v * c);
    }
    Float::with_val(prec, sum.abs_ref())
}

/// Divides out the gcd and makes the first nonzero coefficient positive.
fn normalize(mut c: Vec<i64>) -> Vec<i64> {
    let g = c.iter().fold(0i64, |g, &x| num_gcd(g, x.abs()));
    if g > 1 {
        for x in &mut c {
            *x /= g;
        }
    }
    if c.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in &mut c {
            *x = -*x;
        }
    }
    c
}

fn num_gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

struct State {
    n: usize,
    prec: u32,
    y: Vec<Float>,
    /// n x (n-1), lower trapezoidal.
    h: Vec<Vec<Float>>,
    a: Vec<Vec<Integer>>,
    b: Vec<Vec<Integer>>,
}

impl State {
    fn new(x: &[Float], prec: u32) -> Self {
        let n = x.len();
        // s_k = sqrt(sum_{j>=k} x_j^2)
        let mut s = vec![Float::new(prec); n];
        let mut acc = Float::new(prec);
        for k in (0..n).rev() {
            acc += Float::with_val(prec, x[k].square_ref());
            s[k] = Float::with_val(prec, acc.sqrt_ref());
        }
        let t = s[0].clone();
        let y: Vec<Float> = x.iter().map(|v| Float::with_val(prec, v / &t)).collect();
        for sk in &mut s {
            *sk /= &t;
        }
        let mut h = vec![vec![Float::new(prec); n - 1]; n];
        for i in 0..n {
            for j in 0..(n - 1).min(i + 1) {
                if i == j {
                    h[i][j] = Float::with_val(prec, &s[j + 1] / &s[j]);
                } else {
                    let den = Float::with_val(prec, &s[j] * &s[j + 1]);
                    h[i][j] = -(Float::with_val(prec, &y[i] * &y[j]) / den);
                }
            }
        }
        let identity = |n: usize| {
            (0..n)
                .map(|i| (0..n).map(|j| Integer::from(i32::from(i == j))).collect())
                .collect::<Vec<Vec<Integer>>>()
        };
        Self {
            n,
            prec,
            y,
            h,
            a: identity(n),
            b: identity(n),
        }
    }

    /// Hermite reduction of each row `i` in `rows` against columns `j < jmax(i)`.
    fn reduce(&mut self, rows: std::ops::Range<usize>, jmax: impl Fn(usize) -> usize) {
        let prec = self.prec;
        for i in rows {
            for j in (0..jmax(i)).rev() {
                if self.h[j][j].is_zero() {
                    continue;
                }
                let q = Float::with_val(prec, &self.h[i][j] / &self.h[j][j]);
                let t = nint(&q);
                if t == 0 {
                    continue;
                }
                let tf = Float::with_val(prec, &t);
                let yi = Float::with_val(prec, &self.y[i] * &tf);
                self.y[j] += yi;
                for k in 0..=j {
                    let v = Float::with_val(prec, &self.h[j][k] * &tf);
                    self.h[i][k] -= v;
                }
                for k in 0..self.n {
                    let v = Integer::from(&self.a[j][k] * &t);
                    self.a[i][k] -= v;
                    let w = Integer::from(&self.b[k][i] * &t);
                    self.b[k][j] += w;
                }
            }
        }
    }

    fn iterate(&mut self, gamma: &Float) {
        let n = self.n;
        let prec = self.prec;
        // Select m maximizing gamma^i |H_ii|.
        let mut best = Float::new(prec);
        let mut m = 0;
        let mut g = Float::with_val(prec, gamma);
        for i in 0..n - 1 {
            let v = Float::with_val(prec, self.h[i][i].abs_ref()) * &g;
            if v > best {
                best = v;
                m = i;
            }
            g *= gamma;
        }
        self.y.swap(m, m + 1);
        self.a.swap(m, m + 1);
        self.h.swap(m, m + 1);
        for row in &mut self.b {
            row.swap(m, m + 1);
        }
        if m + 2 < n {
            let (h0, h1) = (self.h[m][m].clone(), self.h[m][m + 1].clone());
            let t0 = Float::with_val(prec, h0.hypot_ref(&h1));
            let t1 = Float::with_val(prec, &h0 / &t0);
            let t2 = Float::with_val(prec, &h1 / &t0);
            for i in m..n {
                let t3 = self.h[i][m].clone();
                let t4 = self.h[i][m + 1].clone();
                self.h[i][m] = Float::with_val(prec, &t1 * &t3) + Float::with_val(prec, &t2 * &t4);
                self.h[i][m + 1] =
                    Float::with_val(prec, &t1 * &t4) - Float::with_val(prec, &t2 * &t3);
            }
        }
        self.reduce(m + 1..n, |i| i.min(m + 2));
    }

    fn max_a_digits(&self) -> f64 {
        self.a
            .iter()
            .flatten()
            .map(|v| v.significant_bits() as f64 * std::f64::consts::LOG10_2)
            .fold(0.0, f64::max)
    }

    fn norm_lower_bound(&self) -> f64 {
        let max = self
            .h
            .iter()
            .enumerate()
            .take(self.n - 1)
            .map(|(j, row)| row[j].to_f64().abs())
            .fold(0.0, f64::max);
        if max == 0.0 {
            f64::INFINITY
        } else {
            1.0 / max
        }
    }
}

/// Searches for integers `c` with `sum c_i v_i = 0` and `max |c_i| <= norm_bound`.
pub fn pslq(values: &[Float], ctx: &PrecisionContext, norm_bound: u64) -> Result<PslqOutcome> {
    pslq_with(values, ctx, norm_bound, DEFAULT_MAX_ITERATIONS)
}

pub fn pslq_with(
    values: &[Float],
    ctx: &PrecisionContext,
    norm_bound: u64,
    max_iterations: usize,
) -> Result<PslqOutcome> {
    let n = values.len();
    if n < 2 {
        return Err(Error::Config("PSLQ needs at least two values".into()));
    }
    let floor = DIGITS_PER_VALUE * n as u32;
    if ctx.digits() < floor {
        return Err(Error::Config(format!(
            "PSLQ on {n} values needs at least {floor} digits, got {}",
            ctx.digits()
        )));
    }
    if norm_bound == 0 {
        return Err(Error::Config("norm bound must be positive".into()));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("PSLQ inputs must be finite".into()));
    }
    let prec = ctx.prec();
    let accept = ctx.pow10(-(ctx.digits() as i32 - 15));

    // A zero input is a relation by itself.
    if let Some(i) = values.iter().position(|v| v.is_zero()) {
        let mut c = vec![0i64; n];
        c[i] = 1;
        return Ok(PslqOutcome::Found(IntegerRelation {
            coefficients: c,
            residual: ctx.zero(),
            norm_bound,
        }));
    }

    // Condition the input by its largest magnitude.
    let scale = values
        .iter()
        .map(|v| Float::with_val(prec, v.abs_ref()))
        .max_by(|a, b| a.partial_cmp(b).expect("finite"))
        .expect("non-empty");
    let x: Vec<Float> = values
        .iter()
        .map(|v| Float::with_val(prec, v / &scale))
        .collect();

    let mut st = State::new(&x, prec);
    st.reduce(1..n, |i| i);
    let gamma = Float::with_val(prec, Float::with_val(prec, 4) / 3u32).sqrt();
    let detect = ctx.pow10(-(ctx.digits() as i32 - 10));
    let precision_limit = f64::from(ctx.digits()) - 10.0;
    let exclusion = norm_bound as f64 * (n as f64).sqrt();

    for iteration in 1..=max_iterations {
        st.iterate(&gamma);

        // Candidate relations: columns of B where y vanishes.
        let mut candidates: Vec<usize> =
            (0..n).filter(|&j| st.y[j].clone().abs() < detect).collect();
        candidates.sort_by(|&i, &j| {
            st.y[i]
                .clone()
                .abs()
                .partial_cmp(&st.y[j].clone().abs())
                .expect("finite")
        });
        for j in candidates {
            let column: Option<Vec<i64>> = (0..n).map(|k| to_i64(&st.b[k][j])).collect();
            let Some(column) = column else { continue };
            let c = normalize(column);
            if c.iter().all(|&v| v == 0) {
                continue;
            }
            let residual = relation_residual(values, &c, prec);
            let max_c = c.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            if residual <= accept && max_c <= norm_bound {
                return Ok(PslqOutcome::Found(IntegerRelation {
                    coefficients: c,
                    residual,
                    norm_bound,
                }));
            }
        }

        let bound = st.norm_lower_bound();
        if bound > exclusion {
            return Ok(PslqOutcome::Excluded {
                norm_lower_bound: bound,
                iterations: iteration,
            });
        }
        if st.max_a_digits() > precision_limit {
            return Err(Error::PrecisionExhausted {
                iterations: iteration,
            });
        }
    }
    Err(Error::PrecisionExhausted {
        iterations: max_iterations,
    })
}
