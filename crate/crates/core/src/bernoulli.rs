//! Exact Bernoulli numbers.
//!
//! Sign convention: `B_1 = -1/2`, so that `sum_{k=0}^{n} C(n+1, k) B_k = 0`
//! for every `n >= 1`. Even-index values come from the integer tangent
//! numbers `T_k` via `B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))`.

use std::sync::{Arc, OnceLock, RwLock};

use rug::{Integer, Rational};

/// `B_0, B_2, B_4, ...` (index `k` holds `B_2k`).
type EvenTable = Arc<Vec<Rational>>;

fn cache() -> &'static RwLock<EvenTable> {
    static CACHE: OnceLock<RwLock<EvenTable>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(Arc::new(even_bernoulli(32))))
}

/// Tangent numbers `T_1..T_n`, returned 0-based (`t[0] = T_1`).
fn tangent_numbers(n: usize) -> Vec<Integer> {
    let mut t = vec![Integer::new(); n];
    if n == 0 {
        return t;
    }
    t[0] = Integer::from(1);
    for k in 1..n {
        t[k] = Integer::from(&t[k - 1] * k as u64);
    }
    for k in 1..n {
        for j in k..n {
            // T_{j+1} = (j-k) T_j + (j-k+2) T_{j+1}, in 0-based slots.
            let left = Integer::from(&t[j - 1] * (j - k) as u64);
            t[j] *= (j - k + 2) as u64;
            t[j] += left;
        }
    }
    t
}

/// `B_0, B_2, ..., B_2n`.
fn even_bernoulli(n: usize) -> Vec<Rational> {
    let tangents = tangent_numbers(n);
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::from(1));
    for (i, tk) in tangents.into_iter().enumerate() {
        let k = (i + 1) as u32;
        let four_k = Integer::from(1) << (2 * k);
        let denom = Integer::from(&four_k - 1u32) * &four_k;
        let mut b = Rational::from((tk * (2 * k), denom));
        if k.is_multiple_of(2) {
            b = -b;
        }
        out.push(b);
    }
    out
}

/// Shared snapshot holding at least `B_0, B_2, ..., B_2k`.
///
/// The table only ever grows; any snapshot agrees with every later one on
/// their common prefix.
pub fn even_table(k: usize) -> EvenTable {
    {
        let table = cache().read().expect("bernoulli cache poisoned");
        if table.len() > k {
            return Arc::clone(&table);
        }
    }
    let mut table = cache().write().expect("bernoulli cache poisoned");
    if table.len() <= k {
        let target = k.max(2 * (table.len() - 1));
        *table = Arc::new(even_bernoulli(target));
    }
    Arc::clone(&table)
}

/// `B_2k`.
pub fn bernoulli_even(k: usize) -> Rational {
    even_table(k)[k].clone()
}

/// The `n`-th Bernoulli number, with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    match n {
        0 => Rational::from(1),
        1 => Rational::from((-1, 2)),
        n if n % 2 == 1 => Rational::new(),
        n => bernoulli_even(n / 2),
    }
}
