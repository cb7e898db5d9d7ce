//! Kronecker symbol `(d/n)` and periodic character tables.

use serde::Serialize;

use crate::error::{Error, Result};

/// `(2/b)` for odd `b`, indexed by `b mod 8`.
const TAB2: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];

/// The Kronecker symbol `(a/b)` for arbitrary integers.
///
/// Binary algorithm with quadratic reciprocity: strips powers of two from
/// the bottom argument using `(a/2)`, handles a negative bottom argument via
/// the sign of `a`, then alternates reduction and reciprocity on odd values.
pub fn kronecker_symbol(a: i64, b: i64) -> i32 {
    let (mut a, mut b) = (a as i128, b as i128);
    if b == 0 {
        return i32::from(a.abs() == 1);
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    let v = b.trailing_zeros();
    b >>= v;
    let mut k = if v % 2 == 0 {
        1
    } else {
        TAB2[(a & 7) as usize]
    };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        // b is odd and positive here.
        if a == 0 {
            return if b == 1 { k } else { 0 };
        }
        let v = a.trailing_zeros();
        a >>= v;
        if v % 2 == 1 {
            k *= TAB2[(b & 7) as usize];
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b % r;
        b = r;
    }
}

/// `kronecker(d, n)` for `d != 0`, `n >= 0`.
pub fn kronecker(d: i64, n: u64) -> Result<i32> {
    if d == 0 {
        return Err(Error::Domain("Kronecker modulus d must be nonzero".into()));
    }
    let n = i64::try_from(n).map_err(|_| Error::Domain(format!("n = {n} out of range")))?;
    Ok(kronecker_symbol(d, n))
}

/// `chi(n) = (d/n)` tabulated over one period `n = 1..=|d|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerCharacter {
    d: i64,
    values: Vec<i32>,
}

impl KroneckerCharacter {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("Kronecker modulus d must be nonzero".into()));
        }
        let period = d.unsigned_abs();
        let values = (1..=period)
            .map(|n| kronecker_symbol(d, n as i64))
            .collect();
        Ok(Self { d, values })
    }

    pub fn modulus(&self) -> i64 {
        self.d
    }

    pub fn period(&self) -> u64 {
        self.d.unsigned_abs()
    }

    /// `chi(1), ..., chi(|d|)`.
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// `chi(n)` read periodically; `n = 0 mod |d|` reads position `|d|`.
    pub fn at(&self, n: u64) -> i32 {
        let p = self.period();
        let idx = match n % p {
            0 => p,
            r => r,
        };
        self.values[(idx - 1) as usize]
    }
}

/// `character_table(d)`.
pub fn character_table(d: i64) -> Result<KroneckerCharacter> {
    KroneckerCharacter::new(d)
}
