//! Working-precision contexts.
//!
//! Every evaluation carries a [`PrecisionContext`]: results are reported to
//! `digits` decimal digits and computed at `digits + guard` digits. Big-float
//! values are plain [`rug::Float`]s created at [`PrecisionContext::prec`] bits.

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest accepted number of requested digits.
pub const MIN_DIGITS: u32 = 16;
/// Default number of guard digits.
pub const DEFAULT_GUARD: u32 = 10;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Arbitrary-precision real number used throughout the crate.
pub type Real = Float;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::Config(format!(
                "digits must be at least {MIN_DIGITS}, got {digits}"
            )));
        }
        if guard < DEFAULT_GUARD {
            return Err(Error::Config(format!(
                "guard digits must be at least {DEFAULT_GUARD}, got {guard}"
            )));
        }
        Ok(Self { digits, guard })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Internal working precision in decimal digits.
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Internal working precision in bits.
    pub fn prec(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32
    }

    /// A context with `extra` more requested digits, same guard.
    pub fn widened(&self, extra: u32) -> Self {
        Self {
            digits: self.digits + extra,
            guard: self.guard,
        }
    }

    /// `10^-digits` at working precision.
    pub fn tolerance(&self) -> Float {
        self.pow10(-(self.digits as i32))
    }

    /// `10^-(digits + guard)`: the size of a unit roundoff at working precision.
    pub fn epsilon(&self) -> Float {
        self.pow10(-(self.working_digits() as i32))
    }

    pub fn pow10(&self, e: i32) -> Float {
        let p = Float::with_val(self.prec(), Float::u_pow_u(10, e.unsigned_abs()));
        if e < 0 {
            p.recip()
        } else {
            p
        }
    }

    pub fn real<T>(&self, v: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.prec(), v)
    }

    pub fn zero(&self) -> Float {
        Float::new(self.prec())
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.prec(), rug::float::Constant::Pi)
    }
}

/// `make_context`: the checked constructor under its operation name.
pub fn make_context(digits: u32) -> Result<PrecisionContext> {
    PrecisionContext::new(digits)
}
