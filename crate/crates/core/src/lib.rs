pub mod bernoulli;
pub mod clausen;
pub mod constants;
pub mod digits;
pub mod error;
pub mod expr;
pub mod format;
pub mod identities;
pub mod integrals;
pub mod kronecker;
pub mod lseries;
pub mod precision;
pub mod pslq;
pub mod quadrature;
pub mod zeta;

pub use error::{Error, Result};
pub use precision::{make_context, PrecisionContext, Real};
