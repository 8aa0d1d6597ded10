//! Exact generating-function arithmetic for Bernoulli, Euler, poly-Bernoulli and
//! (multi) poly-Euler families, together with an audit that checks the identities
//! relating them by exact coefficient comparison.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate. Parameters written as `a`, `b`, `c`
//! in the generating functions (`a^{-t}`, `b^t`, `c^{xt}`) are carried by their
//! logarithms, see [`multifamily::LogParams`].

pub mod audit;
pub mod classical;
mod error;
pub mod exact;
pub mod multifamily;
pub mod polyfamily;
pub mod polylog;

pub use error::{Error, Result};
pub use exact::{Egf, Poly, Rational, RationalMatrix, Series};
pub use polylog::KVector;
