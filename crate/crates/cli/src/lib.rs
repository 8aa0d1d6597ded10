//! Command implementations behind the `polyseq`, `polyverify` and `polyaudit`
//! binaries. Each command writes to the given streams and returns its exit code:
//! 0 on success (or a tolerated verdict), 1 on an unexpected identity failure,
//! 2 on a usage error.

pub mod audit;
pub mod seq;
pub mod verify;

use polyeuler::audit::DEFAULT_ORDER;
use polyeuler::exact::parse_rational;
use polyeuler::{KVector, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Overrides the default truncation order when no flag is given.
pub const ORDER_ENV: &str = "POLYEULER_ORDER";

pub(crate) fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

pub(crate) fn kvector_arg(text: &str) -> Result<KVector, String> {
    text.parse::<KVector>().map_err(|e| e.to_string())
}

/// `flag`, else `$POLYEULER_ORDER`, else the default.
pub(crate) fn resolve_order(flag: Option<usize>) -> Result<usize, String> {
    if let Some(order) = flag {
        return Ok(order);
    }
    match std::env::var(ORDER_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .map_err(|_| format!("{ORDER_ENV} must be a non-negative integer, got {value:?}")),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}
