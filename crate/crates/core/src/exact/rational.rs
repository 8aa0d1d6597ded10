use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Parses `-3/4`, `5`, `12/8` (normalised to `3/2`). A leading U+2212 minus
/// sign is accepted as well as `-`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::ParseRational(text.to_string());
    let trimmed = text.trim();
    let (negative, body) = match trimmed
        .strip_prefix('-')
        .or_else(|| trimmed.strip_prefix('\u{2212}'))
    {
        Some(rest) => (true, rest),
        None => (false, trimmed),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        s.parse::<BigInt>().map_err(|_| err())
    };
    let mut numer = digits(num)?;
    let denom = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err());
    }
    if negative {
        numer = -numer;
    }
    Ok(Rational::new(numer, denom))
}

/// Text form used on every external surface: `-3/4`, `5`.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// `base^exp` with `0^0 = 1`.
pub fn pow_int(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse_rational("-3/4").unwrap(), q(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), q(5, 1));
        assert_eq!(parse_rational("12/8").unwrap(), q(3, 2));
        assert_eq!(parse_rational("\u{2212}1/2").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("0/7").unwrap(), q(0, 1));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "", "-", "1/", "/2", "1/0", "1.5", "+3", "3/-4", "a", "1/2/3", "--1",
        ] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&q(-6, 8)), "-3/4");
        assert_eq!(format_rational(&q(10, 2)), "5");
        assert_eq!(format_rational(&q(0, 3)), "0");
        assert_eq!(format_rational(&q(3, -4)), "-3/4");
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(pow_int(&q(0, 1), 0), q(1, 1));
        assert_eq!(pow_int(&q(-1, 2), 3), q(-1, 8));
    }
}
