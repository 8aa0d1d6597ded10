//! Bernoulli and Euler numbers, power sums, alternating sums and the two
//! Hessenberg determinant representations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, pow_int, Egf, Poly, Rational, RationalMatrix};

/// Which generating function "the Euler numbers" refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerConvention {
    /// `2 / (e^t + 1)`: `1, -1/2, 0, 1/4, ...`
    GenocchiType,
    /// `1 / cosh t`: `1, 0, -1, 0, 5, 0, -61, ...`
    SecantType,
}

impl FromStr for EulerConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "genocchi" => Ok(EulerConvention::GenocchiType),
            "secant" => Ok(EulerConvention::SecantType),
            other => Err(format!(
                "unknown Euler convention {other:?} (expected genocchi or secant)"
            )),
        }
    }
}

impl fmt::Display for EulerConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EulerConvention::GenocchiType => "genocchi",
            EulerConvention::SecantType => "secant",
        })
    }
}

/// Sign of `B_1` used when evaluating the closed power-sum formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum B1Sign {
    Plus,
    Minus,
}

/// `B_0..=B_order` from `t / (e^t - 1)`, so `B_1 = -1/2`.
pub fn bernoulli_numbers(order: usize) -> Vec<Rational> {
    let n = order + 1;
    let t = Egf::t(n);
    let em1 = &Egf::exp_linear(&Rational::one(), n) - &Egf::one(n);
    t.div_shifted(&em1, 1)
        .expect("t and e^t - 1 both vanish to first order")
        .into_coeffs()
}

/// `B_n(x) = sum_j C(n, j) B_{n-j} x^j`, the coefficient of `t^n/n!` in
/// `t e^{xt} / (e^t - 1)`.
pub fn bernoulli_polynomial(n: usize) -> Poly {
    let b = bernoulli_numbers(n);
    Poly::new(
        (0..=n)
            .map(|j| &b[n - j] * Rational::from_integer(binomial(n, j)))
            .collect(),
    )
}

/// `1^m + 2^m + ... + n^m` by direct summation.
pub fn power_sum(m: u32, n: u64) -> BigInt {
    (1..=n)
        .map(|k| num_traits::pow(BigInt::from(k), m as usize))
        .sum()
}

/// `(1/(m+1)) sum_{k=0}^{m} C(m+1, k) B_k n^{m+1-k}` with the chosen sign of `B_1`.
///
/// With `B1Sign::Plus` this is `S_m(n)`; with `B1Sign::Minus` it is
/// `0^m + 1^m + ... + (n-1)^m` (so `S_m(n-1)` for `m >= 1`).
pub fn power_sum_closed(m: u32, n: u64, b1_sign: B1Sign) -> Rational {
    let m = m as usize;
    let mut b = bernoulli_numbers(m.max(1));
    if b1_sign == B1Sign::Plus {
        b[1] = -b[1].clone();
    }
    let n = Rational::from_integer(BigInt::from(n));
    let sum: Rational = (0..=m)
        .map(|k| &b[k] * Rational::from_integer(binomial(m + 1, k)) * pow_int(&n, m + 1 - k))
        .sum();
    sum / Rational::from_integer(BigInt::from(m + 1))
}

/// `sum_{k=1}^{m} (-1)^{m-k} k^n`.
pub fn alternating_sum(n: u32, m: u64) -> BigInt {
    (1..=m)
        .map(|k| {
            let term = num_traits::pow(BigInt::from(k), n as usize);
            if (m - k) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

pub fn euler_numbers(order: usize, conv: EulerConvention) -> Vec<Rational> {
    let one = Rational::one();
    let two = Egf::constant(Rational::from_integer(2.into()), order);
    let denominator = match conv {
        EulerConvention::GenocchiType => &Egf::one(order) + &Egf::exp_linear(&one, order),
        EulerConvention::SecantType => {
            &Egf::exp_linear(&one, order) + &Egf::exp_linear(&-one, order)
        }
    };
    two.div(&denominator)
        .expect("denominator has constant term 2")
        .into_coeffs()
}

/// `E_n(x) = sum_j C(n, j) E_j x^{n-j}` from `2 e^{xt} / (e^t + 1)`.
pub fn euler_polynomial(n: usize) -> Poly {
    let e = euler_numbers(n, EulerConvention::GenocchiType);
    Poly::new(
        (0..=n)
            .map(|power| &e[n - power] * Rational::from_integer(binomial(n, power)))
            .collect(),
    )
}

/// The `n x n` matrix whose determinant gives `B_n` up to `(-1)^n/(n-1)!`.
///
/// First row `1/2, 1/3, ..., 1/(n+1)`; row `r >= 2` (one-based) holds
/// `C(j, r-2)` in column `j >= r-1` and zero to the left.
pub fn bernoulli_matrix(n: usize) -> RationalMatrix {
    RationalMatrix::from_fn(n, n, |i, j| {
        let (r, c) = (i + 1, j + 1);
        if r == 1 {
            Rational::new(BigInt::one(), BigInt::from(c + 1))
        } else if c + 1 >= r {
            Rational::from_integer(binomial(c, r - 2))
        } else {
            Rational::zero()
        }
    })
}

/// `B_n = ((-1)^n / (n-1)!) det(bernoulli_matrix(n))` for `n >= 1`.
pub fn bernoulli_det(n: usize) -> Rational {
    assert!(n >= 1, "determinant form is defined for n >= 1");
    let det = bernoulli_matrix(n).det().expect("square");
    let value = det / Rational::from_integer(factorial(n - 1));
    if n % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Lower Hessenberg matrix with `1` on the superdiagonal and
/// `1/(2(i-j)+2)!` on and below the diagonal.
pub fn euler_matrix(n: usize) -> RationalMatrix {
    RationalMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            Rational::one()
        } else if j <= i {
            Rational::new(BigInt::one(), factorial(2 * (i - j) + 2))
        } else {
            Rational::zero()
        }
    })
}

/// Secant-type `E_{2n} = (-1)^n (2n)! det(euler_matrix(n))` for `n >= 1`.
pub fn euler_det(n: usize) -> Rational {
    assert!(n >= 1, "determinant form is defined for n >= 1");
    let det = euler_matrix(n).det().expect("square");
    let value = det * Rational::from_integer(factorial(2 * n));
    if n % 2 == 1 {
        -value
    } else {
        value
    }
}
