//! Poly-Bernoulli numbers and polynomials, poly-Euler polynomials in both the
//! `2 Li_k(1-e^{-t}) / (1+e^t)` and the `Li_k(1-e^{-4t}) / (4t cosh t)` forms,
//! and brute-force lonesum matrix counting.

use std::collections::HashMap;

use num_traits::One;

use crate::exact::{binomial, Egf, Poly, Rational};
use crate::polylog::{li_of_inner, one_minus_exp, KVector};
use crate::{Error, Result};

/// Largest `rows * cols` accepted by [`lonesum_count`].
pub const LONESUM_CELL_LIMIT: usize = 20;

fn li_k(k: i64, inner: &Egf) -> Egf {
    li_of_inner(&KVector::single(k), inner, inner.order()).expect("inner has zero constant term")
}

/// `B_n^{(k)}(x)`, `n = 0..=order`, from `Li_k(1-e^{-t}) / (1-e^{-t}) * e^{xt}`.
pub fn poly_bernoulli(k: i64, x: &Rational, order: usize) -> Vec<Rational> {
    let inner = one_minus_exp(&Rational::one(), order + 1);
    let ratio = li_k(k, &inner)
        .div_shifted(&inner, 1)
        .expect("Li_k(1-e^{-t}) and 1-e^{-t} vanish to first order");
    (&ratio * &Egf::exp_linear(x, order)).into_coeffs()
}

/// `B_n^{(k)}(x)` as a polynomial in `x`.
pub fn poly_bernoulli_polynomial(k: i64, n: usize) -> Poly {
    let numbers = poly_bernoulli(k, &Rational::from_integer(0.into()), n);
    Poly::new(
        (0..=n)
            .map(|j| &numbers[n - j] * Rational::from_integer(binomial(n, j)))
            .collect(),
    )
}

/// `E_n^{(k)}(x)`, `n = 0..=order`, from `2 Li_k(1-e^{-t}) / (1+e^t) * e^{xt}`.
pub fn poly_euler(k: i64, x: &Rational, order: usize) -> Vec<Rational> {
    let one = Rational::one();
    let numerator = li_k(k, &one_minus_exp(&one, order)).scale(&Rational::from_integer(2.into()));
    let denominator = &Egf::one(order) + &Egf::exp_linear(&one, order);
    let quotient = numerator
        .div(&denominator)
        .expect("1 + e^t has constant term 2");
    (&quotient * &Egf::exp_linear(x, order)).into_coeffs()
}

/// Poly-Euler numbers of the form `Li_k(1-e^{-4t}) / (4t cosh t)`.
pub fn poly_euler_sasaki(k: i64, order: usize) -> Vec<Rational> {
    let n = order + 1;
    let four = Rational::from_integer(4.into());
    let numerator = li_k(k, &one_minus_exp(&four, n));
    let one = Rational::one();
    let cosh = (&Egf::exp_linear(&one, n) + &Egf::exp_linear(&-one, n))
        .scale(&Rational::new(1.into(), 2.into()));
    let denominator = (&Egf::t(n) * &cosh).scale(&four);
    numerator
        .div_shifted(&denominator, 1)
        .expect("numerator and 4t cosh t vanish to first order")
        .into_coeffs()
}

/// Number of `rows x cols` (0,1)-matrices that are the only matrix with their
/// row-sum and column-sum vectors, by enumerating all `2^(rows*cols)` matrices.
pub fn lonesum_count(rows: usize, cols: usize) -> Result<u64> {
    let cells = rows * cols;
    if cells > LONESUM_CELL_LIMIT {
        return Err(Error::TooLarge {
            rows,
            cols,
            limit: LONESUM_CELL_LIMIT,
        });
    }
    let mut classes: HashMap<(Vec<u8>, Vec<u8>), u32> = HashMap::new();
    for mask in 0u32..(1u32 << cells) {
        let mut row_sums = vec![0u8; rows];
        let mut col_sums = vec![0u8; cols];
        for cell in 0..cells {
            if mask >> cell & 1 == 1 {
                row_sums[cell / cols] += 1;
                col_sums[cell % cols] += 1;
            }
        }
        *classes.entry((row_sums, col_sums)).or_default() += 1;
    }
    Ok(classes.values().filter(|&&size| size == 1).count() as u64)
}
