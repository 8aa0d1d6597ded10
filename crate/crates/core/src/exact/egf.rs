//! Truncated power series over the rationals.
//!
//! [`Egf`] stores `c_0..=c_N` for `sum c_n t^n / n!`, so that "the coefficient of
//! `t^n/n!`" in a generating function is read off directly. [`Series`] stores
//! ordinary coefficients `a_0..=a_N` of `sum a_m z^m`; polylogarithms live there
//! and are substituted into an `Egf` with [`Series::compose`].
//!
//! Binary operations truncate to the smaller of the two orders.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{factorial, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Egf {
    coeffs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

fn pascal_rows(order: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

impl Egf {
    /// Wraps `coeffs` as `c_0..=c_N`.
    ///
    /// Panics if `coeffs` is empty; a series always knows at least its constant term.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Egf { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Egf::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut s = Egf::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Egf::constant(Rational::one(), order)
    }

    /// The formal variable `t` itself (`c_1 = 1`).
    pub fn t(order: usize) -> Self {
        let mut s = Egf::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// `e^{lambda t}`, i.e. `c_n = lambda^n`.
    pub fn exp_linear(lambda: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Rational::one();
        for _ in 0..=order {
            coeffs.push(power.clone());
            power *= lambda;
        }
        Egf::new(coeffs)
    }

    /// `sum_j weight_j e^{lambda_j t}`.
    pub fn exp_sum(terms: &[(Rational, Rational)], order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (weight, lambda) in terms {
            let mut power = weight.clone();
            for c in coeffs.iter_mut() {
                *c += &power;
                power *= lambda;
            }
        }
        Egf::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Egf::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Egf::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// `f(lambda t)`, i.e. `c_n lambda^n`.
    pub fn dilate(&self, lambda: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &power);
            power *= lambda;
        }
        Egf::new(coeffs)
    }

    /// Index of the first non-zero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Ordinary coefficients `c_n / n!`.
    pub fn to_ordinary(&self) -> Series {
        let mut fact = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= n;
                }
                c / Rational::from_integer(fact.clone())
            })
            .collect();
        Series::new(coeffs)
    }

    /// `h` with `h * g = self` through order `min(self.order, g.order)`.
    pub fn div(&self, g: &Egf) -> Result<Egf> {
        if g.coeffs[0].is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let order = self.order().min(g.order());
        let pascal = pascal_rows(order);
        let inv_lead = g.coeffs[0].recip();
        let mut h: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for (i, hi) in h.iter().enumerate() {
                let g_part = &g.coeffs[n - i];
                if hi.is_zero() || g_part.is_zero() {
                    continue;
                }
                acc -= hi * g_part * Rational::from_integer(pascal[n][i].clone());
            }
            h.push(acc * &inv_lead);
        }
        Ok(Egf::new(h))
    }

    /// Divides after cancelling `t^shift` from both series.
    ///
    /// Both `self` and `g` must vanish below `t^shift` and `g` must have a
    /// non-zero `t^shift` coefficient. The result has order
    /// `min(self.order, g.order) - shift`.
    pub fn div_shifted(&self, g: &Egf, shift: usize) -> Result<Egf> {
        if shift == 0 {
            return self.div(g);
        }
        let order = self.order().min(g.order());
        if order < shift {
            return Err(Error::InsufficientVanishing { shift });
        }
        let vanishes = |s: &Egf| s.coeffs[..shift].iter().all(Zero::is_zero);
        if !vanishes(self) || !vanishes(g) || g.coeffs[shift].is_zero() {
            return Err(Error::InsufficientVanishing { shift });
        }
        self.unshift(shift, order).div(&g.unshift(shift, order))
    }

    /// `self / t^shift` when the low coefficients are known to vanish:
    /// ordinary coefficient `j` becomes ordinary coefficient `j + shift`, which in
    /// EGF normalisation is `c_{j+s} * j! / (j+s)!`.
    fn unshift(&self, shift: usize, order: usize) -> Egf {
        let coeffs = (0..=order - shift)
            .map(|j| {
                let falling: BigInt = ((j + 1)..=(j + shift)).fold(BigInt::one(), |acc, m| acc * m);
                &self.coeffs[j + shift] / Rational::from_integer(falling)
            })
            .collect();
        Egf::new(coeffs)
    }

    /// `self(inner(t))`, reading `self` as `sum c_m z^m / m!`.
    pub fn compose(&self, inner: &Egf) -> Result<Egf> {
        self.to_ordinary().compose(inner)
    }

    pub fn pow(&self, exponent: usize) -> Egf {
        let mut result = Egf::one(self.order());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl Add for &Egf {
    type Output = Egf;

    fn add(self, rhs: &Egf) -> Egf {
        let order = self.order().min(rhs.order());
        Egf::new(
            (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        )
    }
}

impl Sub for &Egf {
    type Output = Egf;

    fn sub(self, rhs: &Egf) -> Egf {
        let order = self.order().min(rhs.order());
        Egf::new(
            (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        )
    }
}

impl Neg for &Egf {
    type Output = Egf;

    fn neg(self) -> Egf {
        Egf::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Binomial convolution: `c_n = sum_i C(n, i) a_i b_{n-i}`.
impl Mul for &Egf {
    type Output = Egf;

    fn mul(self, rhs: &Egf) -> Egf {
        let order = self.order().min(rhs.order());
        let pascal = pascal_rows(order);
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = Rational::zero();
                for i in 0..=n {
                    let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc += a * b * Rational::from_integer(pascal[n][i].clone());
                }
                acc
            })
            .collect();
        Egf::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for Egf {
            type Output = Egf;
            fn $method(self, rhs: Egf) -> Egf {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Series {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![Rational::zero(); order + 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &Rational {
        &self.coeffs[m]
    }

    /// Lowest degree with a non-zero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Series::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::new(
            (0..=order)
                .map(|n| (0..=n).map(|i| &self.coeffs[i] * &rhs.coeffs[n - i]).sum())
                .collect(),
        )
    }

    /// EGF coefficients `a_m * m!`.
    pub fn to_egf(&self) -> Egf {
        Egf::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(m, a)| a * Rational::from_integer(factorial(m)))
                .collect(),
        )
    }

    /// Substitutes an EGF with zero constant term for `z`, by Horner's rule.
    ///
    /// The result has order `min(self.order, inner.order)`: every `z^m` with
    /// `m` above that contributes only beyond it.
    pub fn compose(&self, inner: &Egf) -> Result<Egf> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonNilpotentInner);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Egf::constant(self.coeffs[order].clone(), order);
        for m in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[m];
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| q(v, 1)).collect()
    }

    #[test]
    fn additive_identity_and_inverse() {
        let one = Egf::one(4);
        assert_eq!(&one + &Egf::zero(4), one);
        let two_t = &Egf::t(4) + &Egf::t(4);
        assert_eq!(two_t.coeffs(), &ints(&[0, 2, 0, 0, 0])[..]);
        let e = Egf::exp_linear(&q(1, 1), 6);
        assert_eq!(&e + &(-&e), Egf::zero(6));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let f = Egf::exp_linear(&q(1, 1), 3);
        let g = Egf::exp_linear(&q(2, 1), 7);
        assert_eq!((&f + &g).order(), 3);
        assert_eq!((&f * &g).order(), 3);
        assert_eq!(f.div(&g).unwrap().order(), 3);
    }

    #[test]
    fn exponential_law() {
        let e = Egf::exp_linear(&q(1, 1), 8);
        assert_eq!(&e * &e, Egf::exp_linear(&q(2, 1), 8));
        assert_eq!(&e * &Egf::one(8), e);
    }

    #[test]
    fn t_squared_has_egf_coefficient_two() {
        let t = Egf::t(4);
        assert_eq!((&t * &t).coeffs(), &ints(&[0, 0, 2, 0, 0])[..]);
    }

    #[test]
    fn division_requires_unit() {
        let t = Egf::t(5);
        let em1 = &Egf::exp_linear(&q(1, 1), 5) - &Egf::one(5);
        assert_eq!(t.div(&em1), Err(Error::DivisionByNonUnit));
    }

    #[test]
    fn reciprocal_of_exp() {
        let h = Egf::one(6).div(&Egf::exp_linear(&q(1, 1), 6)).unwrap();
        assert_eq!(h, Egf::exp_linear(&q(-1, 1), 6));
    }

    #[test]
    fn two_over_one_plus_exp() {
        // 2/(1+e^t) = 1 - t/2 + t^3/24 + ...; EGF coefficient of t^3 is 3!/24 = 1/4.
        let g = &Egf::one(3) + &Egf::exp_linear(&q(1, 1), 3);
        let h = Egf::constant(q(2, 1), 3).div(&g).unwrap();
        assert_eq!(h.coeffs(), &[q(1, 1), q(-1, 2), q(0, 1), q(1, 4)][..]);
    }

    #[test]
    fn shifted_division_gives_bernoulli() {
        let n = 6;
        let t = Egf::t(n);
        let em1 = &Egf::exp_linear(&q(1, 1), n) - &Egf::one(n);
        let b = t.div_shifted(&em1, 1).unwrap();
        assert_eq!(b.order(), n - 1);
        assert_eq!(&b.coeffs()[..3], &[q(1, 1), q(-1, 2), q(1, 6)][..]);
        assert_eq!(t.div_shifted(&t, 1).unwrap(), Egf::one(n - 1));

        // t^2 / (e^t - 1) = t * (t / (e^t - 1))
        let t2 = &t * &t;
        let lhs = t2.div_shifted(&em1, 1).unwrap();
        let rhs = &Egf::t(n - 1) * &b;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shifted_division_checks_vanishing() {
        let e = Egf::exp_linear(&q(1, 1), 4);
        let t = Egf::t(4);
        assert_eq!(
            e.div_shifted(&t, 1),
            Err(Error::InsufficientVanishing { shift: 1 })
        );
        assert_eq!(
            t.div_shifted(&(&t * &t), 1),
            Err(Error::InsufficientVanishing { shift: 1 })
        );
        assert_eq!(
            t.truncate(0).div_shifted(&t, 1),
            Err(Error::InsufficientVanishing { shift: 1 })
        );
    }

    #[test]
    fn composition_basics() {
        let e = Egf::exp_linear(&q(1, 1), 6);
        assert_eq!(e.compose(&Egf::t(6)).unwrap(), e);
        assert_eq!(e.compose(&Egf::zero(6)).unwrap(), Egf::one(6));
        assert_eq!(e.compose(&e), Err(Error::NonNilpotentInner));
    }

    #[test]
    fn minus_log_of_one_minus_exp_is_t() {
        let n = 10;
        let minus_log = Series::new(
            std::iter::once(q(0, 1))
                .chain((1..=n as i64).map(|m| q(1, m)))
                .collect(),
        );
        let inner = &Egf::one(n) - &Egf::exp_linear(&q(-1, 1), n);
        assert_eq!(minus_log.compose(&inner).unwrap(), Egf::t(n));
    }

    #[test]
    fn powers() {
        let e = Egf::exp_linear(&q(1, 1), 5);
        assert_eq!(e.pow(0), Egf::one(5));
        assert_eq!(e.pow(3), Egf::exp_linear(&q(3, 1), 5));
        let f = &Egf::one(5) + &e;
        assert_eq!(&f.pow(2).coeffs()[..3], &ints(&[4, 4, 6])[..]);
    }

    #[test]
    fn ordinary_round_trip() {
        let e = Egf::exp_linear(&q(-3, 2), 7);
        assert_eq!(e.to_ordinary().to_egf(), e);
    }

    #[test]
    fn exp_sum_matches_product() {
        let (a, b) = (q(2, 3), q(-5, 4));
        let pair = &Egf::exp_linear(&-&a, 8) + &Egf::exp_linear(&b, 8);
        let terms = [(q(1, 1), q(-4, 3)), (q(2, 1), &b - &a), (q(1, 1), &b + &b)];
        assert_eq!(Egf::exp_sum(&terms, 8), pair.pow(2));
    }

    #[test]
    fn dilate_substitutes_scaled_variable() {
        let lambda = q(-3, 7);
        assert_eq!(
            Egf::exp_linear(&q(2, 1), 6).dilate(&lambda),
            Egf::exp_linear(&(q(2, 1) * &lambda), 6)
        );
        let inner = &Egf::one(6) - &Egf::exp_linear(&-&lambda, 6);
        let log = Series::new(
            std::iter::once(q(0, 1))
                .chain((1..=6).map(|m| q(1, m)))
                .collect(),
        );
        assert_eq!(log.compose(&inner).unwrap(), Egf::t(6).dilate(&lambda));
    }
}
