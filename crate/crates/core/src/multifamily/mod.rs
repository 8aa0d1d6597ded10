//! Multi poly-Bernoulli numbers, multi poly-Euler polynomials and their `(a,b)`,
//! `(x;a,b)` and `(a,b,c)` generalisations, plus the right-hand sides of the
//! identities relating them.
//!
//! `a`, `b`, `c` enter only through `a^{-t} = e^{-alpha t}`, `b^t = e^{beta t}`,
//! `(ab)^{-t} = e^{-(alpha+beta) t}` and `c^{xt} = e^{gamma x t}`, so they are
//! carried as the rationals `alpha = ln a`, `beta = ln b`, `gamma = ln c`. Each
//! identity is polynomial in these logarithms, which makes rational
//! specialisation an exact test.

mod explicit;

pub use explicit::{thm3_explicit, thm4_explicit, ExplicitValue, Thm4Variant};

use num_traits::{One, Zero};

use crate::exact::{binomial, Egf, Rational};
use crate::polylog::{li_of_inner, li_of_one_minus_exp, one_minus_exp, KVector};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogParams {
    pub alpha: Rational,
    pub beta: Rational,
    /// `ln c`; absent means `c = 1`.
    pub gamma: Option<Rational>,
}

impl LogParams {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        LogParams {
            alpha,
            beta,
            gamma: None,
        }
    }

    pub fn with_gamma(mut self, gamma: Rational) -> Self {
        self.gamma = Some(gamma);
        self
    }

    /// `ln a + ln b`.
    pub fn log_ab(&self) -> Rational {
        &self.alpha + &self.beta
    }

    fn gamma_or_zero(&self) -> Rational {
        self.gamma.clone().unwrap_or_else(Rational::zero)
    }
}

fn int(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// `2 Li_{(k)}(1 - e^{-lambda t}) / denominator * e^{shift t}`.
fn euler_type(
    ks: &KVector,
    lambda: &Rational,
    denominator: &Egf,
    shift: &Rational,
    order: usize,
) -> Vec<Rational> {
    let li = li_of_one_minus_exp(ks, lambda, order);
    let quotient = li
        .scale(&int(2))
        .div(denominator)
        .expect("denominator has constant term 2^r");
    if shift.is_zero() {
        return quotient.into_coeffs();
    }
    (&quotient * &Egf::exp_linear(shift, order)).into_coeffs()
}

/// `(a^{-t} + b^t)^r = sum_j C(r, j) e^{(j ln b - (r - j) ln a) t}`.
fn power_of_exp_pair(alpha: &Rational, beta: &Rational, r: usize, order: usize) -> Egf {
    let terms: Vec<(Rational, Rational)> = (0..=r)
        .map(|j| {
            (
                Rational::from_integer(binomial(r, j)),
                beta * int(j) - alpha * int(r - j),
            )
        })
        .collect();
    Egf::exp_sum(&terms, order)
}

/// `base^0 .. base^top`.
fn powers(base: &Rational, top: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(top + 1);
    let mut power = Rational::one();
    for _ in 0..=top {
        out.push(power.clone());
        power *= base;
    }
    out
}

/// `B_n^{(k_1..k_r)}` from `Li_{(k)}(1-e^{-t}) / (1-e^{-t})^r`.
pub fn multi_poly_bernoulli(ks: &KVector, order: usize) -> Result<Vec<Rational>> {
    let r = ks.depth();
    let n = order + r;
    let inner = one_minus_exp(&Rational::one(), n);
    let numerator = li_of_inner(ks, &inner, n)?;
    Ok(numerator.div_shifted(&inner.pow(r), r)?.into_coeffs())
}

/// `E_n^{(k_1..k_r)}(x)` from `2 Li_{(k)}(1-e^{-t}) / (1+e^t)^r * e^{rxt}`.
pub fn multi_poly_euler(ks: &KVector, x: &Rational, order: usize) -> Vec<Rational> {
    let r = ks.depth();
    let one = Rational::one();
    let denominator = power_of_exp_pair(&Rational::zero(), &one, r, order);
    euler_type(ks, &one, &denominator, &(x * int(r)), order)
}

/// `E_n^{(k)}(a, b)`: the `(x; a, b)` family at `x = 0`.
pub fn multi_poly_euler_ab(ks: &KVector, params: &LogParams, order: usize) -> Vec<Rational> {
    multi_poly_euler_xab(ks, &Rational::zero(), params, order)
}

/// `E_n^{(k)}(x; a, b)` from `2 Li_{(k)}(1-(ab)^{-t}) / (a^{-t} + b^t)^r * e^{rxt}`.
///
/// When `ln a + ln b = 0` the numerator vanishes identically and so does the result.
pub fn multi_poly_euler_xab(
    ks: &KVector,
    x: &Rational,
    params: &LogParams,
    order: usize,
) -> Vec<Rational> {
    let denominator = power_of_exp_pair(&params.alpha, &params.beta, ks.depth(), order);
    euler_type(
        ks,
        &params.log_ab(),
        &denominator,
        &(x * int(ks.depth())),
        order,
    )
}

/// `E_n^{(k)}(x; a, b, c)` from `2 Li_k(1-(ab)^{-t}) / (a^{-t} + b^t) * c^{xt}`.
pub fn poly_euler_abc(k: i64, x: &Rational, params: &LogParams, order: usize) -> Vec<Rational> {
    let denominator = power_of_exp_pair(&params.alpha, &params.beta, 1, order);
    euler_type(
        &KVector::single(k),
        &params.log_ab(),
        &denominator,
        &(x * params.gamma_or_zero()),
        order,
    )
}

/// `out_n = sum_i C(n, i) factor^{n-i} seq_i`, the coefficients of
/// `seq(t) * e^{factor t}`.
fn binomial_shift(seq: &[Rational], factor: &Rational) -> Vec<Rational> {
    let factor_pow = powers(factor, seq.len());
    (0..seq.len())
        .map(|n| {
            (0..=n)
                .map(|i| &seq[i] * Rational::from_integer(binomial(n, i)) * &factor_pow[n - i])
                .sum()
        })
        .collect()
}

/// `E_n^{(k)}(ln a / (ln a + ln b)) * (ln a + ln b)^n`.
pub fn thm1_rhs(ks: &KVector, params: &LogParams, order: usize) -> Result<Vec<Rational>> {
    let s = params.log_ab();
    if s.is_zero() {
        return Err(Error::DegenerateParams);
    }
    let values = multi_poly_euler(ks, &(&params.alpha / &s), order);
    Ok(values
        .iter()
        .zip(powers(&s, order))
        .map(|(v, p)| v * p)
        .collect())
}

/// `sum_i r^{n-i} (ln a + ln b)^i (ln a)^{n-i} C(n, i) E_i^{(k)}`.
pub fn thm2_rhs(ks: &KVector, params: &LogParams, order: usize) -> Vec<Rational> {
    let r = int(ks.depth());
    let s = params.log_ab();
    let numbers = multi_poly_euler(ks, &Rational::zero(), order);
    let ra_pow = powers(&(r * &params.alpha), order);
    let s_pow = powers(&s, order);
    (0..=order)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    &ra_pow[n - i]
                        * &s_pow[i]
                        * Rational::from_integer(binomial(n, i))
                        * &numbers[i]
                })
                .sum()
        })
        .collect()
}

/// `sum_i C(n, i) r^{n-i} E_i^{(k)}(a, b) x^{n-i}`.
pub fn cor1_rhs(ks: &KVector, x: &Rational, params: &LogParams, order: usize) -> Vec<Rational> {
    let ab = multi_poly_euler_ab(ks, params, order);
    binomial_shift(&ab, &(x * int(ks.depth())))
}

/// Which power of `r` multiplies the inner term of the combined double sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CombinedVariant {
    /// `r^{n-k}`, as the relation is usually written down.
    Printed,
    /// `r^{n-j}`, what substituting the `(a, b)` expansion into the
    /// `(x; a, b)` expansion actually produces.
    Substituted,
}

/// `sum_{k=0}^{n} sum_{j=0}^{k} r^{e} C(n,k) C(k,j) (ln a)^{k-j} (ln a + ln b)^j E_j x^{n-k}`
/// with `e = n - k` or `e = n - j` depending on `variant`.
pub fn combined_rhs(
    ks: &KVector,
    x: &Rational,
    params: &LogParams,
    order: usize,
    variant: CombinedVariant,
) -> Vec<Rational> {
    let r = int(ks.depth());
    let s = params.log_ab();
    let numbers = multi_poly_euler(ks, &Rational::zero(), order);
    let (r_pow, a_pow, s_pow, x_pow) = (
        powers(&r, order),
        powers(&params.alpha, order),
        powers(&s, order),
        powers(x, order),
    );
    // s^j E_j does not depend on n or k
    let weighted: Vec<Rational> = numbers.iter().zip(&s_pow).map(|(e, p)| e * p).collect();
    (0..=order)
        .map(|n| {
            let mut acc = Rational::zero();
            for k in 0..=n {
                let mut inner = Rational::zero();
                for j in 0..=k {
                    let r_power = match variant {
                        CombinedVariant::Printed => n - k,
                        CombinedVariant::Substituted => n - j,
                    };
                    inner += &r_pow[r_power]
                        * Rational::from_integer(binomial(k, j))
                        * &a_pow[k - j]
                        * &weighted[j];
                }
                acc += inner * Rational::from_integer(binomial(n, k)) * &x_pow[n - k];
            }
            acc
        })
        .collect()
}

/// `sum_k C(n, k) r^{n-k} E_k^{(k)}(x; a, b) y^{n-k}`.
pub fn addition_rhs(
    ks: &KVector,
    x: &Rational,
    y: &Rational,
    params: &LogParams,
    order: usize,
) -> Vec<Rational> {
    let at_x = multi_poly_euler_xab(ks, x, params, order);
    binomial_shift(&at_x, &(y * int(ks.depth())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::pow_int;
    use crate::polyfamily::poly_euler;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ks(v: &[i64]) -> KVector {
        KVector::new(v.to_vec()).unwrap()
    }

    fn zero() -> Rational {
        Rational::zero()
    }

    #[test]
    fn multi_poly_bernoulli_values() {
        let b1 = multi_poly_bernoulli(&ks(&[1]), 6).unwrap();
        assert_eq!(b1[1], q(1, 2));
        let b11 = multi_poly_bernoulli(&ks(&[1, 1]), 4).unwrap();
        assert_eq!(&b11[..2], &[q(1, 2), q(1, 2)][..]);
    }

    /// (t^2/2) (t/(1-e^{-t}))^2 / t^2 expanded independently: t/(1-e^{-t}) = 1 + t/2 + t^2/12 + ...,
    /// its square is 1 + t + 5t^2/12 + ..., halved gives EGF coefficients 1/2, 1/2, 5/12.
    #[test]
    fn multi_poly_bernoulli_depth_two_oracle() {
        let b11 = multi_poly_bernoulli(&ks(&[1, 1]), 2).unwrap();
        assert_eq!(b11, vec![q(1, 2), q(1, 2), q(5, 12)]);
    }

    #[test]
    fn multi_poly_euler_values() {
        let e = multi_poly_euler(&ks(&[1, 1]), &zero(), 4);
        assert_eq!(&e[..3], &[q(0, 1), q(0, 1), q(1, 2)][..]);
        assert_eq!(
            multi_poly_euler(&ks(&[1]), &q(1, 3), 8),
            poly_euler(1, &q(1, 3), 8)
        );
        let deep = multi_poly_euler(&ks(&[2, -1, 1]), &zero(), 6);
        assert!(deep[..3].iter().all(Zero::is_zero));
        assert!(!deep[3].is_zero());
    }

    #[test]
    fn ab_family_special_parameters() {
        let kv = ks(&[1, 2]);
        let plain = multi_poly_euler(&kv, &zero(), 8);
        assert_eq!(
            multi_poly_euler_ab(&kv, &LogParams::new(q(0, 1), q(1, 1)), 8),
            plain
        );

        let half = multi_poly_euler(&kv, &q(1, 2), 8);
        let scaled: Vec<Rational> = half
            .iter()
            .enumerate()
            .map(|(n, v)| v * pow_int(&q(2, 1), n))
            .collect();
        assert_eq!(
            multi_poly_euler_ab(&kv, &LogParams::new(q(1, 1), q(1, 1)), 8),
            scaled
        );

        let degenerate = LogParams::new(q(1, 1), q(-1, 1));
        assert!(multi_poly_euler_ab(&kv, &degenerate, 8)
            .iter()
            .all(Zero::is_zero));
        assert!(
            multi_poly_euler_xab(&ks(&[1]), &q(2, 1), &LogParams::new(zero(), zero()), 8)
                .iter()
                .all(Zero::is_zero)
        );
    }

    #[test]
    fn abc_family_reductions() {
        let p = LogParams::new(q(2, 3), q(-1, 5));
        assert_eq!(
            poly_euler_abc(2, &zero(), &p.clone().with_gamma(q(7, 2)), 8),
            multi_poly_euler_ab(&ks(&[2]), &p, 8)
        );
        assert_eq!(
            poly_euler_abc(2, &q(3, 1), &p, 8),
            multi_poly_euler_ab(&ks(&[2]), &p, 8)
        );

        let e_params = LogParams::new(zero(), q(1, 1)).with_gamma(q(1, 1));
        assert_eq!(
            poly_euler_abc(1, &q(5, 7), &e_params, 8),
            poly_euler(1, &q(5, 7), 8)
        );

        let degenerate = LogParams::new(q(1, 1), q(-1, 1)).with_gamma(q(1, 1));
        assert!(poly_euler_abc(3, &q(1, 1), &degenerate, 6)
            .iter()
            .all(Zero::is_zero));
    }

    #[test]
    fn theorem_one_right_side() {
        let kv = ks(&[2, 1]);
        assert_eq!(
            thm1_rhs(&kv, &LogParams::new(q(0, 1), q(1, 1)), 6).unwrap(),
            multi_poly_euler(&kv, &zero(), 6)
        );
        let thirds = multi_poly_euler(&kv, &q(2, 3), 6);
        let expected: Vec<Rational> = thirds
            .iter()
            .enumerate()
            .map(|(n, v)| v * pow_int(&q(3, 1), n))
            .collect();
        assert_eq!(
            thm1_rhs(&kv, &LogParams::new(q(2, 1), q(1, 1)), 6).unwrap(),
            expected
        );
        assert_eq!(
            thm1_rhs(&kv, &LogParams::new(q(1, 2), q(-1, 2)), 6),
            Err(Error::DegenerateParams)
        );
    }

    #[test]
    fn theorem_two_right_side() {
        let kv = ks(&[1, 1]);
        let rhs = thm2_rhs(&kv, &LogParams::new(q(1, 1), q(1, 1)), 2);
        assert_eq!(rhs[2], q(2, 1));
        let plain = multi_poly_euler(&kv, &zero(), 5);
        assert_eq!(thm2_rhs(&kv, &LogParams::new(zero(), q(1, 1)), 5), plain);
    }

    #[test]
    fn corollary_one_right_side() {
        let kv = ks(&[1]);
        let p = LogParams::new(zero(), q(1, 1));
        let ab = multi_poly_euler_ab(&kv, &p, 4);
        let rhs = cor1_rhs(&kv, &q(1, 1), &p, 4);
        assert_eq!(rhs[0], ab[0]);
        assert_eq!(rhs[1], &ab[1] + &ab[0]);
        assert_eq!(cor1_rhs(&kv, &zero(), &p, 4), ab);
        assert_eq!(rhs, multi_poly_euler_xab(&kv, &q(1, 1), &p, 4));
    }

    #[test]
    fn combined_relation_variants() {
        let p = LogParams::new(q(1, 1), q(1, 1));
        let kv = ks(&[1]);
        let lhs = multi_poly_euler_xab(&kv, &q(1, 1), &p, 6);
        // depth one: both powers of r are 1
        assert_eq!(
            combined_rhs(&kv, &q(1, 1), &p, 6, CombinedVariant::Printed),
            lhs
        );
        let kv = ks(&[1, 2]);
        let p = LogParams::new(q(3, 2), q(-1, 3));
        assert_eq!(
            combined_rhs(&kv, &zero(), &p, 6, CombinedVariant::Substituted),
            thm2_rhs(&kv, &p, 6)
        );
        assert_ne!(
            combined_rhs(&kv, &zero(), &p, 6, CombinedVariant::Printed),
            thm2_rhs(&kv, &p, 6)
        );
        let lhs = multi_poly_euler_xab(&kv, &q(2, 5), &p, 6);
        assert_eq!(
            combined_rhs(&kv, &q(2, 5), &p, 6, CombinedVariant::Substituted),
            lhs
        );
        assert_ne!(
            combined_rhs(&kv, &q(2, 5), &p, 6, CombinedVariant::Printed),
            lhs
        );
    }

    #[test]
    fn addition_right_side() {
        let kv = ks(&[2, -1]);
        let p = LogParams::new(q(1, 3), q(4, 5));
        let (x, y) = (q(-2, 7), q(3, 2));
        assert_eq!(
            addition_rhs(&kv, &x, &zero(), &p, 6),
            multi_poly_euler_xab(&kv, &x, &p, 6)
        );
        assert_eq!(
            addition_rhs(&kv, &zero(), &zero(), &p, 6),
            multi_poly_euler_ab(&kv, &p, 6)
        );
        assert_eq!(
            addition_rhs(&kv, &x, &y, &p, 6),
            addition_rhs(&kv, &y, &x, &p, 6)
        );
        assert_eq!(
            addition_rhs(&kv, &x, &y, &p, 6),
            multi_poly_euler_xab(&kv, &(&x + &y), &p, 6)
        );
    }
}
