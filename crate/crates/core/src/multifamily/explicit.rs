//! Finite evaluators for the two closed-form expressions of the multi
//! poly-Euler and `(a,b,c)` poly-Euler polynomials, exactly as they are written.
//!
//! Neither expression is a convergent rearrangement of its generating function,
//! so these are audit instruments: they return a number together with a count of
//! the index combinations that had to be skipped because they divide by zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LogParams;
use crate::exact::{binomial, factorial, pow_int, Rational};
use crate::polylog::{inverse_power, KVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitValue {
    pub value: Rational,
    /// Index combinations dropped because of a `0^{-k}` factor with `k > 0`.
    pub skipped: u64,
}

/// Multiplier of `ln b` inside the power: `m-j+i+1` or `m-j+i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Thm4Variant {
    /// `(m-j+i+1) ln b`
    Statement,
    /// `(m-j+i) ln b`
    Proof,
}

impl Thm4Variant {
    pub fn name(self) -> &'static str {
        match self {
            Thm4Variant::Statement => "statement",
            Thm4Variant::Proof => "proof",
        }
    }
}

/// Visits every non-decreasing tuple `0 <= m_1 <= ... <= m_len <= cap`.
fn for_each_nondecreasing(len: usize, cap: u64, visit: &mut impl FnMut(&[u64])) {
    fn rec(tuple: &mut Vec<u64>, len: usize, lo: u64, cap: u64, visit: &mut impl FnMut(&[u64])) {
        if tuple.len() == len {
            visit(tuple);
            return;
        }
        for m in lo..=cap {
            tuple.push(m);
            rec(tuple, len, m, cap, visit);
            tuple.pop();
        }
    }
    rec(&mut Vec::with_capacity(len), len, 0, cap, visit);
}

/// Visits every `(c_1, ..., c_slots)` of non-negative integers summing to `total`.
fn for_each_weak_composition(total: usize, slots: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(parts: &mut Vec<usize>, left: usize, slots: usize, visit: &mut impl FnMut(&[usize])) {
        if parts.len() + 1 == slots {
            parts.push(left);
            visit(parts);
            parts.pop();
            return;
        }
        for c in 0..=left {
            parts.push(c);
            rec(parts, left - c, slots, visit);
            parts.pop();
        }
    }
    if slots == 0 {
        return;
    }
    rec(&mut Vec::with_capacity(slots), total, slots, visit);
}

/// The quadruple sum
///
/// `sum_{i=0}^{n} sum_{0<=m_1<=...<=m_r, c_1+c_2+...=r} sum_{j=0}^{m_r}
///  2 (rx-j)^{n-i} r! (-1)^{j+c_1+2c_2+...} (c_1+2c_2+...)^i C(m_r,j) C(n,i)
///  / ((c_1! c_2! ...) (m_1^{k_1} ... m_r^{k_r}))`
///
/// with `m_r <= m_cap` and compositions over the slots `c_1..c_{part_cap}`.
///
/// The summand factors into a part depending on `(m, j, n-i)` and a part
/// depending on `(c, i)`, so the two inner sums are accumulated separately and
/// combined per `i`; this is the same finite sum, only bracketed differently.
pub fn thm3_explicit(
    ks: &KVector,
    x: &Rational,
    n: usize,
    m_cap: u64,
    part_cap: usize,
) -> ExplicitValue {
    let r = ks.depth();
    let rx = x * Rational::from_integer(r.into());

    // weight[m] = sum over admissible tuples ending in m_r = m of prod m_i^{-k_i}
    let mut weight = vec![Rational::zero(); m_cap as usize + 1];
    let mut skipped = 0u64;
    for_each_nondecreasing(r, m_cap, &mut |tuple| {
        let mut w = Rational::one();
        for (&m, &k) in tuple.iter().zip(ks.indices()) {
            match inverse_power(m, k) {
                Some(f) => w *= f,
                None => {
                    skipped += 1;
                    return;
                }
            }
        }
        weight[*tuple.last().unwrap() as usize] += w;
    });

    // polylog_part[p] = sum_{m_r} weight[m_r] sum_j (-1)^j C(m_r, j) (rx - j)^p
    let polylog_part: Vec<Rational> = (0..=n)
        .map(|p| {
            let mut acc = Rational::zero();
            for (m_r, w) in weight.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                for j in 0..=m_r {
                    let base = &rx - Rational::from_integer(j.into());
                    let term = w * Rational::from_integer(binomial(m_r, j)) * pow_int(&base, p);
                    if j % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
            acc
        })
        .collect();

    // denominator_part[i] = sum_c r! / prod c_l! * (-1)^s s^i, s = sum l c_l
    let r_fact = factorial(r);
    let mut denominator_part = vec![Rational::zero(); n + 1];
    for_each_weak_composition(r, part_cap, &mut |parts| {
        let s: usize = parts
            .iter()
            .enumerate()
            .map(|(slot, &c)| (slot + 1) * c)
            .sum();
        let multinomial: BigInt = parts
            .iter()
            .fold(BigInt::one(), |acc, &c| acc * factorial(c));
        let coeff = Rational::new(r_fact.clone(), multinomial);
        let coeff = if s % 2 == 0 { coeff } else { -coeff };
        let s = Rational::from_integer(s.into());
        for (i, slot) in denominator_part.iter_mut().enumerate() {
            *slot += &coeff * pow_int(&s, i);
        }
    });

    let two = Rational::from_integer(2.into());
    let value = (0..=n)
        .map(|i| {
            &two * Rational::from_integer(binomial(n, i))
                * &polylog_part[n - i]
                * &denominator_part[i]
        })
        .sum();
    ExplicitValue { value, skipped }
}

/// The triple sum
///
/// `sum_{m=0}^{n} sum_{j=0}^{m} sum_{i=0}^{j} 2 (-1)^{m-j+i} / j^k C(j,i)
///  (x ln c - (m-j+i+1) ln a - (m-j+i+delta) ln b)^n`
///
/// with `delta` chosen by `variant`. Terms with `j = 0` and `k > 0` are skipped
/// and counted; `0^0 = 1`.
pub fn thm4_explicit(
    k: i64,
    x: &Rational,
    params: &LogParams,
    n: usize,
    variant: Thm4Variant,
) -> ExplicitValue {
    let delta = match variant {
        Thm4Variant::Statement => 1,
        Thm4Variant::Proof => 0,
    };
    let x_gamma = x * params.gamma.clone().unwrap_or_else(Rational::zero);
    let two = Rational::from_integer(2.into());
    let mut value = Rational::zero();
    let mut skipped = 0u64;
    for m in 0..=n {
        for j in 0..=m {
            let Some(inv) = inverse_power(j as u64, k) else {
                skipped += (j + 1) as u64;
                continue;
            };
            for i in 0..=j {
                let shift = m - j + i;
                let base = &x_gamma
                    - Rational::from_integer((shift + 1).into()) * &params.alpha
                    - Rational::from_integer((shift + delta).into()) * &params.beta;
                let term = &two * &inv * Rational::from_integer(binomial(j, i)) * pow_int(&base, n);
                if (m - j + i) % 2 == 0 {
                    value += term;
                } else {
                    value -= term;
                }
            }
        }
    }
    ExplicitValue { value, skipped }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn enumerators() {
        let mut tuples = Vec::new();
        for_each_nondecreasing(2, 2, &mut |t| tuples.push(t.to_vec()));
        assert_eq!(
            tuples,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
        let mut comps = Vec::new();
        for_each_weak_composition(2, 2, &mut |c| comps.push(c.to_vec()));
        assert_eq!(comps, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let mut none = 0;
        for_each_weak_composition(2, 0, &mut |_| none += 1);
        assert_eq!(none, 0);
    }

    /// n = 0 and part_cap = 1: only c_1 = r, giving (-1)^r r!/r! = (-1)^r for the
    /// composition factor, times 2 * sum_m w(m) sum_j (-1)^j C(m_r, j) = 2 w(0..) at m_r = 0.
    #[test]
    fn single_composition_bookkeeping() {
        // k = 0, r = 1: weights are 1 for every m, inner alternating binomial sum is [m_r = 0].
        let kv = KVector::new(vec![0]).unwrap();
        let v = thm3_explicit(&kv, &q(0, 1), 0, 5, 1);
        assert_eq!(v.value, q(-2, 1));
        assert_eq!(v.skipped, 0);
        let kv = KVector::new(vec![0, 0]).unwrap();
        assert_eq!(thm3_explicit(&kv, &q(0, 1), 0, 5, 1).value, q(2, 1));
    }

    #[test]
    fn skipped_tuples_are_counted() {
        // r = 1, k = 1: only m_1 = 0 divides by zero.
        let kv = KVector::new(vec![1]).unwrap();
        assert_eq!(thm3_explicit(&kv, &q(1, 2), 2, 4, 3).skipped, 1);
        // r = 2, k = (1, 1): tuples with m_1 = 0 (m_2 in 0..=4) are dropped.
        let kv = KVector::new(vec![1, 1]).unwrap();
        assert_eq!(thm3_explicit(&kv, &q(1, 2), 2, 4, 3).skipped, 5);
        // k = -1 at zero index is 0, not skipped.
        let kv = KVector::new(vec![-1, 2]).unwrap();
        assert_eq!(thm3_explicit(&kv, &q(0, 1), 1, 3, 2).skipped, 1);
    }

    #[test]
    fn part_cap_changes_value() {
        let kv = KVector::new(vec![1]).unwrap();
        let values: Vec<Rational> = [4, 8, 12]
            .iter()
            .map(|&p| thm3_explicit(&kv, &q(0, 1), 2, 8, p).value)
            .collect();
        assert!(values[0] != values[1] || values[1] != values[2]);
    }

    #[test]
    fn thm4_variants_differ_from_degree_three() {
        let p = LogParams::new(q(1, 1), q(1, 1)).with_gamma(q(1, 1));
        // The alternating binomial sum over i kills the ln b difference at low degree.
        for n in 0..=5 {
            let s = thm4_explicit(2, &q(1, 1), &p, n, Thm4Variant::Statement);
            let pr = thm4_explicit(2, &q(1, 1), &p, n, Thm4Variant::Proof);
            if n <= 2 {
                assert_eq!(s.value, pr.value, "n = {n}");
            } else {
                assert_ne!(s.value, pr.value, "n = {n}");
            }
        }
        let s = thm4_explicit(2, &q(1, 1), &p, 3, Thm4Variant::Statement).value;
        let pr = thm4_explicit(2, &q(1, 1), &p, 3, Thm4Variant::Proof).value;
        assert_eq!(s - pr, q(84, 1));
        let p0 = LogParams::new(q(1, 1), q(0, 1)).with_gamma(q(1, 1));
        assert_eq!(
            thm4_explicit(2, &q(1, 1), &p0, 3, Thm4Variant::Statement),
            thm4_explicit(2, &q(1, 1), &p0, 3, Thm4Variant::Proof)
        );
    }

    #[test]
    fn thm4_zero_index_conventions() {
        let p = LogParams::new(q(1, 2), q(1, 3)).with_gamma(q(2, 1));
        // n = 0, k = 0: every term is 2(-1)^{m-j+i} C(j,i); only (m, j, i) = (0, 0, 0) remains.
        assert_eq!(
            thm4_explicit(0, &q(1, 1), &p, 0, Thm4Variant::Statement).value,
            q(2, 1)
        );
        let v = thm4_explicit(1, &q(1, 1), &p, 0, Thm4Variant::Statement);
        assert_eq!(v.skipped, 1);
        assert_eq!(v.value, q(0, 1));
        let v = thm4_explicit(1, &q(1, 1), &p, 2, Thm4Variant::Proof);
        assert_eq!(v.skipped, 3);
    }
}
