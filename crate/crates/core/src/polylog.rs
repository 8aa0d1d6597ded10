//! Polylogarithm and multiple polylogarithm series, and their substitution into
//! exponential generating functions.
//!
//! `Li_{(k_1,...,k_r)}(z) = sum z^{m_r} / (m_1^{k_1} ... m_r^{k_r})` over strictly
//! increasing `1 <= m_1 < ... < m_r`. Non-positive `k_i` go through the same
//! finite sum; the rational-function closed forms are only used as test oracles.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{Egf, Rational, Series};
use crate::{Error, Result};

/// Polylogarithm indices `(k_1, ..., k_r)`, `r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KVector(Vec<i64>);

impl KVector {
    pub fn new(ks: Vec<i64>) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::EmptyKVector);
        }
        Ok(KVector(ks))
    }

    pub fn single(k: i64) -> Self {
        KVector(vec![k])
    }

    /// Depth `r`.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[i64] {
        &self.0
    }
}

impl FromStr for KVector {
    type Err = Error;

    /// Comma-separated integers: `2,1,-1`.
    fn from_str(s: &str) -> Result<Self> {
        let ks = s
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseKVector(s.to_string()))?;
        KVector::new(ks).map_err(|_| Error::ParseKVector(s.to_string()))
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `m^{-k}` for `m >= 1`; also `0^0 = 1` and `0^{-k} = 0` for `k < 0`.
/// Returns `None` for `0^{-k}` with `k > 0`.
pub(crate) fn inverse_power(m: u64, k: i64) -> Option<Rational> {
    if m == 0 {
        return match k.cmp(&0) {
            std::cmp::Ordering::Greater => None,
            std::cmp::Ordering::Equal => Some(Rational::one()),
            std::cmp::Ordering::Less => Some(Rational::zero()),
        };
    }
    let power = num_traits::pow(BigInt::from(m), k.unsigned_abs() as usize);
    Some(if k >= 0 {
        Rational::new(BigInt::one(), power)
    } else {
        Rational::from_integer(power)
    })
}

/// `Li_k(z)` truncated after `z^order`.
pub fn li_series(k: i64, order: usize) -> Series {
    multi_li_series(&KVector::single(k), order)
}

/// `Li_{(k_1,...,k_r)}(z)` truncated after `z^order`.
pub fn multi_li_series(ks: &KVector, order: usize) -> Series {
    // nested[m] = sum over 1 <= m_1 < ... < m_i = m of prod m_j^{-k_j}
    let mut nested: Vec<Rational> = (0..=order)
        .map(|m| {
            if m == 0 {
                Rational::zero()
            } else {
                inverse_power(m as u64, ks.0[0]).unwrap()
            }
        })
        .collect();
    for &k in &ks.0[1..] {
        let mut prefix = Rational::zero();
        let mut next = vec![Rational::zero(); order + 1];
        for m in 1..=order {
            if !prefix.is_zero() {
                next[m] = &prefix * inverse_power(m as u64, k).unwrap();
            }
            prefix += &nested[m];
        }
        nested = next;
    }
    Series::new(nested)
}

/// `Li_{(k)}(inner(t))` through `t^order` (or less if `inner` is shorter).
pub fn li_of_inner(ks: &KVector, inner: &Egf, order: usize) -> Result<Egf> {
    let order = order.min(inner.order());
    multi_li_series(ks, order).compose(&inner.truncate(order))
}

/// `Li_{(k)}(1 - e^{-lambda t})`, composed at `lambda = 1` and then dilated.
pub fn li_of_one_minus_exp(ks: &KVector, lambda: &Rational, order: usize) -> Egf {
    thread_local! {
        static UNIT: RefCell<HashMap<(KVector, usize), Egf>> = RefCell::new(HashMap::new());
    }
    UNIT.with(|cache| {
        let mut cache = cache.borrow_mut();
        let unit = cache.entry((ks.clone(), order)).or_insert_with(|| {
            li_of_inner(ks, &one_minus_exp(&Rational::one(), order), order)
                .expect("inner vanishes at 0")
        });
        unit.dilate(lambda)
    })
}

/// `1 - e^{-lambda t}`, the inner argument used by every family here.
pub fn one_minus_exp(lambda: &Rational, order: usize) -> Egf {
    &Egf::one(order) - &Egf::exp_linear(&-lambda, order)
}
