//! Seeded parameter grids shared by the audit cases and the acceptance suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;
use crate::multifamily::LogParams;
use crate::polylog::KVector;

/// Independent RNG streams derived from one seed.
#[derive(Debug, Clone, Copy)]
#[repr(u64)]
pub enum Stream {
    MultiGrid = 1,
    Thm4Grid = 2,
    Reduction = 3,
}

/// One random point: `ln a`, `ln b`, `ln c`, `x`, `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePoint {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub x: Rational,
    pub y: Rational,
}

impl SamplePoint {
    pub fn params(&self) -> LogParams {
        LogParams::new(self.alpha.clone(), self.beta.clone()).with_gamma(self.gamma.clone())
    }
}

/// Numerator in `-10..=10`, denominator in `1..=10`.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-10..=10);
    let den: i64 = rng.gen_range(1..=10);
    Rational::new(num.into(), den.into())
}

/// `count` points with `alpha + beta != 0`, reproducible from `(seed, stream)`.
pub fn sample_points(seed: u64, stream: Stream, count: usize) -> Vec<SamplePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let alpha = small_rational(&mut rng);
        let beta = small_rational(&mut rng);
        let gamma = small_rational(&mut rng);
        let x = small_rational(&mut rng);
        let y = small_rational(&mut rng);
        if (&alpha + &beta) == Rational::from_integer(0.into()) {
            continue;
        }
        points.push(SamplePoint {
            alpha,
            beta,
            gamma,
            x,
            y,
        });
    }
    points
}

/// Every k-vector of depth `1..=max_depth` with entries drawn from `entries`,
/// shorter vectors first, lexicographic within a depth.
pub fn kvector_grid(entries: &[i64], max_depth: usize) -> Vec<KVector> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_depth {
        layer = layer
            .iter()
            .flat_map(|prefix| {
                entries.iter().map(move |&k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
        out.extend(
            layer
                .iter()
                .map(|v| KVector::new(v.clone()).expect("non-empty")),
        );
    }
    out
}
