//! Exact scalars, truncated exponential generating functions, matrices and
//! polynomials. Every other module is built on these.

mod egf;
mod matrix;
mod poly;
mod rational;

pub use egf::{Egf, Series};
pub use matrix::RationalMatrix;
pub use poly::Poly;
pub use rational::{binomial, factorial, format_rational, parse_rational, pow_int, Rational};
