use num_traits::{One, Zero};

use super::rational::Rational;
use crate::{Error, Result};

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                got: entries.len(),
            });
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from `f(row, col)` with zero-based indices.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let entries = (0..rows * cols).map(|i| f(i / cols, i % cols)).collect();
        RationalMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    /// Exact determinant by Gaussian elimination with full pivoting.
    ///
    /// The pivot at each step is the first non-zero entry (row-major) of the
    /// remaining lower-right block; every row or column swap flips the sign.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = self.entries.chunks(n.max(1)).map(<[_]>::to_vec).collect();
        let mut det = Rational::one();
        for k in 0..n {
            let pivot = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero());
            let Some((pi, pj)) = pivot else {
                return Ok(Rational::zero());
            };
            if pi != k {
                a.swap(pi, k);
                det = -det;
            }
            if pj != k {
                for row in a.iter_mut() {
                    row.swap(pj, k);
                }
                det = -det;
            }
            let p = a[k][k].clone();
            det *= &p;
            for i in (k + 1)..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let factor = &a[i][k] / &p;
                for j in k..n {
                    let delta = &factor * &a[k][j];
                    a[i][j] -= delta;
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    /// Laplace expansion along the first row; independent of elimination.
    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn small_determinants() {
        let m = RationalMatrix::new(1, 1, vec![q(1, 2)]).unwrap();
        assert_eq!(m.det().unwrap(), q(1, 2));
        let m = RationalMatrix::new(2, 2, vec![q(1, 2), q(1, 3), q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(m.det().unwrap(), q(1, 6));
        assert_eq!(RationalMatrix::identity(3).det().unwrap(), q(1, 1));
        assert_eq!(RationalMatrix::identity(0).det().unwrap(), q(1, 1));
    }

    #[test]
    fn zero_leading_entry_needs_pivoting() {
        let m = RationalMatrix::new(2, 2, vec![q(0, 1), q(1, 1), q(1, 1), q(0, 1)]).unwrap();
        assert_eq!(m.det().unwrap(), q(-1, 1));
        let singular = RationalMatrix::new(2, 2, vec![q(1, 1), q(2, 1), q(2, 1), q(4, 1)]).unwrap();
        assert_eq!(singular.det().unwrap(), q(0, 1));
    }

    #[test]
    fn rejects_non_square_and_bad_shape() {
        let m = RationalMatrix::new(2, 3, vec![q(1, 1); 6]).unwrap();
        assert_eq!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert!(RationalMatrix::new(2, 2, vec![q(1, 1); 3]).is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=6).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn elimination_matches_cofactor_expansion(
            n in 3usize..=4,
            // Many zeros exercise the pivot search.
            raw in prop::collection::vec(prop_oneof![Just(q(0, 1)), small_rational()], 16),
        ) {
            let entries: Vec<Rational> = raw[..n * n].to_vec();
            let rows: Vec<Vec<Rational>> = entries.chunks(n).map(<[_]>::to_vec).collect();
            let m = RationalMatrix::new(n, n, entries).unwrap();
            prop_assert_eq!(m.det().unwrap(), cofactor_det(&rows));
        }
    }
}
