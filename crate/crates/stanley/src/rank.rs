//! Linear and affine rank of generator exponent vectors, over exact rationals.
//!
//! rank(I) is the size of a maximal linearly independent subset of the
//! minimal generator exponents; arank(I) the size of a maximal affinely
//! independent subset. Affine independence of {v_1, ..., v_k} is linear
//! independence of the homogenized vectors (v_i, 1), so both reduce to the
//! rank of an exact rational matrix. For ideals generated in a single
//! degree the analytic spread ℓ(I) equals both.

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

/// Dense matrix over ℚ, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::InvalidInput("ragged matrix rows".into()));
            }
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }

    /// Rank by Gaussian elimination. The pivot in each column is the
    /// candidate of smallest numerator×denominator magnitude — a swell
    /// heuristic only; the result is exact for any pivot choice.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0usize;
        for col in 0..m.cols {
            let pivot = (rank..m.rows)
                .filter(|&r| !m.entry(r, col).is_zero())
                .min_by_key(|&r| {
                    let e = m.entry(r, col);
                    e.numer().magnitude().bits() + e.denom().magnitude().bits()
                });
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            for r in (rank + 1)..m.rows {
                if m.entry(r, col).is_zero() {
                    continue;
                }
                let factor = m.entry(r, col) / m.entry(rank, col);
                for c in col..m.cols {
                    let delta = &factor * m.entry(rank, c);
                    *m.entry_mut(r, c) -= delta;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Rank of an exact rational matrix.
pub fn matrix_rank(m: &RationalMatrix) -> usize {
    m.rank()
}

fn biguint_to_rational(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Matrix whose rows are the minimal generator exponents, optionally
/// homogenized with a trailing column of ones.
fn generator_matrix(ideal: &MonomialIdeal, homogenize: bool) -> Result<RationalMatrix, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("rank of the zero ideal"));
    }
    let rows = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut row: Vec<BigRational> = g.coords().iter().map(biguint_to_rational).collect();
            if homogenize {
                row.push(BigRational::from_integer(BigInt::from(1)));
            }
            row
        })
        .collect();
    RationalMatrix::from_rows(rows)
}

/// rank(I): max number of linearly independent generator exponent vectors.
pub fn rank_of_ideal(ideal: &MonomialIdeal) -> Result<usize, Error> {
    Ok(generator_matrix(ideal, false)?.rank())
}

/// arank(I): max number of affinely independent generator exponent vectors,
/// computed as the rank of the generator matrix with a ones column appended.
pub fn arank_of_ideal(ideal: &MonomialIdeal) -> Result<usize, Error> {
    Ok(generator_matrix(ideal, true)?.rank())
}

/// Analytic spread ℓ(I) for an ideal generated in a single degree, where it
/// equals rank(I) = arank(I). Outside the single-degree case this artifact
/// does not compute ℓ(I) and errors instead.
pub fn analytic_spread_single_degree(ideal: &MonomialIdeal) -> Result<usize, Error> {
    if !ideal.is_single_degree()? {
        return Err(Error::NotSingleDegree);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("analytic spread of the unit ideal"));
    }
    let rank = rank_of_ideal(ideal)?;
    debug_assert_eq!(
        rank,
        arank_of_ideal(ideal)?,
        "single-degree ideals must have rank = arank"
    );
    Ok(rank)
}
