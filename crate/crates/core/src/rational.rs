//! Exact rational vectors and fraction-free rank computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type RationalVector = Vec<BigRational>;

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(v.into())
}

pub fn frac(num: i64, den: i64) -> Rational {
    BigRational::new(num.into(), den.into())
}

/// `p/q`, or `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Comma-separated exact coordinates.
pub fn format_vector(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::argument(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn parse_vector(s: &str) -> Result<RationalVector> {
    s.split(',').map(parse_rational).collect()
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Scales a rational row to a primitive integer row.
fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub fn rank_integer(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of a small-integer matrix, e.g. 0/1 incidence vectors.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    rank_integer(&big)
}

pub fn rank(rows: &[RationalVector]) -> usize {
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    rank_integer(&big)
}

/// Dimension of the affine hull of `points` (`-1` encoded as `None` for an
/// empty set).
pub fn affine_dimension(points: &[RationalVector]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<RationalVector> = rest.iter().map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect()).collect();
    Some(rank(&diffs))
}

/// Whether `x` lies in the affine hull of `points`.
pub fn in_affine_hull(points: &[RationalVector], x: &[Rational]) -> bool {
    let Some(dim) = affine_dimension(points) else {
        return false;
    };
    let mut with_x = points.to_vec();
    with_x.push(x.to_vec());
    affine_dimension(&with_x) == Some(dim)
}
