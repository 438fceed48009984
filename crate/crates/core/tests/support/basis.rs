//! Vertex enumeration by exhaustive basis enumeration in exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Row = (Vec<i64>, i64);

pub fn box_rows(n: usize) -> Vec<Row> {
    let mut rows = Vec::new();
    for k in 0..n {
        let mut lo = vec![0; n];
        lo[k] = 1;
        rows.push((lo, 0));
        let mut hi = vec![0; n];
        hi[k] = -1;
        rows.push((hi, -1));
    }
    rows
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Solves the square system `A x = b`, or `None` when singular.
fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> =
        a.iter().zip(b).map(|(row, &rhs)| row.iter().map(|&x| q(x)).chain([q(rhs)]).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v = &*v / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (v, pv) in m[r].iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
    }
    debug_assert!(m.iter().enumerate().all(|(i, r)| r[i].is_one()));
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every feasible basic solution, deduplicated and sorted.
pub fn vertices(n: usize, rows: &[Row]) -> Vec<Vec<BigRational>> {
    let mut out = Vec::new();
    for subset in combinations(rows.len(), n) {
        let a: Vec<Vec<i64>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<i64> = subset.iter().map(|&i| rows[i].1).collect();
        let Some(x) = solve(&a, &b) else { continue };
        let feasible = rows.iter().all(|(c, r)| {
            let lhs: BigRational = c.iter().zip(&x).map(|(&ci, xi)| xi * q(ci)).sum();
            lhs >= q(*r)
        });
        if feasible {
            out.push(x);
        }
    }
    out.sort();
    out.dedup();
    out
}
