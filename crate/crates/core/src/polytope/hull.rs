//! Exact convex-combination search by phase-1 simplex with Bland's rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::setsys::{Point, SetSystem};

/// Weights `λ_p ≥ 0` with `Σ λ_p = 1` and `Σ λ_p p = x`, restricted to the
/// points with positive weight, or `None` when `x ∉ conv(S)`.
pub fn convex_combination(s: &SetSystem, x: &[Rational]) -> Result<Option<Vec<(Point, Rational)>>> {
    let n = s.dim();
    if x.len() != n {
        return Err(Error::Dimension { expected: n, got: x.len() });
    }
    if s.is_empty() {
        return Ok(None);
    }
    let pts = s.points();
    let cols = pts.len();
    let rows = n + 1;
    let width = cols + rows + 1;
    let one = BigRational::one();
    let zero = BigRational::zero();

    // Row k < n: Σ λ_p p_k = x_k; row n: Σ λ_p = 1. Artificial per row.
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for k in 0..rows {
        let mut row = vec![zero.clone(); width];
        let (rhs, coeff): (Rational, Box<dyn Fn(Point) -> bool>) =
            if k < n { (x[k].clone(), Box::new(move |p: Point| p.get(k))) } else { (one.clone(), Box::new(|_| true)) };
        let flip = rhs.is_negative();
        for (j, &p) in pts.iter().enumerate() {
            if coeff(p) {
                row[j] = if flip { -one.clone() } else { one.clone() };
            }
        }
        row[cols + k] = one.clone();
        row[width - 1] = if flip { -rhs } else { rhs };
        t.push(row);
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    // Reduced costs of the phase-1 objective Σ artificials.
    let mut cost = vec![zero.clone(); width];
    for j in (0..cols).chain(std::iter::once(width - 1)) {
        cost[j] = -t.iter().map(|r| r[j].clone()).sum::<Rational>();
    }

    while let Some(enter) = (0..width - 1).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave.ok_or_else(|| Error::internal("phase-1 simplex is unbounded"))?;
        let piv = t[r][enter].clone();
        for v in t[r].iter_mut() {
            *v = &*v / &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (v, p) in cost.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        basis[r] = enter;
    }
    if !cost[width - 1].is_zero() {
        return Ok(None);
    }
    let mut weights: Vec<(Point, Rational)> = basis
        .iter()
        .zip(&t)
        .filter(|(&b, row)| b < cols && row[width - 1].is_positive())
        .map(|(&b, row)| (pts[b], row[width - 1].clone()))
        .collect();
    weights.sort_by_key(|(p, _)| *p);
    Ok(Some(weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn half_point_of_antipodal_pair() {
        let s = SetSystem::from_bitstrings(3, ["000", "111"]).unwrap();
        let x = vec![frac(1, 2); 3];
        let w = convex_combination(&s, &x).unwrap().unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|(_, l)| *l == frac(1, 2)));
    }

    #[test]
    fn combination_reproduces_target() {
        let s = SetSystem::from_bitstrings(3, ["000", "100", "110", "111"]).unwrap();
        let x = vec![frac(3, 4), frac(1, 2), frac(1, 4)];
        let w = convex_combination(&s, &x).unwrap().unwrap();
        for (k, xk) in x.iter().enumerate() {
            let coord: Rational = w.iter().filter(|(p, _)| p.get(k)).map(|(_, l)| l.clone()).sum();
            assert_eq!(&coord, xk);
        }
        assert_eq!(w.iter().map(|(_, l)| l.clone()).sum::<Rational>(), frac(1, 1));
    }

    #[test]
    fn outside_point_has_no_combination() {
        let s = SetSystem::from_bitstrings(3, ["000", "100", "110", "111"]).unwrap();
        let x = vec![frac(1, 4), frac(1, 2), frac(1, 2)];
        assert!(convex_combination(&s, &x).unwrap().is_none());
    }
}
