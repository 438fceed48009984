//! Double description vertex enumeration for polytopes inside the unit box.
//!
//! Vertices are kept as primitive homogeneous integer vectors `(x·t, t)` with
//! `t > 0`. The enumeration starts from the `2^d` box vertices and cuts by
//! one extra row at a time; new vertices arise on edges between a vertex of
//! positive and one of negative slack, with adjacency decided by the
//! combinatorial test on tight-row bitsets.

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// A row `coeffs · x ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntRow {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
}

#[derive(Debug, Clone)]
pub(crate) struct HomogeneousVertex {
    /// `d` numerators followed by the common denominator.
    pub coords: Vec<i128>,
    tight: Vec<u64>,
}

fn slack(v: &HomogeneousVertex, row: &IntRow) -> Result<i128> {
    let d = row.coeffs.len();
    let mut acc: i128 = 0;
    for (a, x) in row.coeffs.iter().zip(&v.coords[..d]) {
        if *a != 0 {
            let term = (*a as i128).checked_mul(*x).ok_or(Error::Overflow("vertex enumeration"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("vertex enumeration"))?;
        }
    }
    let rhs = (row.rhs as i128).checked_mul(v.coords[d]).ok_or(Error::Overflow("vertex enumeration"))?;
    acc.checked_sub(rhs).ok_or(Error::Overflow("vertex enumeration"))
}

#[inline]
fn set_bit(bits: &mut [u64], k: usize) {
    bits[k / 64] |= 1 << (k % 64);
}

#[inline]
fn popcount(bits: &[u64]) -> u32 {
    bits.iter().map(|w| w.count_ones()).sum()
}

#[inline]
fn contains_all(sup: &[u64], sub: &[u64]) -> bool {
    sup.iter().zip(sub).all(|(a, b)| b & !a == 0)
}

fn combine(p: &HomogeneousVertex, sp: i128, q: &HomogeneousVertex, sq: i128) -> Result<Vec<i128>> {
    // sp > 0 > sq; the result has zero slack.
    let overflow = Error::Overflow("vertex enumeration");
    let mut out = Vec::with_capacity(p.coords.len());
    for (a, b) in p.coords.iter().zip(&q.coords) {
        let x = sp
            .checked_mul(*b)
            .and_then(|u| sq.checked_mul(*a).and_then(|v| u.checked_sub(v)))
            .ok_or(overflow.clone())?;
        out.push(x);
    }
    let g = out.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in &mut out {
            *x /= g;
        }
    }
    Ok(out)
}

/// Vertices of `{x ∈ [0,1]^d : row · x ≥ rhs for every row}`.
pub(crate) fn enumerate(d: usize, rows: &[IntRow]) -> Result<Vec<HomogeneousVertex>> {
    if d == 0 {
        return Err(Error::argument("dimension must be at least 1"));
    }
    let total_rows = 2 * d + rows.len();
    let words = total_rows.div_ceil(64);
    // Box rows: 2k is x_k ≥ 0, 2k + 1 is x_k ≤ 1.
    let mut verts: Vec<HomogeneousVertex> = (0..1u64 << d)
        .map(|mask| {
            let mut coords: Vec<i128> = (0..d).map(|k| (mask >> k & 1) as i128).collect();
            coords.push(1);
            let mut tight = vec![0u64; words];
            for k in 0..d {
                set_bit(&mut tight, 2 * k + (mask >> k & 1) as usize);
            }
            HomogeneousVertex { coords, tight }
        })
        .collect();

    for (offset, row) in rows.iter().enumerate() {
        if row.coeffs.len() != d {
            return Err(Error::Dimension { expected: d, got: row.coeffs.len() });
        }
        let bit = 2 * d + offset;
        let slacks: Vec<i128> = verts.iter().map(|v| slack(v, row)).collect::<Result<_>>()?;
        let neg: Vec<usize> = (0..verts.len()).filter(|&i| slacks[i] < 0).collect();
        if neg.is_empty() {
            for (v, s) in verts.iter_mut().zip(&slacks) {
                if *s == 0 {
                    set_bit(&mut v.tight, bit);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..verts.len()).filter(|&i| slacks[i] > 0).collect();
        let needed = d as u32 - 1;
        let current = &verts;
        let created: Vec<Result<HomogeneousVertex>> = pos
            .par_iter()
            .flat_map_iter(|&p| {
                let slacks = &slacks;
                neg.iter().filter_map(move |&q| {
                    let common: Vec<u64> = current[p].tight.iter().zip(&current[q].tight).map(|(a, b)| a & b).collect();
                    if popcount(&common) < needed {
                        return None;
                    }
                    let blocked =
                        current.iter().enumerate().any(|(r, v)| r != p && r != q && contains_all(&v.tight, &common));
                    if blocked {
                        return None;
                    }
                    Some(combine(&current[p], slacks[p], &current[q], slacks[q]).map(|coords| {
                        let mut tight = common;
                        set_bit(&mut tight, bit);
                        HomogeneousVertex { coords, tight }
                    }))
                })
            })
            .collect();
        let mut next: Vec<HomogeneousVertex> = Vec::with_capacity(verts.len());
        for (mut v, s) in verts.into_iter().zip(slacks) {
            if s == 0 {
                set_bit(&mut v.tight, bit);
                next.push(v);
            } else if s > 0 {
                next.push(v);
            }
        }
        for v in created {
            next.push(v?);
        }
        verts = next;
        if verts.is_empty() {
            break;
        }
    }
    Ok(verts)
}
