//! Set-systems over `{0,1}^n`.
//!
//! Points are bitmasks with coordinate 1 stored in the least significant bit.
//! Index sets are 0-based slices in the API; the text format and error
//! messages use 1-based coordinates.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the dimension of a set-system.
pub const DEFAULT_MAX_N: usize = 24;

/// Hard ceiling imposed by the `u64` point representation.
pub const ABSOLUTE_MAX_N: usize = 63;

/// Dimension cap in force: [`DEFAULT_MAX_N`] unless `CUBEIDEAL_MAX_N` is set.
pub fn max_dimension() -> usize {
    std::env::var("CUBEIDEAL_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.clamp(1, ABSOLUTE_MAX_N))
        .unwrap_or(DEFAULT_MAX_N)
}

/// A point of `{0,1}^n`; bit `k` holds coordinate `k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub u64);

impl Point {
    pub fn zero() -> Self {
        Point(0)
    }

    pub fn ones(n: usize) -> Self {
        Point(low_mask(n))
    }

    pub fn unit(k: usize) -> Self {
        Point(1 << k)
    }

    #[inline]
    pub fn get(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn xor(self, other: Point) -> Point {
        Point(self.0 ^ other.0)
    }

    /// Left-to-right bitstring, character `k` is coordinate `k + 1`.
    pub fn to_bitstring(self, n: usize) -> String {
        (0..n).map(|k| if self.get(k) { '1' } else { '0' }).collect()
    }

    pub fn from_bitstring(s: &str) -> Result<(Point, usize)> {
        let mut bits = 0u64;
        let mut n = 0;
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << k,
                other => return Err(Error::argument(format!("bitstring character {other:?} at position {}", k + 1))),
            }
            n = k + 1;
        }
        if n > ABSOLUTE_MAX_N {
            return Err(Error::cap("bitstring length", n, ABSOLUTE_MAX_N));
        }
        Ok((Point(bits), n))
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Converts a 0-based index slice into a mask, validating range.
pub(crate) fn index_mask(indices: &[usize], n: usize) -> Result<u64> {
    let mut mask = 0;
    for &i in indices {
        if i >= n {
            return Err(Error::Index { index: i + 1, bound: n });
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

pub(crate) fn mask_indices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Gathers the bits of `value` selected by `mask` into the low bits.
#[inline]
pub(crate) fn compress(value: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut m = mask;
    let mut pos = 0;
    while m != 0 {
        let k = m.trailing_zeros();
        out |= (value >> k & 1) << pos;
        pos += 1;
        m &= m - 1;
    }
    out
}

/// A finite subset of `{0,1}^n`, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    n: usize,
    points: Vec<Point>,
}

impl SetSystem {
    /// Builds a set-system, deduplicating points.
    pub fn new(n: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let cap = max_dimension();
        if n == 0 {
            return Err(Error::argument("dimension must be at least 1"));
        }
        if n > cap {
            return Err(Error::cap("n", n, cap));
        }
        let full = low_mask(n);
        let mut pts: Vec<Point> = points.into_iter().collect();
        if let Some(p) = pts.iter().find(|p| p.0 & !full != 0) {
            return Err(Error::Dimension { expected: n, got: 64 - p.0.leading_zeros() as usize });
        }
        pts.sort_unstable();
        pts.dedup();
        Ok(SetSystem { n, points: pts })
    }

    /// Builds a set-system from bitstrings such as `"0110"`.
    pub fn from_bitstrings<'a>(n: usize, rows: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut pts = Vec::new();
        for row in rows {
            let (p, len) = Point::from_bitstring(row)?;
            if len != n {
                return Err(Error::Dimension { expected: n, got: len });
            }
            pts.push(p);
        }
        SetSystem::new(n, pts)
    }

    pub fn empty(n: usize) -> Result<Self> {
        SetSystem::new(n, std::iter::empty())
    }

    /// The whole cube `{0,1}^n`.
    pub fn full_cube(n: usize) -> Result<Self> {
        if n > 26 {
            return Err(Error::cap("full cube dimension", n, 26));
        }
        SetSystem::new(n, (0..1u64 << n).map(Point))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn is_full_cube(&self) -> bool {
        self.n < 64 && self.points.len() as u128 == 1u128 << self.n
    }

    /// Subsystem of points satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(Point) -> bool) -> SetSystem {
        SetSystem { n: self.n, points: self.points.iter().copied().filter(|&p| keep(p)).collect() }
    }

    pub fn is_subset_of(&self, other: &SetSystem) -> bool {
        self.n == other.n && self.points.iter().all(|&p| other.contains(p))
    }

    pub(crate) fn check_point(&self, q: Point) -> Result<()> {
        if q.0 & !low_mask(self.n) != 0 {
            return Err(Error::Dimension { expected: self.n, got: 64 - q.0.leading_zeros() as usize });
        }
        Ok(())
    }

    /// `S △ q`: every point XORed with `q`.
    pub fn twist(&self, q: Point) -> Result<SetSystem> {
        self.check_point(q)?;
        let mut points: Vec<Point> = self.points.iter().map(|p| p.xor(q)).collect();
        points.sort_unstable();
        Ok(SetSystem { n: self.n, points })
    }

    /// Restriction of every point to the (0-based) coordinates in `indices`,
    /// taken in ascending order.
    pub fn project(&self, indices: &[usize]) -> Result<SetSystem> {
        if indices.is_empty() {
            return Err(Error::argument("projection onto an empty index set"));
        }
        let mask = index_mask(indices, self.n)?;
        let dim = mask.count_ones() as usize;
        let points = self.points.iter().map(|p| Point(compress(p.0, mask)));
        SetSystem::new(dim, points)
    }

    /// Whether the projection onto the coordinates of `mask` is the full cube.
    pub fn shatters(&self, mask: u64) -> bool {
        let d = mask.count_ones() as usize;
        if d == 0 {
            return !self.points.is_empty();
        }
        if d >= 63 || (self.points.len() as u128) < 1u128 << d {
            return false;
        }
        let target = 1usize << d;
        if d <= 20 {
            let mut seen = vec![false; target];
            let mut count = 0;
            for p in &self.points {
                let c = compress(p.0, mask) as usize;
                if !seen[c] {
                    seen[c] = true;
                    count += 1;
                    if count == target {
                        return true;
                    }
                }
            }
            false
        } else {
            let seen: HashSet<u64> = self.points.iter().map(|p| compress(p.0, mask)).collect();
            seen.len() == target
        }
    }

    /// VC dimension: the largest `d` such that some `d` coordinates are
    /// shattered; `0` for the empty system.
    ///
    /// Sizes are tried from the largest feasible one downwards. Constant
    /// coordinates and sizes with `2^d > |S|` are pruned.
    pub fn vc_dimension(&self) -> usize {
        if self.points.len() <= 1 {
            return 0;
        }
        let all_or = self.points.iter().fold(0, |acc, p| acc | p.0);
        let all_and = self.points.iter().fold(low_mask(self.n), |acc, p| acc & p.0);
        let free: Vec<usize> = mask_indices(all_or & !all_and);
        let log2 = (usize::BITS - 1 - self.points.len().leading_zeros()) as usize;
        let dmax = free.len().min(log2);
        for d in (1..=dmax).rev() {
            let mut found = false;
            for_each_combination(free.len(), d, |combo| {
                let mask = combo.iter().fold(0u64, |m, &i| m | 1 << free[i]);
                if self.shatters(mask) {
                    found = true;
                    return false;
                }
                true
            });
            if found {
                return d;
            }
        }
        0
    }

    /// Parses the `.ss` text format.
    pub fn parse(text: &str) -> Result<SetSystem> {
        let mut n: Option<usize> = None;
        let mut seen = HashSet::new();
        let mut points = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let col = raw.len() - raw.trim_start().len() + 1;
            match n {
                None => {
                    let mut parts = line.split_whitespace();
                    if parts.next() != Some("n") {
                        return Err(Error::parse(line_no, col, "expected header `n <dim>`"));
                    }
                    let dim = parts
                        .next()
                        .and_then(|v| v.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(line_no, col + 2, "bad dimension in header"))?;
                    if parts.next().is_some() {
                        return Err(Error::parse(line_no, col, "trailing tokens after header"));
                    }
                    let cap = max_dimension();
                    if dim == 0 || dim > cap {
                        return Err(Error::parse(line_no, col + 2, format!("dimension {dim} outside 1..={cap}")));
                    }
                    n = Some(dim);
                }
                Some(dim) => {
                    if let Some(pos) = line.find(|c| c != '0' && c != '1') {
                        return Err(Error::parse(
                            line_no,
                            col + pos,
                            format!("unexpected character {:?}", line[pos..].chars().next().unwrap()),
                        ));
                    }
                    if line.len() != dim {
                        return Err(Error::parse(
                            line_no,
                            col,
                            format!("bitstring of length {} in dimension {dim}", line.len()),
                        ));
                    }
                    let (p, _) = Point::from_bitstring(line)?;
                    if !seen.insert(p) {
                        return Err(Error::parse(line_no, col, format!("duplicate point {line}")));
                    }
                    points.push(p);
                }
            }
        }
        let dim = n.ok_or_else(|| Error::parse(1, 1, "missing header `n <dim>`"))?;
        SetSystem::new(dim, points)
    }

    /// Serializes to the `.ss` text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for p in &self.points {
            out.push_str(&p.to_bitstring(self.n));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.points.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(&p.to_bitstring(self.n))?;
        }
        f.write_str("}")
    }
}

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order until
/// it returns `false`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&combo) {
            return;
        }
        let mut i = k;
        while i > 0 && combo[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let i = i - 1;
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}
