//! Clutters over a ground set `[m]`, their blockers, idealness and cores.
//!
//! Members are bitmasks with element `k + 1` in bit `k`.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{ensure_cap, Error, Result};
use crate::extended::Extended;
use crate::gsc::component_labels;
use crate::polytope::{enumerate_vertices, serialize_witness, IneqSystem, RowKind};
use crate::rational::{self, RationalVector};
use crate::setsys::{compress, index_mask, low_mask, mask_indices, Point, SetSystem};

/// Largest ground set for subset enumeration.
pub const MAX_GROUND_BRUTE: usize = 20;

/// Largest ground set for the idealness decision.
pub const MAX_GROUND_IDEAL: usize = 12;

/// An antichain of subsets of `[m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    ground: usize,
    members: Vec<u64>,
}

fn member_key(m: u64) -> (u32, Vec<usize>) {
    (m.count_ones(), mask_indices(m))
}

/// Keeps the inclusion-minimal masks, sorted by size then elements.
fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_by_key(|&m| member_key(m));
    masks.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !out.iter().any(|&k| k & !m == 0) {
            out.push(m);
        }
    }
    out
}

impl Clutter {
    /// Builds a clutter from member masks, keeping the minimal ones.
    pub fn new(ground: usize, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        if ground > 63 {
            return Err(Error::cap("clutter ground set", ground, 63));
        }
        let full = low_mask(ground);
        let members: Vec<u64> = members.into_iter().collect();
        if let Some(&m) = members.iter().find(|&&m| m & !full != 0) {
            return Err(Error::Index { index: 64 - m.leading_zeros() as usize, bound: ground });
        }
        Ok(Clutter { ground, members: minimal_masks(members) })
    }

    /// Builds a clutter from 0-based element lists.
    pub fn from_sets(ground: usize, sets: &[&[usize]]) -> Result<Self> {
        let masks = sets.iter().map(|s| index_mask(s, ground)).collect::<Result<Vec<_>>>()?;
        Clutter::new(ground, masks)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The clutter `{∅}`.
    pub fn has_empty_member(&self) -> bool {
        self.members.first() == Some(&0)
    }

    /// Either the clutter with no members or the clutter `{∅}`.
    pub fn is_degenerate(&self) -> bool {
        self.is_empty() || self.has_empty_member()
    }

    pub fn member_indices(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(|&m| mask_indices(m)).collect()
    }

    /// Parses the `.cl` text format.
    pub fn parse(text: &str) -> Result<Clutter> {
        let mut ground: Option<usize> = None;
        let mut seen = HashSet::new();
        let mut members = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let tokens = tokens_with_columns(line);
            match ground {
                None => {
                    if tokens[0].1 != "ground" || tokens.len() != 2 {
                        return Err(Error::parse(line_no, tokens[0].0, "expected header `ground <m>`"));
                    }
                    let m: usize =
                        tokens[1].1.parse().map_err(|_| Error::parse(line_no, tokens[1].0, "bad ground set size"))?;
                    if m > 63 {
                        return Err(Error::parse(line_no, tokens[1].0, "ground set larger than 63"));
                    }
                    ground = Some(m);
                }
                Some(m) => {
                    let mut mask = 0u64;
                    if !(tokens.len() == 1 && tokens[0].1 == "-") {
                        for (col, tok) in &tokens {
                            let e: usize =
                                tok.parse().map_err(|_| Error::parse(line_no, *col, format!("bad element {tok:?}")))?;
                            if e == 0 || e > m {
                                return Err(Error::parse(line_no, *col, format!("element {e} outside 1..={m}")));
                            }
                            if mask >> (e - 1) & 1 == 1 {
                                return Err(Error::parse(line_no, *col, format!("element {e} repeated")));
                            }
                            mask |= 1 << (e - 1);
                        }
                    }
                    if !seen.insert(mask) {
                        return Err(Error::parse(line_no, tokens[0].0, "duplicate member"));
                    }
                    members.push(mask);
                }
            }
        }
        let m = ground.ok_or_else(|| Error::parse(1, 1, "missing header `ground <m>`"))?;
        Clutter::new(m, members)
    }

    /// Serializes to the `.cl` text format; `-` stands for the empty member.
    pub fn to_text(&self) -> String {
        let mut out = format!("ground {}\n", self.ground);
        for &m in &self.members {
            if m == 0 {
                out.push('-');
            } else {
                let elems: Vec<String> = mask_indices(m).iter().map(|k| (k + 1).to_string()).collect();
                out.push_str(&elems.join(" "));
            }
            out.push('\n');
        }
        out
    }
}

fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, &m) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            let elems: Vec<String> = mask_indices(m).iter().map(|e| (e + 1).to_string()).collect();
            write!(f, "{{{}}}", elems.join(","))?;
        }
        f.write_str("}")
    }
}

/// `noncover[B]` is true iff `B` misses some member.
fn noncover_table(c: &Clutter) -> Result<Vec<bool>> {
    let m = c.ground;
    ensure_cap("clutter ground set for subset enumeration", m, MAX_GROUND_BRUTE)?;
    let full = low_mask(m);
    let mut table = vec![false; 1 << m];
    for &member in &c.members {
        table[(full & !member) as usize] = true;
    }
    for k in 0..m {
        let bit = 1usize << k;
        for b in (0..1usize << m).rev() {
            if b & bit != 0 && table[b] {
                table[b ^ bit] = true;
            }
        }
    }
    Ok(table)
}

/// The clutter of minimal covers.
pub fn blocker(c: &Clutter) -> Result<Clutter> {
    let noncover = noncover_table(c)?;
    let covers = (0..noncover.len() as u64)
        .filter(|&b| !noncover[b as usize] && mask_indices(b).iter().all(|&k| noncover[(b & !(1 << k)) as usize]));
    Clutter::new(c.ground, covers)
}

/// Minimum size of a cover; infinity when no cover exists.
pub fn covering_number(c: &Clutter) -> Result<Extended> {
    Ok(blocker(c)?.members.iter().map(|b| b.count_ones() as usize).min().into())
}

/// Outcome of an idealness decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealVerdict {
    pub verdict: bool,
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<RationalVector>,
    /// Whether the witness is a vertex of the unboxed covering polyhedron.
    pub witness_is_q_vertex: Option<bool>,
    /// Set for `{}` and `{∅}`, decided by convention.
    pub degenerate: bool,
}

/// Whether `{x ≥ 0 : x(C) ≥ 1 for every member}` has only integral vertices.
///
/// Decided on the intersection with the unit box, whose vertices include
/// all vertices of the covering polyhedron.
pub fn is_ideal(c: &Clutter) -> Result<IdealVerdict> {
    if c.is_degenerate() {
        return Ok(IdealVerdict { verdict: true, witness: None, witness_is_q_vertex: None, degenerate: true });
    }
    let m = c.ground;
    ensure_cap("clutter ground set for idealness", m, MAX_GROUND_IDEAL)?;
    let mut sys = IneqSystem::unit_box(m);
    for &member in &c.members {
        sys.push_covering(member)?;
    }
    let vertices = enumerate_vertices(&sys)?;
    let Some(w) = vertices.into_iter().find(|v| !rational::is_integral(v)) else {
        return Ok(IdealVerdict { verdict: true, witness: None, witness_is_q_vertex: None, degenerate: false });
    };
    let tight: Vec<Vec<i64>> = sys
        .tight_rows(&w)?
        .into_iter()
        .map(|i| &sys.rows()[i])
        .filter(|r| !matches!(r.kind, RowKind::Upper(_)))
        .map(|r| r.coeffs.clone())
        .collect();
    let q_vertex = rational::rank_i64(&tight) == m;
    Ok(IdealVerdict { verdict: false, witness: Some(w), witness_is_q_vertex: Some(q_vertex), degenerate: false })
}

/// One member `{i : p_i = 1} ∪ {ī : p_i = 0}` per point, over `2n`
/// elements with 0-based element `2k` for `k` and `2k + 1` for `k̄`.
pub fn cuboid(s: &SetSystem) -> Result<Clutter> {
    if s.is_empty() {
        return Err(Error::argument("set-system is empty"));
    }
    let n = s.dim();
    if 2 * n > 63 {
        return Err(Error::cap("cuboid ground set", 2 * n, 63));
    }
    let members = s.points().iter().map(|p| (0..n).fold(0u64, |acc, k| acc | 1 << (2 * k + usize::from(!p.get(k)))));
    Clutter::new(2 * n, members)
}

/// All 0/1 vectors whose support contains a member.
pub fn monotone_system(c: &Clutter) -> Result<SetSystem> {
    let up = {
        let m = c.ground;
        ensure_cap("clutter ground set for subset enumeration", m, MAX_GROUND_BRUTE)?;
        let mut up = vec![false; 1 << m];
        for &member in &c.members {
            up[member as usize] = true;
        }
        for k in 0..m {
            let bit = 1usize << k;
            for b in 0..1usize << m {
                if b & bit == 0 && up[b] {
                    up[b | bit] = true;
                }
            }
        }
        up
    };
    let points = (0..up.len() as u64).filter(|&b| up[b as usize]).map(Point);
    SetSystem::new(c.ground, points)
}

/// Deletes the 0-based elements of `delete`, contracts those of `contract`
/// and relabels the remaining elements in order.
pub fn minor(c: &Clutter, delete: &[usize], contract: &[usize]) -> Result<Clutter> {
    let i = index_mask(delete, c.ground)?;
    let j = index_mask(contract, c.ground)?;
    if i & j != 0 {
        return Err(Error::argument("deleted and contracted elements overlap"));
    }
    let keep = low_mask(c.ground) & !(i | j);
    let members = c.members.iter().filter(|&&m| m & i == 0).map(|&m| compress(m & !j, keep));
    Clutter::new(keep.count_ones() as usize, members)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverMinimality {
    pub verdict: bool,
    pub tau: Extended,
}

fn minimum_covers(c: &Clutter) -> Result<(Extended, Vec<u64>)> {
    let b = blocker(c)?;
    let tau: Extended = b.members.iter().map(|m| m.count_ones() as usize).min().into();
    let mins = match tau {
        Extended::Finite(t) => b.members.iter().copied().filter(|m| m.count_ones() as usize == t).collect(),
        Extended::Infinity => Vec::new(),
    };
    Ok((tau, mins))
}

/// Whether every element lies in a minimum cover.
pub fn is_tau_cover_minimal(c: &Clutter) -> Result<CoverMinimality> {
    if c.is_empty() {
        return Err(Error::argument("clutter has no members"));
    }
    let (tau, mins) = minimum_covers(c)?;
    let union = mins.iter().fold(0u64, |a, &m| a | m);
    Ok(CoverMinimality { verdict: tau.finite().is_some() && union == low_mask(c.ground), tau })
}

/// Members meeting every minimum cover in exactly one element.
pub fn core_clutter(c: &Clutter) -> Result<Clutter> {
    if !is_tau_cover_minimal(c)?.verdict {
        return Err(Error::precondition("clutter is not cover-minimal"));
    }
    let (_, mins) = minimum_covers(c)?;
    let members = c.members.iter().copied().filter(|&m| mins.iter().all(|&b| (b & m).count_ones() == 1));
    Clutter::new(c.ground, members)
}

/// A pair `(w, ℓ)` with `min_C w(C) · min_B ℓ(B) > wᵀℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthLengthViolation {
    pub w: Vec<u64>,
    pub l: Vec<u64>,
    pub width: u64,
    pub length: u64,
    pub inner: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthLengthReport {
    pub pass: bool,
    pub trials: usize,
    pub violation: Option<WidthLengthViolation>,
}

fn weight(mask: u64, w: &[u64]) -> u64 {
    mask_indices(mask).iter().map(|&k| w[k]).sum()
}

fn width_length_at(c: &Clutter, b: &Clutter, w: &[u64], l: &[u64]) -> Option<WidthLengthViolation> {
    let width = c.members.iter().map(|&m| weight(m, w)).min().unwrap_or(0);
    let length = b.members.iter().map(|&m| weight(m, l)).min().unwrap_or(0);
    let inner: u64 = w.iter().zip(l).map(|(a, b)| a * b).sum();
    (width * length > inner).then(|| WidthLengthViolation { w: w.to_vec(), l: l.to_vec(), width, length, inner })
}

/// Upper end of the pseudorandom weights used by [`width_length_check`].
pub const WIDTH_LENGTH_MAX_WEIGHT: u64 = 4;

/// Tests the width-length inequality on `trials` seeded random weight pairs.
pub fn width_length_check(c: &Clutter, trials: usize, seed: u64) -> Result<WidthLengthReport> {
    let b = blocker(c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = c.ground;
    for t in 0..trials {
        let w: Vec<u64> = (0..m).map(|_| rng.gen_range(0..=WIDTH_LENGTH_MAX_WEIGHT)).collect();
        let l: Vec<u64> = (0..m).map(|_| rng.gen_range(0..=WIDTH_LENGTH_MAX_WEIGHT)).collect();
        if let Some(v) = width_length_at(c, &b, &w, &l) {
            return Ok(WidthLengthReport { pass: false, trials: t + 1, violation: Some(v) });
        }
    }
    Ok(WidthLengthReport { pass: true, trials, violation: None })
}

/// Exhaustive search over weights in `0..=max_weight` for a violation.
pub fn width_length_violation(c: &Clutter, max_weight: u64) -> Result<Option<WidthLengthViolation>> {
    let m = c.ground;
    let base = max_weight + 1;
    let combos = base
        .checked_pow(m as u32)
        .filter(|&v| v <= 1 << 16)
        .ok_or_else(|| Error::argument("weight space too large for exhaustive search"))?;
    let b = blocker(c)?;
    let decode = |mut idx: u64| -> Vec<u64> {
        (0..m)
            .map(|_| {
                let d = idx % base;
                idx /= base;
                d
            })
            .collect()
    };
    for wi in 0..combos {
        let w = decode(wi);
        for li in 0..combos {
            if let Some(v) = width_length_at(c, &b, &w, &decode(li)) {
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowCover {
    pub mu: Extended,
    /// Components of the graph of size-2 minimum covers.
    pub d: usize,
    /// Component label of each element.
    pub labels: Vec<usize>,
    /// A minimum rainbow cover, as a mask.
    pub cover: Option<u64>,
}

/// Minimum size of a cover meeting each component of `G(C)` at most once.
pub fn rainbow_covering_number(c: &Clutter) -> Result<RainbowCover> {
    let cm = is_tau_cover_minimal(c)?;
    if cm.tau != Extended::Finite(2) || !cm.verdict {
        return Err(Error::precondition(format!("clutter is not 2-cover-minimal (τ = {})", cm.tau)));
    }
    let b = blocker(c)?;
    let edges: Vec<(usize, usize)> = b
        .members
        .iter()
        .filter(|m| m.count_ones() == 2)
        .map(|&m| {
            let e = mask_indices(m);
            (e[0], e[1])
        })
        .collect();
    let (labels, d) = component_labels(c.ground, &edges);
    let rainbow = |m: u64| {
        let mut seen = 0u64;
        mask_indices(m).iter().all(|&k| {
            let bit = 1u64 << labels[k];
            let fresh = seen & bit == 0;
            seen |= bit;
            fresh
        })
    };
    let cover = b.members.iter().copied().filter(|&m| rainbow(m)).min_by_key(|&m| member_key(m));
    Ok(RainbowCover { mu: cover.map(|m| m.count_ones() as usize).into(), d, labels, cover })
}

/// Rational rank of the incidence vectors of `masks`.
pub fn incidence_rank(ground: usize, masks: &[u64]) -> usize {
    let rows: Vec<Vec<i64>> = masks.iter().map(|&m| (0..ground).map(|k| (m >> k & 1) as i64).collect()).collect();
    rational::rank_i64(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(ground: usize, sets: &[&[usize]]) -> Clutter {
        Clutter::from_sets(ground, sets).unwrap()
    }

    fn triangle() -> Clutter {
        cl(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    #[test]
    fn construction_keeps_minimal_members() {
        let c = cl(3, &[&[0, 1], &[0], &[0], &[1, 2]]);
        assert_eq!(c.member_indices(), vec![vec![0], vec![1, 2]]);
        assert!(Clutter::from_sets(2, &[&[2]]).is_err());
        assert!(cl(2, &[]).is_degenerate());
        assert!(cl(2, &[&[]]).has_empty_member());
    }

    #[test]
    fn text_round_trip() {
        let c = cl(4, &[&[0, 1], &[2], &[1, 3]]);
        assert_eq!(Clutter::parse(&c.to_text()).unwrap(), c);
        let e = cl(2, &[&[]]);
        assert_eq!(Clutter::parse(&e.to_text()).unwrap(), e);
        let err = Clutter::parse("ground 2\n1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 3, .. }));
        assert!(Clutter::parse("ground 2\n1 2\n2 1\n").is_err());
        assert!(Clutter::parse("1 2\n").is_err());
    }

    #[test]
    fn blocker_examples() {
        assert_eq!(blocker(&cl(2, &[&[0], &[1]])).unwrap(), cl(2, &[&[0, 1]]));
        assert_eq!(blocker(&triangle()).unwrap(), triangle());
        assert_eq!(blocker(&cl(2, &[])).unwrap(), cl(2, &[&[]]));
        assert_eq!(blocker(&cl(2, &[&[]])).unwrap(), cl(2, &[]));
    }

    #[test]
    fn covering_numbers() {
        assert_eq!(covering_number(&cl(2, &[&[0], &[1]])).unwrap(), Extended::Finite(2));
        assert_eq!(covering_number(&cl(2, &[&[]])).unwrap(), Extended::Infinity);
    }

    #[test]
    fn idealness_examples() {
        let v = is_ideal(&triangle()).unwrap();
        assert!(!v.verdict);
        let half = rational::frac(1, 2);
        assert_eq!(v.witness, Some(vec![half.clone(), half.clone(), half]));
        assert_eq!(v.witness_is_q_vertex, Some(true));
        assert!(is_ideal(&cl(2, &[&[0], &[1]])).unwrap().verdict);
        assert!(is_ideal(&cl(2, &[])).unwrap().degenerate);
    }

    #[test]
    fn cuboid_examples() {
        let s = SetSystem::from_bitstrings(1, ["1"]).unwrap();
        assert_eq!(cuboid(&s).unwrap(), cl(2, &[&[0]]));
        let s = SetSystem::full_cube(1).unwrap();
        assert_eq!(cuboid(&s).unwrap(), cl(2, &[&[0], &[1]]));
    }

    #[test]
    fn monotone_system_examples() {
        let s = monotone_system(&cl(2, &[&[0]])).unwrap();
        assert_eq!(s, SetSystem::from_bitstrings(2, ["10", "11"]).unwrap());
        let c = cl(4, &[&[0, 1], &[2]]);
        assert_eq!(monotone_system(&c).unwrap().vc_dimension(), 4 - 1);
    }

    #[test]
    fn minor_examples() {
        let c = cl(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(minor(&c, &[], &[]).unwrap(), c);
        assert_eq!(minor(&c, &[2], &[]).unwrap(), cl(2, &[&[0, 1]]));
        assert_eq!(minor(&c, &[], &[1]).unwrap(), cl(2, &[&[0], &[1]]));
        assert_eq!(minor(&c, &[2], &[1]).unwrap(), cl(1, &[&[0]]));
        assert!(minor(&c, &[1], &[1]).is_err());
    }

    #[test]
    fn cover_minimality() {
        let r = is_tau_cover_minimal(&cl(2, &[&[0]])).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.tau, Extended::Finite(1));
        assert!(core_clutter(&cl(2, &[&[0]])).is_err());
    }

    #[test]
    fn width_length_examples() {
        assert!(width_length_check(&cl(2, &[&[0], &[1]]), 100, 7).unwrap().pass);
        let v = width_length_violation(&triangle(), 1).unwrap().unwrap();
        assert!(v.width * v.length > v.inner);
        let z = width_length_at(&triangle(), &blocker(&triangle()).unwrap(), &[0, 0, 0], &[1, 1, 1]);
        assert!(z.is_none());
    }

    #[test]
    fn rainbow_cover_of_pair_clutter() {
        // Minimum covers {1,2}, {3,4}, {5,6} pair up the ground set.
        let c =
            cl(6, &[&[0, 2, 4], &[0, 2, 5], &[0, 3, 4], &[0, 3, 5], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5]]);
        let r = rainbow_covering_number(&c).unwrap();
        assert_eq!(r.d, 3);
        assert_eq!(r.mu, Extended::Infinity);
        assert!(rainbow_covering_number(&triangle()).is_ok());
    }

    #[test]
    fn incidence_rank_of_disjoint_pairs() {
        assert_eq!(incidence_rank(4, &[0b0011, 0b1100, 0b1111]), 2);
    }
}
