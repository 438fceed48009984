//! Generalized set covering inequalities, connectivity and the 2-cover graph.
//!
//! A GSC inequality `(I, J)` reads `Σ_{i∈I} x_i + Σ_{j∈J} (1 − x_j) ≥ 1`.
//! A 0/1 point violates it exactly when it is `0` on `I` and `1` on `J`, so
//! validity over `conv(S)` reduces to emptiness of that subcube in `S`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::polytope::hull;
use crate::setsys::{for_each_combination, index_mask, low_mask, mask_indices, Point, SetSystem};

/// Largest dimension for which the full `3^n` candidate table is built.
pub const MAX_N_MINIMAL_GSC: usize = 16;

/// A GSC inequality over 0-based index masks `i` (positive) and `j`
/// (complemented).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GscIneq {
    i: u64,
    j: u64,
}

impl GscIneq {
    pub fn new(i: u64, j: u64) -> Result<Self> {
        if i & j != 0 {
            return Err(Error::argument("I and J must be disjoint"));
        }
        if i | j == 0 {
            return Err(Error::argument("I ∪ J must be nonempty"));
        }
        Ok(GscIneq { i, j })
    }

    /// Builds from 0-based index slices.
    pub fn from_indices(i: &[usize], j: &[usize]) -> Result<Self> {
        GscIneq::new(index_mask(i, 64)?, index_mask(j, 64)?)
    }

    /// `x_hi ≥ x_lo`, i.e. `x_hi + (1 − x_lo) ≥ 1`.
    pub fn implication(hi: usize, lo: usize) -> Result<Self> {
        GscIneq::new(1 << hi, 1 << lo)
    }

    pub fn positive(&self) -> u64 {
        self.i
    }

    pub fn negative(&self) -> u64 {
        self.j
    }

    pub fn support(&self) -> u64 {
        self.i | self.j
    }

    pub fn len(&self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Pure set covering form (`J = ∅`).
    pub fn is_set_covering(&self) -> bool {
        self.j == 0
    }

    pub fn positive_indices(&self) -> Vec<usize> {
        mask_indices(self.i)
    }

    pub fn negative_indices(&self) -> Vec<usize> {
        mask_indices(self.j)
    }

    /// Left-hand side at a 0/1 point.
    pub fn lhs(&self, p: Point) -> u32 {
        (p.0 & self.i).count_ones() + (!p.0 & self.j).count_ones()
    }

    #[inline]
    pub fn violated_by(&self, p: Point) -> bool {
        p.0 & self.i == 0 && p.0 & self.j == self.j
    }

    /// The inequality valid for `S △ q` whenever `self` is valid for `S`.
    pub fn twist(&self, q: Point) -> GscIneq {
        let moved_i = self.i & q.0;
        let moved_j = self.j & q.0;
        GscIneq { i: (self.i & !q.0) | moved_j, j: (self.j & !q.0) | moved_i }
    }

    pub fn dominates(&self, other: &GscIneq) -> bool {
        self.i & !other.i == 0 && self.j & !other.j == 0
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        let over = self.support() & !low_mask(n);
        if over != 0 {
            return Err(Error::Index { index: over.trailing_zeros() as usize + 1, bound: n });
        }
        Ok(())
    }

    fn sort_key(&self) -> (usize, Vec<usize>, Vec<usize>) {
        (self.len(), self.positive_indices(), self.negative_indices())
    }
}

impl PartialOrd for GscIneq {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GscIneq {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for GscIneq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |mask: u64| {
            if mask == 0 {
                "-".to_string()
            } else {
                mask_indices(mask).iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(" ")
            }
        };
        write!(f, "I: {} ; J: {}", side(self.i), side(self.j))
    }
}

impl FromStr for GscIneq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (left, right) = s.split_once(';').ok_or_else(|| Error::parse(1, 1, "expected `I: … ; J: …`"))?;
        let side = |part: &str, tag: &str, offset: usize| -> Result<u64> {
            let body = part
                .trim()
                .strip_prefix(tag)
                .ok_or_else(|| Error::parse(1, offset + 1, format!("expected `{tag}`")))?;
            let body = body.trim();
            if body == "-" {
                return Ok(0);
            }
            let mut mask = 0u64;
            for tok in body.split_whitespace() {
                let k: usize = tok.parse().map_err(|_| Error::parse(1, offset + 1, format!("bad index {tok:?}")))?;
                if k == 0 || k > 64 {
                    return Err(Error::parse(1, offset + 1, format!("index {k} out of range")));
                }
                mask |= 1 << (k - 1);
            }
            Ok(mask)
        };
        let i = side(left, "I:", 0)?;
        let j = side(right, "J:", left.len() + 1)?;
        GscIneq::new(i, j)
    }
}

impl Serialize for GscIneq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn require_nonempty(s: &SetSystem) -> Result<()> {
    if s.is_empty() {
        Err(Error::argument("empty set-system: GSC validity would be vacuous"))
    } else {
        Ok(())
    }
}

/// Whether `g` holds at every point of `S` (and hence on `conv(S)`).
pub fn is_valid(s: &SetSystem, g: &GscIneq) -> Result<bool> {
    require_nonempty(s)?;
    g.check_dim(s.dim())?;
    Ok(s.points().iter().all(|&p| !g.violated_by(p)))
}

/// Ternary table: `present[t]` says whether the subcube encoded by `t`
/// (digit 0: fixed 0, digit 1: fixed 1, digit 2: free) meets `S`.
struct SubcubeTable {
    n: usize,
    pow3: Vec<usize>,
    present: Vec<bool>,
}

impl SubcubeTable {
    fn build(s: &SetSystem) -> Result<Self> {
        let n = s.dim();
        if n > MAX_N_MINIMAL_GSC {
            return Err(Error::cap("n for GSC enumeration", n, MAX_N_MINIMAL_GSC));
        }
        let pow3: Vec<usize> = (0..=n).map(|k| 3usize.pow(k as u32)).collect();
        let size = pow3[n];
        let mut present = vec![false; size];
        for p in s.points() {
            let t: usize = (0..n).filter(|&k| p.get(k)).map(|k| pow3[k]).sum();
            present[t] = true;
        }
        let mut digits = vec![0u8; n];
        for t in 0..size {
            if t > 0 {
                let mut k = 0;
                while digits[k] == 2 {
                    digits[k] = 0;
                    k += 1;
                }
                digits[k] += 1;
            }
            if let Some(k) = digits.iter().position(|&d| d == 2) {
                present[t] = present[t - 2 * pow3[k]] || present[t - pow3[k]];
            }
        }
        Ok(SubcubeTable { n, pow3, present })
    }

    /// Minimal valid inequalities: empty subcubes all of whose one-step
    /// relaxations meet `S`.
    fn minimal_valid(&self) -> Vec<GscIneq> {
        let n = self.n;
        let mut out = Vec::new();
        let mut digits = vec![0u8; n];
        let all_free = self.pow3[n] - 1;
        for t in 0..self.pow3[n] {
            if t > 0 {
                let mut k = 0;
                while digits[k] == 2 {
                    digits[k] = 0;
                    k += 1;
                }
                digits[k] += 1;
            }
            if t == all_free || self.present[t] {
                continue;
            }
            let minimal = (0..n).all(|k| match digits[k] {
                2 => true,
                d => self.present[t + (2 - d as usize) * self.pow3[k]],
            });
            if minimal {
                let mut i = 0u64;
                let mut j = 0u64;
                for (k, &d) in digits.iter().enumerate() {
                    match d {
                        0 => i |= 1 << k,
                        1 => j |= 1 << k,
                        _ => {}
                    }
                }
                out.push(GscIneq { i, j });
            }
        }
        out.sort();
        out
    }
}

/// All valid GSC inequalities not dominated by another valid one, sorted by
/// size and then lexicographically.
pub fn minimal_valid_gsc(s: &SetSystem) -> Result<Vec<GscIneq>> {
    require_nonempty(s)?;
    Ok(SubcubeTable::build(s)?.minimal_valid())
}

/// Connectivity: the fewest variables in a valid GSC inequality, or
/// infinity for the full cube.
///
/// Equals the smallest `k` for which some `k` coordinates are not shattered.
pub fn connectivity(s: &SetSystem) -> Result<Extended> {
    require_nonempty(s)?;
    let n = s.dim();
    for k in 1..=n {
        let mut found = false;
        for_each_combination(n, k, |combo| {
            let mask = combo.iter().fold(0u64, |m, &i| m | 1 << i);
            if !s.shatters(mask) {
                found = true;
                return false;
            }
            true
        });
        if found {
            return Ok(Extended::Finite(k));
        }
    }
    Ok(Extended::Infinity)
}

fn require_connectivity_two(s: &SetSystem) -> Result<()> {
    require_nonempty(s)?;
    let all_or = s.points().iter().fold(0, |a, p| a | p.0);
    let all_and = s.points().iter().fold(low_mask(s.dim()), |a, p| a & p.0);
    let constant = low_mask(s.dim()) & !(all_or & !all_and);
    if constant != 0 {
        return Err(Error::precondition(format!(
            "connectivity 1: coordinate {} is constant",
            constant.trailing_zeros() + 1
        )));
    }
    Ok(())
}

/// The valid 2-GSC inequalities on the pair `{a, b}`.
fn pair_inequalities(s: &SetSystem, a: usize, b: usize) -> Vec<GscIneq> {
    let mut seen = [false; 4];
    for p in s.points() {
        seen[(p.get(a) as usize) | (p.get(b) as usize) << 1] = true;
    }
    let mut out = Vec::new();
    for (pattern, &hit) in seen.iter().enumerate() {
        if hit {
            continue;
        }
        // Missing pattern (x_a, x_b): coordinates fixed at 0 go to I, at 1 to J.
        let (va, vb) = (pattern & 1, pattern >> 1 & 1);
        let mut i = 0;
        let mut j = 0;
        if va == 0 {
            i |= 1 << a
        } else {
            j |= 1 << a
        }
        if vb == 0 {
            i |= 1 << b
        } else {
            j |= 1 << b
        }
        out.push(GscIneq { i, j });
    }
    out
}

/// All valid 2-GSC inequalities, canonically sorted.
pub fn valid_two_gsc(s: &SetSystem) -> Result<Vec<GscIneq>> {
    require_connectivity_two(s)?;
    let n = s.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.extend(pair_inequalities(s, a, b));
        }
    }
    out.sort();
    Ok(out)
}

/// The 2-cover graph on coordinates together with its components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverGraph {
    pub n: usize,
    /// 0-based pairs `a < b`.
    pub edges: Vec<(usize, usize)>,
    /// Component label per vertex, labels `0..components` in order of first
    /// appearance.
    pub labels: Vec<usize>,
    pub components: usize,
}

impl CoverGraph {
    pub fn from_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let (labels, components) = component_labels(n, &edges);
        CoverGraph { n, edges, labels, components }
    }

    /// Component members as index masks, in label order.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.components];
        for (v, &c) in self.labels.iter().enumerate() {
            masks[c] |= 1 << v;
        }
        masks
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }
}

pub(crate) fn component_labels(n: usize, edges: &[(usize, usize)]) -> (Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut label_of_root = vec![usize::MAX; n];
    let mut labels = vec![0; n];
    let mut next = 0;
    for (v, label) in labels.iter_mut().enumerate() {
        let r = find(&mut parent, v);
        if label_of_root[r] == usize::MAX {
            label_of_root[r] = next;
            next += 1;
        }
        *label = label_of_root[r];
    }
    (labels, next)
}

/// The 2-cover graph `G(S)`: `{a, b}` is an edge iff some 2-GSC inequality
/// on `a, b` is valid, i.e. iff `S` does not shatter `{a, b}`.
pub fn cover_graph(s: &SetSystem) -> Result<CoverGraph> {
    require_connectivity_two(s)?;
    let n = s.dim();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !s.shatters(1 << a | 1 << b) {
                edges.push((a, b));
            }
        }
    }
    Ok(CoverGraph::from_edges(n, edges))
}

/// Points of `S` satisfying every valid 2-GSC inequality at equality.
pub fn core_points(s: &SetSystem) -> Result<SetSystem> {
    let tight = valid_two_gsc(s)?;
    Ok(s.filter(|p| tight.iter().all(|g| g.lhs(p) == 1)))
}

fn rainbow_against(graph: &CoverGraph, g: &GscIneq) -> bool {
    graph.component_masks().iter().all(|&k| (g.support() & k).count_ones() <= 1)
}

/// Whether a valid `g` meets every component of `G(S)` at most once.
pub fn is_rainbow(s: &SetSystem, g: &GscIneq) -> Result<bool> {
    if !is_valid(s, g)? {
        return Err(Error::precondition(format!("{g} is not valid for S")));
    }
    let graph = cover_graph(s)?;
    Ok(rainbow_against(&graph, g))
}

/// Minimum size of a rainbow member of [`minimal_valid_gsc`], or infinity.
pub fn kappa(s: &SetSystem) -> Result<Extended> {
    let graph = cover_graph(s)?;
    let desc = minimal_valid_gsc(s)?;
    Ok(desc.iter().filter(|g| rainbow_against(&graph, g)).map(|g| g.len()).min().into())
}

/// A twist putting every valid 2-GSC inequality into the form `x_i ≥ x_j`,
/// with the preorder `i ⪰ j ⇔ x_i ≥ x_j` it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalTwist {
    pub q: Point,
    /// `dominates[i]` is the mask of all `j` with `i ⪰ j` (including `i`).
    pub dominates: Vec<u64>,
    /// Whether the comparability graph of the preorder equals `G(S)`.
    pub comparability_matches: bool,
}

impl CanonicalTwist {
    pub fn succeeds(&self, i: usize, j: usize) -> bool {
        self.dominates[i] >> j & 1 == 1
    }
}

/// Twists `S` so that every valid 2-GSC inequality reads `x_i ≥ x_j`.
///
/// The twist is the smallest point of `S` with that property. Any point in
/// the support of a convex combination of `S` equal to `½·1` has it, so `½·1`
/// must lie in `conv(S)`.
pub fn canonical_twist(s: &SetSystem) -> Result<CanonicalTwist> {
    require_nonempty(s)?;
    let n = s.dim();
    let half = vec![num_rational::BigRational::new(1.into(), 2.into()); n];
    let weights = hull::convex_combination(s, &half)?.ok_or_else(|| Error::precondition("½·1 is not in conv(S)"))?;
    let pairs = valid_two_gsc(s)?;
    let orients = |q: Point| {
        pairs.iter().all(|g| {
            let t = g.twist(q);
            t.positive().count_ones() == 1 && t.negative().count_ones() == 1
        })
    };
    let q = s.points().iter().copied().find(|&q| orients(q)).ok_or_else(|| {
        let support: Vec<String> = weights.iter().map(|(p, _)| p.to_bitstring(n)).collect();
        Error::internal(format!(
            "no point of S orients every valid 2-GSC inequality; ½·1 has support {}",
            support.join(",")
        ))
    })?;
    let twisted = s.twist(q)?;
    let valid = valid_two_gsc(&twisted)?;
    let mut dominates: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for g in &valid {
        if g.positive().count_ones() != 1 || g.negative().count_ones() != 1 {
            return Err(Error::internal(format!(
                "after twisting by {} the valid inequality {g} is not of the form x_i ≥ x_j",
                q.to_bitstring(n)
            )));
        }
        let hi = g.positive().trailing_zeros() as usize;
        let lo = g.negative().trailing_zeros() as usize;
        dominates[hi] |= 1 << lo;
    }
    for i in 0..n {
        for j in mask_indices(dominates[i]) {
            if dominates[j] & !dominates[i] != 0 {
                return Err(Error::internal(format!("preorder not transitive at {} ⪰ {}", i + 1, j + 1)));
            }
        }
    }
    let graph = cover_graph(s)?;
    let comparability_matches = (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let comparable = dominates[a] >> b & 1 == 1 || dominates[b] >> a & 1 == 1;
            comparable == graph.has_edge(a, b)
        })
    });
    Ok(CanonicalTwist { q, dominates, comparability_matches })
}
