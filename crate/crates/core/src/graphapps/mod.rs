//! Graph-side constructions: strong re-orientations of mixed graphs,
//! pseudo dicuts, dijoins, r-graphs and their perfect matchings, postman
//! sets, cycle spaces and laminar odd families.
//!
//! Vertices, edges and arcs are 0-based in the API and 1-based in the `.mg`
//! text format.

pub mod fixtures;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::clutter::{blocker, incidence_rank, Clutter};
use crate::error::{ensure_cap, Error, Result};
use crate::extended::Extended;
use crate::gsc::{component_labels, GscIneq};
use crate::setsys::{low_mask, mask_indices, Point, SetSystem};

/// Largest vertex count for cut enumeration.
pub const MAX_VERTICES_CUTS: usize = 16;

/// Largest number of edges for orientation and subset enumeration.
pub const MAX_EDGES_BRUTE: usize = 20;

/// Largest vertex count for the r-graph suite.
pub const MAX_VERTICES_RGRAPH: usize = 14;

/// Largest vertex count for postman sets.
pub const MAX_VERTICES_POSTMAN: usize = 12;

/// A graph with arcs `A` and edges `E`; parallel elements are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    vcount: usize,
    arcs: Vec<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl MixedGraph {
    pub fn new(vcount: usize, arcs: Vec<(usize, usize)>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vcount > 63 {
            return Err(Error::cap("vertex count", vcount, 63));
        }
        for &(u, v) in arcs.iter().chain(&edges) {
            for x in [u, v] {
                if x >= vcount {
                    return Err(Error::Index { index: x + 1, bound: vcount });
                }
            }
            if u == v {
                return Err(Error::argument(format!("self-loop at vertex {}", u + 1)));
            }
        }
        if arcs.len() > 63 || edges.len() > 63 {
            return Err(Error::cap("arcs or edges", arcs.len().max(edges.len()), 63));
        }
        Ok(MixedGraph { vcount, arcs, edges })
    }

    /// An undirected graph.
    pub fn graph(vcount: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        MixedGraph::new(vcount, Vec::new(), edges)
    }

    /// A directed graph.
    pub fn digraph(vcount: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        MixedGraph::new(vcount, arcs, Vec::new())
    }

    pub fn vcount(&self) -> usize {
        self.vcount
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Mask of arcs with tail outside and head inside `u`.
    pub fn entering_arcs(&self, u: u64) -> u64 {
        self.arcs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| u >> a & 1 == 0 && u >> b & 1 == 1)
            .fold(0, |m, (k, _)| m | 1 << k)
    }

    /// Mask of arcs with tail inside and head outside `u`.
    pub fn leaving_arcs(&self, u: u64) -> u64 {
        self.arcs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| u >> a & 1 == 1 && u >> b & 1 == 0)
            .fold(0, |m, (k, _)| m | 1 << k)
    }

    /// Mask of edges with exactly one end in `u`.
    pub fn cut_edges(&self, u: u64) -> u64 {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| (u >> a & 1) != (u >> b & 1))
            .fold(0, |m, (k, _)| m | 1 << k)
    }

    /// Degree of each vertex in the edge set.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vcount];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    fn require_undirected(&self) -> Result<()> {
        if !self.arcs.is_empty() {
            return Err(Error::argument("expected a graph without arcs"));
        }
        Ok(())
    }

    fn require_directed(&self) -> Result<()> {
        if !self.edges.is_empty() {
            return Err(Error::argument("expected a digraph without edges"));
        }
        Ok(())
    }

    /// Number of connected components of the underlying undirected graph.
    pub fn components(&self) -> usize {
        let all: Vec<(usize, usize)> = self.arcs.iter().chain(&self.edges).copied().collect();
        component_labels(self.vcount, &all).1
    }

    /// Parses the `.mg` text format.
    pub fn parse(text: &str) -> Result<MixedGraph> {
        let mut vcount: Option<usize> = None;
        let mut arcs = Vec::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<(usize, &str)> =
                line.split_whitespace().map(|t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t)).collect();
            let Some(&(col, head)) = tokens.first() else {
                continue;
            };
            let Some(k) = vcount else {
                if head != "vertices" || tokens.len() != 2 {
                    return Err(Error::parse(line_no, col, "expected header `vertices <k>`"));
                }
                let k: usize =
                    tokens[1].1.parse().map_err(|_| Error::parse(line_no, tokens[1].0, "bad vertex count"))?;
                if k > 63 {
                    return Err(Error::parse(line_no, tokens[1].0, "more than 63 vertices"));
                }
                vcount = Some(k);
                continue;
            };
            if (head != "a" && head != "e") || tokens.len() != 3 {
                return Err(Error::parse(line_no, col, "expected `a <u> <v>` or `e <u> <v>`"));
            }
            let mut ends = [0usize; 2];
            for (slot, &(c, t)) in ends.iter_mut().zip(&tokens[1..]) {
                let v: usize = t.parse().map_err(|_| Error::parse(line_no, c, format!("bad vertex {t:?}")))?;
                if v == 0 || v > k {
                    return Err(Error::parse(line_no, c, format!("vertex {v} outside 1..={k}")));
                }
                *slot = v - 1;
            }
            if ends[0] == ends[1] {
                return Err(Error::parse(line_no, col, "self-loop"));
            }
            if head == "a" {
                arcs.push((ends[0], ends[1]));
            } else {
                edges.push((ends[0], ends[1]));
            }
        }
        let k = vcount.ok_or_else(|| Error::parse(1, 1, "missing header `vertices <k>`"))?;
        MixedGraph::new(k, arcs, edges)
    }

    /// Serializes to the `.mg` text format, arcs first.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.vcount);
        for &(u, v) in &self.arcs {
            out.push_str(&format!("a {} {}\n", u + 1, v + 1));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, {} arcs, {} edges", self.vcount, self.arcs.len(), self.edges.len())
    }
}

/// A cut `δ(U)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cut {
    /// Vertex mask of `U`.
    pub set: u64,
    /// Edge mask of `δ_E(U)`.
    pub edges: u64,
    /// Arc mask of `δ_A(U)` in either direction.
    pub arcs: u64,
}

impl Cut {
    pub fn vertices(&self) -> Vec<usize> {
        mask_indices(self.set)
    }
}

pub type CutFamily = Vec<Cut>;

fn proper_subsets(vcount: usize) -> impl Iterator<Item = u64> {
    1..low_mask(vcount)
}

/// Every `∅ ≠ U ⊊ V` with no arc entering `U`.
pub fn pseudo_dicuts(g: &MixedGraph) -> Result<CutFamily> {
    ensure_cap("vertex count for cut enumeration", g.vcount, MAX_VERTICES_CUTS)?;
    Ok(proper_subsets(g.vcount)
        .filter(|&u| g.entering_arcs(u) == 0)
        .map(|u| Cut { set: u, edges: g.cut_edges(u), arcs: g.leaving_arcs(u) })
        .collect())
}

fn require_two_edges(g: &MixedGraph, cuts: &[Cut]) -> Result<()> {
    if let Some(c) = cuts.iter().find(|c| c.edges.count_ones() < 2) {
        let u: Vec<String> = c.vertices().iter().map(|v| (v + 1).to_string()).collect();
        return Err(Error::precondition(format!(
            "pseudo dicut U = {{{}}} has {} edge(s) of E",
            u.join(","),
            c.edges.count_ones()
        )));
    }
    ensure_cap("edges for orientation enumeration", g.edges.len(), MAX_EDGES_BRUTE)?;
    if g.edges.is_empty() {
        return Err(Error::argument("graph has no edges"));
    }
    Ok(())
}

/// Whether the digraph on `vcount` vertices with the given out/in
/// adjacency masks is strongly connected.
fn strongly_connected(vcount: usize, out: &[u64], inn: &[u64]) -> bool {
    let all = low_mask(vcount);
    let reach = |adj: &[u64]| {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_indices(frontier) {
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    };
    vcount <= 1 || (reach(out) == all && reach(inn) == all)
}

/// Whether flipping the edges in `x` relative to the reference orientation
/// yields a strongly connected digraph with the arcs.
///
/// `reference` has bit `e` set when edge `e` is oriented from its second
/// endpoint to its first.
pub fn is_strong_reorientation(g: &MixedGraph, reference: u64, x: u64) -> bool {
    let mut out = vec![0u64; g.vcount];
    let mut inn = vec![0u64; g.vcount];
    for &(a, b) in &g.arcs {
        out[a] |= 1 << b;
        inn[b] |= 1 << a;
    }
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        let (t, h) = if (reference ^ x) >> e & 1 == 1 { (b, a) } else { (a, b) };
        out[t] |= 1 << h;
        inn[h] |= 1 << t;
    }
    strongly_connected(g.vcount, &out, &inn)
}

/// The GSC row of a pseudo dicut: some edge of `δ(U)` must enter `U`.
fn dicut_inequality(g: &MixedGraph, reference: u64, cut: &Cut) -> GscIneq {
    let mut i = 0u64;
    let mut j = 0u64;
    for e in mask_indices(cut.edges) {
        let (a, b) = g.edges[e];
        let head = if reference >> e & 1 == 1 { a } else { b };
        if cut.set >> head & 1 == 1 {
            j |= 1 << e;
        } else {
            i |= 1 << e;
        }
    }
    GscIneq::new(i, j).expect("cut edges are nonempty and split disjointly")
}

/// The flip vectors `x ∈ {0,1}^E` giving strong re-orientations.
pub fn scr(g: &MixedGraph, reference: u64) -> Result<SetSystem> {
    let cuts = pseudo_dicuts(g)?;
    require_two_edges(g, &cuts)?;
    let m = g.edges.len();
    let points: Vec<Point> =
        (0..1u64 << m).into_par_iter().filter(|&x| is_strong_reorientation(g, reference, x)).map(Point).collect();
    SetSystem::new(m, points)
}

/// Agreement between the strong-connectivity test and the pseudo dicut
/// inequalities over all of `{0,1}^E`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrCrossCheck {
    pub points_checked: u64,
    pub inequalities: usize,
    pub mismatches: Vec<u64>,
}

pub fn scr_cross_validate(g: &MixedGraph, reference: u64) -> Result<ScrCrossCheck> {
    let cuts = pseudo_dicuts(g)?;
    require_two_edges(g, &cuts)?;
    let rows: Vec<GscIneq> = cuts.iter().map(|c| dicut_inequality(g, reference, c)).collect();
    let m = g.edges.len();
    let mismatches: Vec<u64> = (0..1u64 << m)
        .into_par_iter()
        .filter(|&x| {
            let by_rows = rows.iter().all(|r| !r.violated_by(Point(x)));
            by_rows != is_strong_reorientation(g, reference, x)
        })
        .collect();
    Ok(ScrCrossCheck { points_checked: 1 << m, inequalities: rows.len(), mismatches })
}

/// Cube-idealness of the strong re-orientation set-system.
pub fn scr_is_cube_ideal(g: &MixedGraph, reference: u64) -> Result<bool> {
    ensure_cap("edges for cube-idealness", g.edges.len(), crate::polytope::MAX_N_CUBE_IDEAL)?;
    Ok(crate::polytope::is_cube_ideal(&scr(g, reference)?)?.verdict)
}

/// The graph on `E` with an edge per pseudo dicut holding exactly two edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudoDicutGraph {
    pub edges: Vec<(usize, usize)>,
    pub d: usize,
    pub labels: Vec<usize>,
    pub kappa: Extended,
}

pub fn two_pseudo_dicut_graph(g: &MixedGraph) -> Result<PseudoDicutGraph> {
    let cuts = pseudo_dicuts(g)?;
    require_two_edges(g, &cuts)?;
    let mut pairs: Vec<(usize, usize)> = cuts
        .iter()
        .filter(|c| c.edges.count_ones() == 2)
        .map(|c| {
            let e = mask_indices(c.edges);
            (e[0], e[1])
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let (labels, d) = component_labels(g.edges.len(), &pairs);
    let rainbow = |mask: u64| {
        let mut seen = 0u64;
        mask_indices(mask).into_iter().all(|e| {
            let bit = 1u64 << labels[e];
            let fresh = seen & bit == 0;
            seen |= bit;
            fresh
        })
    };
    let kappa = cuts.iter().filter(|c| rainbow(c.edges)).map(|c| c.edges.count_ones() as usize).min().into();
    Ok(PseudoDicutGraph { edges: pairs, d, labels, kappa })
}

/// Dicuts, dijoins and the dijoins meeting every minimum dicut once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightDijoins {
    pub tau: usize,
    /// Minimal dicuts as arc masks.
    pub dicuts: Clutter,
    pub minimum_dicuts: Vec<u64>,
    /// Minimal dijoins.
    pub dijoins: Clutter,
    /// Minimal dijoins meeting every minimum dicut exactly once.
    pub members: Clutter,
    /// Rational rank of the minimum dicut incidence vectors.
    pub rank: usize,
}

/// Whether every vertex is a source or a sink.
pub fn is_bipartite_digraph(d: &MixedGraph) -> bool {
    let mut has_in = vec![false; d.vcount];
    let mut has_out = vec![false; d.vcount];
    for &(a, b) in &d.arcs {
        has_out[a] = true;
        has_in[b] = true;
    }
    (0..d.vcount).all(|v| !(has_in[v] && has_out[v]))
}

pub fn tight_dijoins(d: &MixedGraph) -> Result<TightDijoins> {
    d.require_directed()?;
    if !is_bipartite_digraph(d) {
        return Err(Error::argument("digraph has a vertex that is neither a source nor a sink"));
    }
    ensure_cap("arcs for dijoin enumeration", d.arcs.len(), MAX_EDGES_BRUTE)?;
    ensure_cap("vertex count for cut enumeration", d.vcount, MAX_VERTICES_CUTS)?;
    if d.arcs.is_empty() || d.components() != 1 {
        return Err(Error::argument("digraph must be weakly connected with at least one arc"));
    }
    let cut_masks: Vec<u64> =
        proper_subsets(d.vcount).filter(|&u| d.entering_arcs(u) == 0).map(|u| d.leaving_arcs(u)).collect();
    let m = d.arcs.len();
    let dicuts = Clutter::new(m, cut_masks)?;
    let tau = dicuts
        .members()
        .iter()
        .map(|c| c.count_ones() as usize)
        .min()
        .ok_or_else(|| Error::internal("weakly connected digraph without dicuts"))?;
    let minimum_dicuts: Vec<u64> =
        dicuts.members().iter().copied().filter(|c| c.count_ones() as usize == tau).collect();
    let dijoins = blocker(&dicuts)?;
    let members = Clutter::new(
        m,
        dijoins.members().iter().copied().filter(|&j| minimum_dicuts.iter().all(|&c| (c & j).count_ones() == 1)),
    )?;
    let rank = incidence_rank(m, &minimum_dicuts);
    Ok(TightDijoins { tau, dicuts, minimum_dicuts, dijoins, members, rank })
}

/// Odd cuts, perfect matchings and the rank of minimum odd cuts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RGraphSuite {
    pub r: usize,
    pub is_r_graph: bool,
    /// Minimum odd cuts, one per distinct edge set.
    pub min_odd_cuts: CutFamily,
    pub matchings: Clutter,
    pub core_matchings: Clutter,
    pub rank: usize,
}

fn require_even_graph(g: &MixedGraph, cap: usize) -> Result<()> {
    g.require_undirected()?;
    if g.vcount == 0 || g.vcount % 2 == 1 {
        return Err(Error::argument(format!("vertex count {} is not even and positive", g.vcount)));
    }
    ensure_cap("vertex count", g.vcount, cap)
}

/// Perfect matchings as edge masks.
pub fn perfect_matchings(g: &MixedGraph) -> Result<Vec<u64>> {
    require_even_graph(g, MAX_VERTICES_RGRAPH)?;
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.vcount];
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        incident[a].push((e, b));
        incident[b].push((e, a));
    }
    fn extend(incident: &[Vec<(usize, usize)>], covered: u64, chosen: u64, full: u64, out: &mut Vec<u64>) {
        if covered == full {
            out.push(chosen);
            return;
        }
        let v = (!covered).trailing_zeros() as usize;
        for &(e, w) in &incident[v] {
            if covered >> w & 1 == 0 {
                extend(incident, covered | 1 << v | 1 << w, chosen | 1 << e, full, out);
            }
        }
    }
    let mut out = Vec::new();
    extend(&incident, 0, 0, low_mask(g.vcount), &mut out);
    out.sort_unstable();
    Ok(out)
}

pub fn rgraph_suite(g: &MixedGraph, r: usize) -> Result<RGraphSuite> {
    require_even_graph(g, MAX_VERTICES_RGRAPH)?;
    if let Some(v) = g.degrees().iter().position(|&d| d != r) {
        return Err(Error::argument(format!(
            "graph is not {r}-regular: vertex {} has degree {}",
            v + 1,
            g.degrees()[v]
        )));
    }
    let mut is_r_graph = true;
    let mut seen = std::collections::HashSet::new();
    let mut min_odd_cuts = Vec::new();
    for u in proper_subsets(g.vcount).filter(|u| u.count_ones() % 2 == 1) {
        let edges = g.cut_edges(u);
        let size = edges.count_ones() as usize;
        if size < r {
            is_r_graph = false;
        }
        if size == r && seen.insert(edges) {
            min_odd_cuts.push(Cut { set: u, edges, arcs: 0 });
        }
    }
    let m = g.edges.len();
    let matchings = Clutter::new(m, perfect_matchings(g)?)?;
    let core_matchings = Clutter::new(
        m,
        matchings.members().iter().copied().filter(|&pm| min_odd_cuts.iter().all(|c| (c.edges & pm).count_ones() == 1)),
    )?;
    let masks: Vec<u64> = min_odd_cuts.iter().map(|c| c.edges).collect();
    Ok(RGraphSuite { r, is_r_graph, rank: incidence_rank(m, &masks), min_odd_cuts, matchings, core_matchings })
}

fn vertex_parities(g: &MixedGraph) -> Vec<u64> {
    g.edges.iter().map(|&(a, b)| 1u64 << a | 1u64 << b).collect()
}

/// Minimal edge sets with every vertex of odd degree.
pub fn postman_clutter(g: &MixedGraph) -> Result<Clutter> {
    require_even_graph(g, MAX_VERTICES_POSTMAN)?;
    let m = g.edges.len();
    ensure_cap("edges for subset enumeration", m, MAX_EDGES_BRUTE)?;
    let par = vertex_parities(g);
    let all = low_mask(g.vcount);
    let sets: Vec<u64> = (0..1u64 << m)
        .into_par_iter()
        .filter(|&j| mask_indices(j).iter().fold(0u64, |acc, &e| acc ^ par[e]) == all)
        .collect();
    Clutter::new(m, sets)
}

/// Minimal odd cuts `δ(U)` with `|U|` odd.
pub fn odd_cut_clutter(g: &MixedGraph) -> Result<Clutter> {
    require_even_graph(g, MAX_VERTICES_CUTS)?;
    let cuts = proper_subsets(g.vcount).filter(|u| u.count_ones() % 2 == 1).map(|u| g.cut_edges(u));
    Clutter::new(g.edges.len(), cuts)
}

/// The capped ladder on `k` vertices: rungs `v_i w_i` and sides along
/// `v_1 … v_r` and `w_1 … w_r` for `r = (k − 2)/2`, with a cap `s` joined to
/// `v_1, w_1`, a cap `t` joined to `v_r, w_r`, and the edge `st`.
///
/// Vertex order is `s, v_1..v_r, w_1..w_r, t`. The graph is 3-regular with
/// `3k/2` edges; `k = 4` gives `K_4` and `k = 6` the triangular prism.
pub fn staircase(k: usize) -> Result<MixedGraph> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::argument(format!("staircase needs an even k ≥ 4, got {k}")));
    }
    let r = (k - 2) / 2;
    let s = 0;
    let v = |i: usize| 1 + i;
    let w = |i: usize| 1 + r + i;
    let t = k - 1;
    let mut edges = vec![(s, v(0)), (s, w(0))];
    for i in 0..r {
        edges.push((v(i), w(i)));
        if i + 1 < r {
            edges.push((v(i), v(i + 1)));
            edges.push((w(i), w(i + 1)));
        }
    }
    edges.push((v(r - 1), t));
    edges.push((w(r - 1), t));
    edges.push((s, t));
    MixedGraph::graph(k, edges)
}

/// Edge subsets with every vertex of even degree.
pub fn cycle_space(g: &MixedGraph) -> Result<SetSystem> {
    g.require_undirected()?;
    let m = g.edges.len();
    ensure_cap("edges for subset enumeration", m, MAX_EDGES_BRUTE)?;
    if m == 0 {
        return Err(Error::argument("graph has no edges"));
    }
    let par = vertex_parities(g);
    let points: Vec<Point> = (0..1u64 << m)
        .into_par_iter()
        .filter(|&j| mask_indices(j).iter().fold(0u64, |acc, &e| acc ^ par[e]) == 0)
        .map(Point)
        .collect();
    let s = SetSystem::new(m, points)?;
    let expected = 1u64 << (m + g.components() - g.vcount);
    if s.len() as u64 != expected {
        return Err(Error::internal(format!("cycle space has {} elements, expected {expected}", s.len())));
    }
    Ok(s)
}

/// `|E| − |V| + 1` for a connected graph.
pub fn ear_count(g: &MixedGraph) -> Result<usize> {
    g.require_undirected()?;
    if g.vcount == 0 || g.components() != 1 {
        return Err(Error::argument("graph is not connected"));
    }
    (g.edges.len() + 1)
        .checked_sub(g.vcount)
        .ok_or_else(|| Error::internal("connected graph with fewer than |V| − 1 edges"))
}

/// Edge connectivity by cut enumeration.
pub fn edge_connectivity(g: &MixedGraph) -> Result<usize> {
    g.require_undirected()?;
    ensure_cap("vertex count for cut enumeration", g.vcount, MAX_VERTICES_CUTS)?;
    Ok(proper_subsets(g.vcount).filter(|u| u & 1 == 1).map(|u| g.cut_edges(u).count_ones() as usize).min().unwrap_or(0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaminarReport {
    pub laminar: bool,
    pub all_odd: bool,
    pub size: usize,
    pub bound: usize,
    /// `size ≤ bound`, or `None` when the family is not laminar and odd.
    pub pass: Option<bool>,
}

fn laminar_pair(a: u64, b: u64) -> bool {
    a & b == 0 || a & b == a || a & b == b
}

/// Size check against `3n − 1` for a family of subsets of `[2n]`.
pub fn laminar_bound_check(family: &[u64], n: usize) -> Result<LaminarReport> {
    if n == 0 || 2 * n > 63 {
        return Err(Error::argument("ground set [2n] must have 2 ≤ 2n ≤ 62"));
    }
    let full = low_mask(2 * n);
    if let Some(&s) = family.iter().find(|&&s| s & !full != 0 || s == 0) {
        return Err(Error::argument(format!("family member {s:#x} is not a nonempty subset of [2n]")));
    }
    let mut uniq = family.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    let laminar = uniq.iter().enumerate().all(|(i, &a)| uniq[i + 1..].iter().all(|&b| laminar_pair(a, b)));
    let all_odd = uniq.iter().all(|s| s.count_ones() % 2 == 1);
    let bound = 3 * n - 1;
    Ok(LaminarReport {
        laminar,
        all_odd,
        size: uniq.len(),
        bound,
        pass: (laminar && all_odd).then_some(uniq.len() <= bound),
    })
}

/// Largest laminar family of odd subsets of `[2n]`, by exhaustive clique
/// search; supports `2n ≤ 8`.
pub fn max_laminar_odd_family(n: usize) -> Result<Vec<u64>> {
    if n == 0 || 2 * n > 8 {
        return Err(Error::cap("2n for exhaustive laminar search", 2 * n, 8));
    }
    let odd: Vec<u64> = (1..low_mask(2 * n) + 1).filter(|s| s.count_ones() % 2 == 1).collect();
    let k = odd.len();
    let adj: Vec<u128> = (0..k)
        .map(|i| (0..k).filter(|&j| j != i && laminar_pair(odd[i], odd[j])).fold(0u128, |m, j| m | 1 << j))
        .collect();
    fn expand(adj: &[u128], current: u128, mut candidates: u128, mut excluded: u128, best: &mut u128) {
        if candidates == 0 {
            if excluded == 0 && current.count_ones() > best.count_ones() {
                *best = current;
            }
            return;
        }
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        let pivot_pool = candidates | excluded;
        let pivot = (0..128)
            .filter(|&u| pivot_pool >> u & 1 == 1)
            .max_by_key(|&u| (adj[u] & candidates).count_ones())
            .unwrap_or(0);
        let mut pool = candidates & !adj[pivot];
        while pool != 0 {
            let v = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            expand(adj, current | 1 << v, candidates & adj[v], excluded & adj[v], best);
            candidates &= !(1u128 << v);
            excluded |= 1 << v;
        }
    }
    let mut best = 0u128;
    let all = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
    expand(&adj, 0, all, 0, &mut best);
    Ok((0..k).filter(|&i| best >> i & 1 == 1).map(|i| odd[i]).collect())
}
