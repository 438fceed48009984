//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

pub mod basis;

use cubeideal::setsys::{Point, SetSystem};

/// All `(I, J)` masks with `I ∩ J = ∅`, not both empty, valid for `S` and
/// not dominated by another valid pair.
pub fn minimal_gsc_oracle(s: &SetSystem) -> Vec<(u64, u64)> {
    let n = s.dim();
    let valid = |i: u64, j: u64| s.points().iter().all(|p| !(p.0 & i == 0 && p.0 & j == j));
    let mut all = Vec::new();
    for i in 0..1u64 << n {
        for j in 0..1u64 << n {
            if i & j == 0 && (i | j) != 0 && valid(i, j) {
                all.push((i, j));
            }
        }
    }
    all.iter()
        .copied()
        .filter(|&(i, j)| !all.iter().any(|&(a, b)| (a, b) != (i, j) && a & i == a && b & j == b))
        .collect()
}

pub fn vc_oracle(s: &SetSystem) -> usize {
    let n = s.dim();
    (0..1u64 << n)
        .filter(|&mask| {
            let mut seen = std::collections::HashSet::new();
            for p in s.points() {
                seen.insert(p.0 & mask);
            }
            seen.len() == 1 << mask.count_ones()
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Minimal covers of a family of masks over `m` elements, by definition.
pub fn blocker_oracle(m: usize, members: &[u64]) -> Vec<u64> {
    let is_cover = |b: u64| members.iter().all(|&c| b & c != 0);
    let mut out: Vec<u64> = (0..1u64 << m)
        .filter(|&b| is_cover(b))
        .filter(|&b| {
            // No proper subset is a cover.
            let mut sub = b;
            loop {
                sub = sub.wrapping_sub(1) & b;
                if sub == b {
                    return true;
                }
                if is_cover(sub) {
                    return false;
                }
                if sub == 0 {
                    return true;
                }
            }
        })
        .collect();
    out.sort_unstable();
    out
}

/// Strong connectivity by depth-first search on adjacency lists.
pub fn strongly_connected_oracle(vcount: usize, arcs: &[(usize, usize)]) -> bool {
    let reach = |forward: bool| {
        let mut adj = vec![Vec::new(); vcount];
        for &(a, b) in arcs {
            if forward {
                adj[a].push(b);
            } else {
                adj[b].push(a);
            }
        }
        let mut seen = vec![false; vcount];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|x| x)
    };
    reach(true) && reach(false)
}

/// Perfect matchings by scanning edge subsets of size `|V|/2`.
pub fn perfect_matching_oracle(vcount: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let m = edges.len();
    (0..1u64 << m)
        .filter(|j| j.count_ones() as usize * 2 == vcount)
        .filter(|&j| {
            let mut covered = vec![0; vcount];
            for (e, &(a, b)) in edges.iter().enumerate() {
                if j >> e & 1 == 1 {
                    covered[a] += 1;
                    covered[b] += 1;
                }
            }
            covered.iter().all(|&c| c == 1)
        })
        .collect()
}

/// Cube-idealness from basis enumeration over the oracle description.
pub fn cube_ideal_oracle(s: &SetSystem) -> bool {
    let n = s.dim();
    let mut rows = basis::box_rows(n);
    for (i, j) in minimal_gsc_oracle(s) {
        let coeffs = (0..n)
            .map(|k| {
                if i >> k & 1 == 1 {
                    1
                } else if j >> k & 1 == 1 {
                    -1
                } else {
                    0
                }
            })
            .collect();
        rows.push((coeffs, 1 - j.count_ones() as i64));
    }
    basis::vertices(n, &rows).iter().all(|v| v.iter().all(|x| x.is_integer()))
}

pub fn set_system(n: usize, masks: impl IntoIterator<Item = u64>) -> SetSystem {
    SetSystem::new(n, masks.into_iter().map(Point)).unwrap()
}
