//! Small named graphs and set-systems.

use super::MixedGraph;
use crate::setsys::{Point, SetSystem};

fn graph(vcount: usize, edges: &[(usize, usize)]) -> MixedGraph {
    MixedGraph::graph(vcount, edges.to_vec()).expect("fixture edges are in range")
}

pub fn triangle() -> MixedGraph {
    graph(3, &[(0, 1), (1, 2), (0, 2)])
}

/// `K_n` with edges in lexicographic order.
pub fn complete(n: usize) -> MixedGraph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    graph(n, &edges)
}

pub fn k4() -> MixedGraph {
    complete(4)
}

pub fn k5() -> MixedGraph {
    complete(5)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i i+5`.
pub fn petersen() -> MixedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    graph(10, &edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> MixedGraph {
    let edges: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    graph(a + b, &edges)
}

pub fn k44() -> MixedGraph {
    complete_bipartite(4, 4)
}

/// `K_{a,b}` with every arc from the first side to the second.
pub fn bipartite_digraph(a: usize, b: usize) -> MixedGraph {
    let arcs: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    MixedGraph::digraph(a + b, arcs).expect("fixture arcs are in range")
}

pub fn k22_digraph() -> MixedGraph {
    bipartite_digraph(2, 2)
}

pub fn k33_digraph() -> MixedGraph {
    bipartite_digraph(3, 3)
}

/// Arc `a → b` with edges `bc`, `ca`, `ba`.
pub fn mixed_path() -> MixedGraph {
    MixedGraph::new(3, vec![(0, 1)], vec![(1, 2), (2, 0), (1, 0)]).expect("fixture is valid")
}

/// The chain `0, e_1, e_1 + e_2, …, 1` in `{0,1}^n`.
pub fn chain(n: usize) -> SetSystem {
    SetSystem::new(n, (0..=n).map(|k| Point((1u64 << k) - 1))).expect("chain fits the dimension cap")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        assert_eq!(petersen().edges().len(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
        assert_eq!(k44().edges().len(), 16);
        assert_eq!(k5().edges().len(), 10);
        assert_eq!(chain(3), SetSystem::from_bitstrings(3, ["000", "100", "110", "111"]).unwrap());
    }
}
