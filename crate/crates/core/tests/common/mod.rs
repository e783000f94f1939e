#![allow(dead_code)]

use clique_randic::Graph;
use proptest::prelude::*;

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub fn diamond() -> Graph {
    Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Disjoint union, relabelling `b` after `a`.
pub fn union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a
        .edges()
        .chain(b.edges().map(|(u, v)| (u + shift, v + shift)))
        .collect::<Vec<_>>();
    Graph::new(a.n() + b.n(), edges).unwrap()
}

/// Graphs on up to `max_n` vertices with a random edge density.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}
