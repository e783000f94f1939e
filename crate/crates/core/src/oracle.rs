//! Definition-level oracles and graph generators for cross-checking.
//!
//! Nothing here shares code with the clique engine: cliques are found by
//! testing every vertex subset pair by pair, values by scanning every
//! outside vertex.

use rand::Rng;

use crate::clique::Clique;
use crate::error::ScanError;
use crate::graph::{Graph, Vertex};

/// Largest order accepted by [`brute_force_cliques`].
pub const BRUTE_FORCE_MAX_N: usize = 20;
/// Largest order accepted by [`all_graphs`].
pub const ALL_GRAPHS_MAX_N: usize = 7;

/// Every `k`-subset of the vertices that is pairwise adjacent, sorted.
pub fn brute_force_cliques(g: &Graph, k: usize) -> Result<Vec<Clique>, ScanError> {
    if g.n() > BRUTE_FORCE_MAX_N {
        return Err(ScanError::OrderTooLarge {
            what: "brute-force clique search",
            n: g.n(),
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let n = g.n();
    let mut out = Vec::new();
    if k == 0 || k > n {
        return Ok(out);
    }
    for subset in 0u32..1 << n {
        if subset.count_ones() as usize != k {
            continue;
        }
        let member = |v: Vertex| subset >> v & 1 == 1;
        let pairwise = (0..n)
            .filter(|&u| member(u))
            .all(|u| (u + 1..n).filter(|&v| member(v)).all(|v| g.has_edge(u, v)));
        if pairwise {
            out.push(Clique::new((0..n).filter(|&v| member(v))));
        }
    }
    out.sort();
    Ok(out)
}

/// Number of vertices outside `q` adjacent to all of `q`.
pub fn brute_force_value(g: &Graph, q: &[Vertex]) -> usize {
    g.vertices()
        .filter(|w| !q.contains(w) && q.iter().all(|&v| g.has_edge(*w, v)))
        .count()
}

/// Number of vertex pairs, i.e. bits in an edge mask, for order `n`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labelled simple graph on `n` vertices, one per edge mask, in
/// ascending mask order (see [`Graph::from_edge_mask`]).
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, ScanError> {
    if n > ALL_GRAPHS_MAX_N {
        return Err(ScanError::OrderTooLarge {
            what: "exhaustive graph enumeration",
            n,
            limit: ALL_GRAPHS_MAX_N,
        });
    }
    let masks = 1u64 << pair_count(n);
    Ok((0..masks).map(move |mask| Graph::from_edge_mask(n, mask)))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated pairs are valid")
}
