//! Immutable simple undirected graphs with bitset adjacency rows.

use std::fmt;

use smallvec::SmallVec;

use crate::error::GraphError;

const WORD_BITS: usize = 64;

/// Vertex identifier. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

type Words = SmallVec<[u64; 1]>;

/// A set of vertices drawn from `0..n`, stored as a multi-word bitset.
///
/// Graphs with at most 64 vertices fit in a single inline word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Words,
}

impl VertexSet {
    /// The empty set over the universe `0..n`.
    pub fn empty(n: usize) -> Self {
        let len = n.div_ceil(WORD_BITS);
        VertexSet {
            n,
            words: SmallVec::from_elem(0, len),
        }
    }

    /// The full set `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Size of the universe this set is drawn from.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Inserts `v`, which must be below the universe size.
    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        if v < self.n {
            self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place intersection with `other`.
    #[inline]
    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    /// Removes every member `<= v`.
    #[inline]
    pub fn retain_above(&mut self, v: Vertex) {
        let cut = v + 1;
        let whole = cut / WORD_BITS;
        for w in self.words.iter_mut().take(whole) {
            *w = 0;
        }
        if whole < self.words.len() {
            let bits = cut % WORD_BITS;
            if bits > 0 {
                self.words[whole] &= !0u64 << bits;
            }
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + bit)
            })
        })
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<Vertex> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Built once by [`Graph::new`] and never mutated afterwards, so a `&Graph`
/// can be shared freely between worker threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u, v });
            }
            if !adj[u].contains(v) {
                adj[u].insert(v);
                adj[v].insert(u);
                m += 1;
            }
        }
        Ok(Graph { adj, m })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![VertexSet::empty(n); n],
            m: 0,
        }
    }

    /// Decodes an upper-triangle edge mask: bit `i` is the `i`-th pair in
    /// column order `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut adj = vec![VertexSet::empty(n); n];
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> bit & 1 == 1 {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
                bit += 1;
            }
        }
        Graph {
            adj,
            m: mask.count_ones() as usize,
        }
    }

    /// Order (number of vertices).
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Size (number of edges).
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Open neighborhood of `v`.
    pub fn neighborhood(&self, v: Vertex) -> Result<&VertexSet, GraphError> {
        self.adj.get(v).ok_or(GraphError::VertexOutOfRange {
            vertex: v,
            n: self.n(),
        })
    }

    /// Open neighborhood without the range check.
    #[inline]
    pub(crate) fn row(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.neighborhood(v).map(VertexSet::len)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Connected components, labelled `0, 1, ...` in order of each
    /// component's smallest vertex.
    pub fn connected_components(&self) -> Components {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in 0..n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = count;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        Components { label, count }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count() <= 1
    }

    /// True iff `G` is a star `K_{1,n-1}`: connected, `n - 1` edges and a
    /// vertex adjacent to all others. `K_1` and `K_2` count as stars.
    pub fn is_star(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        self.m == n - 1 && self.adj.iter().any(|row| row.len() == n - 1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A partition of the vertex set into connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    label: Vec<usize>,
    count: usize,
}

impl Components {
    pub fn count(&self) -> usize {
        self.count
    }

    /// Component label of every vertex.
    pub fn labels(&self) -> &[usize] {
        &self.label
    }

    pub fn label_of(&self, v: Vertex) -> usize {
        self.label[v]
    }

    /// Vertex lists, one per component, each sorted.
    pub fn members(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.label.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}
