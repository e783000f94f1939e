//! k-clique enumeration, clique values, facets and clique regularity.
//!
//! A `k`-clique is stored as its strictly increasing vertex list. The value
//! of a clique is the number of vertices adjacent to every one of its
//! members; for single vertices that is the degree, for edges the number of
//! triangles through the edge. A clique with value zero sits inside no
//! larger clique and is called isolated.

use std::fmt;
use std::ops::Deref;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::CliqueError;
use crate::graph::{Graph, Vertex, VertexSet};

type CliqueVertices = SmallVec<[Vertex; 6]>;

/// A clique in canonical form: strictly increasing vertex ids.
///
/// Ordering is lexicographic on the vertex list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(CliqueVertices);

impl Clique {
    /// Canonicalises `vertices` (sort, dedup). Whether the result is a
    /// clique of some graph is checked by the operations that take one.
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Clique {
        let mut vs: CliqueVertices = vertices.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        Clique(vs)
    }

    fn from_sorted(vs: &[Vertex]) -> Clique {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        Clique(SmallVec::from_slice(vs))
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// True iff the vertices are pairwise adjacent in `g` and in range.
    pub fn is_clique_of(&self, g: &Graph) -> bool {
        let vs = &self.0;
        vs.iter().all(|&v| v < g.n())
            && vs
                .iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    /// The sub-cliques obtained by deleting one vertex, in lexicographic
    /// order (deleting the last vertex first).
    pub fn facets(&self) -> Result<Vec<Clique>, CliqueError> {
        if self.order() < 2 {
            return Err(CliqueError::NoFacets(self.order()));
        }
        Ok((0..self.order()).rev().map(|i| self.without(i)).collect())
    }

    fn without(&self, i: usize) -> Clique {
        let mut vs = self.0.clone();
        vs.remove(i);
        Clique(vs)
    }

    /// True iff every vertex of `self` is a vertex of `other`.
    pub fn is_subset_of(&self, other: &Clique) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }
}

impl Deref for Clique {
    type Target = [Vertex];

    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl fmt::Debug for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Clique {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl From<Vec<Vertex>> for Clique {
    fn from(vs: Vec<Vertex>) -> Clique {
        Clique::new(vs)
    }
}

impl<const N: usize> From<[Vertex; N]> for Clique {
    fn from(vs: [Vertex; N]) -> Clique {
        Clique::new(vs)
    }
}

/// Number of common neighbours of a clique's vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CliqueValue(pub usize);

impl CliqueValue {
    pub fn get(self) -> usize {
        self.0
    }

    pub fn is_isolated(self) -> bool {
        self.0 == 0
    }
}

/// `(c_k, c_{k,0})`: the number of `k`-cliques and of isolated `k`-cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueCounts {
    pub total: usize,
    pub isolated: usize,
}

impl CliqueCounts {
    /// Cliques with nonzero value.
    pub fn non_isolated(&self) -> usize {
        self.total - self.isolated
    }
}

/// All `k`-cliques of `g` in lexicographic order. `k = 0` and `k` above the
/// clique number both give an empty list.
pub fn enumerate_cliques(g: &Graph, k: usize) -> Vec<Clique> {
    let mut out = Vec::new();
    if k == 0 || k > g.n() {
        return out;
    }
    let mut stack = Vec::with_capacity(k);
    for v in g.vertices() {
        extend_from(g, k, v, &mut stack, &mut out);
    }
    out
}

/// Same result as [`enumerate_cliques`], sharded over the smallest clique
/// vertex on the rayon pool. Shards are concatenated in vertex order so the
/// output does not depend on the number of workers.
pub fn enumerate_cliques_par(g: &Graph, k: usize) -> Vec<Clique> {
    if k == 0 || k > g.n() {
        return Vec::new();
    }
    let shards: Vec<Vec<Clique>> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let mut out = Vec::new();
            extend_from(g, k, v, &mut Vec::with_capacity(k), &mut out);
            out
        })
        .collect();
    shards.into_iter().flatten().collect()
}

/// Every `k`-clique whose smallest vertex is `root`.
fn extend_from(g: &Graph, k: usize, root: Vertex, stack: &mut Vec<Vertex>, out: &mut Vec<Clique>) {
    let mut cand = g.row(root).clone();
    cand.retain_above(root);
    stack.clear();
    stack.push(root);
    grow(g, k, &cand, stack, out);
}

// `cand` holds the common neighbours of `stack` above its last vertex.
fn grow(g: &Graph, k: usize, cand: &VertexSet, stack: &mut Vec<Vertex>, out: &mut Vec<Clique>) {
    if stack.len() == k {
        out.push(Clique::from_sorted(stack));
        return;
    }
    if stack.len() + cand.len() < k {
        return;
    }
    for w in cand.iter() {
        let mut next = cand.intersection(g.row(w));
        next.retain_above(w);
        stack.push(w);
        grow(g, k, &next, stack, out);
        stack.pop();
    }
}

/// Common open neighbourhood of the vertices of `q`, without validation.
pub(crate) fn common_neighbors(g: &Graph, q: &[Vertex]) -> VertexSet {
    let mut acc = g.row(q[0]).clone();
    for &v in &q[1..] {
        acc.intersect_with(g.row(v));
    }
    acc
}

/// Number of vertices adjacent to every vertex of `q`.
pub fn clique_value(g: &Graph, q: &Clique) -> Result<CliqueValue, CliqueError> {
    if q.order() == 0 {
        return Err(CliqueError::ZeroOrder);
    }
    if !q.is_clique_of(g) {
        return Err(CliqueError::NotAClique(q.to_vec()));
    }
    Ok(CliqueValue(common_neighbors(g, q).len()))
}

/// Facets of a clique of order at least 2. See [`Clique::facets`].
pub fn facets(q: &Clique) -> Result<Vec<Clique>, CliqueError> {
    q.facets()
}

/// `(c_k, c_{k,0})` via the value of every `k`-clique.
pub fn clique_counts(g: &Graph, k: usize) -> CliqueCounts {
    let cliques = enumerate_cliques(g, k);
    let isolated = cliques
        .iter()
        .filter(|q| common_neighbors(g, q).is_empty())
        .count();
    CliqueCounts {
        total: cliques.len(),
        isolated,
    }
}

/// Isolated `k`-cliques found from the other side: the `k`-cliques that are
/// not a facet of any `(k+1)`-clique. Agrees with [`clique_counts`].
pub fn isolated_by_superclique(g: &Graph, k: usize) -> Vec<Clique> {
    let lower = enumerate_cliques(g, k);
    if k == 0 {
        return lower;
    }
    let mut covered = vec![false; lower.len()];
    for big in enumerate_cliques(g, k + 1) {
        for f in big.facets().expect("order >= 2") {
            if let Ok(i) = lower.binary_search(&f) {
                covered[i] = true;
            }
        }
    }
    lower
        .into_iter()
        .zip(covered)
        .filter_map(|(q, c)| (!c).then_some(q))
        .collect()
}

/// For each connected component (in label order), whether all `k`-cliques
/// inside it have the same value. Components without `k`-cliques are
/// vacuously regular.
pub fn is_clique_regular(g: &Graph, k: usize) -> Vec<bool> {
    let comps = g.connected_components();
    let mut seen: Vec<Option<usize>> = vec![None; comps.count()];
    let mut regular = vec![true; comps.count()];
    for q in enumerate_cliques(g, k) {
        let c = comps.label_of(q[0]);
        let val = common_neighbors(g, &q).len();
        match seen[c] {
            None => seen[c] = Some(val),
            Some(prev) if prev != val => regular[c] = false,
            Some(_) => {}
        }
    }
    regular
}

/// The `k`-cliques of a graph with their values, together with the
/// `(k+1)`-cliques and, for each of those, the positions of its facets in
/// the `k`-clique list.
#[derive(Clone, Debug)]
pub struct CliqueTable {
    k: usize,
    cliques: Vec<Clique>,
    values: Vec<usize>,
    upper: Vec<Clique>,
    facet_index: Vec<SmallVec<[usize; 6]>>,
}

impl CliqueTable {
    pub fn new(g: &Graph, k: usize) -> Result<CliqueTable, CliqueError> {
        if k == 0 {
            return Err(CliqueError::ZeroOrder);
        }
        let cliques = enumerate_cliques(g, k);
        let values = cliques
            .iter()
            .map(|q| common_neighbors(g, q).len())
            .collect();
        let upper = enumerate_cliques(g, k + 1);
        let facet_index = upper
            .iter()
            .map(|big| {
                big.facets()
                    .expect("order >= 2")
                    .iter()
                    .map(|f| {
                        cliques
                            .binary_search(f)
                            .expect("facet of a clique is a clique")
                    })
                    .collect()
            })
            .collect();
        Ok(CliqueTable {
            k,
            cliques,
            values,
            upper,
            facet_index,
        })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    /// The `k`-cliques, lexicographically sorted.
    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    /// Value of each `k`-clique, aligned with [`cliques`](Self::cliques).
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The `(k+1)`-cliques, lexicographically sorted.
    pub fn upper(&self) -> &[Clique] {
        &self.upper
    }

    /// Indices into [`cliques`](Self::cliques) of the facets of `upper()[j]`,
    /// in facet order.
    pub fn facet_indices(&self, j: usize) -> &[usize] {
        &self.facet_index[j]
    }

    pub fn counts(&self) -> CliqueCounts {
        CliqueCounts {
            total: self.cliques.len(),
            isolated: self.values.iter().filter(|&&v| v == 0).count(),
        }
    }

    pub fn index_of(&self, q: &Clique) -> Option<usize> {
        self.cliques.binary_search(q).ok()
    }
}
