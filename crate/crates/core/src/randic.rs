//! Generalized Randić indices, exact handshaking identities and the upper
//! bound `R(G; k) <= c_k / (k + 1)`.
//!
//! The generalized index of order `k` sums, over every `(k+1)`-clique, the
//! reciprocal square root of the product of its `k + 1` facet values. Order 1
//! is the classical vertex Randić index `sum_{uv} 1/sqrt(deg u deg v)`, order
//! 2 is the triangle sum over edge values.
//!
//! Identities are evaluated in exact rational arithmetic and compared with
//! `==`. Indices involve square roots and are evaluated in `f64`, always
//! summed in lexicographic clique order.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::clique::{common_neighbors, enumerate_cliques, Clique, CliqueTable};
use crate::error::AnalysisError;
use crate::graph::Graph;

/// Absolute tolerance for comparing an index with its bound.
pub const BOUND_TOLERANCE: f64 = 1e-9;

/// A non-negative rational weight on every `k`-clique of a graph.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightFunction {
    k: usize,
    weights: HashMap<Clique, BigRational>,
}

impl WeightFunction {
    pub fn new(k: usize) -> Self {
        WeightFunction {
            k,
            weights: HashMap::new(),
        }
    }

    /// Evaluates `f` on every `k`-clique of `g`.
    pub fn from_fn<F>(g: &Graph, k: usize, mut f: F) -> Self
    where
        F: FnMut(&Clique) -> BigRational,
    {
        let weights = enumerate_cliques(g, k)
            .into_iter()
            .map(|q| {
                let w = f(&q);
                (q, w)
            })
            .collect();
        WeightFunction { k, weights }
    }

    /// The constant weight `c`.
    pub fn constant(g: &Graph, k: usize, c: BigRational) -> Self {
        Self::from_fn(g, k, |_| c.clone())
    }

    /// `h(q) = val(q)`, the weight behind the squared identity.
    pub fn clique_values(g: &Graph, k: usize) -> Self {
        Self::from_fn(g, k, |q| int(common_neighbors(g, q).len()))
    }

    /// Independent uniform numerators and denominators in `1..=max`.
    pub fn random<R: Rng + ?Sized>(g: &Graph, k: usize, max: u32, rng: &mut R) -> Self {
        Self::from_fn(g, k, |_| {
            let p = rng.gen_range(1..=max);
            let q = rng.gen_range(1..=max);
            BigRational::new(p.into(), q.into())
        })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    /// Sets the weight of `q`. Negative weights are clamped to zero.
    pub fn insert(&mut self, q: Clique, w: BigRational) {
        let w = if w.is_negative() {
            BigRational::zero()
        } else {
            w
        };
        self.weights.insert(q, w);
    }

    pub fn get(&self, q: &Clique) -> Option<&BigRational> {
        self.weights.get(q)
    }

    /// `c * h`.
    pub fn scaled(&self, c: &BigRational) -> Self {
        WeightFunction {
            k: self.k,
            weights: self
                .weights
                .iter()
                .map(|(q, w)| (q.clone(), w * c))
                .collect(),
        }
    }

    /// Weights aligned with `table.cliques()`.
    fn aligned(&self, table: &CliqueTable) -> Result<Vec<BigRational>, AnalysisError> {
        if self.k != table.order() {
            return Err(AnalysisError::OrderMismatch {
                expected: table.order(),
                found: self.k,
            });
        }
        table
            .cliques()
            .iter()
            .map(|q| {
                self.weights
                    .get(q)
                    .cloned()
                    .ok_or_else(|| AnalysisError::UndefinedWeight(q.to_vec()))
            })
            .collect()
    }
}

fn int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Which identity an [`IdentityReport`] checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    /// `sum h(q) val(q) = sum over (k+1)-cliques of the facet weights`.
    Handshake,
    /// The handshake with `h = val`.
    SquaredHandshake,
    /// `sum over (k+1)-cliques of sum 1/val(facet) = c_k - c_{k,0}`.
    Reciprocal,
    /// Row total against column total of the weighted incidence matrix.
    MatrixSums,
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityKind::Handshake => "handshake",
            IdentityKind::SquaredHandshake => "squared_handshake",
            IdentityKind::Reciprocal => "reciprocal",
            IdentityKind::MatrixSums => "matrix_sums",
        })
    }
}

/// Both sides of an identity, exactly. `holds` is `lhs == rhs`, with no tolerance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub k: usize,
    #[serde(serialize_with = "display")]
    pub lhs: BigRational,
    #[serde(serialize_with = "display")]
    pub rhs: BigRational,
    pub holds: bool,
}

impl IdentityReport {
    fn new(kind: IdentityKind, k: usize, lhs: BigRational, rhs: BigRational) -> Self {
        let holds = lhs == rhs;
        IdentityReport {
            kind,
            k,
            lhs,
            rhs,
            holds,
        }
    }
}

fn display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Exact sum of rationals that buckets terms by denominator, so the common
/// case of many terms over a few small denominators costs integer adds.
#[derive(Default)]
struct ExactSum {
    buckets: Vec<(BigInt, BigInt)>,
}

impl ExactSum {
    fn add(&mut self, x: &BigRational) {
        self.add_parts(x.numer(), x.denom());
    }

    fn add_parts(&mut self, numer: &BigInt, denom: &BigInt) {
        match self.buckets.iter_mut().find(|(d, _)| d == denom) {
            Some((_, acc)) => *acc += numer,
            None => self.buckets.push((denom.clone(), numer.clone())),
        }
    }

    fn total(self) -> BigRational {
        self.buckets
            .into_iter()
            .fold(BigRational::zero(), |acc, (d, n)| {
                acc + BigRational::new(n, d)
            })
    }
}

fn handshake_sides(table: &CliqueTable, weights: &[BigRational]) -> (BigRational, BigRational) {
    let mut lhs = ExactSum::default();
    for (w, &val) in weights.iter().zip(table.values()) {
        if val > 0 {
            lhs.add(&(w * int(val)));
        }
    }
    let mut rhs = ExactSum::default();
    for j in 0..table.upper().len() {
        for &i in table.facet_indices(j) {
            rhs.add(&weights[i]);
        }
    }
    (lhs.total(), rhs.total())
}

/// Evaluates both sides of the weighted clique handshake
/// `sum_q h(q) val(q) = sum_{Q} sum_{facets f of Q} h(f)` where `q` runs over
/// `k`-cliques and `Q` over `(k+1)`-cliques.
pub fn clique_handshake_identity(
    g: &Graph,
    h: &WeightFunction,
    k: usize,
) -> Result<IdentityReport, AnalysisError> {
    let table = CliqueTable::new(g, k)?;
    let weights = h.aligned(&table)?;
    let (lhs, rhs) = handshake_sides(&table, &weights);
    Ok(IdentityReport::new(IdentityKind::Handshake, k, lhs, rhs))
}

/// Handshake with unit weights: `sum val(q) = (k + 1) c_{k+1}`.
pub fn unweighted_handshake(table: &CliqueTable) -> IdentityReport {
    let lhs: usize = table.values().iter().sum();
    let rhs: usize = (0..table.upper().len())
        .map(|j| table.facet_indices(j).len())
        .sum();
    IdentityReport::new(IdentityKind::Handshake, table.order(), int(lhs), int(rhs))
}

/// Handshake with `h = val`: `sum val(q)^2 = sum_{Q} sum_f val(f)`.
pub fn squared_handshake(table: &CliqueTable) -> IdentityReport {
    let vals = table.values();
    let lhs: u128 = vals.iter().map(|&v| (v as u128) * (v as u128)).sum();
    let rhs: u128 = (0..table.upper().len())
        .flat_map(|j| table.facet_indices(j).iter().map(|&i| vals[i] as u128))
        .sum();
    IdentityReport::new(
        IdentityKind::SquaredHandshake,
        table.order(),
        BigRational::from_integer(lhs.into()),
        BigRational::from_integer(rhs.into()),
    )
}

/// `sum_{Q} sum_{facets f} 1/val(f)` against `c_k - c_{k,0}`.
pub fn reciprocal_identity(g: &Graph, k: usize) -> Result<IdentityReport, AnalysisError> {
    Ok(reciprocal_identity_from(&CliqueTable::new(g, k)?))
}

/// [`reciprocal_identity`] on a prebuilt table.
pub fn reciprocal_identity_from(table: &CliqueTable) -> IdentityReport {
    let vals = table.values();
    // Facet values are at least 1: the dropped vertex is a common neighbour.
    let mut per_denominator: Vec<u64> = Vec::new();
    for j in 0..table.upper().len() {
        for &i in table.facet_indices(j) {
            let v = vals[i];
            assert!(v > 0, "facet with value 0");
            if per_denominator.len() <= v {
                per_denominator.resize(v + 1, 0);
            }
            per_denominator[v] += 1;
        }
    }
    let mut lhs = ExactSum::default();
    for (d, &count) in per_denominator.iter().enumerate().filter(|(_, &c)| c > 0) {
        lhs.add_parts(&BigInt::from(count), &BigInt::from(d));
    }
    let counts = table.counts();
    IdentityReport::new(
        IdentityKind::Reciprocal,
        table.order(),
        lhs.total(),
        int(counts.non_isolated()),
    )
}

/// The weighted subclique/superclique incidence matrix: rows are the
/// `k`-cliques, columns the `(k+1)`-cliques, and entry `(q, Q)` is `h(q)`
/// when `q` is a subset of `Q` and zero otherwise.
///
/// Stored sparsely as the nonzero column positions of each row. Membership
/// is decided by a direct subset test, not by facet generation.
#[derive(Clone, Debug)]
pub struct IncidenceMatrix {
    rows: Vec<Clique>,
    columns: Vec<Clique>,
    weights: Vec<BigRational>,
    support: Vec<Vec<usize>>,
}

impl IncidenceMatrix {
    pub fn new(g: &Graph, h: &WeightFunction, k: usize) -> Result<Self, AnalysisError> {
        let table = CliqueTable::new(g, k)?;
        let weights = h.aligned(&table)?;
        let rows = table.cliques().to_vec();
        let columns = table.upper().to_vec();
        let support = rows
            .iter()
            .map(|q| {
                columns
                    .iter()
                    .enumerate()
                    .filter(|(_, big)| q.is_subset_of(big))
                    .map(|(c, _)| c)
                    .collect()
            })
            .collect();
        Ok(IncidenceMatrix {
            rows,
            columns,
            weights,
            support,
        })
    }

    pub fn rows(&self) -> &[Clique] {
        &self.rows
    }

    pub fn columns(&self) -> &[Clique] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> BigRational {
        if self.support[row].binary_search(&col).is_ok() {
            self.weights[row].clone()
        } else {
            BigRational::zero()
        }
    }

    /// Number of nonzero positions in a row (the clique's value when the
    /// weight is positive).
    pub fn row_support(&self, row: usize) -> usize {
        self.support[row].len()
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        self.support
            .iter()
            .zip(&self.weights)
            .map(|(cols, w)| w * int(cols.len()))
            .collect()
    }

    pub fn column_sums(&self) -> Vec<BigRational> {
        let mut sums = vec![BigRational::zero(); self.columns.len()];
        for (cols, w) in self.support.iter().zip(&self.weights) {
            for &c in cols {
                sums[c] += w;
            }
        }
        sums
    }
}

/// Re-derives the handshake by summing the incidence matrix both ways.
pub fn incidence_matrix_check(
    g: &Graph,
    h: &WeightFunction,
    k: usize,
) -> Result<IdentityReport, AnalysisError> {
    let m = IncidenceMatrix::new(g, h, k)?;
    let rows: BigRational = m.row_sums().iter().sum();
    let cols: BigRational = m.column_sums().iter().sum();
    Ok(IdentityReport::new(IdentityKind::MatrixSums, k, rows, cols))
}

fn term(table: &CliqueTable, j: usize) -> f64 {
    let product: f64 = table
        .facet_indices(j)
        .iter()
        .map(|&i| table.values()[i] as f64)
        .product();
    1.0 / product.sqrt()
}

/// `R(G; k)`, summed over `(k+1)`-cliques in lexicographic order.
pub fn randic_index(g: &Graph, k: usize) -> Result<f64, AnalysisError> {
    Ok(randic_index_from(&CliqueTable::new(g, k)?))
}

pub fn randic_index_from(table: &CliqueTable) -> f64 {
    (0..table.upper().len()).map(|j| term(table, j)).sum()
}

/// Evaluates the terms on the rayon pool, then sums them sequentially in
/// lexicographic order; bit-identical to [`randic_index`].
pub fn randic_index_par(g: &Graph, k: usize) -> Result<f64, AnalysisError> {
    let table = CliqueTable::new(g, k)?;
    let terms: Vec<f64> = (0..table.upper().len())
        .into_par_iter()
        .map(|j| term(&table, j))
        .collect();
    Ok(terms.into_iter().sum())
}

/// The lower bound `R_v(G) >= sqrt(n - 1)` for connected graphs, tight on
/// stars.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowerBound {
    pub bound_value: f64,
    /// `index - bound`.
    pub slack: f64,
    pub equality_numeric: bool,
    pub is_star: bool,
}

/// Where `R(G; k)` sits relative to `c_k / (k + 1)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub index_value: f64,
    pub bound_value: f64,
    /// `bound - index`.
    pub slack: f64,
    /// Every component is `k`-clique regular and no `k`-clique is isolated.
    pub equality_structural: bool,
    /// `|slack| <= BOUND_TOLERANCE`.
    pub equality_numeric: bool,
    pub per_component_regular: Vec<bool>,
    /// `c_{k,0}`.
    pub isolated_count: usize,
    /// `c_k`.
    pub clique_count: usize,
    /// `c_{k+1}`.
    pub upper_clique_count: usize,
    /// Present for `k = 1` on connected graphs.
    pub lower: Option<LowerBound>,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.slack >= -BOUND_TOLERANCE
            && self
                .lower
                .as_ref()
                .is_none_or(|l| l.slack >= -BOUND_TOLERANCE)
    }

    /// Structural and numeric equality verdicts disagree.
    pub fn is_mismatch(&self) -> bool {
        self.equality_structural != self.equality_numeric
    }
}

pub fn bound_report(g: &Graph, k: usize) -> Result<BoundReport, AnalysisError> {
    Ok(bound_report_from(g, &CliqueTable::new(g, k)?))
}

/// [`bound_report`] on a prebuilt table for `g`.
pub fn bound_report_from(g: &Graph, table: &CliqueTable) -> BoundReport {
    let k = table.order();
    let index_value = randic_index_from(table);
    let counts = table.counts();
    let bound_value = counts.total as f64 / (k + 1) as f64;
    let slack = bound_value - index_value;
    let per_component_regular = regular_components(g, table);
    let equality_structural = counts.isolated == 0 && per_component_regular.iter().all(|&r| r);
    let lower = (k == 1 && g.n() > 0 && g.is_connected()).then(|| {
        let bound_value = ((g.n() - 1) as f64).sqrt();
        let slack = index_value - bound_value;
        LowerBound {
            bound_value,
            slack,
            equality_numeric: slack.abs() <= BOUND_TOLERANCE,
            is_star: g.is_star(),
        }
    });
    BoundReport {
        k,
        index_value,
        bound_value,
        slack,
        equality_structural,
        equality_numeric: slack.abs() <= BOUND_TOLERANCE,
        per_component_regular,
        isolated_count: counts.isolated,
        clique_count: counts.total,
        upper_clique_count: table.upper().len(),
        lower,
    }
}

fn regular_components(g: &Graph, table: &CliqueTable) -> Vec<bool> {
    let comps = g.connected_components();
    let mut first: Vec<Option<usize>> = vec![None; comps.count()];
    let mut regular = vec![true; comps.count()];
    for (q, &val) in table.cliques().iter().zip(table.values()) {
        let c = comps.label_of(q[0]);
        match first[c] {
            None => first[c] = Some(val),
            Some(v) if v != val => regular[c] = false,
            _ => {}
        }
    }
    regular
}

fn check_positive(values: &[BigRational]) -> Result<(), AnalysisError> {
    if values.is_empty() {
        return Err(AnalysisError::EmptyValues);
    }
    if let Some(bad) = values.iter().find(|v| !v.is_positive()) {
        return Err(AnalysisError::NonPositive(bad.to_string()));
    }
    Ok(())
}

/// `(prod a)^k` compared with `HM^k` where `HM = k / sum(1/a)`, exactly.
fn mean_powers(values: &[BigRational]) -> (BigRational, BigRational) {
    let k = values.len();
    let product: BigRational = values.iter().product();
    let reciprocal_sum: BigRational = values.iter().map(|a| a.recip()).sum();
    let harmonic = int(k) / reciprocal_sum;
    let mut hm_power = BigRational::one();
    for _ in 0..k {
        hm_power *= &harmonic;
    }
    (product, hm_power)
}

/// Geometric mean >= harmonic mean, decided exactly by comparing
/// `prod a` with `HM^k`.
pub fn gm_hm_check(values: &[BigRational]) -> Result<bool, AnalysisError> {
    check_positive(values)?;
    let (gm_power, hm_power) = mean_powers(values);
    Ok(gm_power >= hm_power)
}

/// True iff the geometric and harmonic means coincide.
pub fn gm_hm_tight(values: &[BigRational]) -> Result<bool, AnalysisError> {
    check_positive(values)?;
    let (gm_power, hm_power) = mean_powers(values);
    Ok(gm_power == hm_power)
}
