//! Exhaustive scan over all labelled graphs of a given order.
//!
//! Every graph is checked, for every clique order `k` up to a limit, against
//! the reciprocal identity, the unit and squared handshakes and the upper
//! bound (plus the star lower bound at `k = 1` on connected graphs). Graphs
//! where the index meets its bound, and graphs where the structural and
//! numeric equality verdicts disagree, are collected as graph6 strings.
//!
//! The edge-mask range is cut into fixed-size shards that run on a rayon
//! pool; shard results are merged in mask order, so the report does not
//! depend on the worker count.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::clique::CliqueTable;
use crate::error::ScanError;
use crate::graph::Graph;
use crate::io::graph6;
use crate::oracle::{pair_count, ALL_GRAPHS_MAX_N};
use crate::randic::{
    bound_report_from, reciprocal_identity_from, squared_handshake, unweighted_handshake,
    BoundReport, IdentityKind, IdentityReport, BOUND_TOLERANCE,
};

const SHARD_MASKS: u64 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityFailure {
    pub graph6: String,
    pub kind: IdentityKind,
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSide {
    Upper,
    Lower,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundViolation {
    pub graph6: String,
    pub k: usize,
    pub side: BoundSide,
    pub index: f64,
    pub bound: f64,
    pub slack: f64,
}

/// A graph at one clique order with its equality verdicts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EqualityCase {
    pub graph6: String,
    pub k: usize,
    pub index: f64,
    pub bound: f64,
    pub all_components_regular: bool,
    pub isolated_count: usize,
    pub equality_structural: bool,
    pub equality_numeric: bool,
}

impl EqualityCase {
    fn new(g: &Graph, rep: &BoundReport) -> Self {
        EqualityCase {
            graph6: graph6::encode(g),
            k: rep.k,
            index: rep.index_value,
            bound: rep.bound_value,
            all_components_regular: rep.per_component_regular.iter().all(|&r| r),
            isolated_count: rep.isolated_count,
            equality_structural: rep.equality_structural,
            equality_numeric: rep.equality_numeric,
        }
    }
}

/// Counters for one clique order.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct OrderSummary {
    pub k: usize,
    /// Graphs with at least one `k`-clique.
    pub graphs_with_cliques: u64,
    /// Graphs without `k`-cliques, where index and bound are both zero.
    pub vacuous_equalities: u64,
    pub equality_numeric: u64,
    pub equality_structural: u64,
    pub mismatches: u64,
    /// Smallest `bound - index` over graphs with `k`-cliques.
    pub min_slack: Option<f64>,
    /// Star lower-bound equalities (k = 1 only).
    pub lower_equalities: u64,
    pub lower_equalities_on_stars: u64,
}

impl OrderSummary {
    fn merge(&mut self, other: &OrderSummary) {
        self.graphs_with_cliques += other.graphs_with_cliques;
        self.vacuous_equalities += other.vacuous_equalities;
        self.equality_numeric += other.equality_numeric;
        self.equality_structural += other.equality_structural;
        self.mismatches += other.mismatches;
        self.min_slack = match (self.min_slack, other.min_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.lower_equalities += other.lower_equalities;
        self.lower_equalities_on_stars += other.lower_equalities_on_stars;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub n_range: [usize; 2],
    pub k_range: [usize; 2],
    pub graphs_scanned: u64,
    pub identity_failures: Vec<IdentityFailure>,
    pub bound_violations: Vec<BoundViolation>,
    /// Non-vacuous numeric equalities; vacuous ones are only counted.
    pub equality_cases: Vec<EqualityCase>,
    /// Graphs where the structural and numeric verdicts disagree.
    pub characterization_mismatches: Vec<EqualityCase>,
    pub per_order: Vec<OrderSummary>,
}

impl ScanReport {
    fn empty(n_range: [usize; 2], k_max: usize) -> Self {
        ScanReport {
            n_range,
            k_range: [1, k_max],
            graphs_scanned: 0,
            identity_failures: Vec::new(),
            bound_violations: Vec::new(),
            equality_cases: Vec::new(),
            characterization_mismatches: Vec::new(),
            per_order: (1..=k_max)
                .map(|k| OrderSummary {
                    k,
                    ..OrderSummary::default()
                })
                .collect(),
        }
    }

    fn absorb(&mut self, other: ScanReport) {
        self.graphs_scanned += other.graphs_scanned;
        self.identity_failures.extend(other.identity_failures);
        self.bound_violations.extend(other.bound_violations);
        self.equality_cases.extend(other.equality_cases);
        self.characterization_mismatches
            .extend(other.characterization_mismatches);
        for (mine, theirs) in self.per_order.iter_mut().zip(&other.per_order) {
            mine.merge(theirs);
        }
    }

    /// No identity failed and no bound was violated.
    pub fn is_clean(&self) -> bool {
        self.identity_failures.is_empty() && self.bound_violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serialisable")
    }

    fn check(&mut self, g: &Graph, k_max: usize) {
        self.graphs_scanned += 1;
        for k in 1..=k_max {
            let table = CliqueTable::new(g, k).expect("k >= 1");
            for rep in [
                reciprocal_identity_from(&table),
                unweighted_handshake(&table),
                squared_handshake(&table),
            ] {
                self.record_identity(g, rep);
            }
            let rep = bound_report_from(g, &table);
            self.record_bound(g, &rep);
        }
    }

    fn record_identity(&mut self, g: &Graph, rep: IdentityReport) {
        if !rep.holds {
            self.identity_failures.push(IdentityFailure {
                graph6: graph6::encode(g),
                kind: rep.kind,
                k: rep.k,
                lhs: rep.lhs.to_string(),
                rhs: rep.rhs.to_string(),
            });
        }
    }

    fn record_bound(&mut self, g: &Graph, rep: &BoundReport) {
        let summary = &mut self.per_order[rep.k - 1];
        if rep.slack < -BOUND_TOLERANCE {
            self.bound_violations.push(BoundViolation {
                graph6: graph6::encode(g),
                k: rep.k,
                side: BoundSide::Upper,
                index: rep.index_value,
                bound: rep.bound_value,
                slack: rep.slack,
            });
        }
        if let Some(lower) = &rep.lower {
            if lower.slack < -BOUND_TOLERANCE {
                self.bound_violations.push(BoundViolation {
                    graph6: graph6::encode(g),
                    k: rep.k,
                    side: BoundSide::Lower,
                    index: rep.index_value,
                    bound: lower.bound_value,
                    slack: lower.slack,
                });
            }
            if lower.equality_numeric {
                summary.lower_equalities += 1;
                if lower.is_star {
                    summary.lower_equalities_on_stars += 1;
                }
            }
        }
        if rep.clique_count == 0 {
            summary.vacuous_equalities += 1;
            return;
        }
        summary.graphs_with_cliques += 1;
        summary.min_slack = Some(summary.min_slack.map_or(rep.slack, |s| s.min(rep.slack)));
        summary.equality_numeric += rep.equality_numeric as u64;
        summary.equality_structural += rep.equality_structural as u64;
        if rep.is_mismatch() {
            summary.mismatches += 1;
            self.characterization_mismatches
                .push(EqualityCase::new(g, rep));
        }
        if rep.equality_numeric {
            self.equality_cases.push(EqualityCase::new(g, rep));
        }
    }
}

/// Scans every labelled graph of order exactly `n` for `k = 1..=k_max`.
pub fn scan(n: usize, k_max: usize) -> Result<ScanReport, ScanError> {
    scan_orders(n..=n, k_max)
}

/// Scans every labelled graph of every order in `orders`.
pub fn scan_orders(orders: RangeInclusive<usize>, k_max: usize) -> Result<ScanReport, ScanError> {
    let (lo, hi) = (*orders.start(), *orders.end());
    if hi > ALL_GRAPHS_MAX_N {
        return Err(ScanError::OrderTooLarge {
            what: "exhaustive scan",
            n: hi,
            limit: ALL_GRAPHS_MAX_N,
        });
    }
    if k_max == 0 || k_max > hi.max(1) {
        return Err(ScanError::BadCliqueOrder { k_max, n_max: hi });
    }
    let mut report = ScanReport::empty([lo, hi], k_max);
    for n in orders {
        let masks = 1u64 << pair_count(n);
        let shards: Vec<ScanReport> = (0..masks.div_ceil(SHARD_MASKS))
            .into_par_iter()
            .map(|shard| {
                let mut part = ScanReport::empty([n, n], k_max);
                let end = ((shard + 1) * SHARD_MASKS).min(masks);
                for mask in shard * SHARD_MASKS..end {
                    part.check(&Graph::from_edge_mask(n, mask), k_max);
                }
                part
            })
            .collect();
        for part in shards {
            report.absorb(part);
        }
    }
    Ok(report)
}

/// Runs [`scan_orders`] on a dedicated pool of `jobs` workers.
pub fn scan_with_jobs(
    orders: RangeInclusive<usize>,
    k_max: usize,
    jobs: usize,
) -> Result<ScanReport, ScanError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| scan_orders(orders, k_max))
}
