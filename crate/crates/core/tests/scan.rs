mod common;

use clique_randic::io::graph6;
use clique_randic::{scan, scan_orders, scan_with_jobs, Graph};
use common::*;

fn is_regular_without_isolated(g: &Graph) -> bool {
    let deg = g.degrees();
    let comps = g.connected_components();
    comps
        .members()
        .iter()
        .all(|m| m.len() >= 2 && m.iter().all(|&v| deg[v] == deg[m[0]]))
}

#[test]
fn order_four_examples() {
    let rep = scan(4, 2).unwrap();
    assert_eq!(rep.graphs_scanned, 64);
    assert!(rep.is_clean());

    let k1: Vec<Graph> = rep
        .equality_cases
        .iter()
        .filter(|c| c.k == 1)
        .map(|c| graph6::decode(&c.graph6).unwrap())
        .collect();
    // three labelled 2K_2, three labelled C_4 and K_4
    assert_eq!(k1.len(), 7);
    assert!(k1.iter().all(is_regular_without_isolated));
    assert_eq!(k1.iter().filter(|g| g.m() == 2).count(), 3);
    assert_eq!(k1.iter().filter(|g| g.m() == 4).count(), 3);
    assert!(k1.contains(&complete(4)));

    let k4 = graph6::encode(&complete(4));
    let mismatch = rep
        .characterization_mismatches
        .iter()
        .find(|c| c.graph6 == k4 && c.k == 2)
        .expect("K_4 at k = 2");
    assert!(mismatch.equality_structural && !mismatch.equality_numeric);
    assert_eq!(mismatch.isolated_count, 0);
}

#[test]
fn order_three_has_no_four_cliques() {
    let rep = scan(3, 3).unwrap();
    assert!(rep.is_clean());
    let k3 = &rep.per_order[2];
    assert_eq!(k3.vacuous_equalities + k3.graphs_with_cliques, 8);
    assert!(rep
        .equality_cases
        .iter()
        .filter(|c| c.k == 3)
        .all(|c| c.index == 0.0));
}

#[test]
fn listed_graphs_round_trip() {
    let rep = scan(5, 3).unwrap();
    for case in rep
        .equality_cases
        .iter()
        .chain(&rep.characterization_mismatches)
    {
        let g = graph6::decode(&case.graph6).unwrap();
        assert_eq!(graph6::encode(&g), case.graph6);
        assert_eq!(g.n(), 5);
    }
}

#[test]
fn deterministic_across_runs_and_workers() {
    let a = scan_with_jobs(1..=5, 3, 1).unwrap().to_json();
    let b = scan_with_jobs(1..=5, 3, 3).unwrap().to_json();
    let c = scan_orders(1..=5, 3).unwrap().to_json();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn range_scan_counts() {
    let rep = scan_orders(1..=4, 2).unwrap();
    assert_eq!(rep.graphs_scanned, 1 + 2 + 8 + 64);
    assert_eq!(rep.n_range, [1, 4]);
}
