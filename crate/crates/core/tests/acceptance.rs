//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any failed.

mod common;

use std::time::{Duration, Instant};

use clique_randic::io::graph6;
use clique_randic::oracle::{all_graphs, brute_force_cliques, brute_force_value, random_graph};
use clique_randic::randic::squared_handshake;
use clique_randic::{
    bound_report, clique_handshake_identity, enumerate_cliques, incidence_matrix_check,
    randic_index, reciprocal_identity, scan_with_jobs, CliqueTable, Graph, WeightFunction,
    BOUND_TOLERANCE,
};
use common::*;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CLOSED_FORM_TOL: f64 = 1e-12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graphs_up_to(n_max: usize) -> impl Iterator<Item = Graph> {
    (0..=n_max).flat_map(|n| all_graphs(n).unwrap())
}

fn every_component_regular_with_two_vertices(g: &Graph) -> bool {
    let deg = g.degrees();
    g.connected_components()
        .members()
        .iter()
        .all(|m| m.len() >= 2 && m.iter().all(|&v| deg[v] == deg[m[0]]))
}

/// 500 draws of G(12, 0.4).
fn gnp_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    (0..500).map(|_| random_graph(12, 0.4, &mut rng)).collect()
}

/// 200 random graphs with 1..=10 vertices and mixed density.
fn weighted_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.2..0.9);
            random_graph(n, p, &mut rng)
        })
        .collect()
}

fn star_lower_bound() -> Outcome {
    let r = randic_index(&star(5), 1).unwrap();
    ensure((r - 5f64.sqrt()).abs() <= BOUND_TOLERANCE, || {
        format!("R_v(K_1,5) = {r}")
    })?;
    let mut connected = 0;
    let mut equalities = 0;
    for g in graphs_up_to(6).filter(|g| g.n() >= 1 && g.is_connected()) {
        connected += 1;
        let lower = bound_report(&g, 1).unwrap().lower.expect("connected");
        ensure(lower.slack >= -BOUND_TOLERANCE, || {
            format!("{g:?} below sqrt(n-1)")
        })?;
        ensure(lower.equality_numeric == g.is_star(), || {
            format!(
                "{g:?}: equality {} star {}",
                lower.equality_numeric,
                g.is_star()
            )
        })?;
        equalities += lower.equality_numeric as usize;
    }
    Ok(format!(
        "R_v(K_1,5) = {r:.12}; {connected} connected graphs, {equalities} equalities, all on stars"
    ))
}

fn upper_bound_order_one() -> Outcome {
    let mut graphs = 0;
    let mut equalities = 0;
    for g in graphs_up_to(6) {
        graphs += 1;
        let rep = bound_report(&g, 1).unwrap();
        ensure(
            rep.index_value <= g.n() as f64 / 2.0 + BOUND_TOLERANCE,
            || format!("{g:?} exceeds n/2"),
        )?;
        let expected = every_component_regular_with_two_vertices(&g);
        ensure(rep.equality_numeric == expected, || {
            format!("{g:?}: numeric {} regular {expected}", rep.equality_numeric)
        })?;
        equalities += expected as usize;
    }
    Ok(format!(
        "{graphs} graphs, {equalities} equalities, exactly the regular ones"
    ))
}

fn reciprocal() -> Outcome {
    let mut checked = 0;
    for g in graphs_up_to(6).chain(gnp_corpus()) {
        for k in 1..=3 {
            let rep = reciprocal_identity(&g, k).unwrap();
            ensure(rep.holds, || {
                format!("{g:?} k={k}: {} != {}", rep.lhs, rep.rhs)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} exact equalities"))
}

fn weighted_handshake() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    for g in weighted_corpus() {
        for k in 1..=3 {
            for _ in 0..100 {
                let h = WeightFunction::random(&g, k, 1000, &mut rng);
                let direct = clique_handshake_identity(&g, &h, k).unwrap();
                let matrix = incidence_matrix_check(&g, &h, k).unwrap();
                ensure(direct.holds, || {
                    format!("{g:?} k={k}: {} != {}", direct.lhs, direct.rhs)
                })?;
                ensure(matrix.holds, || format!("{g:?} k={k}: matrix sums differ"))?;
                ensure(matrix.lhs == direct.lhs, || {
                    format!("{g:?} k={k}: matrix disagrees")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} weight functions, direct and matrix agree"
    ))
}

fn squared() -> Outcome {
    let diamond_rep = squared_handshake(&CliqueTable::new(&diamond(), 2).unwrap());
    let eight = BigInt::from(8).into();
    ensure(diamond_rep.lhs == eight && diamond_rep.rhs == eight, || {
        format!("diamond: {} vs {}", diamond_rep.lhs, diamond_rep.rhs)
    })?;
    let mut checked = 0;
    for g in graphs_up_to(6).chain(gnp_corpus()) {
        for k in 1..=3 {
            let rep = squared_handshake(&CliqueTable::new(&g, k).unwrap());
            ensure(rep.holds, || {
                format!("{g:?} k={k}: {} != {}", rep.lhs, rep.rhs)
            })?;
            checked += 1;
        }
    }
    Ok(format!("diamond 8 = 8; {checked} exact equalities"))
}

fn vertex_randic(g: &Graph) -> f64 {
    let deg = g.degrees();
    g.edges()
        .map(|(u, v)| 1.0 / ((deg[u] * deg[v]) as f64).sqrt())
        .sum()
}

fn edge_randic(g: &Graph) -> f64 {
    let n = g.n();
    let mut total = 0.0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    let p = brute_force_value(g, &[b, c])
                        * brute_force_value(g, &[a, c])
                        * brute_force_value(g, &[a, b]);
                    total += 1.0 / (p as f64).sqrt();
                }
            }
        }
    }
    total
}

fn specialisation() -> Outcome {
    let mut worst = 0f64;
    for g in weighted_corpus() {
        let d1 = (randic_index(&g, 1).unwrap() - vertex_randic(&g)).abs();
        let d2 = (randic_index(&g, 2).unwrap() - edge_randic(&g)).abs();
        ensure(d1 <= CLOSED_FORM_TOL && d2 <= CLOSED_FORM_TOL, || {
            format!("{g:?}: deviations {d1:e} {d2:e}")
        })?;
        worst = worst.max(d1).max(d2);
    }
    Ok(format!("max deviation {worst:e}"))
}

fn closed_forms() -> Outcome {
    let k4 = bound_report(&complete(4), 2).unwrap();
    ensure(
        (k4.index_value - 2f64.sqrt()).abs() <= CLOSED_FORM_TOL,
        || format!("R_e(K_4) = {}", k4.index_value),
    )?;
    ensure(
        k4.bound_value == 2.0 && !k4.equality_numeric && k4.equality_structural,
        || "K_4 should be edge-regular yet strict".into(),
    )?;
    let k3 = bound_report(&complete(3), 2).unwrap();
    ensure(
        k3.equality_numeric && (k3.index_value - 1.0).abs() <= BOUND_TOLERANCE,
        || format!("R_e(K_3) = {}", k3.index_value),
    )?;
    let k5 = bound_report(&complete(5), 3).unwrap();
    ensure(
        (k5.index_value - 1.25).abs() <= CLOSED_FORM_TOL && k5.bound_value == 2.5,
        || format!("R(K_5;3) = {} bound {}", k5.index_value, k5.bound_value),
    )?;
    Ok(format!(
        "R_e(K_4) = {:.12} < 2 (edge-regular, strict: equality-direction mismatch); R_e(K_3) = 1 = m/3; R(K_5;3) = {} <= 2.5",
        k4.index_value, k5.index_value
    ))
}

fn scan_order_seven() -> Outcome {
    let one = scan_with_jobs(7..=7, 3, 1).unwrap();
    ensure(one.graphs_scanned == 1 << 21, || {
        format!("scanned {}", one.graphs_scanned)
    })?;
    ensure(one.bound_violations.is_empty(), || {
        format!("{} bound violations", one.bound_violations.len())
    })?;
    ensure(one.identity_failures.is_empty(), || {
        format!("{} identity failures", one.identity_failures.len())
    })?;
    let two = scan_with_jobs(7..=7, 3, 2).unwrap();
    let (a, b) = (one.to_json(), two.to_json());
    ensure(a == b, || {
        "reports differ between runs with 1 and 2 workers".into()
    })?;
    Ok(format!(
        "{} graphs, 0 violations, 0 failures, {} mismatches; report ({} bytes) identical across runs and worker counts",
        one.graphs_scanned,
        one.characterization_mismatches.len(),
        a.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0u64;
    for g in graphs_up_to(7) {
        for k in 1..=4 {
            let fast = enumerate_cliques(&g, k);
            let slow = brute_force_cliques(&g, k).unwrap();
            ensure(fast == slow, || format!("{g:?} k={k}"))?;
            compared += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for i in 0..200 {
        let g = random_graph(10, 0.2 + 0.6 * (i as f64) / 200.0, &mut rng);
        for k in 1..=10 {
            ensure(
                enumerate_cliques(&g, k) == brute_force_cliques(&g, k).unwrap(),
                || format!("{g:?} k={k}"),
            )?;
            compared += 1;
        }
    }
    Ok(format!("{compared} (graph, k) pairs identical"))
}

fn graph6_round_trip() -> Outcome {
    let mut count = 0;
    for g in graphs_up_to(6) {
        let s = graph6::encode(&g);
        let back = graph6::decode(&s).map_err(|e| format!("{s}: {e}"))?;
        ensure(back == g && graph6::encode(&back) == s, || {
            format!("{s} does not round-trip")
        })?;
        count += 1;
    }
    Ok(format!("{count} graphs byte-exact"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "1 star lower bound",
            Some(Duration::from_secs(30)),
            star_lower_bound,
        ),
        (
            "2 upper bound k=1",
            Some(Duration::from_secs(60)),
            upper_bound_order_one,
        ),
        (
            "3 reciprocal identity",
            Some(Duration::from_secs(120)),
            reciprocal,
        ),
        (
            "4 weighted handshake + incidence matrix",
            None,
            weighted_handshake,
        ),
        ("5 squared identity", None, squared),
        ("6 specialisation", None, specialisation),
        ("7 closed forms", None, closed_forms),
        (
            "8 scan(7, 3)",
            Some(Duration::from_secs(600)),
            scan_order_seven,
        ),
        ("9 oracle equivalence", None, oracle_equivalence),
        ("10 graph6 round-trip", None, graph6_round_trip),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.1?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
