//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints one PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use closedgraph::{
    apply_labeling, brute_force_closed, build_representation, consecutive_ones, facets_of_closed,
    generate, incidence_matrix, intersection_graph, is_closed_labeling, is_proper,
    is_quadratic_groebner, ordering_to_closed_labeling, recognize_proper_interval, umbrella_check,
    Graph, GraphKind, LabeledGraph, RecognitionResult, VertexOrdering,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    passed: bool,
    detail: String,
}

fn verdict(failures: usize, checked: usize, elapsed: Duration, budget: Duration) -> Outcome {
    let in_time = elapsed <= budget;
    Outcome {
        passed: failures == 0 && in_time,
        detail: format!(
            "{checked} checked, {failures} failures, {:.1}s (budget {}s)",
            elapsed.as_secs_f64(),
            budget.as_secs()
        ),
    }
}

/// Graphs for criteria 1, 2 and 4: every connected graph on n <= 6 plus
/// 1000 random connected graphs each for n = 7 and n = 8.
fn equivalence_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=6).flat_map(common::all_connected_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    for n in [7, 8] {
        for _ in 0..1000 {
            graphs.push(common::random_connected_graph(&mut rng, n));
        }
    }
    graphs
}

// Criterion 1: recognition succeeds iff some labeling is closed.
fn closed_iff_proper_interval(corpus: &[Graph], closed: &mut Vec<LabeledGraph>) -> Outcome {
    let start = Instant::now();
    let results: Vec<(bool, Option<LabeledGraph>)> = corpus
        .par_iter()
        .map(|g| {
            let recognized = recognize_proper_interval(g);
            let oracle =
                brute_force_closed(g, 9).expect("corpus stays within the brute-force limit");
            let agree = recognized.is_proper_interval() == oracle.is_some();
            let labeled = recognized.ordering().map(|sigma| {
                ordering_to_closed_labeling(g, sigma).expect("recognized ordering is proper")
            });
            (agree, labeled)
        })
        .collect();
    let failures = results.iter().filter(|(agree, _)| !agree).count();
    closed.extend(results.into_iter().filter_map(|(_, h)| h));
    let mut out = verdict(
        failures,
        corpus.len(),
        start.elapsed(),
        Duration::from_secs(120),
    );
    out.detail
        .push_str(&format!(", {} proper interval", closed.len()));
    out
}

// Criterion 2: the interval model reproduces the graph and is proper.
fn interval_round_trip(closed: &[LabeledGraph]) -> Outcome {
    let start = Instant::now();
    let failures = closed
        .par_iter()
        .filter(|h| {
            let rep = build_representation(h).expect("closed labeling");
            intersection_graph(&rep) != h.graph || !is_proper(&rep)
        })
        .count();
    verdict(
        failures,
        closed.len(),
        start.elapsed(),
        Duration::from_secs(60),
    )
}

// Criterion 3: closed labeling iff the edge binomials are a quadratic
// Gröbner basis, for every labeling of every connected graph on n <= 5.
fn closed_iff_groebner() -> Outcome {
    let start = Instant::now();
    let graphs: Vec<Graph> = (1..=5).flat_map(common::all_connected_graphs).collect();
    let perms: Vec<Vec<VertexOrdering>> = (1..=5).map(common::permutations).collect();
    let (checked, failures) = graphs
        .par_iter()
        .map(|g| {
            let mut failures = 0;
            let labelings = &perms[g.n() as usize - 1];
            for sigma in labelings {
                let h = apply_labeling(g, sigma).unwrap();
                let closed = is_closed_labeling(&h).is_ok();
                let basis = is_quadratic_groebner(&h)
                    .expect("desk-scale graph")
                    .is_basis();
                if closed != basis {
                    failures += 1;
                }
            }
            (labelings.len(), failures)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    verdict(failures, checked, start.elapsed(), Duration::from_secs(300))
}

// Criterion 4: facets are an increasing interval chain and the incidence
// matrix has consecutive ones in rows and columns.
fn consecutive_ones_of_facets(closed: &[LabeledGraph]) -> Outcome {
    let start = Instant::now();
    let failures = closed
        .par_iter()
        .filter(|h| {
            let n = h.graph.n();
            let facets = facets_of_closed(h).expect("closed labeling");
            let f = &facets.facets;
            let chain_ok = facets.check_chain(n, true).is_ok();
            let last_starts_early = f.len() < 2 || f[f.len() - 1].a < n;
            !(chain_ok && last_starts_early && consecutive_ones(&incidence_matrix(&facets, n)))
        })
        .count();
    verdict(
        failures,
        closed.len(),
        start.elapsed(),
        Duration::from_secs(60),
    )
}

// Criterion 5: contiguity check equals the triple definition, and on
// connected graphs the identity is proper exactly when the labeling is
// closed.
fn umbrella_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b5e55);
    let mut failures = 0;
    for _ in 0..2000 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.95);
        let g = common::random_graph(&mut rng, n, p);
        let sigma = common::random_ordering(&mut rng, n);
        if umbrella_check(&g, &sigma).is_ok() != common::umbrella_triples(&g, &sigma).is_empty() {
            failures += 1;
        }
    }
    for _ in 0..2000 {
        let n = rng.gen_range(1..=8);
        let g = common::random_connected_graph(&mut rng, n);
        let closed = is_closed_labeling(&g).is_ok();
        if closed != umbrella_check(&g, &VertexOrdering::identity(n)).is_ok() {
            failures += 1;
        }
    }
    verdict(failures, 4000, start.elapsed(), Duration::from_secs(60))
}

// Criterion 6: classic non-examples come with a triple that re-checks
// against the input.
fn negative_certificates() -> Outcome {
    let start = Instant::now();
    let net = common::graph(6, &[(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]);
    let cases = [
        ("claw", generate(GraphKind::Claw, 0).unwrap()),
        ("C4", generate(GraphKind::Cycle { n: 4 }, 0).unwrap()),
        ("C5", generate(GraphKind::Cycle { n: 5 }, 0).unwrap()),
        ("net", net),
    ];
    let mut failures = 0;
    for (name, g) in &cases {
        let ok = match recognize_proper_interval(g) {
            RecognitionResult::Ordering(_) => false,
            RecognitionResult::Violation {
                ordering,
                violation: v,
            } => {
                let adj = common::adjacency_matrix(g);
                let edge = |(a, b): (u32, u32)| adj[a as usize][b as usize];
                let in_order =
                    ordering.pos(v.u) < ordering.pos(v.v) && ordering.pos(v.v) < ordering.pos(v.w);
                let names_triple = v.present_edge == (v.u, v.w)
                    && (v.missing_edge == (v.u, v.v) || v.missing_edge == (v.v, v.w));
                in_order && names_triple && edge(v.present_edge) && !edge(v.missing_edge)
            }
        };
        if !ok {
            eprintln!("  negative certificate failed for {name}");
            failures += 1;
        }
    }
    verdict(
        failures,
        cases.len(),
        start.elapsed(),
        Duration::from_secs(10),
    )
}

// Criterion 7: recognition time grows at most 3x faster than n + m.
fn near_linear_scaling() -> Outcome {
    let length = 10.0;
    let measure = |n: u32, runs: usize| {
        let g = generate(GraphKind::RandomUnitInterval { n, length }, 7).unwrap();
        let best = (0..runs)
            .map(|_| {
                let start = Instant::now();
                let r = recognize_proper_interval(&g);
                let t = start.elapsed();
                assert!(r.is_proper_interval(), "unit interval graph rejected");
                t
            })
            .min()
            .unwrap();
        (g.n() as f64 + g.m() as f64, g.m(), best)
    };
    let (size_small, m_small, t_small) = measure(100_000, 3);
    let (size_large, m_large, t_large) = measure(1_000_000, 3);
    let size_ratio = size_large / size_small;
    let time_ratio = t_large.as_secs_f64() / t_small.as_secs_f64();
    let passed = time_ratio <= 3.0 * size_ratio && t_large <= Duration::from_secs(30);
    Outcome {
        passed,
        detail: format!(
            "m = {m_small} / {m_large}, time {:.3}s / {:.3}s, time ratio {time_ratio:.2} vs limit {:.2} (3 x size ratio {size_ratio:.2})",
            t_small.as_secs_f64(),
            t_large.as_secs_f64(),
            3.0 * size_ratio
        ),
    }
}

fn main() {
    let corpus = equivalence_corpus();
    let mut closed = Vec::new();
    let report: Vec<(&str, Outcome)> = vec![
        (
            "1 closed <=> proper interval",
            closed_iff_proper_interval(&corpus, &mut closed),
        ),
        ("2 interval model round trip", interval_round_trip(&closed)),
        (
            "3 closed <=> quadratic Groebner basis",
            closed_iff_groebner(),
        ),
        (
            "4 facets chain and consecutive ones",
            consecutive_ones_of_facets(&closed),
        ),
        (
            "5 umbrella contiguity and identity criterion",
            umbrella_equivalence(),
        ),
        ("6 negative certificates", negative_certificates()),
        ("7 near-linear recognition time", near_linear_scaling()),
    ];

    let mut all = true;
    for (name, outcome) in &report {
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {name}: {}", outcome.detail);
        all &= outcome.passed;
    }
    if !all {
        std::process::exit(1);
    }
}
