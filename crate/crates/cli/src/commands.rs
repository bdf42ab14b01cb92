use std::fmt::Write;
use std::time::Instant;

use closedgraph::groebner::{MAX_EDGES, MAX_VERTICES};
use closedgraph::recognition::umbrella_check;
use closedgraph::{
    brute_force_closed, build_representation, consecutive_ones, facets_of_closed,
    find_induced_claw, generate, incidence_matrix, intersection_graph, is_closed_labeling,
    is_proper, is_quadratic_groebner, ordering_to_closed_labeling, recognize_proper_interval,
    Graph, GraphKind, GroebnerVerdict, IncidenceMatrix, LabeledGraph, RecognitionResult,
    UmbrellaViolation, VertexOrdering,
};
use serde_json::json;

use crate::report::{Certificate, Check, Report, Status};

/// Exhaustive cross-checks only run below this vertex count.
const VERIFY_BRUTE_FORCE_LIMIT: u32 = 9;

type Outcome = Result<(), String>;

fn disagreement(what: &str) -> String {
    format!("internal disagreement: {what}")
}

pub fn recognize(report: &mut Report, g: &Graph, verify: bool) -> Outcome {
    let result = report.timed("recognize", || recognize_proper_interval(g));
    match result {
        RecognitionResult::Ordering(sigma) => {
            let h = report
                .timed("relabel", || ordering_to_closed_labeling(g, &sigma))
                .map_err(|e| disagreement(&e.to_string()))?;
            report.status = Status::Closed;
            report.certificate = Some(Certificate::ordering(&sigma));
            if verify {
                let checks = report.timed("verify", || verify_closed(&h));
                report.verification.extend(checks);
            }
        }
        RecognitionResult::Violation {
            ordering,
            violation,
        } => {
            report.status = Status::NotClosed;
            report.certificate = Some(Certificate::umbrella(&ordering, &violation));
            if verify {
                let checks = report.timed("verify", || verify_not_closed(g, &ordering, &violation));
                report.verification.extend(checks);
            }
        }
    }
    match report.verification.iter().find(|c| !c.ok) {
        Some(c) => Err(disagreement(&format!(
            "{} check failed: {}",
            c.check, c.detail
        ))),
        None => Ok(()),
    }
}

fn verify_closed(h: &LabeledGraph) -> Vec<Check> {
    let mut checks = Vec::new();
    let closed = is_closed_labeling(&h.graph);
    checks.push(Check {
        check: "closedness",
        ok: closed.is_ok(),
        detail: match &closed {
            Ok(()) => "relabeled graph satisfies the definition".into(),
            Err(v) => v.to_string(),
        },
    });
    let g = &h.graph;
    if g.n() <= MAX_VERTICES && g.m() <= MAX_EDGES {
        let verdict = is_quadratic_groebner(g);
        checks.push(match verdict {
            Ok(GroebnerVerdict::Basis { pairs_checked }) => Check {
                check: "groebner",
                ok: true,
                detail: format!(
                    "{} checked, all reduce to 0",
                    plural(pairs_checked, "S-pair")
                ),
            },
            Ok(GroebnerVerdict::Failing { edges, remainder }) => Check {
                check: "groebner",
                ok: false,
                detail: format!("{} leaves {remainder}", pair_text(edges)),
            },
            Err(e) => Check {
                check: "groebner",
                ok: false,
                detail: e.to_string(),
            },
        });
    }
    if g.n() <= VERIFY_BRUTE_FORCE_LIMIT {
        let found = brute_force_closed(g, VERIFY_BRUTE_FORCE_LIMIT);
        checks.push(Check {
            check: "brute_force",
            ok: matches!(found, Ok(Some(_))),
            detail: match found {
                Ok(Some(_)) => "a closed labeling exists".into(),
                Ok(None) => "no labeling is closed".into(),
                Err(e) => e.to_string(),
            },
        });
    }
    checks
}

fn verify_not_closed(g: &Graph, ordering: &VertexOrdering, v: &UmbrellaViolation) -> Vec<Check> {
    let mut checks = Vec::new();
    let in_order = ordering.pos(v.u) < ordering.pos(v.v) && ordering.pos(v.v) < ordering.pos(v.w);
    let present = g.has_edge(v.present_edge.0, v.present_edge.1);
    let missing = !g.has_edge(v.missing_edge.0, v.missing_edge.1);
    let same_triple =
        |e: (u32, u32)| [v.u, v.v, v.w].contains(&e.0) && [v.u, v.v, v.w].contains(&e.1);
    checks.push(Check {
        check: "umbrella_triple",
        ok: in_order
            && present
            && missing
            && same_triple(v.present_edge)
            && same_triple(v.missing_edge),
        detail: format!("{v}"),
    });
    checks.push(Check {
        check: "umbrella_scan",
        ok: umbrella_check(g, ordering).is_err(),
        detail: "final ordering fails the umbrella property".into(),
    });
    if g.n() <= VERIFY_BRUTE_FORCE_LIMIT {
        let found = brute_force_closed(g, VERIFY_BRUTE_FORCE_LIMIT);
        checks.push(Check {
            check: "brute_force",
            ok: matches!(found, Ok(None)),
            detail: match found {
                Ok(Some(s)) => format!("closed labeling found: {:?}", s.order()),
                Ok(None) => format!("all {} labelings fail", factorial(g.n())),
                Err(e) => e.to_string(),
            },
        });
    }
    checks
}

/// Finds the closed labeling to work from. `Ok(None)` means the graph has
/// none (or, under `assume_closed`, the input labels are not one); the
/// report then already carries the negative certificate.
fn closed_labeling(
    report: &mut Report,
    g: Graph,
    assume_closed: bool,
) -> Result<Option<LabeledGraph>, String> {
    if assume_closed {
        let check = report.timed("closedness", || is_closed_labeling(&g));
        return Ok(match check {
            Ok(()) => {
                let h = LabeledGraph::identity(g);
                report.status = Status::Closed;
                report.certificate = Some(Certificate::labeling(&h.labeling));
                Some(h)
            }
            Err(v) => {
                report.status = Status::NotClosed;
                report.certificate = Some(Certificate::closedness(&v));
                None
            }
        });
    }
    match report.timed("recognize", || recognize_proper_interval(&g)) {
        RecognitionResult::Ordering(sigma) => {
            let h = report
                .timed("relabel", || ordering_to_closed_labeling(&g, &sigma))
                .map_err(|e| disagreement(&e.to_string()))?;
            report.status = Status::Closed;
            report.certificate = Some(Certificate::ordering(&sigma));
            Ok(Some(h))
        }
        RecognitionResult::Violation {
            ordering,
            violation,
        } => {
            report.status = Status::NotClosed;
            report.certificate = Some(Certificate::umbrella(&ordering, &violation));
            Ok(None)
        }
    }
}

pub fn intervals(report: &mut Report, g: Graph, assume_closed: bool, check: bool) -> Outcome {
    let Some(h) = closed_labeling(report, g, assume_closed)? else {
        return Ok(());
    };
    let rep = report
        .timed("intervals", || build_representation(&h))
        .map_err(|e| e.to_string())?;
    let d = rep.denom();
    let rows: Vec<[i64; 4]> = rep
        .intervals()
        .iter()
        .enumerate()
        .map(|(i, &(l, r))| [i as i64 + 1, l, r, d as i64])
        .collect();
    report.result = Some(json!({ "denom": d, "intervals": rows }));
    if check {
        let (same, proper) = report.timed("check", || {
            (intersection_graph(&rep) == h.graph, is_proper(&rep))
        });
        report.verification.push(Check {
            check: "round_trip",
            ok: same,
            detail: "intersection graph equals the labeled graph".into(),
        });
        report.verification.push(Check {
            check: "proper",
            ok: proper,
            detail: "no interval properly contains another".into(),
        });
        if !(same && proper) {
            return Err(disagreement("interval model check failed"));
        }
    }
    Ok(())
}

pub fn facets(report: &mut Report, g: Graph, assume_closed: bool) -> Outcome {
    let Some(h) = closed_labeling(report, g, assume_closed)? else {
        return Ok(());
    };
    let f = report
        .timed("facets", || facets_of_closed(&h))
        .map_err(|e| e.to_string())?;
    let rows: Vec<[u32; 2]> = f.facets.iter().map(|x| [x.a, x.b]).collect();
    report.result = Some(json!({ "count": rows.len(), "facets": rows }));
    Ok(())
}

pub fn c1p(report: &mut Report, g: Graph, assume_closed: bool) -> Outcome {
    let Some(h) = closed_labeling(report, g, assume_closed)? else {
        return Ok(());
    };
    let n = h.graph.n();
    let f = report
        .timed("facets", || facets_of_closed(&h))
        .map_err(|e| e.to_string())?;
    let m = report.timed("matrix", || incidence_matrix(&f, n));
    let ok = report.timed("c1p", || consecutive_ones(&m));
    let mut result = json!({
        "consecutive_ones": ok,
        "rows": m.n_rows(),
        "cols": m.n_cols(),
    });
    match &m {
        IncidenceMatrix::Dense { rows, .. } => {
            let grid: Vec<Vec<u8>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| u8::from(x)).collect())
                .collect();
            result["form"] = json!("dense");
            result["matrix"] = json!(grid);
        }
        IncidenceMatrix::Implicit { .. } => result["form"] = json!("implicit"),
    }
    report.result = Some(result);
    if ok {
        Ok(())
    } else {
        Err(disagreement(
            "facet incidence matrix of a closed labeling lacks consecutive ones",
        ))
    }
}

pub fn oracle(report: &mut Report, g: &Graph, limit: u32) -> Outcome {
    let found = report
        .timed("search", || brute_force_closed(g, limit))
        .map_err(|e| e.to_string())?;
    let total = factorial(g.n());
    match found {
        Some(sigma) => {
            report.status = Status::Closed;
            report.certificate = Some(Certificate::labeling(&sigma));
            report.result = Some(json!({ "summary": "closed (labeling found)" }));
        }
        None => {
            report.status = Status::NotClosed;
            let mut result =
                json!({ "summary": format!("not closed ({total}/{total} labelings fail)") });
            if let Some(c) = find_induced_claw(g) {
                result["induced_claw"] = json!([c.center, c.leaves[0], c.leaves[1], c.leaves[2]]);
            }
            report.result = Some(result);
        }
    }
    Ok(())
}

pub fn gb(report: &mut Report, g: &Graph) -> Outcome {
    let verdict = report
        .timed("groebner", || is_quadratic_groebner(g))
        .map_err(|e| e.to_string())?;
    match verdict {
        GroebnerVerdict::Basis { pairs_checked } => {
            report.status = Status::Closed;
            report.certificate = Some(Certificate::labeling(&VertexOrdering::identity(g.n())));
            let tail = if pairs_checked == 0 {
                "no S-pairs".to_string()
            } else {
                format!("{}, all reduce to 0", plural(pairs_checked, "S-pair"))
            };
            report.result = Some(json!({ "summary": format!("quadratic GB: yes ({tail})") }));
        }
        GroebnerVerdict::Failing { edges, remainder } => {
            report.status = Status::NotClosed;
            let pair = pair_text(edges);
            report.result = Some(json!({
                "summary": format!("quadratic GB: no (S-pair {pair} leaves {remainder})")
            }));
            report.certificate = Some(Certificate::FailingSpair {
                pair,
                remainder: remainder.to_string(),
            });
        }
    }
    Ok(())
}

/// CSV of generation and recognition times on random unit interval graphs.
pub fn bench(sizes: &[u32], seed: u64, length: f64) -> Result<String, String> {
    let mut out = String::from("n,m,generate_ms,recognize_ms\n");
    for &n in sizes {
        let start = Instant::now();
        let g = generate(GraphKind::RandomUnitInterval { n, length }, seed)
            .map_err(|e| e.to_string())?;
        let gen_ms = start.elapsed().as_secs_f64() * 1e3;
        let start = Instant::now();
        let result = recognize_proper_interval(&g);
        let rec_ms = start.elapsed().as_secs_f64() * 1e3;
        if !result.is_proper_interval() {
            return Err(disagreement(&format!(
                "generated unit interval graph with n = {n} rejected"
            )));
        }
        let _ = writeln!(out, "{},{},{:.3},{:.3}", n, g.m(), gen_ms, rec_ms);
    }
    Ok(out)
}

fn pair_text(((i, j), (k, l)): ((u32, u32), (u32, u32))) -> String {
    format!("({i},{j}),({k},{l})")
}

fn plural(count: usize, noun: &str) -> String {
    if count == 1 {
        format!("1 {noun}")
    } else {
        format!("{count} {noun}s")
    }
}

fn factorial(n: u32) -> u128 {
    (1..=u128::from(n)).product()
}
