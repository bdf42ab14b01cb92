//! Interval models of closed labelings with exact scaled-integer endpoints.
//!
//! Vertex `k` of a closed labeling on `1..=n` gets the interval
//! `[k, b(k) + k/n]`, where `b(k)` is the largest right end of a facet
//! containing `k`. Endpoints are stored multiplied by `n`, so the interval
//! is `[k*n, b(k)*n + k]` over the common denominator `n` and every
//! comparison is an integer comparison.

use crate::clique_complex::{facets_of_closed, FacetList};
use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph};

/// `b(k)` for `k = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFunction {
    pub values: Vec<u32>,
}

impl BFunction {
    pub fn get(&self, k: u32) -> u32 {
        self.values[k as usize - 1]
    }
}

/// `b(k) = max { b_i : a_i <= k <= b_i }` over the facets.
pub fn compute_b(facets: &FacetList, n: u32) -> Result<BFunction> {
    let mut sorted = facets.facets.clone();
    sorted.sort_unstable();
    if let Some(f) = sorted.iter().find(|f| f.a == 0 || f.a > f.b || f.b > n) {
        return Err(Error::MalformedFacets(format!(
            "facet [{}, {}] outside 1..={n}",
            f.a, f.b
        )));
    }
    // The facet with the largest b among those starting at or before k
    // contains k whenever any facet does.
    let mut values = Vec::with_capacity(n as usize);
    let mut next = 0;
    let mut best = 0;
    for k in 1..=n {
        while next < sorted.len() && sorted[next].a <= k {
            best = best.max(sorted[next].b);
            next += 1;
        }
        if best < k {
            return Err(Error::MalformedFacets(format!(
                "vertex {k} lies in no facet"
            )));
        }
        values.push(best);
    }
    Ok(BFunction { values })
}

/// Closed intervals with endpoints `left / denom` and `right / denom`;
/// interval `k - 1` belongs to vertex `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    denom: u64,
    intervals: Vec<(i64, i64)>,
}

impl IntervalRep {
    pub fn new(denom: u64, intervals: Vec<(i64, i64)>) -> Result<IntervalRep> {
        if intervals.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if denom == 0 {
            return Err(Error::InvalidParams(
                "interval denominator must be positive".into(),
            ));
        }
        if let Some((index, &(left, right))) =
            intervals.iter().enumerate().find(|(_, (l, r))| l > r)
        {
            return Err(Error::MalformedInterval {
                index: index + 1,
                left,
                right,
            });
        }
        Ok(IntervalRep { denom, intervals })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    /// Scaled endpoints of vertex `k`'s interval.
    pub fn interval(&self, k: u32) -> (i64, i64) {
        self.intervals[k as usize - 1]
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    /// Exact form: one `k left right denom` line per vertex.
    pub fn to_text(&self) -> String {
        self.intervals
            .iter()
            .enumerate()
            .map(|(i, (l, r))| format!("{} {} {} {}\n", i + 1, l, r, self.denom))
            .collect()
    }

    /// Approximate decimal rendering, for reading only.
    pub fn to_decimal_text(&self) -> String {
        let d = self.denom as f64;
        self.intervals
            .iter()
            .enumerate()
            .map(|(i, &(l, r))| {
                format!(
                    "{} [{:.6}, {:.6}] (approx)\n",
                    i + 1,
                    l as f64 / d,
                    r as f64 / d
                )
            })
            .collect()
    }
}

/// The interval model of a closed labeling: vertex `k` maps to
/// `[k, b(k) + k/n]`, stored scaled by `n`.
pub fn build_representation(g: &LabeledGraph) -> Result<IntervalRep> {
    let n = g.graph.n();
    let facets = facets_of_closed(g)?;
    let b = compute_b(&facets, n)?;
    let scale = i64::from(n);
    let intervals = (1..=n)
        .map(|k| {
            let k64 = i64::from(k);
            (k64 * scale, i64::from(b.get(k)) * scale + k64)
        })
        .collect();
    IntervalRep::new(u64::from(n), intervals)
}

/// Intersection graph of `rep`: `{k, l}` is an edge iff the two closed
/// intervals meet. Sorts by left endpoint and sweeps, O(n log n + m).
pub fn intersection_graph(rep: &IntervalRep) -> Graph {
    let mut by_left: Vec<u32> = (1..=rep.len() as u32).collect();
    by_left.sort_by_key(|&k| (rep.interval(k).0, k));
    let mut edges = Vec::new();
    for (i, &k) in by_left.iter().enumerate() {
        let right = rep.interval(k).1;
        for &l in &by_left[i + 1..] {
            if rep.interval(l).0 > right {
                break;
            }
            edges.push((k, l));
        }
    }
    Graph::from_edges(rep.len() as u32, edges).expect("interval indices are valid vertices")
}

/// Whether no interval properly contains another. Identical intervals do
/// not count as proper containment.
pub fn is_proper(rep: &IntervalRep) -> bool {
    let mut sorted = rep.intervals.clone();
    // left ascending, right descending; duplicates cannot witness anything
    sorted.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    sorted.dedup();
    let mut max_right = i64::MIN;
    for &(_, right) in &sorted {
        if right <= max_right {
            return false;
        }
        max_right = right;
    }
    true
}
