//! Deterministic test-graph generators.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Graph families understood by [`generate`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GraphKind {
    /// Path `1 - 2 - ... - n`.
    Path {
        n: u32,
    },
    /// Cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    Cycle {
        n: u32,
    },
    Complete {
        n: u32,
    },
    /// `K_{1,3}` with center 1.
    Claw,
    /// `K_{1,leaves}` with center 1.
    Star {
        leaves: u32,
    },
    /// Intersection graph of `n` intervals of length `length` whose left
    /// endpoints are uniform on `[0, n)`. Expected degree is about
    /// `2 * length`. Vertex names are assigned in draw order, so they carry
    /// no information about the interval order.
    RandomUnitInterval {
        n: u32,
        length: f64,
    },
    /// Uniform graph with exactly `m` edges.
    RandomGnm {
        n: u32,
        m: u64,
    },
}

pub fn generate(kind: GraphKind, seed: u64) -> Result<Graph> {
    match kind {
        GraphKind::Path { n } => {
            require(n >= 1, "path needs n >= 1")?;
            Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
        }
        GraphKind::Cycle { n } => {
            require(n >= 3, "cycle needs n >= 3")?;
            Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1)))
        }
        GraphKind::Complete { n } => {
            require(n >= 1, "complete graph needs n >= 1")?;
            Graph::from_edges(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
        }
        GraphKind::Claw => Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]),
        GraphKind::Star { leaves } => {
            require(leaves >= 1, "star needs at least one leaf")?;
            Graph::from_edges(leaves + 1, (2..=leaves + 1).map(|j| (1, j)))
        }
        GraphKind::RandomUnitInterval { n, length } => {
            require(n >= 1, "random unit interval graph needs n >= 1")?;
            require(
                length.is_finite() && length > 0.0,
                "interval length must be positive and finite",
            )?;
            Ok(random_unit_interval(n, length, seed))
        }
        GraphKind::RandomGnm { n, m } => {
            require(n >= 1, "G(n, m) needs n >= 1")?;
            let pairs = u64::from(n) * u64::from(n - 1) / 2;
            require(m <= pairs, "m exceeds n(n-1)/2")?;
            Ok(random_gnm(n, m, seed))
        }
    }
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParams(msg.to_string()))
    }
}

fn random_unit_interval(n: u32, length: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = f64::from(n);
    let mut starts: Vec<(f64, u32)> = (1..=n).map(|v| (rng.gen::<f64>() * span, v)).collect();
    starts.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut edges = Vec::new();
    for (i, &(left, u)) in starts.iter().enumerate() {
        for &(other, v) in &starts[i + 1..] {
            if other - left > length {
                break;
            }
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

fn random_gnm(n: u32, m: u64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = u64::from(n) * u64::from(n - 1) / 2;
    let picks = index::sample(&mut rng, total as usize, m as usize);
    let edges = picks.into_iter().map(|t| decode_pair(n, t as u64));
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

// Pairs (i, j), i < j, enumerated row by row: row i holds n - i pairs.
fn decode_pair(n: u32, mut t: u64) -> (u32, u32) {
    let n = u64::from(n);
    let rows_before = |k: u64| k * (2 * n - k - 1) / 2;
    // Estimate the row from the quadratic, then correct for rounding.
    let b = 2.0 * n as f64 - 1.0;
    let est = ((b - (b * b - 8.0 * t as f64).max(0.0).sqrt()) / 2.0)
        .floor()
        .max(0.0) as u64;
    let mut skip = est.min(n - 1);
    while skip > 0 && rows_before(skip) > t {
        skip -= 1;
    }
    t -= rows_before(skip);
    let mut i = 1 + skip;
    while t >= n - i {
        t -= n - i;
        i += 1;
    }
    (i as u32, (i + 1 + t) as u32)
}
