//! Maximal cliques of a closed labeling as integer intervals, and the
//! clique-vertex incidence matrix with its consecutive-ones check.

use crate::closedness::is_closed_labeling;
use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph};

/// Above this many vertices incidence matrices keep rows as intervals.
pub const DENSE_LIMIT: u32 = 10_000;

/// The integer interval `[a, b]` of labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub a: u32,
    pub b: u32,
}

impl Facet {
    pub fn contains(&self, k: u32) -> bool {
        self.a <= k && k <= self.b
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FacetList {
    pub facets: Vec<Facet>,
}

impl FacetList {
    pub fn new(facets: Vec<Facet>) -> FacetList {
        FacetList { facets }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Checks the sorted interval-chain shape on `1..=n`: `a_1 = 1`,
    /// `b_r = n`, both endpoint sequences strictly increasing, and each
    /// facet overlapping the next (`a_{i+1} <= b_i`). With
    /// `connected = false` consecutive facets may also just touch
    /// (`a_{i+1} = b_i + 1`), as happens between components.
    pub fn check_chain(&self, n: u32, connected: bool) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedFacets(msg));
        let (Some(first), Some(last)) = (self.facets.first(), self.facets.last()) else {
            return bad("no facets".into());
        };
        if first.a != 1 || last.b != n {
            return bad(format!(
                "facets span [{}, {}], expected [1, {n}]",
                first.a, last.b
            ));
        }
        for f in &self.facets {
            if f.a > f.b {
                return bad(format!("facet [{}, {}] is empty", f.a, f.b));
            }
        }
        for w in self.facets.windows(2) {
            let (x, y) = (w[0], w[1]);
            if !(x.a < y.a && x.b < y.b) {
                return bad(format!(
                    "[{}, {}] and [{}, {}] not strictly increasing",
                    x.a, x.b, y.a, y.b
                ));
            }
            let reach = if connected { x.b } else { x.b + 1 };
            if y.a > reach {
                return bad(format!(
                    "gap between [{}, {}] and [{}, {}]",
                    x.a, x.b, y.a, y.b
                ));
            }
        }
        Ok(())
    }

    /// One `a b` line per facet.
    pub fn to_text(&self) -> String {
        self.facets
            .iter()
            .map(|f| format!("{} {}\n", f.a, f.b))
            .collect()
    }
}

/// Checks that `g` is closed and that every upper neighborhood is the run
/// `k+1 ..= reach(k)`; returns `reach`, indexed by `k - 1`.
///
/// For a closed labeling the second condition holds exactly when each
/// connected component occupies a contiguous range of labels.
pub(crate) fn closed_reach(g: &Graph) -> Result<Vec<u32>> {
    is_closed_labeling(g).map_err(Error::NotClosed)?;
    let mut reach = Vec::with_capacity(g.n() as usize);
    for k in g.vertices() {
        let nb = g.neighbors(k);
        let upper = nb.len() - nb.partition_point(|&w| w < k);
        let r = nb.last().copied().filter(|&w| w > k).unwrap_or(k);
        if (r - k) as usize != upper {
            return Err(Error::InterleavedComponents(k));
        }
        reach.push(r);
    }
    Ok(reach)
}

/// The facets of the clique complex of a closed labeling, as intervals.
///
/// Each label `a` starts the clique `[a, reach(a)]`, where `reach(a)` is
/// the larger of `a` and its largest neighbor. `reach` never decreases, so a
/// candidate is a facet exactly when it reaches past the last emitted one.
pub fn facets_of_closed(g: &LabeledGraph) -> Result<FacetList> {
    let reach = closed_reach(&g.graph)?;
    let mut facets: Vec<Facet> = Vec::new();
    for (i, &b) in reach.iter().enumerate() {
        let a = i as u32 + 1;
        match facets.last() {
            Some(prev) if prev.b >= b => {}
            _ => facets.push(Facet { a, b }),
        }
    }
    Ok(FacetList { facets })
}

/// Clique-vertex incidence matrix: row `i` has a one in column `k` iff `k`
/// lies in facet `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncidenceMatrix {
    Dense {
        cols: usize,
        rows: Vec<Vec<bool>>,
    },
    /// Rows given by their interval of ones; used for large `n`.
    Implicit {
        cols: usize,
        rows: Vec<Facet>,
    },
}

impl IncidenceMatrix {
    /// Dense matrix from explicit rows, all of equal length.
    pub fn from_rows(rows: Vec<Vec<bool>>) -> IncidenceMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged incidence matrix"
        );
        IncidenceMatrix::Dense { cols, rows }
    }

    pub fn n_rows(&self) -> usize {
        match self {
            IncidenceMatrix::Dense { rows, .. } => rows.len(),
            IncidenceMatrix::Implicit { rows, .. } => rows.len(),
        }
    }

    pub fn n_cols(&self) -> usize {
        match self {
            IncidenceMatrix::Dense { cols, .. } | IncidenceMatrix::Implicit { cols, .. } => *cols,
        }
    }

    /// Entry at 0-based row `i`, 1-based column `k`.
    pub fn get(&self, i: usize, k: u32) -> bool {
        match self {
            IncidenceMatrix::Dense { rows, .. } => rows[i][k as usize - 1],
            IncidenceMatrix::Implicit { rows, .. } => rows[i].contains(k),
        }
    }

    /// `0`/`1` grid, one row per line; `None` for the implicit form.
    pub fn to_text_grid(&self) -> Option<String> {
        let IncidenceMatrix::Dense { rows, .. } = self else {
            return None;
        };
        let mut s = String::new();
        for row in rows {
            let cells: Vec<&str> = row.iter().map(|&x| if x { "1" } else { "0" }).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        Some(s)
    }
}

pub fn incidence_matrix(f: &FacetList, n: u32) -> IncidenceMatrix {
    let cols = n as usize;
    if n > DENSE_LIMIT {
        return IncidenceMatrix::Implicit {
            cols,
            rows: f.facets.clone(),
        };
    }
    let rows = f
        .facets
        .iter()
        .map(|facet| (1..=n).map(|k| facet.contains(k)).collect())
        .collect();
    IncidenceMatrix::Dense { cols, rows }
}

/// Whether every row and every column has its ones in one contiguous run,
/// in the given row and column order.
pub fn consecutive_ones(m: &IncidenceMatrix) -> bool {
    match m {
        IncidenceMatrix::Dense { cols, rows } => {
            rows.iter().all(|r| contiguous(r.iter().copied()))
                && (0..*cols).all(|k| contiguous(rows.iter().map(|r| r[k])))
        }
        IncidenceMatrix::Implicit { cols, rows } => {
            // Rows are intervals already; a column breaks when a row covers
            // it but the previous row covering it is not the row just above.
            let mut last = vec![usize::MAX; *cols + 1];
            for (i, f) in rows.iter().enumerate() {
                if f.a > f.b {
                    continue;
                }
                for k in f.a..=f.b {
                    let seen = last[k as usize];
                    if seen != usize::MAX && seen + 1 != i {
                        return false;
                    }
                    last[k as usize] = i;
                }
            }
            true
        }
    }
}

fn contiguous(cells: impl Iterator<Item = bool>) -> bool {
    // 0 = before the run, 1 = inside, 2 = after
    let mut state = 0;
    for x in cells {
        state = match (state, x) {
            (0, true) => 1,
            (1, false) => 2,
            (2, true) => return false,
            (s, _) => s,
        };
    }
    true
}
