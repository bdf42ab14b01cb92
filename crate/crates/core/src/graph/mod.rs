//! Simple undirected graphs on `1..=n`, vertex orderings and relabeling.

mod parse;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub use parse::parse_edge_list;

/// Simple undirected graph on vertices `1..=n`, stored as compressed
/// adjacency lists. Every list is strictly increasing, symmetric and free
/// of self-loops; the constructors enforce this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: u32) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph {
            offsets: vec![0; n as usize + 1],
            targets: Vec::new(),
        })
    }

    /// Builds a graph from an edge iterator. Either endpoint order is
    /// accepted and repeated edges collapse into one.
    pub fn from_edges<I>(n: u32, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Self::from_sorted_unique(n, &pairs))
    }

    // Pairs must be (lo, hi) with lo < hi, sorted and deduplicated. Lower
    // neighbors of a vertex are all pushed before its upper neighbors, each
    // group in increasing order, so the lists come out sorted.
    fn from_sorted_unique(n: u32, pairs: &[(u32, u32)]) -> Graph {
        let n = n as usize;
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in pairs {
            offsets[u as usize] += 1;
            offsets[v as usize] += 1;
        }
        for i in 1..=n {
            offsets[i] += offsets[i - 1];
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0u32; 2 * pairs.len()];
        for &(u, v) in pairs {
            targets[cursor[u as usize - 1]] = v;
            cursor[u as usize - 1] += 1;
            targets[cursor[v as usize - 1]] = u;
            cursor[v as usize - 1] += 1;
        }
        let g = Graph { offsets, targets };
        debug_assert!(g.check_invariants());
        g
    }

    pub fn n(&self) -> u32 {
        (self.offsets.len() - 1) as u32
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbors of `v` (1-based).
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let i = v as usize - 1;
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.n()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.n() as usize;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s as usize - 1] {
                continue;
            }
            seen[s as usize - 1] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w as usize - 1] {
                        seen[w as usize - 1] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, with `vertices[i]` renamed to `i + 1`.
    pub fn induced_subgraph(&self, vertices: &[u32]) -> Result<Graph> {
        let mut rename = vec![0u32; self.n() as usize];
        for (i, &v) in vertices.iter().enumerate() {
            if v == 0 || v > self.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
            rename[v as usize - 1] = i as u32 + 1;
        }
        let edges = vertices.iter().flat_map(|&u| {
            let rename = &rename;
            self.neighbors(u)
                .iter()
                .filter(|&&w| rename[w as usize - 1] != 0)
                .map(move |&w| (rename[u as usize - 1], rename[w as usize - 1]))
        });
        let edges: Vec<_> = edges.filter(|(a, b)| a < b).collect();
        Graph::from_edges(vertices.len() as u32, edges)
    }

    /// Canonical text form: `n <k>` header, then one `u v` line per edge
    /// with `u < v`, sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        use std::fmt::Write;
        let mut s = String::with_capacity(16 + self.m() * 12);
        let _ = writeln!(s, "n {}", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    fn check_invariants(&self) -> bool {
        let n = self.n();
        self.vertices().all(|v| {
            let nb = self.neighbors(v);
            nb.windows(2).all(|w| w[0] < w[1])
                && nb.iter().all(|&w| {
                    w != v && w >= 1 && w <= n && self.neighbors(w).binary_search(&v).is_ok()
                })
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A permutation of `1..=n`. `order[i]` is the vertex at position `i + 1`
/// and `pos(v)` is the 1-based position of `v`.
///
/// Used as a labeling, vertex `order[i]` receives the new label `i + 1`,
/// i.e. `new_label(v) = pos(v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<u32>,
    pos: Vec<u32>,
}

impl VertexOrdering {
    pub fn new(order: Vec<u32>) -> Result<VertexOrdering> {
        let n = order.len() as u32;
        let mut pos = vec![0u32; order.len()];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("entry {v} out of range"),
                });
            }
            if pos[v as usize - 1] != 0 {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("vertex {v} repeated"),
                });
            }
            pos[v as usize - 1] = i as u32 + 1;
        }
        Ok(VertexOrdering { order, pos })
    }

    pub fn identity(n: u32) -> VertexOrdering {
        let order: Vec<u32> = (1..=n).collect();
        VertexOrdering {
            pos: order.clone(),
            order,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// Position (equivalently, new label) of vertex `v`.
    pub fn pos(&self, v: u32) -> u32 {
        self.pos[v as usize - 1]
    }

    /// Vertex at 1-based position `i`.
    pub fn vertex_at(&self, i: u32) -> u32 {
        self.order[i as usize - 1]
    }

    /// The same vertices in reverse order.
    pub fn reversed(&self) -> VertexOrdering {
        let n = self.order.len() as u32;
        let order: Vec<u32> = self.order.iter().rev().copied().collect();
        let pos = self.pos.iter().map(|&p| n + 1 - p).collect();
        VertexOrdering { order, pos }
    }

    /// The labeling that undoes this one: relabeling by `self` and then by
    /// `self.inverse()` is the identity.
    pub fn inverse(&self) -> VertexOrdering {
        VertexOrdering {
            order: self.pos.clone(),
            pos: self.order.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.order
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }
}

impl fmt::Debug for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexOrdering{:?}", self.order)
    }
}

/// A graph whose vertex names are the labels of a (claimed) closed
/// labeling, together with the labeling that produced it from the original
/// graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labeling: VertexOrdering,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labeling: VertexOrdering) -> Result<LabeledGraph> {
        if labeling.len() != graph.n() as usize {
            return Err(Error::NotAPermutation {
                n: graph.n(),
                reason: format!("labeling has {} entries", labeling.len()),
            });
        }
        Ok(LabeledGraph { graph, labeling })
    }

    /// Treats `graph`'s own vertex names as the labeling.
    pub fn identity(graph: Graph) -> LabeledGraph {
        let labeling = VertexOrdering::identity(graph.n());
        LabeledGraph { graph, labeling }
    }
}

/// Renames every vertex `v` of `g` to `sigma.pos(v)`.
pub fn apply_labeling(g: &Graph, sigma: &VertexOrdering) -> Result<Graph> {
    if sigma.len() != g.n() as usize {
        return Err(Error::NotAPermutation {
            n: g.n(),
            reason: format!("ordering has {} entries", sigma.len()),
        });
    }
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (sigma.pos(u), sigma.pos(v))))
}
