//! The closedness predicate, the all-labelings search and claw detection.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{apply_labeling, Graph, VertexOrdering};

/// Default cap on `n` for [`brute_force_closed`] (9! labelings).
pub const DEFAULT_BRUTE_FORCE_LIMIT: u32 = 9;

/// Hard cap on the size of a single component in the exhaustive search.
const MAX_COMPONENT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// Edges `(i, j)` and `(i, l)` share their smaller endpoint but
    /// `{j, l}` is missing.
    SharedLower,
    /// Edges `(i, j)` and `(k, j)` share their larger endpoint but
    /// `{i, k}` is missing.
    SharedUpper,
}

/// Two edges that the closedness condition forces to have a third edge
/// between their other endpoints, and that edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosednessViolation {
    pub kind: ViolationKind,
    pub edge1: (u32, u32),
    pub edge2: (u32, u32),
    pub missing_edge: (u32, u32),
}

impl fmt::Display for ClosednessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::SharedLower => "shared lower endpoint",
            ViolationKind::SharedUpper => "shared upper endpoint",
        };
        write!(
            f,
            "edges {{{},{}}} and {{{},{}}} ({kind}) but {{{},{}}} is not an edge",
            self.edge1.0,
            self.edge1.1,
            self.edge2.0,
            self.edge2.1,
            self.missing_edge.0,
            self.missing_edge.1
        )
    }
}

/// Checks whether `g` is closed under its current vertex names.
///
/// Equivalently, every upper neighborhood `{w > v}` and every lower
/// neighborhood `{u < v}` is a clique. On failure the violation with the
/// lexicographically smallest pair of edges is returned.
pub fn is_closed_labeling(g: &Graph) -> Result<(), ClosednessViolation> {
    if upper_neighborhoods_are_cliques(g) && lower_neighborhoods_are_cliques(g) {
        return Ok(());
    }
    Err(smallest_violation(g).expect("linear check failed, so a witnessing edge pair exists"))
}

// If N+(v) \ {p} is inside N(p) for p = min N+(v), for every v, then every
// N+(v) is a clique (induction from the largest vertex down), and the
// converse is immediate. Requirements are grouped by p so each N(p) is
// marked once: O(n + m).
fn upper_neighborhoods_are_cliques(g: &Graph) -> bool {
    neighborhood_containment_holds(g, |v, nb| {
        let start = nb.partition_point(|&w| w < v);
        let upper = &nb[start..];
        upper.split_first().map(|(&p, rest)| (p, rest))
    })
}

fn lower_neighborhoods_are_cliques(g: &Graph) -> bool {
    neighborhood_containment_holds(g, |v, nb| {
        let end = nb.partition_point(|&w| w < v);
        let lower = &nb[..end];
        lower.split_last().map(|(&q, rest)| (q, rest))
    })
}

fn neighborhood_containment_holds<'g, F>(g: &'g Graph, anchor: F) -> bool
where
    F: Fn(u32, &'g [u32]) -> Option<(u32, &'g [u32])>,
{
    let n = g.n() as usize;
    let mut count = vec![0usize; n + 1];
    for v in g.vertices() {
        if let Some((p, rest)) = anchor(v, g.neighbors(v)) {
            count[p as usize] += rest.len();
        }
    }
    for i in 1..=n {
        count[i] += count[i - 1];
    }
    let mut cursor = count[..n].to_vec();
    let mut required = vec![0u32; count[n]];
    for v in g.vertices() {
        if let Some((p, rest)) = anchor(v, g.neighbors(v)) {
            let c = &mut cursor[p as usize - 1];
            required[*c..*c + rest.len()].copy_from_slice(rest);
            *c += rest.len();
        }
    }
    let mut mark = vec![0u32; n];
    for p in g.vertices() {
        let need = &required[count[p as usize - 1]..count[p as usize]];
        if need.is_empty() {
            continue;
        }
        for &w in g.neighbors(p) {
            mark[w as usize - 1] = p;
        }
        if need.iter().any(|&w| mark[w as usize - 1] != p) {
            return false;
        }
    }
    true
}

fn smallest_violation(g: &Graph) -> Option<ClosednessViolation> {
    for (i, j) in g.edges() {
        let upper_i = g.neighbors(i);
        let after_j = &upper_i[upper_i.partition_point(|&w| w <= j)..];
        if let Some(&l) = after_j.iter().find(|&&l| !g.has_edge(j, l)) {
            return Some(ClosednessViolation {
                kind: ViolationKind::SharedLower,
                edge1: (i, j),
                edge2: (i, l),
                missing_edge: (j, l),
            });
        }
        let nb_j = g.neighbors(j);
        let between = &nb_j[nb_j.partition_point(|&w| w <= i)..nb_j.partition_point(|&w| w < j)];
        if let Some(&k) = between.iter().find(|&&k| !g.has_edge(i, k)) {
            return Some(ClosednessViolation {
                kind: ViolationKind::SharedUpper,
                edge1: (i, j),
                edge2: (k, j),
                missing_edge: (i, k),
            });
        }
    }
    None
}

/// Searches all labelings of `g` for a closed one.
///
/// Each connected component is searched on its own, permutations in
/// lexicographic order of vertex ids, and the first closed labeling of each
/// component is kept. Component labelings are concatenated in order of
/// smallest vertex. Refuses graphs with more than `limit` vertices.
pub fn brute_force_closed(g: &Graph, limit: u32) -> Result<Option<VertexOrdering>> {
    if g.n() > limit {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: g.n() as usize,
            limit: limit as usize,
        });
    }
    let mut order = Vec::with_capacity(g.n() as usize);
    for comp in g.components() {
        if comp.len() > MAX_COMPONENT {
            return Err(Error::TooLarge {
                what: "component size",
                actual: comp.len(),
                limit: MAX_COMPONENT,
            });
        }
        match first_closed_permutation(g, &comp) {
            Some(perm) => order.extend(perm.into_iter().map(|i| comp[i])),
            None => return Ok(None),
        }
    }
    let sigma = VertexOrdering::new(order)?;
    let relabeled = apply_labeling(g, &sigma)?;
    assert!(
        is_closed_labeling(&relabeled).is_ok(),
        "exhaustive search returned a labeling that is not closed: {sigma:?}"
    );
    Ok(Some(sigma))
}

// Bitmask search over permutations of one component; `perm[i]` is the index
// (into `comp`) of the vertex receiving label i.
fn first_closed_permutation(g: &Graph, comp: &[u32]) -> Option<Vec<usize>> {
    let k = comp.len();
    let index_of = |v: u32| {
        comp.binary_search(&v)
            .expect("neighbor lies in the same component")
    };
    let adj: Vec<u32> = comp
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |mask, &w| mask | 1 << index_of(w))
        })
        .collect();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut label_of = vec![0usize; k];
    let mut relabeled = vec![0u32; k];
    loop {
        for (label, &x) in perm.iter().enumerate() {
            label_of[x] = label;
        }
        for (label, &x) in perm.iter().enumerate() {
            let mut mask = 0u32;
            let mut bits = adj[x];
            while bits != 0 {
                let y = bits.trailing_zeros() as usize;
                mask |= 1 << label_of[y];
                bits &= bits - 1;
            }
            relabeled[label] = mask;
        }
        if mask_is_closed(&relabeled) {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn mask_is_closed(adj: &[u32]) -> bool {
    (0..adj.len()).all(|v| {
        let above = adj[v] & !((2u32 << v) - 1);
        let below = adj[v] & ((1u32 << v) - 1);
        let up_ok = above == 0 || {
            let p = above.trailing_zeros() as usize;
            (above & !(1 << p)) & !adj[p] == 0
        };
        let down_ok = below == 0 || {
            let q = 31 - below.leading_zeros() as usize;
            (below & !(1 << q)) & !adj[q] == 0
        };
        up_ok && down_ok
    })
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// An induced `K_{1,3}`: `center` adjacent to three pairwise non-adjacent
/// `leaves` (increasing).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Claw {
    pub center: u32,
    pub leaves: [u32; 3],
}

/// Finds the induced claw with the smallest center and, for that center,
/// the lexicographically smallest leaf triple.
pub fn find_induced_claw(g: &Graph) -> Option<Claw> {
    let mut mark = vec![0u32; g.n() as usize];
    let mut stamp = 0u32;
    for center in g.vertices() {
        let nb = g.neighbors(center);
        if nb.len() < 3 {
            continue;
        }
        for (ai, &a) in nb.iter().enumerate() {
            stamp += 1;
            for &w in g.neighbors(a) {
                mark[w as usize - 1] = stamp;
            }
            let rest: Vec<u32> = nb[ai + 1..]
                .iter()
                .copied()
                .filter(|&b| mark[b as usize - 1] != stamp)
                .collect();
            for (bi, &b) in rest.iter().enumerate() {
                if let Some(&c) = rest[bi + 1..].iter().find(|&&c| !g.has_edge(b, c)) {
                    return Some(Claw {
                        center,
                        leaves: [a, b, c],
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};

    fn graph(n: u32, edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn path_is_closed() {
        assert_eq!(is_closed_labeling(&graph(3, &[(1, 2), (2, 3)])), Ok(()));
    }

    #[test]
    fn center_first_path_is_not_closed() {
        let v = is_closed_labeling(&graph(3, &[(1, 2), (1, 3)])).unwrap_err();
        assert_eq!(
            v,
            ClosednessViolation {
                kind: ViolationKind::SharedLower,
                edge1: (1, 2),
                edge2: (1, 3),
                missing_edge: (2, 3),
            }
        );
    }

    #[test]
    fn shared_upper_violation() {
        let v = is_closed_labeling(&graph(3, &[(1, 3), (2, 3)])).unwrap_err();
        assert_eq!(v.kind, ViolationKind::SharedUpper);
        assert_eq!((v.edge1, v.edge2, v.missing_edge), ((1, 3), (2, 3), (1, 2)));
    }

    #[test]
    fn complete_graphs_are_closed() {
        for n in 1..8 {
            let k = generate(GraphKind::Complete { n }, 0).unwrap();
            assert_eq!(is_closed_labeling(&k), Ok(()));
        }
    }

    #[test]
    fn brute_force_examples() {
        let path = graph(3, &[(1, 2), (2, 3)]);
        assert_eq!(
            brute_force_closed(&path, 9).unwrap(),
            Some(VertexOrdering::identity(3))
        );
        let claw = generate(GraphKind::Claw, 0).unwrap();
        assert_eq!(brute_force_closed(&claw, 9).unwrap(), None);
        let edge = graph(2, &[(1, 2)]);
        assert_eq!(
            brute_force_closed(&edge, 9).unwrap(),
            Some(VertexOrdering::identity(2))
        );
        // center-first path: (1,2,3) fails, (1,3,2) fails, (2,1,3) is first
        let star = graph(3, &[(1, 2), (1, 3)]);
        assert_eq!(
            brute_force_closed(&star, 9).unwrap().unwrap().order(),
            &[2, 1, 3]
        );
    }

    #[test]
    fn brute_force_refuses_large_inputs() {
        let g = generate(GraphKind::Path { n: 10 }, 0).unwrap();
        assert!(matches!(
            brute_force_closed(&g, 9),
            Err(Error::TooLarge { .. })
        ));
        assert!(brute_force_closed(&g, 10).unwrap().is_some());
    }

    #[test]
    fn brute_force_concatenates_components() {
        // component {1,3,5} is a center-first path, {2,4} an edge
        let g = graph(5, &[(1, 3), (1, 5), (2, 4)]);
        let sigma = brute_force_closed(&g, 9).unwrap().unwrap();
        assert_eq!(sigma.order(), &[3, 1, 5, 2, 4]);
    }

    #[test]
    fn claw_detection() {
        let claw = generate(GraphKind::Claw, 0).unwrap();
        assert_eq!(
            find_induced_claw(&claw),
            Some(Claw {
                center: 1,
                leaves: [2, 3, 4]
            })
        );
        assert_eq!(find_induced_claw(&graph(3, &[(1, 2), (2, 3)])), None);
        let star = generate(GraphKind::Star { leaves: 4 }, 0).unwrap();
        assert_eq!(find_induced_claw(&star).unwrap().leaves, [2, 3, 4]);
        // leaves 2,3 adjacent, so the smallest independent triple is (2,4,5)
        let g = graph(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3)]);
        assert_eq!(find_induced_claw(&g).unwrap().leaves, [2, 4, 5]);
        let k5 = generate(GraphKind::Complete { n: 5 }, 0).unwrap();
        assert_eq!(find_induced_claw(&k5), None);
    }

    #[test]
    fn next_permutation_is_lexicographic() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
    }
}
