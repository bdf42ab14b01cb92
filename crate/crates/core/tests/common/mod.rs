//! Brute-force oracles shared by the integration suites. Nothing here calls
//! the algorithm it is used to check.
#![allow(dead_code)]

use closedgraph::{Graph, IntervalRep, VertexOrdering};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn graph(n: u32, edges: &[(u32, u32)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n() as usize;
    let mut a = vec![vec![false; n + 1]; n + 1];
    for (u, v) in g.edges() {
        a[u as usize][v as usize] = true;
        a[v as usize][u as usize] = true;
    }
    a
}

/// The closedness definition verbatim: every pair of edges sharing the
/// smaller or the larger endpoint.
pub fn literal_closed(g: &Graph) -> bool {
    let a = adjacency_matrix(g);
    let edges: Vec<(u32, u32)> = g.edges().collect();
    for &(i, j) in &edges {
        for &(k, l) in &edges {
            if i == k && j != l && !a[j as usize][l as usize] {
                return false;
            }
            if j == l && i != k && !a[i as usize][k as usize] {
                return false;
            }
        }
    }
    true
}

/// Every violating triple of the umbrella property as position triples
/// `(pos u, pos w, pos v)`, sorted.
pub fn umbrella_triples(g: &Graph, sigma: &VertexOrdering) -> Vec<(u32, u32, u32)> {
    let a = adjacency_matrix(g);
    let n = g.n();
    let mut out = Vec::new();
    for pu in 1..=n {
        for pv in pu + 1..=n {
            for pw in pv + 1..=n {
                let (u, v, w) = (
                    sigma.vertex_at(pu),
                    sigma.vertex_at(pv),
                    sigma.vertex_at(pw),
                );
                if a[u as usize][w as usize]
                    && !(a[u as usize][v as usize] && a[v as usize][w as usize])
                {
                    out.push((pu, pw, pv));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// LexBFS by explicit label comparison. Labels hold the numbers
/// `n, n-1, ...` given to visited neighbors, in visit order.
pub fn naive_lexbfs(g: &Graph, tie_break: &VertexOrdering) -> Vec<u32> {
    let n = g.n() as usize;
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut visited = vec![false; n + 1];
    let mut out = Vec::new();
    for step in 0..n {
        let mut best: Option<u32> = None;
        for &v in tie_break.order() {
            if visited[v as usize] {
                continue;
            }
            match best {
                None => best = Some(v),
                Some(b) if labels[v as usize] > labels[b as usize] => best = Some(v),
                _ => {}
            }
        }
        let v = best.unwrap();
        visited[v as usize] = true;
        out.push(v);
        for &w in g.neighbors(v) {
            if !visited[w as usize] {
                labels[w as usize].push(n - step);
            }
        }
    }
    out
}

/// Maximal cliques by Bron-Kerbosch with pivoting, each sorted, the list
/// sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<u32>> {
    fn expand(g: &Graph, r: &mut Vec<u32>, p: Vec<u32>, x: Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .unwrap();
        let candidates: Vec<u32> = p
            .iter()
            .copied()
            .filter(|&v| !g.has_edge(pivot, v))
            .collect();
        let (mut p, mut x) = (p, x);
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(
        g,
        &mut Vec::new(),
        g.vertices().collect(),
        Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

/// All pairs of intersecting intervals, checked one by one.
pub fn pairwise_intersection_edges(rep: &IntervalRep) -> Vec<(u32, u32)> {
    let n = rep.len() as u32;
    let mut out = Vec::new();
    for k in 1..=n {
        for l in k + 1..=n {
            let (a, b) = (rep.interval(k), rep.interval(l));
            if a.0.max(b.0) <= a.1.min(b.1) {
                out.push((k, l));
            }
        }
    }
    out
}

pub fn pairwise_proper(rep: &IntervalRep) -> bool {
    let n = rep.len() as u32;
    for k in 1..=n {
        for l in 1..=n {
            let (a, b) = (rep.interval(k), rep.interval(l));
            if k != l && a.0 <= b.0 && b.1 <= a.1 && (a.0 < b.0 || b.1 < a.1) {
                return false;
            }
        }
    }
    true
}

pub fn all_pairs(n: u32) -> Vec<(u32, u32)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.n() as usize;
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1u32];
    seen[1] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Every graph on `1..=n` given by a subset of the edges of `K_n`.
pub fn all_graphs(n: u32) -> impl Iterator<Item = Graph> {
    let pairs = all_pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn all_connected_graphs(n: u32) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(is_connected)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: u32, p: f64) -> Graph {
    let edges: Vec<_> = all_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_connected_graph<R: Rng>(rng: &mut R, n: u32) -> Graph {
    loop {
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(rng, n, p);
        if is_connected(&g) {
            return g;
        }
    }
}

pub fn random_ordering<R: Rng>(rng: &mut R, n: u32) -> VertexOrdering {
    let mut order: Vec<u32> = (1..=n).collect();
    order.shuffle(rng);
    VertexOrdering::new(order).unwrap()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: u32) -> Vec<VertexOrdering> {
    fn rec(prefix: &mut Vec<u32>, rest: &mut Vec<u32>, out: &mut Vec<VertexOrdering>) {
        if rest.is_empty() {
            out.push(VertexOrdering::new(prefix.clone()).unwrap());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}
