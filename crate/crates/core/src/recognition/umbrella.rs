use std::fmt;

use crate::graph::{Graph, VertexOrdering};

/// A triple `u, v, w` in ordering position order with `{u, w}` an edge
/// and `missing_edge` (either `{u, v}` or `{v, w}`) absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UmbrellaViolation {
    pub u: u32,
    pub v: u32,
    pub w: u32,
    pub present_edge: (u32, u32),
    pub missing_edge: (u32, u32),
}

impl fmt::Display for UmbrellaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triple ({}, {}, {}): edge {{{},{}}} present, edge {{{},{}}} missing",
            self.u,
            self.v,
            self.w,
            self.present_edge.0,
            self.present_edge.1,
            self.missing_edge.0,
            self.missing_edge.1
        )
    }
}

/// Checks the umbrella property of `sigma`: whenever `u < v < w` in
/// `sigma` and `{u, w}` is an edge, so are `{u, v}` and `{v, w}`.
///
/// Uses the equivalent condition that every closed neighborhood occupies a
/// contiguous block of positions, which is O(n + m). On failure, the
/// violating triple minimizing `(pos u, pos w, pos v)` is reported.
pub fn umbrella_check(g: &Graph, sigma: &VertexOrdering) -> Result<(), UmbrellaViolation> {
    assert_eq!(
        sigma.len(),
        g.n() as usize,
        "ordering must cover every vertex"
    );
    let contiguous = g.vertices().all(|v| {
        let p = sigma.pos(v);
        let (lo, hi) = g.neighbors(v).iter().fold((p, p), |(lo, hi), &w| {
            (lo.min(sigma.pos(w)), hi.max(sigma.pos(w)))
        });
        (hi - lo) as usize == g.degree(v)
    });
    if contiguous {
        return Ok(());
    }
    Err(smallest_violation(g, sigma)
        .expect("a non-contiguous neighborhood yields a violating triple"))
}

fn smallest_violation(g: &Graph, sigma: &VertexOrdering) -> Option<UmbrellaViolation> {
    // Neighbor positions per position, each list sorted.
    let n = g.n() as usize;
    let mut by_pos: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for p in 1..=n as u32 {
        let v = sigma.vertex_at(p);
        let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| sigma.pos(w)).collect();
        nb.sort_unstable();
        by_pos[p as usize] = nb;
    }
    // First position in (lo, hi) missing from `sorted`, if any.
    let first_gap = |sorted: &[u32], lo: u32, hi: u32| -> Option<u32> {
        let start = sorted.partition_point(|&x| x <= lo);
        let mut expect = lo + 1;
        for &x in &sorted[start..] {
            if expect >= hi || x != expect {
                break;
            }
            expect += 1;
        }
        (expect < hi).then_some(expect)
    };
    for pu in 1..=n as u32 {
        let nu = &by_pos[pu as usize];
        for &pw in nu.iter().filter(|&&x| x > pu) {
            let gap_u = first_gap(nu, pu, pw);
            let gap_w = first_gap(&by_pos[pw as usize], pu, pw);
            let pv = match (gap_u, gap_w) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => continue,
            };
            let (u, v, w) = (
                sigma.vertex_at(pu),
                sigma.vertex_at(pv),
                sigma.vertex_at(pw),
            );
            let missing_edge = if g.has_edge(u, v) { (v, w) } else { (u, v) };
            return Some(UmbrellaViolation {
                u,
                v,
                w,
                present_edge: (u, w),
                missing_edge,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};

    #[test]
    fn path_identity_ok() {
        let p = generate(GraphKind::Path { n: 3 }, 0).unwrap();
        assert_eq!(umbrella_check(&p, &VertexOrdering::identity(3)), Ok(()));
    }

    #[test]
    fn claw_with_center_second() {
        let claw = generate(GraphKind::Claw, 0).unwrap();
        let sigma = VertexOrdering::new(vec![2, 1, 3, 4]).unwrap();
        assert_eq!(
            umbrella_check(&claw, &sigma),
            Err(UmbrellaViolation {
                u: 1,
                v: 3,
                w: 4,
                present_edge: (1, 4),
                missing_edge: (3, 4),
            })
        );
    }

    #[test]
    fn complete_graph_any_ordering() {
        let k = generate(GraphKind::Complete { n: 5 }, 0).unwrap();
        let sigma = VertexOrdering::new(vec![4, 2, 5, 1, 3]).unwrap();
        assert_eq!(umbrella_check(&k, &sigma), Ok(()));
    }

    #[test]
    fn missing_left_edge_reported() {
        // 1 - 3 with 2 isolated in between
        let g = Graph::from_edges(3, [(1, 3)]).unwrap();
        let v = umbrella_check(&g, &VertexOrdering::identity(3)).unwrap_err();
        assert_eq!((v.u, v.v, v.w), (1, 2, 3));
        assert_eq!(v.missing_edge, (1, 2));
    }
}
