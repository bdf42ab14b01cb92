use crate::graph::{Graph, VertexOrdering};

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy)]
struct Class {
    head: u32,
    tail: u32,
    prev: u32,
    next: u32,
    // class created in front of this one during the current pivot's scan
    split: u32,
    stamp: u32,
}

/// Ordered partition of the unvisited vertices. Each class is a linked list
/// kept in tie-break order; classes are linked in selection order.
struct Partition {
    classes: Vec<Class>,
    free: Vec<u32>,
    first: u32,
    class_of: Vec<u32>,
    vnext: Vec<u32>,
    vprev: Vec<u32>,
}

impl Partition {
    fn new(initial: &[u32]) -> Partition {
        let n = initial.len();
        let mut p = Partition {
            classes: Vec::with_capacity(n),
            free: Vec::new(),
            first: NIL,
            class_of: vec![0; n],
            vnext: vec![NIL; n],
            vprev: vec![NIL; n],
        };
        if n > 0 {
            let c = p.alloc();
            p.first = c;
            for &x in initial {
                p.append(c, x);
            }
        }
        p
    }

    fn alloc(&mut self) -> u32 {
        let class = Class {
            head: NIL,
            tail: NIL,
            prev: NIL,
            next: NIL,
            split: NIL,
            stamp: 0,
        };
        match self.free.pop() {
            Some(c) => {
                self.classes[c as usize] = class;
                c
            }
            None => {
                self.classes.push(class);
                (self.classes.len() - 1) as u32
            }
        }
    }

    fn append(&mut self, c: u32, x: u32) {
        let tail = self.classes[c as usize].tail;
        self.vprev[x as usize] = tail;
        self.vnext[x as usize] = NIL;
        if tail == NIL {
            self.classes[c as usize].head = x;
        } else {
            self.vnext[tail as usize] = x;
        }
        self.classes[c as usize].tail = x;
        self.class_of[x as usize] = c;
    }

    // Unlinks x from its class, dropping the class if it empties.
    fn remove(&mut self, x: u32) {
        let c = self.class_of[x as usize];
        let (prev, next) = (self.vprev[x as usize], self.vnext[x as usize]);
        if prev == NIL {
            self.classes[c as usize].head = next;
        } else {
            self.vnext[prev as usize] = next;
        }
        if next == NIL {
            self.classes[c as usize].tail = prev;
        } else {
            self.vprev[next as usize] = prev;
        }
        if self.classes[c as usize].head == NIL {
            let Class { prev, next, .. } = self.classes[c as usize];
            if prev == NIL {
                self.first = next;
            } else {
                self.classes[prev as usize].next = next;
            }
            if next != NIL {
                self.classes[next as usize].prev = prev;
            }
            self.free.push(c);
        }
    }

    fn insert_before(&mut self, c: u32) -> u32 {
        let nc = self.alloc();
        let prev = self.classes[c as usize].prev;
        self.classes[nc as usize].prev = prev;
        self.classes[nc as usize].next = c;
        self.classes[c as usize].prev = nc;
        if prev == NIL {
            self.first = nc;
        } else {
            self.classes[prev as usize].next = nc;
        }
        nc
    }
}

/// Lexicographic breadth-first search.
///
/// Repeatedly visits the unvisited vertex whose label (the visit times of
/// its already visited neighbors, earliest first) is lexicographically
/// largest, breaking ties by earliest position in `tie_break`. Runs in
/// O(n + m) by partition refinement.
pub fn lexbfs(g: &Graph, tie_break: &VertexOrdering) -> VertexOrdering {
    let n = g.n() as usize;
    assert_eq!(
        tie_break.len(),
        n,
        "tie-break ordering must cover every vertex"
    );

    // Neighbor lists re-sorted by tie-break rank, so that refinement appends
    // moved vertices to their new class in tie-break order.
    let mut offsets = vec![0usize; n + 1];
    for v in g.vertices() {
        offsets[v as usize] = g.degree(v);
    }
    for i in 1..=n {
        offsets[i] += offsets[i - 1];
    }
    let mut cursor = offsets[..n].to_vec();
    let mut by_rank = vec![0u32; offsets[n]];
    for &u in tie_break.order() {
        for &w in g.neighbors(u) {
            let c = &mut cursor[w as usize - 1];
            by_rank[*c] = u - 1;
            *c += 1;
        }
    }

    let initial: Vec<u32> = tie_break.order().iter().map(|&v| v - 1).collect();
    let mut part = Partition::new(&initial);
    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for step in 1..=n as u32 {
        let pivot = part.classes[part.first as usize].head;
        part.remove(pivot);
        visited[pivot as usize] = true;
        out.push(pivot + 1);
        for &w in &by_rank[offsets[pivot as usize]..offsets[pivot as usize + 1]] {
            if visited[w as usize] {
                continue;
            }
            let c = part.class_of[w as usize];
            if part.classes[c as usize].stamp != step {
                let nc = part.insert_before(c);
                part.classes[c as usize].split = nc;
                part.classes[c as usize].stamp = step;
            }
            let nc = part.classes[c as usize].split;
            part.remove(w);
            part.append(nc, w);
        }
    }
    VertexOrdering::new(out).expect("LexBFS visits every vertex once")
}

/// LexBFS+ sweep: starts from the last vertex of `prev` and breaks ties in
/// favor of the vertex appearing latest in `prev`.
pub fn lexbfs_plus(g: &Graph, prev: &VertexOrdering) -> VertexOrdering {
    lexbfs(g, &prev.reversed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};

    fn graph(n: u32, edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn path_and_singleton() {
        let p = graph(3, &[(1, 2), (2, 3)]);
        assert_eq!(lexbfs(&p, &VertexOrdering::identity(3)).order(), &[1, 2, 3]);
        let one = Graph::empty(1).unwrap();
        assert_eq!(lexbfs(&one, &VertexOrdering::identity(1)).order(), &[1]);
    }

    #[test]
    fn claw_ties_follow_identity() {
        let claw = generate(GraphKind::Claw, 0).unwrap();
        assert_eq!(
            lexbfs(&claw, &VertexOrdering::identity(4)).order(),
            &[1, 2, 3, 4]
        );
    }

    #[test]
    fn plus_sweeps() {
        let p = graph(3, &[(1, 2), (2, 3)]);
        let prev = VertexOrdering::identity(3);
        assert_eq!(lexbfs_plus(&p, &prev).order(), &[3, 2, 1]);
        let k3 = generate(GraphKind::Complete { n: 3 }, 0).unwrap();
        assert_eq!(lexbfs_plus(&k3, &prev).order(), &[3, 2, 1]);
        let e = graph(2, &[(1, 2)]);
        assert_eq!(
            lexbfs_plus(&e, &VertexOrdering::identity(2)).order(),
            &[2, 1]
        );
    }

    #[test]
    fn neighbors_of_earlier_vertices_win() {
        // 1 - 2, 1 - 3, 2 - 4, 3 - 5, 4 - 5: after 1,2,3 the vertex 4 has
        // label (2) and 5 has label (3); 4 wins.
        let g = graph(5, &[(1, 2), (1, 3), (2, 4), (3, 5), (4, 5)]);
        let tie = VertexOrdering::new(vec![1, 3, 2, 5, 4]).unwrap();
        assert_eq!(lexbfs(&g, &tie).order(), &[1, 3, 2, 5, 4]);
        assert_eq!(
            lexbfs(&g, &VertexOrdering::identity(5)).order(),
            &[1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn disconnected_components_follow_tie_break() {
        let g = graph(4, &[(1, 3), (2, 4)]);
        assert_eq!(
            lexbfs(&g, &VertexOrdering::identity(4)).order(),
            &[1, 3, 2, 4]
        );
    }
}
