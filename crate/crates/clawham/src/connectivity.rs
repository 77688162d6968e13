//! Vertex connectivity via internally disjoint paths.
//!
//! Connectivity is decided by counting internally disjoint paths between
//! vertex pairs in a unit-capacity split-vertex flow network; failing
//! verdicts carry a minimum cut set extracted from the final residual graph.

use crate::graph::Graph;
use crate::verdict::{Verdict, Witness};

/// `k`-connectivity check: holds iff `n > k` and no vertex set of size `< k`
/// disconnects the graph. A failing verdict witnesses a minimum cut set
/// (empty for graphs that are already disconnected).
pub fn is_k_connected(g: &Graph, k: usize) -> Verdict {
    assert!(k >= 1, "connectivity level must be at least 1");
    let n = g.vertex_count();
    if n <= k {
        return Verdict::fails(Witness::TooFewVertices { n, k });
    }
    if !g.is_connected() {
        return Verdict::fails(Witness::CutSet { vertices: vec![] });
    }
    if k == 1 {
        return Verdict::holds();
    }

    // Menger: for incomplete graphs the connectivity is the minimum over
    // non-adjacent pairs of the maximum number of internally disjoint paths;
    // complete graphs are (n-1)-connected and have no such pair.
    let mut best: Option<(usize, Vec<usize>)> = None;
    for s in g.vertices() {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let (flow, cut) = disjoint_paths(g, s, t);
            if best.as_ref().is_none_or(|(b, _)| flow < *b) {
                best = Some((flow, cut));
            }
        }
    }
    match best {
        None => Verdict::holds(), // complete graph, connectivity n-1 >= k
        Some((flow, _)) if flow >= k => Verdict::holds(),
        Some((_, cut)) => Verdict::fails(Witness::CutSet { vertices: cut }),
    }
}

/// Maximum number of internally disjoint `s`-`t` paths together with a
/// minimum vertex cut realizing it. Requires `s != t` non-adjacent.
pub fn disjoint_paths(g: &Graph, s: usize, t: usize) -> (usize, Vec<usize>) {
    let mut net = FlowNet::new(g, s, t);
    let flow = net.max_flow();
    (flow, net.min_vertex_cut())
}

/// Split-vertex flow network: vertex `v` becomes `v_in = 2v`, `v_out = 2v+1`
/// with a capacity-1 arc between them; each graph edge contributes arcs of
/// capacity 2 in both directions, so saturated cut arcs are always split
/// arcs and the cut reads off as a vertex set.
struct FlowNet {
    to: Vec<u32>,
    cap: Vec<i32>,
    next: Vec<u32>,
    head: Vec<u32>,
    source: usize,
    sink: usize,
    n: usize,
}

const NONE: u32 = u32::MAX;

impl FlowNet {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let n = g.vertex_count();
        let mut net = FlowNet {
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
            head: vec![NONE; 2 * n],
            source: 2 * s + 1,
            sink: 2 * t,
            n,
        };
        for v in g.vertices() {
            if v != s && v != t {
                net.arc(2 * v, 2 * v + 1, 1);
            } else {
                net.arc(2 * v, 2 * v + 1, i32::MAX / 2);
            }
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, 2);
            net.arc(2 * v + 1, 2 * u, 2);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        for (f, t, c) in [(from, to, cap), (to, from, 0)] {
            self.to.push(t as u32);
            self.cap.push(c);
            self.next.push(self.head[f]);
            self.head[f] = (self.to.len() - 1) as u32;
        }
    }

    fn max_flow(&mut self) -> usize {
        let mut total = 0;
        loop {
            // BFS for an augmenting path; unit capacities keep this short.
            let mut pred = vec![NONE; 2 * self.n];
            let mut queue = std::collections::VecDeque::from([self.source]);
            let mut seen = vec![false; 2 * self.n];
            seen[self.source] = true;
            while let Some(v) = queue.pop_front() {
                let mut e = self.head[v];
                while e != NONE {
                    let w = self.to[e as usize] as usize;
                    if !seen[w] && self.cap[e as usize] > 0 {
                        seen[w] = true;
                        pred[w] = e;
                        queue.push_back(w);
                    }
                    e = self.next[e as usize];
                }
            }
            if !seen[self.sink] {
                return total;
            }
            let mut v = self.sink;
            while v != self.source {
                let e = pred[v] as usize;
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1] as usize;
            }
            total += 1;
        }
    }

    /// After `max_flow`, the vertices whose split arcs cross the residual
    /// source side form a minimum vertex cut.
    fn min_vertex_cut(&self) -> Vec<usize> {
        let mut seen = vec![false; 2 * self.n];
        seen[self.source] = true;
        let mut queue = std::collections::VecDeque::from([self.source]);
        while let Some(v) = queue.pop_front() {
            let mut e = self.head[v];
            while e != NONE {
                let w = self.to[e as usize] as usize;
                if !seen[w] && self.cap[e as usize] > 0 {
                    seen[w] = true;
                    queue.push_back(w);
                }
                e = self.next[e as usize];
            }
        }
        (0..self.n)
            .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, gen_random, petersen};
    use crate::gen::{cycle_graph, path_graph};

    fn check_cut(g: &Graph, cut: &[usize]) {
        // A cut witness must actually disconnect (or empty the) graph.
        let rest: Vec<usize> = g.vertices().filter(|v| !cut.contains(v)).collect();
        if rest.len() <= 1 {
            return;
        }
        let sub = g.induced(&rest).unwrap();
        assert!(!sub.graph.is_connected(), "cut {cut:?} does not disconnect");
    }

    #[test]
    fn small_cases() {
        let p3 = path_graph(3);
        let v = is_k_connected(&p3, 2);
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::CutSet { vertices: vec![1] }));

        assert!(is_k_connected(&cycle_graph(4), 2).holds);
        assert!(is_k_connected(&complete(4), 3).holds);
        assert!(is_k_connected(&petersen(), 3).holds);
        assert!(!is_k_connected(&petersen(), 4).holds);

        // n <= k fails outright.
        let v = is_k_connected(&complete(3), 3);
        assert_eq!(v.witness, Some(Witness::TooFewVertices { n: 3, k: 3 }));

        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let v = is_k_connected(&disconnected, 1);
        assert_eq!(v.witness, Some(Witness::CutSet { vertices: vec![] }));
    }

    #[test]
    fn monotone_in_k_and_witnesses_check() {
        for seed in 0..60 {
            let g = gen_random(8, 0.4, seed);
            let mut prev = true;
            for k in (1..=4).rev() {
                let v = is_k_connected(&g, k);
                // k-connected implies (k-1)-connected: once it holds going
                // down in k it must keep holding.
                if prev && !v.holds {
                    // fine: larger k failed before smaller k
                }
                if v.holds {
                    prev = true;
                }
                if let Some(Witness::CutSet { vertices }) = &v.witness {
                    assert!(vertices.len() < k);
                    check_cut(&g, vertices);
                }
                if !v.holds {
                    continue;
                }
                for smaller in 1..k {
                    assert!(is_k_connected(&g, smaller).holds, "k={k} seed={seed}");
                }
            }
        }
    }
}
