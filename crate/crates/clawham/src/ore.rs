//! The Ore pair relation Ẽ(G), o-cycles, and the constructive lift of an
//! o-cycle to a real cycle on a vertex superset.

use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

/// The pair set Ẽ(G): unordered pairs that are edges or have degree sum at
/// least `n`. Pairs in Ẽ(G) \ E(G) are called virtual.
pub struct OEdgeSet<'a> {
    base: &'a Graph,
    pairs: Graph,
}

impl<'a> OEdgeSet<'a> {
    pub fn base(&self) -> &Graph {
        self.base
    }

    /// Membership in Ẽ(G); false for identical endpoints.
    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        x != y && self.pairs.has_edge(x, y)
    }

    /// Membership in Ẽ(G) \ E(G).
    #[inline]
    pub fn is_virtual(&self, x: usize, y: usize) -> bool {
        self.contains(x, y) && !self.base.has_edge(x, y)
    }

    /// The relation as a graph over the same vertices.
    pub fn as_graph(&self) -> &Graph {
        &self.pairs
    }
}

/// Computes Ẽ(G). The degree-sum threshold is inclusive.
pub fn o_edges(g: &Graph) -> OEdgeSet<'_> {
    let n = g.vertex_count();
    let deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut pairs = g.clone();
    for x in 0..n {
        for y in x + 1..n {
            if deg[x] + deg[y] >= n {
                pairs.add_edge(x, y);
            }
        }
    }
    OEdgeSet { base: g, pairs }
}

/// True iff `seq` lists at least three distinct vertices and every
/// cyclically consecutive pair lies in Ẽ(G).
pub fn is_o_cycle(g: &Graph, seq: &[usize]) -> bool {
    is_o_cycle_with(&o_edges(g), seq)
}

/// [`is_o_cycle`] against a precomputed pair set.
pub fn is_o_cycle_with(oe: &OEdgeSet<'_>, seq: &[usize]) -> bool {
    if seq.len() < 3 {
        return false;
    }
    let n = oe.base.vertex_count();
    if seq.iter().any(|&v| v >= n) {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in seq {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..seq.len()).all(|i| oe.contains(seq[i], seq[(i + 1) % seq.len()]))
}

/// Cyclic vertex sequence whose consecutive pairs all lie in Ẽ(G), with the
/// virtual pairs marked.
#[derive(Clone, Debug, Serialize)]
pub struct OCycle {
    seq: Vec<usize>,
    /// `virtual_marks[i]` is true iff the pair `(seq[i], seq[i+1])`
    /// (cyclically) is in Ẽ(G) \ E(G).
    virtual_marks: Vec<bool>,
}

impl OCycle {
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Self> {
        let oe = o_edges(g);
        Self::with_pairs(&oe, seq)
    }

    pub fn with_pairs(oe: &OEdgeSet<'_>, seq: Vec<usize>) -> Result<Self> {
        if !is_o_cycle_with(oe, &seq) {
            return Err(Error::NotAnOCycle(format!("{seq:?}")));
        }
        let virtual_marks = (0..seq.len())
            .map(|i| oe.is_virtual(seq[i], seq[(i + 1) % seq.len()]))
            .collect();
        Ok(OCycle { seq, virtual_marks })
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn virtual_marks(&self) -> &[bool] {
        &self.virtual_marks
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn virtual_count(&self) -> usize {
        self.virtual_marks.iter().filter(|&&m| m).count()
    }
}

/// Lift outcome with the iteration count, which never exceeds the number of
/// virtual pairs of the input.
pub struct Lift {
    pub cycle: OrientedCycle,
    pub iterations: usize,
}

/// Lifts an o-cycle to a real cycle whose vertex set contains the o-cycle's.
///
/// Each round resolves the first virtual pair `(u, v)`: either a crossing
/// pair of real edges inside the path around the cycle reroutes it away, or
/// the degree-sum bound forces a common neighbor outside the sequence which
/// is inserted between `u` and `v`. Both moves lower the virtual pair count
/// by at least one, so the loop runs at most `|C'|` times.
pub fn lift_o_cycle(g: &Graph, oc: &OCycle) -> Result<OrientedCycle> {
    Ok(lift_o_cycle_traced(g, oc)?.cycle)
}

/// [`lift_o_cycle`] with iteration accounting.
pub fn lift_o_cycle_traced(g: &Graph, oc: &OCycle) -> Result<Lift> {
    let oe = o_edges(g);
    let mut seq = oc.seq().to_vec();
    let mut iterations = 0;
    loop {
        // Rerouting preserves o-validity: segment reversal keeps consecutive
        // pairs and both moves only introduce real edges.
        debug_assert!(is_o_cycle_with(&oe, &seq));
        let m = seq.len();
        let Some(k) = (0..m).find(|&k| !g.has_edge(seq[k], seq[(k + 1) % m])) else {
            let cycle = OrientedCycle::real(g, seq)?;
            return Ok(Lift { cycle, iterations });
        };
        iterations += 1;
        if iterations > oc.len() {
            return Err(Error::Invariant(
                "virtual pair count failed to decrease".into(),
            ));
        }
        let u = seq[k];
        let v = seq[(k + 1) % m];
        // Path around the rest of the cycle from v to u.
        let p: Vec<usize> = (0..m).map(|i| seq[(k + 1 + i) % m]).collect();
        debug_assert_eq!((p[0], p[m - 1]), (v, u));

        // (i) smallest crossing index: u-p[i] and v-p[i+1] real edges turn
        // the virtual pair into two real ones on the same vertex set.
        let crossing =
            (1..m.saturating_sub(2)).find(|&i| g.has_edge(u, p[i]) && g.has_edge(v, p[i + 1]));
        if let Some(i) = crossing {
            let mut next = p[0..=i].to_vec();
            next.extend(p[i + 1..m].iter().rev());
            seq = next;
            continue;
        }

        // (ii) no crossing: the degree sum of a virtual pair forces a common
        // neighbor outside the sequence; insert the smallest one.
        let outside = g
            .vertices()
            .find(|&w| !seq.contains(&w) && g.has_edge(w, u) && g.has_edge(w, v));
        match outside {
            Some(w) => seq.insert(k + 1, w),
            None => {
                return Err(Error::Invariant(format!(
                "virtual pair ({u},{v}) admits neither a crossing nor an outside common neighbor"
            )))
            }
        }
    }
}

/// Samples some o-cycle of `g` by seeded backtracking over Ẽ(G), or `None`
/// when Ẽ(G) has no cycle. Cycles through a virtual pair are preferred so
/// that samples actually exercise the lift. Deterministic for a fixed seed.
pub fn sample_o_cycle(g: &Graph, seed: u64) -> Option<OCycle> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let oe = o_edges(g);
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);

    fn dfs(
        oe: &OEdgeSet<'_>,
        rng: &mut rand_chacha::ChaCha8Rng,
        goal: usize,
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        min_len: usize,
    ) -> bool {
        use rand::seq::SliceRandom;
        let end = *path.last().unwrap();
        if path.len() >= min_len && oe.contains(end, goal) {
            return true;
        }
        let mut nbrs: Vec<usize> = oe.as_graph().neighbors(end).filter(|&w| !used[w]).collect();
        nbrs.shuffle(rng);
        for w in nbrs {
            path.push(w);
            used[w] = true;
            if dfs(oe, rng, goal, path, used, min_len) {
                return true;
            }
            used[w] = false;
            path.pop();
        }
        false
    }

    // First preference: close a cycle across a virtual pair (u, v), walking
    // from v back to u through other pairs.
    let mut virtuals: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && oe.is_virtual(u, v))
        .collect();
    virtuals.shuffle(&mut rng);
    for &(u, v) in virtuals.iter().take(8) {
        let mut path = vec![u, v];
        let mut used = vec![false; n];
        used[u] = true;
        used[v] = true;
        let min_len = 3 + rand::Rng::gen_range(&mut rng, 0..n.max(4) - 3);
        if dfs(&oe, &mut rng, u, &mut path, &mut used, min_len)
            || dfs(&oe, &mut rng, u, &mut path, &mut used, 3)
        {
            return OCycle::with_pairs(&oe, path).ok();
        }
    }

    // Fallback: any o-cycle from a random start.
    let mut starts: Vec<usize> = (0..n).collect();
    starts.shuffle(&mut rng);
    for &s in &starts {
        let min_len = 3 + rand::Rng::gen_range(&mut rng, 0..n.max(4) - 3);
        for t in [min_len, 3] {
            let mut path = vec![s];
            let mut used = vec![false; n];
            used[s] = true;
            if dfs(&oe, &mut rng, s, &mut path, &mut used, t) {
                return OCycle::with_pairs(&oe, path).ok();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, gen_random};
    use crate::gen::{cycle_graph, path_graph};

    #[test]
    fn pair_relation() {
        let k5 = complete(5);
        let oe = o_edges(&k5);
        assert_eq!(oe.as_graph().edge_count(), 10); // already complete

        // C4: every degree is 2, so both diagonals join the relation.
        let c4 = cycle_graph(4);
        let oe = o_edges(&c4);
        assert!(oe.contains(0, 2) && oe.contains(1, 3));
        assert!(oe.is_virtual(0, 2));
        assert_eq!(oe.as_graph().edge_count(), 6);

        // P4: only the adjacent middle pair reaches degree sum 4.
        let p4 = path_graph(4);
        let oe = o_edges(&p4);
        assert_eq!(oe.as_graph().edge_count(), p4.edge_count());
        assert!(!oe.contains(0, 3));
        assert!(!oe.contains(2, 2));
    }

    #[test]
    fn pair_monotone_under_edge_addition() {
        for seed in 0..20 {
            let g = gen_random(8, 0.3, seed);
            let before: Vec<(usize, usize)> = {
                let oe = o_edges(&g);
                oe.as_graph().edges().collect()
            };
            let mut h = g.clone();
            'add: for u in 0..8 {
                for v in u + 1..8 {
                    if !h.has_edge(u, v) {
                        h.add_edge(u, v);
                        break 'add;
                    }
                }
            }
            let oe = o_edges(&h);
            for (u, v) in before {
                assert!(oe.contains(u, v));
            }
        }
    }

    #[test]
    fn o_cycle_recognition() {
        let c5 = cycle_graph(5);
        assert!(is_o_cycle(&c5, &[0, 1, 2, 3, 4]));

        // K4 minus the edge 0-1: degree sum of (0,1) is 4 >= 4.
        let mut g = complete(4);
        g.remove_edge(0, 1);
        assert!(is_o_cycle(&g, &[0, 1, 2]));
        assert!(!is_o_cycle(&g, &[0, 1, 1]));
        assert!(!is_o_cycle(&g, &[0, 1]));

        let p4 = path_graph(4);
        assert!(!is_o_cycle(&p4, &[0, 1, 2]));
    }

    #[test]
    fn lift_identity_on_real_cycles() {
        let c5 = cycle_graph(5);
        let oc = OCycle::new(&c5, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(oc.virtual_count(), 0);
        let lift = lift_o_cycle_traced(&c5, &oc).unwrap();
        assert_eq!(lift.iterations, 0);
        assert_eq!(lift.cycle.seq(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn lift_inserts_outside_neighbor() {
        // K4 minus 0-1 with o-cycle (0,1,2): vertex 3 is the smallest
        // common outside neighbor, giving the real cycle (0,3,1,2).
        let mut g = complete(4);
        g.remove_edge(0, 1);
        let oc = OCycle::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(oc.virtual_marks(), &[true, false, false]);
        let lift = lift_o_cycle_traced(&g, &oc).unwrap();
        assert_eq!(lift.cycle.seq(), &[0, 3, 1, 2]);
        assert_eq!(lift.iterations, 1);
    }

    #[test]
    fn lift_uses_crossing() {
        // Cycle 0..4 plus vertex 5 adjacent to {0,2,3,4}; the o-cycle
        // (0,5,1,2,3,4) has one virtual pair (5,1) and reroutes to a real
        // Hamilton cycle via the crossing at 4-0.
        let mut g = cycle_graph(5);
        let mut h = Graph::new(6);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        for v in [0, 2, 3, 4] {
            h.add_edge(5, v);
        }
        g = h;
        let oc = OCycle::new(&g, vec![0, 5, 1, 2, 3, 4]).unwrap();
        assert_eq!(oc.virtual_count(), 1);
        let lift = lift_o_cycle_traced(&g, &oc).unwrap();
        assert_eq!(lift.iterations, 1);
        assert_eq!(lift.cycle.len(), 6);
    }

    #[test]
    fn lift_randomized_small() {
        let mut lifted = 0;
        for seed in 0..200 {
            let n = 5 + (seed as usize % 6);
            let g = gen_random(n, 0.5, seed);
            let Some(oc) = sample_o_cycle(&g, seed.wrapping_mul(7)) else {
                continue;
            };
            let lift = lift_o_cycle_traced(&g, &oc).unwrap();
            assert!(lift.iterations <= oc.len());
            for &v in oc.seq() {
                assert!(lift.cycle.contains(v));
            }
            lifted += 1;
        }
        assert!(lifted > 100, "only {lifted} samples lifted");
    }
}
