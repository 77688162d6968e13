//! Attachment structures of off-cycle components and (u,C)-fans: the raw
//! material the extension engine reroutes around.

use crate::cycle::{OrientedCycle, Path};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

/// A component of `G - V(C)` with its neighbors on the cycle and a chosen
/// path through it.
#[derive(Clone, Debug, Serialize)]
pub struct AttachmentStructure {
    pub cycle: OrientedCycle,
    /// Component vertex set `R`, ascending.
    pub component: Vec<usize>,
    /// `N_C(R)` in orientation order starting from the cycle's first vertex.
    pub attachment_set: Vec<usize>,
    /// Path between two attachment vertices with all internals in `R`,
    /// chosen by [`choose_path`].
    pub chosen_path: Path,
}

/// Three internally disjoint paths from an off-cycle root to the cycle,
/// meeting it only at their distinct terminals.
#[derive(Clone, Debug, Serialize)]
pub struct Fan {
    pub root: usize,
    /// Legs in orientation order of their terminals; each leg runs from the
    /// root to its cycle terminal.
    pub legs: [Path; 3],
}

/// Connected components of `G - V(C)` as ascending vertex lists, ordered by
/// least vertex.
pub fn off_cycle_components(g: &Graph, c: &OrientedCycle) -> Vec<Vec<usize>> {
    let mut seen: Vec<bool> = (0..g.vertex_count()).map(|v| c.contains(v)).collect();
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Neighbors of `component` on the cycle, in orientation order.
pub fn attachment_set(g: &Graph, c: &OrientedCycle, component: &[usize]) -> Vec<usize> {
    c.seq()
        .iter()
        .copied()
        .filter(|&v| component.iter().any(|&r| g.has_edge(v, r)))
        .collect()
}

/// Lexicographically least shortest `a`-`b` path with at least one internal
/// vertex, all internals drawn from `component`.
pub fn pair_path(g: &Graph, component: &[usize], a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut allowed = vec![false; n];
    for &r in component {
        allowed[r] = true;
    }
    allowed[a] = true;
    allowed[b] = true;

    // BFS from b, forbidding the direct b-a hop so every path through a has
    // an internal vertex.
    let mut dist = vec![u32::MAX; n];
    dist[b] = 0;
    let mut queue = std::collections::VecDeque::from([b]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if v == b && w == a {
                continue;
            }
            if allowed[w] && dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if dist[a] == u32::MAX {
        return None;
    }
    let mut path = vec![a];
    let mut cur = a;
    while cur != b {
        let next = g
            .neighbors(cur)
            .find(|&w| allowed[w] && dist[w] != u32::MAX && dist[w] + 1 == dist[cur])
            .expect("distance decreases along a shortest path");
        path.push(next);
        cur = next;
    }
    Some(path)
}

/// Chooses the attachment path minimizing (size of the open cycle segment
/// between its endpoints, path length), ties broken by lexicographic vertex
/// order.
pub fn choose_path(g: &Graph, c: &OrientedCycle, component: &[usize]) -> Result<Path> {
    let attach = attachment_set(g, c, component);
    let len = c.len();
    let mut best: Option<(usize, usize, usize, usize, Vec<usize>)> = None;
    for &a in &attach {
        for &b in &attach {
            if a == b {
                continue;
            }
            let Some(path) = pair_path(g, component, a, b) else {
                continue;
            };
            let gap = (c.position(b)? + len - c.position(a)?) % len - 1;
            let cand = (gap, path.len(), a, b, path);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    match best {
        Some((_, _, _, _, path)) => Path::new(path),
        None => Err(Error::NoAttachmentPath),
    }
}

/// Builds the attachment structure for a component of `G - V(C)`.
pub fn attachment(
    g: &Graph,
    c: &OrientedCycle,
    component: &[usize],
) -> Result<AttachmentStructure> {
    let mut r = component.to_vec();
    r.sort_unstable();
    r.dedup();
    if !off_cycle_components(g, c).contains(&r) {
        return Err(Error::InvalidParam(
            "vertex set is not a component of G - V(C)".into(),
        ));
    }
    let chosen_path = choose_path(g, c, &r)?;
    Ok(AttachmentStructure {
        cycle: c.clone(),
        attachment_set: attachment_set(g, c, &r),
        component: r,
        chosen_path,
    })
}

/// All simple paths from `u` to the cycle with every internal vertex
/// off-cycle; each ends at its first cycle contact. Returns
/// `(terminal, interior mask excluding the root, full path)` triples.
fn legs_from(g: &Graph, c: &OrientedCycle, u: usize) -> Vec<(usize, u64, Vec<usize>)> {
    assert!(g.vertex_count() <= 64, "fan search is desk-scale (n <= 64)");
    fn dfs(
        g: &Graph,
        c: &OrientedCycle,
        path: &mut Vec<usize>,
        used: &mut u64,
        out: &mut Vec<(usize, u64, Vec<usize>)>,
    ) {
        let end = *path.last().unwrap();
        let nbrs: Vec<usize> = g.neighbors(end).collect();
        for w in nbrs {
            if *used >> w & 1 != 0 {
                continue;
            }
            if c.contains(w) {
                let mut leg = path.clone();
                leg.push(w);
                let interior = *used & !(1 << path[0]);
                out.push((w, interior, leg));
            } else {
                path.push(w);
                *used |= 1 << w;
                dfs(g, c, path, used, out);
                *used &= !(1 << w);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut path = vec![u];
    let mut used = 1u64 << u;
    dfs(g, c, &mut path, &mut used, &mut out);
    out
}

/// Builds a (u,C)-fan minimizing, lexicographically: first leg length, arc
/// from the first to the second terminal, second leg length, arc from the
/// third terminal back to the first, third leg length; ties by terminal and
/// leg vertex order. Errors when no three internally disjoint paths exist.
pub fn build_fan(g: &Graph, c: &OrientedCycle, u: usize) -> Result<Fan> {
    if c.contains(u) {
        return Err(Error::InvalidParam(format!("{u} lies on the cycle")));
    }
    let legs = legs_from(g, c, u);
    let len = c.len();
    type Key = (usize, usize, usize, usize, usize, Vec<usize>);
    let mut best: Option<(Key, [Vec<usize>; 3])> = None;
    for (wi, int1, q1) in &legs {
        let pos_i = c.position(*wi).unwrap();
        for (wj, int2, q2) in &legs {
            if wj == wi || int1 & int2 != 0 {
                continue;
            }
            let off_j = (c.position(*wj).unwrap() + len - pos_i) % len;
            for (wk, int3, q3) in &legs {
                if wk == wi || wk == wj || int3 & (int1 | int2) != 0 {
                    continue;
                }
                // Terminals must appear in orientation order wi, wj, wk.
                let off_k = (c.position(*wk).unwrap() + len - pos_i) % len;
                if off_j >= off_k {
                    continue;
                }
                let arc_ij = off_j + 1;
                let arc_ki = len - off_k + 1;
                let mut tie = vec![*wi, *wj, *wk];
                tie.extend(q1);
                tie.extend(q2);
                tie.extend(q3);
                let key: Key = (q1.len(), arc_ij, q2.len(), arc_ki, q3.len(), tie);
                if best.as_ref().is_none_or(|(b, _)| key < *b) {
                    best = Some((key, [q1.clone(), q2.clone(), q3.clone()]));
                }
            }
        }
    }
    match best {
        Some((_, [q1, q2, q3])) => Ok(Fan {
            root: u,
            legs: [Path::new(q1)?, Path::new(q2)?, Path::new(q3)?],
        }),
        None => Err(Error::NoFan { u }),
    }
}
