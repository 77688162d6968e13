//! Reroute templates: candidate o-cycles assembled from cycle segments,
//! attachment paths, and Ore-pair jumps. Every candidate is validated as an
//! o-cycle on a strict vertex superset of the current cycle before anyone
//! lifts it; builders may freely emit degenerate sequences and rely on the
//! validation to discard them.
//!
//! Naming: `walk(a, b)` is the closed segment from `a` to `b` along the
//! orientation, `back(a, b)` traverses against it. `p` is an attachment
//! path between two cycle vertices with all internal vertices off-cycle.

use crate::cycle::OrientedCycle;
use crate::graph::Graph;
use crate::ore::{is_o_cycle_with, o_edges, OEdgeSet};

pub(crate) struct TemplateCtx<'a> {
    pub oe: OEdgeSet<'a>,
    pub c: &'a OrientedCycle,
}

impl<'a> TemplateCtx<'a> {
    pub fn new(g: &'a Graph, c: &'a OrientedCycle) -> Self {
        TemplateCtx { oe: o_edges(g), c }
    }

    /// A usable candidate is a valid o-cycle on a strict superset of the
    /// current cycle's vertices.
    pub fn valid_extension(&self, cand: &[usize]) -> bool {
        cand.len() > self.c.len()
            && self.c.seq().iter().all(|&v| cand.contains(&v))
            && is_o_cycle_with(&self.oe, cand)
    }

    fn walk(&self, a: usize, b: usize) -> Vec<usize> {
        self.c
            .walk(a, b)
            .expect("template endpoints lie on the cycle")
    }

    fn back(&self, a: usize, b: usize) -> Vec<usize> {
        self.c
            .walk_back(a, b)
            .expect("template endpoints lie on the cycle")
    }

    pub fn succ(&self, v: usize) -> usize {
        self.c.successor(v).expect("on cycle")
    }

    pub fn pred(&self, v: usize) -> usize {
        self.c.predecessor(v).expect("on cycle")
    }
}

/// Concatenates parts, dropping consecutive duplicates from shared segment
/// endpoints and the closing duplicate of the first vertex.
fn glue<I: IntoIterator<Item = Vec<usize>>>(parts: I) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for part in parts {
        for v in part {
            if out.last() == Some(&v) {
                continue;
            }
            out.push(v);
        }
    }
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Single off-cycle vertex inserted between a consecutive cycle pair through
/// two Ore pairs.
pub(crate) fn insert_vertex(t: &TemplateCtx, c_vertex: usize, u: usize) -> Vec<usize> {
    let succ = t.succ(c_vertex);
    glue([t.walk(succ, c_vertex), vec![u]])
}

/// Replaces one cycle edge by an attachment path between its endpoints.
pub(crate) fn splice_path(t: &TemplateCtx, p: &[usize]) -> Vec<usize> {
    let a = p[0];
    let b = *p.last().unwrap();
    glue([p.to_vec(), t.walk(b, a)])
}

// Small-gap closures around an attachment path.
pub(crate) fn gap_close_far(t: &TemplateCtx, vi: usize, vj: usize, p: &[usize]) -> Vec<usize> {
    glue([
        p.to_vec(),
        vec![t.pred(vj)],
        t.walk(t.succ(vj), t.pred(vi)),
        vec![t.succ(vi)],
    ])
}

pub(crate) fn gap_close_near(t: &TemplateCtx, vi: usize, vj: usize, p: &[usize]) -> Vec<usize> {
    glue([p.to_vec(), vec![t.pred(vj)], t.walk(t.succ(vj), vi)])
}

/// Off-cycle vertex hooked to a mid-segment vertex `w`, skipping `vj`.
pub(crate) fn hook_mid(t: &TemplateCtx, vj: usize, u1: usize, w: usize) -> Vec<usize> {
    glue([
        vec![u1],
        t.walk(w, t.pred(vj)),
        t.walk(t.succ(vj), t.pred(w)),
        vec![vj],
    ])
}

// Reroutes around a common neighbor `l` of `vi` and `pred(vj)`.
pub(crate) fn jump_both(
    t: &TemplateCtx,
    vi: usize,
    vj: usize,
    p: &[usize],
    l: usize,
) -> Vec<usize> {
    glue([
        p.to_vec(),
        t.walk(vj, t.pred(vi)),
        t.walk(t.succ(vi), t.pred(l)),
        t.walk(t.succ(l), t.pred(vj)),
        vec![l],
    ])
}

pub(crate) fn jump_fold(
    t: &TemplateCtx,
    vi: usize,
    vj: usize,
    p: &[usize],
    l: usize,
) -> Vec<usize> {
    glue([
        p.to_vec(),
        t.walk(vj, t.pred(vi)),
        t.walk(t.succ(vi), l),
        t.back(t.pred(vj), t.succ(l)),
    ])
}

// Reroutes around a neighbor `l` of `vi` inside the segment.
pub(crate) fn fold_left(
    t: &TemplateCtx,
    vi: usize,
    vj: usize,
    p: &[usize],
    l: usize,
) -> Vec<usize> {
    let mut rp = p.to_vec();
    rp.reverse();
    glue([
        rp,
        t.walk(l, t.pred(vj)),
        t.back(t.pred(l), t.succ(vi)),
        t.back(t.pred(vi), vj),
    ])
}

pub(crate) fn fold_right(
    t: &TemplateCtx,
    vi: usize,
    vj: usize,
    p: &[usize],
    l: usize,
) -> Vec<usize> {
    glue([
        p.to_vec(),
        t.back(vj, t.succ(l)),
        t.walk(t.succ(vj), t.pred(vi)),
        t.walk(t.succ(vi), l),
    ])
}

// Reroutes conditioned on the Ore pair (pred(vi), l).
pub(crate) fn ore_hop_a(
    t: &TemplateCtx,
    vi: usize,
    vj: usize,
    p: &[usize],
    l: usize,
) -> Vec<usize> {
    glue([
        p.to_vec(),
        t.walk(vj, t.pred(vi)),
        t.walk(l, t.pred(vj)),
        t.back(t.pred(l), vi),
    ])
}

pub(crate) fn ore_hop_b(
    t: &TemplateCtx,
    vi: usize,
    vj: usize,
    p: &[usize],
    l: usize,
) -> Vec<usize> {
    let mut rp = p.to_vec();
    rp.reverse();
    glue([
        rp,
        t.walk(vi, t.pred(l)),
        t.walk(t.succ(vj), t.pred(vi)),
        t.walk(l, vj),
    ])
}

pub(crate) fn ore_hop_c(
    t: &TemplateCtx,
    vi: usize,
    vj: usize,
    p: &[usize],
    l: usize,
) -> Vec<usize> {
    glue([
        p.to_vec(),
        t.back(vj, t.succ(l)),
        t.walk(t.succ(vj), t.pred(vi)),
        t.back(l, vi),
    ])
}

// Fan-based reroutes: `u` off-cycle, `x`/`y`/`z` consecutive cycle
// neighbors of `u` in orientation order (z before x, y after x).
pub(crate) fn fan_swap(t: &TemplateCtx, u: usize, x: usize, y: usize, z: usize) -> Vec<usize> {
    glue([
        vec![t.pred(x)],
        t.walk(y, z),
        vec![u],
        t.walk(x, t.pred(y)),
        t.walk(t.succ(z), t.pred(x)),
    ])
}

pub(crate) fn fan_weave(
    t: &TemplateCtx,
    u: usize,
    x: usize,
    y: usize,
    z: usize,
    l: usize,
) -> Vec<usize> {
    glue([
        vec![x],
        t.back(t.pred(l), t.succ(x)),
        t.back(t.pred(x), t.succ(z)),
        t.back(t.pred(y), l),
        t.walk(y, z),
        vec![u],
    ])
}

pub(crate) fn fan_pull(t: &TemplateCtx, u: usize, x: usize, y: usize, lp: usize) -> Vec<usize> {
    glue([
        vec![x, u],
        t.walk(y, lp),
        t.back(t.pred(y), t.succ(x)),
        t.walk(t.succ(lp), x),
    ])
}

pub(crate) fn fan_cross(
    t: &TemplateCtx,
    u: usize,
    y: usize,
    z: usize,
    l: usize,
    m: usize,
) -> Vec<usize> {
    glue([
        vec![z, u],
        t.back(y, l),
        t.walk(t.succ(y), t.pred(z)),
        t.walk(t.succ(z), t.pred(m)),
        t.back(t.pred(l), m),
    ])
}

pub(crate) fn fan_skip_after(
    t: &TemplateCtx,
    u: usize,
    x: usize,
    z: usize,
    m: usize,
) -> Vec<usize> {
    glue([
        vec![z, u, x],
        t.walk(t.succ(m), t.pred(x)),
        t.walk(t.succ(x), t.pred(z)),
        t.walk(t.succ(z), m),
    ])
}

pub(crate) fn fan_skip_before(
    t: &TemplateCtx,
    u: usize,
    x: usize,
    z: usize,
    m: usize,
) -> Vec<usize> {
    glue([
        vec![z],
        t.walk(m, t.pred(x)),
        t.walk(t.succ(x), t.pred(z)),
        t.walk(t.succ(z), t.pred(m)),
        vec![x, u],
    ])
}

pub(crate) fn fan_double(
    t: &TemplateCtx,
    u: usize,
    y: usize,
    z: usize,
    lp: usize,
    m: usize,
) -> Vec<usize> {
    glue([
        vec![z, u, y],
        t.back(lp, t.succ(m)),
        t.walk(t.succ(lp), t.pred(y)),
        t.walk(t.succ(y), t.pred(z)),
        t.walk(t.succ(z), m),
    ])
}
