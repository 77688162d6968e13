//! Graph families and enumeration streams for tests and verification runs.

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Path graph `P_n` on vertices `0..n` in order.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle graph `C_n` on vertices `0..n` in order.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Join of two cliques `K_{n/2}` and `K_{n/2-3}` extended by a three-vertex
/// gadget: `u` is adjacent to `v`, `x`, and the anchor `y` (the first vertex
/// of the large clique); `v` and `x` are adjacent to every vertex of the
/// small clique. The family is Hamiltonian and claw-heavy but not 2-heavy
/// once `n >= 12`.
///
/// Labels: large clique `0..n/2` (anchor `y = 0`), small clique `n/2..n-3`,
/// then `v = n-3`, `u = n-2`, `x = n-1`.
pub fn clique_join_gadget(n: usize) -> Result<Graph> {
    if !n.is_multiple_of(2) || n < 10 {
        return Err(Error::InvalidParam(format!(
            "clique join gadget needs an even n >= 10, got {n}"
        )));
    }
    let half = n / 2;
    let (v, u, x) = (n - 3, n - 2, n - 1);
    let mut g = Graph::new(n);
    for a in 0..half {
        for b in a + 1..half {
            g.add_edge(a, b);
        }
    }
    for a in half..n - 3 {
        for b in a + 1..n - 3 {
            g.add_edge(a, b);
        }
    }
    for a in 0..half {
        for b in half..n - 3 {
            g.add_edge(a, b);
        }
    }
    g.add_edge(u, v);
    g.add_edge(u, 0); // y
    g.add_edge(u, x);
    for w in half..n - 3 {
        g.add_edge(v, w);
        g.add_edge(x, w);
    }
    Ok(g)
}

/// Erdős–Rényi style graph: each pair appears independently with
/// probability `p`. Identical `(n, p, seed)` always yields the same graph.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices in edge-mask order.
/// Bit `i` of the mask is the `i`-th pair in lexicographic order
/// `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 7 {
        return Err(Error::TooLarge(format!(
            "labeled enumeration is capped at n = 7, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 != 0 {
                g.add_edge(u, v);
            }
        }
        g
    }))
}

/// One representative per isomorphism class for every order `1..=n`,
/// generated by vertex augmentation with canonical-form deduplication.
/// `levels[k-1]` holds the graphs on `k` vertices in a deterministic order.
pub fn enumerate_nonisomorphic_levels(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n == 0 || n > 10 {
        return Err(Error::TooLarge(format!(
            "isomorphism-free enumeration supports 1..=10 vertices, got {n}"
        )));
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::new(1)]];
    for k in 2..=n {
        let parents = &levels[k - 2];
        let masks = 1u64 << (k - 1);
        let mut seen = std::collections::HashSet::new();
        let mut level = Vec::new();
        // Chunked so the candidate buffers stay small while the canonical
        // form computation parallelizes.
        for chunk in parents.chunks(256) {
            use rayon::prelude::*;
            let batches: Vec<Vec<(u128, Graph)>> = chunk
                .par_iter()
                .map(|parent| {
                    let mut out = Vec::with_capacity(masks as usize);
                    for mask in 0..masks {
                        let child = grow(parent, k, mask);
                        let key = canonical_key(&child);
                        out.push((key, child));
                    }
                    out
                })
                .collect();
            for batch in batches {
                for (key, child) in batch {
                    if seen.insert(key) {
                        level.push(child);
                    }
                }
            }
        }
        levels.push(level);
    }
    Ok(levels)
}

/// Isomorphism-free graphs on exactly `n` vertices.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_nonisomorphic_levels(n)?.pop().expect("level n"))
}

fn grow(parent: &Graph, k: usize, mask: u64) -> Graph {
    let mut g = Graph::new(k);
    for (u, v) in parent.edges() {
        g.add_edge(u, v);
    }
    for v in 0..k - 1 {
        if mask >> v & 1 != 0 {
            g.add_edge(v, k - 1);
        }
    }
    g
}
