//! Heavy-cycle discovery: a cycle through every vertex of degree at least
//! n/2 in a 2-connected graph.
//!
//!     cargo run --example heavy_cycle

use clawham::classes::heavy_vertices;
use clawham::engine::find_heavy_cycle;
use clawham::gen::{clique_join_gadget, cycle_graph, gen_random};

fn main() {
    let g = clique_join_gadget(12).unwrap();
    let heavy = heavy_vertices(&g);
    let c = find_heavy_cycle(&g).unwrap();
    println!("gadget n=12: heavy set {:?}", heavy);
    println!("  heavy cycle ({} vertices): {:?}", c.len(), c.seq());
    assert!(heavy.iter().all(|&v| c.contains(v)));

    // No heavy vertices at all: any cycle qualifies.
    let c6 = cycle_graph(6);
    println!(
        "C6: heavy set {:?}, cycle {:?}",
        heavy_vertices(&c6),
        find_heavy_cycle(&c6).unwrap().seq()
    );

    for seed in 0..5u64 {
        let g = gen_random(9, 0.5, seed);
        match find_heavy_cycle(&g) {
            Ok(c) => println!(
                "seed {seed}: {} heavy vertices, cycle of length {}",
                heavy_vertices(&g).len(),
                c.len()
            ),
            Err(e) => println!("seed {seed}: {e}"),
        }
    }
}
