//! The Ore pair relation and the constructive lift of an o-cycle to a real
//! cycle on a vertex superset.
//!
//!     cargo run --example ore_lift

use clawham::gen::{complete, gen_random};
use clawham::ore::{is_o_cycle, lift_o_cycle_traced, o_edges, sample_o_cycle, OCycle};

fn main() {
    // K4 minus one edge: the missing pair has degree sum 4 >= n, so the
    // triangle through it is a valid o-cycle even though one pair is
    // virtual.
    let mut g = complete(4);
    g.remove_edge(0, 1);
    let oe = o_edges(&g);
    println!(
        "K4 - 01: |E| = {}, |Ẽ| = {}, (0,1) virtual = {}",
        g.edge_count(),
        oe.as_graph().edge_count(),
        oe.is_virtual(0, 1)
    );
    assert!(is_o_cycle(&g, &[0, 1, 2]));
    let oc = OCycle::new(&g, vec![0, 1, 2]).unwrap();
    let lift = lift_o_cycle_traced(&g, &oc).unwrap();
    println!(
        "o-cycle {:?} lifts to real cycle {:?} in {} round(s)",
        oc.seq(),
        lift.cycle.seq(),
        lift.iterations
    );

    // Random graphs: sample an o-cycle and lift it; the result is always a
    // real cycle containing the sampled vertices.
    for seed in 0..5u64 {
        let g = gen_random(10, 0.4, seed);
        let Some(oc) = sample_o_cycle(&g, seed) else {
            println!("seed {seed}: Ẽ(G) is acyclic");
            continue;
        };
        let lift = lift_o_cycle_traced(&g, &oc).unwrap();
        println!(
            "seed {seed}: o-cycle of length {} with {} virtual pair(s) -> real cycle of length {} \
             ({} round(s))",
            oc.len(),
            oc.virtual_count(),
            lift.cycle.len(),
            lift.iterations
        );
    }
}
