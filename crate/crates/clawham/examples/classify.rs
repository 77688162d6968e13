//! Classify graphs against the heavy-claw lattice and the
//! distance-hereditary properties, with witnesses for every failing flag.
//!
//!     cargo run --example classify

use clawham::classes::{class_profile, is_almost_distance_hereditary, is_distance_hereditary};
use clawham::connectivity::is_k_connected;
use clawham::gen::{clique_join_gadget, complete, cycle_graph, petersen};
use clawham::graph::Graph;

fn describe(name: &str, g: &Graph) {
    let p = class_profile(g);
    println!(
        "{name}: n={} m={} claw_free={} 1-heavy={} 2-heavy={} claw-heavy={}",
        g.vertex_count(),
        g.edge_count(),
        p.claw_free,
        p.one_heavy,
        p.two_heavy,
        p.claw_heavy
    );
    if let Some(claw) = p.one_heavy_witness {
        println!(
            "  light claw witness: center {} ends {:?}",
            claw.center, claw.ends
        );
    }
    if g.is_connected() {
        let dh = is_distance_hereditary(g).unwrap();
        let adh = is_almost_distance_hereditary(g).unwrap();
        println!(
            "  distance-hereditary={} almost-distance-hereditary={}",
            dh.holds, adh.holds
        );
        if let Some(w) = adh.witness.or(dh.witness) {
            println!("  stretch witness: {w:?}");
        }
    }
    println!(
        "  2-connected={} 3-connected={}",
        is_k_connected(g, 2).holds,
        is_k_connected(g, 3).holds
    );
}

fn main() {
    describe("K5", &complete(5));
    describe("C5", &cycle_graph(5));
    describe("C6", &cycle_graph(6));
    describe("Petersen", &petersen());
    describe("clique-join gadget n=12", &clique_join_gadget(12).unwrap());
}
