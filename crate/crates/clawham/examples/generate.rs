//! Generator families emitted as graph6 streams, ready to pipe into the
//! other examples or the CLI.
//!
//!     cargo run --example generate

use clawham::g6::emit_graph6;
use clawham::gen::{
    clique_join_gadget, enumerate_labeled, enumerate_nonisomorphic, gen_random, petersen,
};

fn main() {
    println!("# clique-join gadgets");
    for n in [10, 12, 14] {
        println!("{}", emit_graph6(&clique_join_gadget(n).unwrap()));
    }

    println!("# seeded random graphs (n=10, p=0.5, seeds 0..3)");
    for seed in 0..3 {
        println!("{}", emit_graph6(&gen_random(10, 0.5, seed)));
    }

    println!("# Petersen");
    println!("{}", emit_graph6(&petersen()));

    let labeled: Vec<_> = enumerate_labeled(3).unwrap().collect();
    println!("# all {} labeled graphs on 3 vertices", labeled.len());
    for g in &labeled {
        println!("{}", emit_graph6(g));
    }

    let iso = enumerate_nonisomorphic(5).unwrap();
    println!("# all {} isomorphism classes on 5 vertices", iso.len());
    for g in &iso {
        println!("{}", emit_graph6(g));
    }
}
