//! The Hamilton cycle driver across its three modes: hypothesis violations
//! come back with witnesses, positives with validated cycles, and generic
//! negatives with cut sets or longest-cycle evidence.
//!
//!     cargo run --example hamilton_search

use clawham::engine::{find_hamilton_cycle, EngineOutcome, Mode};
use clawham::gen::{clique_join_gadget, petersen};
use clawham::graph::Graph;

fn run(name: &str, g: &Graph, mode: Mode) {
    print!("{name} [{mode:?}]: ");
    match find_hamilton_cycle(g, mode) {
        Ok(EngineOutcome::HamiltonCycle { cycle }) => {
            println!("Hamilton cycle {:?}", cycle.seq());
        }
        Ok(EngineOutcome::HypothesisViolation {
            hypothesis,
            verdict,
        }) => {
            println!("hypothesis '{hypothesis}' fails: {:?}", verdict.witness);
        }
        Ok(EngineOutcome::NotHamiltonian(ev)) => println!("not Hamiltonian: {ev:?}"),
        Ok(EngineOutcome::ProofCaseMiss(diag)) => println!(
            "engine stalled at {} vertices although {} are reachable",
            diag.stuck_cycle.len(),
            diag.oracle_longer.len()
        ),
        Err(e) => println!("error: {e}"),
    }
}

fn main() {
    let gadget = clique_join_gadget(12).unwrap();
    run("gadget n=12", &gadget, Mode::ClawHeavy);
    run("gadget n=12", &gadget, Mode::OneHeavy); // not 2-heavy, still 1-heavy

    let p = petersen();
    run("Petersen", &p, Mode::OneHeavy); // light claw witness
    run("Petersen", &p, Mode::Generic); // certified negative

    let disconnected = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
    run("two triangles", &disconnected, Mode::Generic);
}
