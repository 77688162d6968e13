//! Audit a longest cycle of a non-Hamiltonian graph against the
//! attachment-neighborhood exclusion items a-h.
//!
//!     cargo run --example audit_longest_cycle

use clawham::audit::{audit_items, audit_longest_cycle};
use clawham::cycle::OrientedCycle;
use clawham::fan::off_cycle_components;
use clawham::gen::{complete, petersen};
use clawham::oracle::longest_cycle_oracle;

fn main() {
    let g = petersen();
    let c = longest_cycle_oracle(&g).unwrap();
    for comp in off_cycle_components(&g, &c) {
        let report = audit_longest_cycle(&g, &c, &comp).unwrap();
        println!(
            "Petersen, cycle {:?}, component {:?}, attachments {:?}",
            report.cycle, report.component, report.attachment_set
        );
        for item in &report.items {
            println!(
                "  item {}: applicable={} holds={} tuples={}",
                item.code, item.applicable, item.holds, item.checked
            );
        }
    }

    // A deliberately non-maximal cycle shows what violations look like:
    // auditing a triangle of K5 flags item (a) immediately.
    let k5 = complete(5);
    let c = OrientedCycle::real(&k5, vec![0, 1, 2]).unwrap();
    let report = audit_items(&k5, &c, &[3, 4]).unwrap();
    let a = report.item('a');
    println!(
        "K5 with a triangle as the 'longest' cycle: item a holds={} first violation={:?}",
        a.holds,
        a.violations.first()
    );
}
