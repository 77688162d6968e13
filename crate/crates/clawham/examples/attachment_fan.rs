//! Attachment structures and (u,C)-fans: how off-cycle components hook
//! onto a cycle.
//!
//!     cargo run --example attachment_fan

use clawham::fan::{attachment, build_fan, off_cycle_components};
use clawham::gen::petersen;
use clawham::oracle::longest_cycle_oracle;

fn main() {
    let g = petersen();
    let c = longest_cycle_oracle(&g).unwrap();
    println!(
        "Petersen longest cycle ({} vertices): {:?}",
        c.len(),
        c.seq()
    );

    for comp in off_cycle_components(&g, &c) {
        let at = attachment(&g, &c, &comp).unwrap();
        println!(
            "component {:?}: attachment set {:?}, chosen path {:?}",
            at.component,
            at.attachment_set,
            at.chosen_path.seq()
        );
        for &u in &comp {
            match build_fan(&g, &c, u) {
                Ok(fan) => {
                    println!("  fan at {u}:");
                    for leg in &fan.legs {
                        println!("    leg {:?}", leg.seq());
                    }
                }
                Err(e) => println!("  no fan at {u}: {e}"),
            }
        }
    }
}
