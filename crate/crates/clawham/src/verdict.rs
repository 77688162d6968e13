//! Pass/fail results with independently checkable witnesses.

use serde::Serialize;

/// Structured counterexample attached to a failing [`Verdict`]. Every witness
/// can be re-checked against the graph it came from without trusting the
/// checker that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Induced claw whose end vertices fail the weight rule under test.
    Claw { center: usize, ends: [usize; 3] },
    /// Connected induced subgraph (listed as an induced path from `x` to `y`)
    /// that stretches the host distance `d_g` to `d_sub`.
    Stretch {
        vertices: Vec<usize>,
        x: usize,
        y: usize,
        d_sub: usize,
        d_g: usize,
    },
    /// Removing this vertex set disconnects the graph; empty for graphs that
    /// are already disconnected.
    CutSet { vertices: Vec<usize> },
    /// Too few vertices for the requested connectivity level.
    TooFewVertices { n: usize, k: usize },
}

/// Boolean verdict; when `holds` is false a witness is always present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fails(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}
