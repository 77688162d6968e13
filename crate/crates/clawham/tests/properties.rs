//! Property tests over randomized graphs: codec round-trips, metric and
//! connectivity invariants, segment algebra, class-lattice implications,
//! and o-cycle lifting.

use clawham::classes::class_profile;
use clawham::connectivity::is_k_connected;
use clawham::cycle::{Closure, OrientedCycle};
use clawham::g6::{emit_graph6, parse_graph6};
use clawham::graph::Graph;
use clawham::ore::{lift_o_cycle_traced, sample_o_cycle};
use proptest::prelude::*;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> (bit % 64) & 1 != 0 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let rec = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&rec).unwrap(), g);
    }

    #[test]
    fn distances_symmetric_with_triangle_inequality(g in arb_graph()) {
        let n = g.vertex_count();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(g.distance(x, y), g.distance(y, x));
                for z in 0..n {
                    if let (Some(a), Some(b), Some(c)) =
                        (g.distance(x, z), g.distance(x, y), g.distance(y, z))
                    {
                        prop_assert!(a <= b + c);
                    }
                }
            }
        }
    }

    #[test]
    fn connectivity_monotone(g in arb_graph(), k in 2usize..5) {
        if is_k_connected(&g, k).holds {
            prop_assert!(is_k_connected(&g, k - 1).holds);
        }
    }

    #[test]
    fn segment_partition(perm in proptest::sample::subsequence((0..12usize).collect::<Vec<_>>(), 3..12).prop_shuffle(), u in 0usize..12, v in 0usize..12) {
        let c = OrientedCycle::new(perm.clone()).unwrap();
        let u = perm[u % perm.len()];
        let v = perm[v % perm.len()];
        let mut all = c.segment(u, v, Closure::ClosedClosed).unwrap().seq().to_vec();
        all.extend(c.segment(v, u, Closure::OpenOpen).unwrap().seq());
        let mut sorted = all;
        sorted.sort_unstable();
        let mut expect = perm;
        expect.sort_unstable();
        prop_assert_eq!(sorted, expect);
    }

    #[test]
    fn reverse_orientation_duality(seq in proptest::sample::subsequence((0..10usize).collect::<Vec<_>>(), 3..10).prop_shuffle()) {
        let c = OrientedCycle::new(seq.clone()).unwrap();
        let r = c.reversed();
        for &v in &seq {
            prop_assert_eq!(r.successor(v).unwrap(), c.predecessor(v).unwrap());
        }
    }

    #[test]
    fn class_lattice(g in arb_graph()) {
        let p = class_profile(&g);
        prop_assert!(!p.claw_free || p.two_heavy);
        prop_assert!(!p.two_heavy || p.claw_heavy);
        prop_assert!(!p.claw_heavy || p.one_heavy);
    }

    #[test]
    fn lift_is_sound(g in arb_graph(), seed in any::<u64>()) {
        if let Some(oc) = sample_o_cycle(&g, seed) {
            let lift = lift_o_cycle_traced(&g, &oc).unwrap();
            prop_assert!(lift.iterations <= oc.len());
            for &v in oc.seq() {
                prop_assert!(lift.cycle.contains(v));
            }
            prop_assert!(OrientedCycle::real(&g, lift.cycle.seq().to_vec()).is_ok());
        }
    }

    #[test]
    fn dh_implies_adh(g in arb_graph()) {
        if g.is_connected() && g.vertex_count() >= 2 {
            let dh = clawham::is_distance_hereditary(&g).unwrap().holds;
            let adh = clawham::is_almost_distance_hereditary(&g).unwrap().holds;
            prop_assert!(!dh || adh);
        }
    }
}
