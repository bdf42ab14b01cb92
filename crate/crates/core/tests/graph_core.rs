mod common;

use closedgraph::{
    apply_labeling, generate, parse_edge_list, recognize_proper_interval, Graph, GraphKind,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn symmetric_and_sorted(g: &Graph) -> bool {
    let twice: usize = g.vertices().map(|v| g.degree(v)).sum();
    twice == 2 * g.m()
        && g.vertices().all(|v| {
            let nb = g.neighbors(v);
            nb.windows(2).all(|w| w[0] < w[1])
                && nb.iter().all(|&w| w != v && g.neighbors(w).contains(&v))
        })
}

proptest! {
    #[test]
    fn parsed_graphs_are_well_formed(edges in prop::collection::vec((1u32..30, 1u32..30), 0..120)) {
        let text: String = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect();
        let text = format!("n 30\n{text}");
        let g = parse_edge_list(&text).unwrap();
        prop_assert!(symmetric_and_sorted(&g));
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn generated_graphs_are_well_formed(n in 1u32..200, density in 0.0f64..1.0, length in 0.1f64..8.0, seed: u64) {
        let total = u64::from(n) * u64::from(n - 1) / 2;
        let m = (total as f64 * density) as u64;
        let gnm = generate(GraphKind::RandomGnm { n, m }, seed).unwrap();
        prop_assert!(symmetric_and_sorted(&gnm));
        prop_assert_eq!(gnm.m() as u64, m);
        let ui = generate(GraphKind::RandomUnitInterval { n, length }, seed).unwrap();
        prop_assert!(symmetric_and_sorted(&ui));
    }

    #[test]
    fn unit_interval_graphs_are_recognized(n in 1u32..400, length in 0.05f64..12.0, seed: u64) {
        let g = generate(GraphKind::RandomUnitInterval { n, length }, seed).unwrap();
        prop_assert!(recognize_proper_interval(&g).is_proper_interval());
    }
}

#[test]
fn relabel_round_trip_1000_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..1000 {
        let n = 1 + i % 40;
        let g = common::random_graph(&mut rng, n, 0.3);
        let sigma = common::random_ordering(&mut rng, n);
        let h = apply_labeling(&g, &sigma).unwrap();
        assert_eq!(h.m(), g.m());
        for (u, v) in g.edges() {
            assert!(h.has_edge(sigma.pos(u), sigma.pos(v)));
        }
        assert_eq!(apply_labeling(&h, &sigma.inverse()).unwrap(), g);
    }
}

#[test]
fn large_unit_interval_graph_is_recognized() {
    let g = generate(
        GraphKind::RandomUnitInterval {
            n: 1000,
            length: 4.0,
        },
        17,
    )
    .unwrap();
    assert!(recognize_proper_interval(&g).is_proper_interval());
}
