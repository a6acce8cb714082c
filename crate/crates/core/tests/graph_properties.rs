mod common;

use proptest::prelude::*;
use totalchroma::format::{parse, serialize};
use totalchroma::Multigraph;

proptest! {
    #[test]
    fn degree_sum_is_twice_edge_count(g in common::multigraph(8, 20)) {
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
        prop_assert_eq!(g.max_degree(), common::max_degree(&g));
    }

    #[test]
    fn multiplicity_is_at_most_max_degree(g in common::multigraph(8, 20)) {
        prop_assert!(g.multiplicity() <= g.max_degree());
    }

    #[test]
    fn text_format_round_trips(g in common::multigraph(8, 20)) {
        prop_assert_eq!(parse(&serialize(&g)).unwrap(), g);
    }

    #[test]
    fn boundary_splits_edges(g in common::multigraph(8, 20), bits in any::<u8>()) {
        let n = g.vertex_count();
        let w: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
        let rest: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 0).collect();
        let boundary = g.boundary_edges(&w).unwrap();
        prop_assert_eq!(&boundary, &g.boundary_edges(&rest).unwrap());
        prop_assert_eq!(
            g.edges_within(&w).unwrap() + g.edges_within(&rest).unwrap() + boundary.len(),
            g.edge_count()
        );
        prop_assert_eq!(g.edges_between(&w, &rest).unwrap(), boundary);
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges(g in common::multigraph(8, 20), bits in any::<u8>()) {
        let w: Vec<usize> = (0..g.vertex_count()).filter(|&v| bits >> v & 1 == 1).collect();
        let sub = g.induced_subgraph(&w).unwrap();
        prop_assert_eq!(sub.graph.vertex_count(), w.len());
        prop_assert_eq!(sub.graph.edge_count(), g.edges_within(&w).unwrap());
        for (i, &(a, b)) in sub.graph.edges().iter().enumerate() {
            let (u, v) = g.endpoints(sub.edge_map[i]).unwrap();
            prop_assert_eq!((sub.vertex_map[a], sub.vertex_map[b]), (u, v));
        }
    }

    #[test]
    fn add_then_remove_is_identity(g in common::multigraph(8, 20), u in 0usize..8, off in 1usize..8) {
        let n = g.vertex_count();
        let (u, v) = (u % n, (u % n + off % (n - 1).max(1)) % n);
        prop_assume!(u != v);
        let bigger = g.with_edge(u, v).unwrap();
        prop_assert_eq!(bigger.edge_multiplicity(u, v).unwrap(), g.edge_multiplicity(u, v).unwrap() + 1);
        prop_assert_eq!(bigger.without_edge(g.edge_count()).unwrap(), g);
    }
}

#[test]
fn fixture_files_match_generators() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    for name in totalchroma::gen::FIXTURES {
        let text = std::fs::read_to_string(format!("{dir}/{name}.txt")).unwrap();
        assert_eq!(
            parse(&text).unwrap(),
            totalchroma::gen::fixture(name).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn empty_graph() {
    let g = Multigraph::empty(0);
    assert_eq!(parse(&serialize(&g)).unwrap(), g);
    assert_eq!(g.max_degree(), 0);
}
