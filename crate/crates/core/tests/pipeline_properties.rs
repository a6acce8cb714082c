mod common;

use num_rational::Ratio;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use totalchroma::*;

fn cfg() -> Config {
    Config::default()
}

fn in_hypothesis(g: &Multigraph) -> Option<usize> {
    let k = match chromatic_index(g, &cfg()) {
        Ok(cert) => cert.k,
        Err(Error::TooLarge { .. }) => return None,
        Err(e) => panic!("{e}"),
    };
    (k >= g.max_degree() + 2 && k > g.vertex_count()).then_some(k)
}

fn shuffled_palette(k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=k).collect();
    perm.shuffle(rng);
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn missing_colors_count(g in common::multigraph(6, 12)) {
        let cert = chromatic_index(&g, &cfg()).unwrap();
        let colored = ColoredGraph::new(&g, &cert.witness).unwrap();
        for v in 0..g.vertex_count() {
            let missing = colored.missing_colors(v).unwrap();
            prop_assert_eq!(missing.len(), cert.k - g.degree(v).unwrap());
            prop_assert!(missing.intersection(colored.present_colors(v).unwrap()).is_empty());
        }
    }

    #[test]
    fn set_properties_survive_permutation(g in common::multigraph(6, 12), bits in any::<u8>(), seed in any::<u64>()) {
        let cert = chromatic_index(&g, &cfg()).unwrap();
        prop_assume!(cert.k > 0);
        let w: Vec<usize> = (0..g.vertex_count()).filter(|&v| bits >> v & 1 == 1).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = cert.witness.permuted(&shuffled_palette(cert.k, &mut rng)).unwrap();
        prop_assert!(is_proper_edge_coloring(&g, &phi));
        let a = ColoredGraph::new(&g, &cert.witness).unwrap();
        let b = ColoredGraph::new(&g, &phi).unwrap();
        prop_assert_eq!(a.is_elementary(&w).unwrap(), b.is_elementary(&w).unwrap());
        prop_assert_eq!(a.is_closed(&w).unwrap(), b.is_closed(&w).unwrap());
        prop_assert_eq!(a.is_strongly_closed(&w).unwrap(), b.is_strongly_closed(&w).unwrap());
    }

    #[test]
    fn embedding_invariants(g in common::heavy_core(7)) {
        let Some(k) = in_hypothesis(&g) else { return Ok(()) };
        let (big, report) = embed_k_dense(&g, k, &cfg()).unwrap();
        let n = big.vertex_count();
        prop_assert!(n % 2 == 1);
        prop_assert_eq!(2 * big.edge_count(), k * (n - 1));
        prop_assert!(report.dense_check && report.chi_prime_check);
        prop_assert_eq!(report.parity_vertex_added, g.vertex_count() % 2 == 0);
        prop_assert_eq!(n, g.vertex_count() + report.parity_vertex_added as usize);
        prop_assert_eq!(&big.edges()[..g.edge_count()], g.edges());
        prop_assert_eq!(&big.edges()[g.edge_count()..], &report.added_edges[..]);
        prop_assert!(common::max_degree(&big) < k);
        prop_assert_eq!(common::density(&big), Ratio::from_integer(k as u64));
        prop_assert!(deficient_vertices_covered(&big, k, &cfg()).unwrap());
        prop_assert_eq!(embed_k_dense(&g, k, &cfg()).unwrap(), (big, report));
    }

    #[test]
    fn totalize_is_sound(g in common::heavy_core(7)) {
        let Some(k) = in_hypothesis(&g) else { return Ok(()) };
        let (cert, witness) = totalize_with_witness(&g, &cfg()).unwrap();
        prop_assert_eq!(cert.k, k);
        prop_assert!(cert.pipeline.verified);
        prop_assert!(is_proper_total_coloring(&g, &cert.coloring));
        prop_assert_eq!(cert.coloring.edge_colors(), &witness.edge_coloring.colors()[..g.edge_count()]);
        let colored = ColoredGraph::new(&witness.embedded, &witness.edge_coloring).unwrap();
        for v in 0..g.vertex_count() {
            let missing = colored.missing_colors(v).unwrap();
            prop_assert_eq!(Some(cert.coloring.vertex_colors()[v]), missing.min());
        }
        if g.vertex_count() + g.edge_count() <= cfg().total_max_elements {
            prop_assert_eq!(total_chromatic_number(&g, &cfg()).unwrap().k, k);
        }
    }

    #[test]
    fn extension_commutes_with_permutation(g in common::heavy_core(7), seed in any::<u64>()) {
        let Some(k) = in_hypothesis(&g) else { return Ok(()) };
        let (_, witness) = totalize_with_witness(&g, &cfg()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perm = shuffled_palette(k, &mut rng);
        let phi = witness.edge_coloring.permuted(&perm).unwrap();
        let psi = extend_to_total(&witness.embedded, &phi, k).unwrap();
        let base = extend_to_total(&witness.embedded, &witness.edge_coloring, k).unwrap();
        let expected = base.permuted(&perm).unwrap();
        prop_assert_eq!(psi.edge_colors(), expected.edge_colors());
        prop_assert!(is_proper_total_coloring(&witness.embedded, &psi));
        // vertex colors may differ (min of a permuted set), but stay in the missing set
        let colored = ColoredGraph::new(&witness.embedded, &phi).unwrap();
        for v in 0..witness.embedded.vertex_count() {
            prop_assert!(colored.missing_colors(v).unwrap().contains(psi.vertex_colors()[v]));
        }
    }

    #[test]
    fn restriction_keeps_surviving_colors(g in common::heavy_core(7)) {
        let Some(_) = in_hypothesis(&g) else { return Ok(()) };
        let (_, witness) = totalize_with_witness(&g, &cfg()).unwrap();
        let k = witness.edge_coloring.k();
        let psi = extend_to_total(&witness.embedded, &witness.edge_coloring, k).unwrap();
        let small = restrict_total(&psi, &witness.embedded, &g).unwrap();
        prop_assert_eq!(small.edge_colors(), &psi.edge_colors()[..g.edge_count()]);
        prop_assert_eq!(small.vertex_colors(), &psi.vertex_colors()[..g.vertex_count()]);
    }
}

/// With every vertex of degree k - 1 the missing color is unique, so the
/// extension commutes with any relabeling of the palette.
#[test]
fn extension_equivariance_with_unique_missing_colors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in [gen::complete(5), gen::fat_cycle(5, 2).unwrap(), gen::complete(3)] {
        let k = g.vertex_count();
        let phi = chromatic_index(&g, &cfg()).unwrap().witness;
        assert_eq!(phi.k(), k);
        let psi = extend_to_total(&g, &phi, k).unwrap();
        for _ in 0..20 {
            let perm = shuffled_palette(k, &mut rng);
            let lhs = extend_to_total(&g, &phi.permuted(&perm).unwrap(), k).unwrap();
            assert_eq!(lhs, psi.permuted(&perm).unwrap());
        }
    }
}
