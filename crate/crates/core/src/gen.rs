//! Instance generators and the named fixture corpus.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Odd cycle on `n` vertices with every cycle edge repeated `mult` times.
pub fn fat_cycle(n: usize, mult: usize) -> Result<Multigraph> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!("fat cycle needs an odd length >= 3, got {n}")));
    }
    if mult == 0 {
        return Err(Error::invalid("fat cycle multiplicity must be at least 1"));
    }
    let edges = (0..n)
        .flat_map(|i| std::iter::repeat_n((i, (i + 1) % n), mult))
        .collect();
    Multigraph::new(n, edges)
}

/// Any cycle, odd or even, with simple edges.
pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs length >= 3, got {n}")));
    }
    Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn complete(n: usize) -> Multigraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Multigraph::new(n, edges).expect("complete graph is valid")
}

/// A multigraph with `m` edges, each vertex pair holding at most `mult_cap`
/// of them. Every pair owns `mult_cap` slots and `m` distinct slots are
/// drawn uniformly; edges are listed in lexicographic pair order.
/// Deterministic for a fixed seed.
pub fn random_multigraph(n: usize, m: usize, mult_cap: usize, seed: u64) -> Result<Multigraph> {
    if mult_cap == 0 {
        return Err(Error::invalid("multiplicity cap must be at least 1"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let slots = pairs.len() * mult_cap;
    if m > slots {
        return Err(Error::invalid(format!(
            "{m} edges do not fit on {n} vertices with multiplicity cap {mult_cap}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = sample(&mut rng, slots, m).into_vec();
    chosen.sort_unstable();
    Multigraph::new(n, chosen.into_iter().map(|s| pairs[s / mult_cap]).collect())
}

/// Every multigraph on `n` vertices with at most `max_m` edges and per-pair
/// multiplicity at most `mult_cap`, one per multiplicity vector (no
/// isomorphism reduction).
pub fn enumerate_multigraphs(n: usize, max_m: usize, mult_cap: usize) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut counts = vec![0usize; pairs.len()];
    fn walk(
        idx: usize,
        left: usize,
        cap: usize,
        n: usize,
        pairs: &[(usize, usize)],
        counts: &mut Vec<usize>,
        out: &mut Vec<Multigraph>,
    ) {
        if idx == pairs.len() {
            let edges = pairs
                .iter()
                .zip(counts.iter())
                .flat_map(|(&p, &c)| std::iter::repeat_n(p, c))
                .collect();
            out.push(Multigraph::new(n, edges).expect("generated pairs are valid"));
            return;
        }
        for c in 0..=cap.min(left) {
            counts[idx] = c;
            walk(idx + 1, left - c, cap, n, pairs, counts, out);
        }
        counts[idx] = 0;
    }
    walk(0, max_m, mult_cap, n, &pairs, &mut counts, &mut out);
    out
}

/// Names accepted by [`fixture`].
pub const FIXTURES: &[&str] = &[
    "K2", "K3", "K4", "C5", "C6", "T2", "fatC3-3", "fatC5-3", "fatC5-4", "T2-K1", "T2-2K1", "2T2",
];

/// The named fixture corpus. `T2` is the fat triangle (each pair doubled),
/// `fatCn-m` a fat n-cycle of multiplicity m, `-K1` / `-2K1` suffixes add
/// isolated vertices, and `2T2` is two disjoint fat triangles.
pub fn fixture(name: &str) -> Result<Multigraph> {
    let t2 = || fat_cycle(3, 2);
    match name {
        "K2" => Ok(complete(2)),
        "K3" => Ok(complete(3)),
        "K4" => Ok(complete(4)),
        "C5" => cycle(5),
        "C6" => cycle(6),
        "T2" => t2(),
        "fatC3-3" => fat_cycle(3, 3),
        "fatC5-3" => fat_cycle(5, 3),
        "fatC5-4" => fat_cycle(5, 4),
        "T2-K1" => Ok(t2()?.with_isolated_vertices(1)),
        "T2-2K1" => Ok(t2()?.with_isolated_vertices(2)),
        "2T2" => {
            let t = t2()?;
            Ok(t.disjoint_union(&t))
        }
        other => Err(Error::invalid(format!(
            "unknown fixture `{other}` (known: {})",
            FIXTURES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fat_cycles() {
        let t2 = fat_cycle(3, 2).unwrap();
        assert_eq!((t2.vertex_count(), t2.edge_count(), t2.max_degree()), (3, 6, 4));
        let f = fat_cycle(5, 4).unwrap();
        assert_eq!((f.vertex_count(), f.edge_count(), f.max_degree()), (5, 20, 8));
        assert_eq!(fat_cycle(5, 1).unwrap(), cycle(5).unwrap());
        assert!(fat_cycle(4, 2).is_err());
        assert!(fat_cycle(1, 2).is_err());
        assert!(fat_cycle(3, 0).is_err());
    }

    #[test]
    fn random_graphs() {
        let g = random_multigraph(4, 0, 1, 7).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 0));

        let forced = random_multigraph(2, 3, 3, 99).unwrap();
        assert_eq!(forced.edges(), &[(0, 1), (0, 1), (0, 1)]);

        let a = random_multigraph(5, 8, 2, 42).unwrap();
        let b = random_multigraph(5, 8, 2, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 8);
        assert!(a.multiplicity() <= 2);

        assert!(random_multigraph(3, 4, 1, 0).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // 3 pairs, each 0..=2, total <= 6: all 27 vectors.
        assert_eq!(enumerate_multigraphs(3, 6, 2).len(), 27);
        // total <= 1 over 3 pairs: empty + 3 singles.
        assert_eq!(enumerate_multigraphs(3, 1, 3).len(), 4);
        assert_eq!(enumerate_multigraphs(1, 5, 3).len(), 1);
    }

    #[test]
    fn fixtures_resolve() {
        for name in FIXTURES {
            fixture(name).unwrap();
        }
        assert!(fixture("nope").is_err());
        let two = fixture("2T2").unwrap();
        assert_eq!((two.vertex_count(), two.edge_count()), (6, 12));
    }
}
