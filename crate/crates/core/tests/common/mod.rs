//! Brute-force reference oracles and instance strategies shared by the
//! integration tests. Nothing here reuses the library's search code.

#![allow(dead_code)]

use num_rational::Ratio;
use proptest::prelude::*;
use totalchroma::Multigraph;

/// Any multigraph on up to `max_n` vertices with up to `max_m` edges.
pub fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 1..n), 0..=max_m).prop_map(move |raw| {
            let edges = raw.into_iter().map(|(u, off)| (u, (u + off) % n)).collect();
            Multigraph::new(n, edges).unwrap()
        })
    })
}

/// A heavy odd core (every pair repeated `lo..=hi` times) plus a few
/// arbitrary edges, on up to `max_n` vertices. Such graphs often satisfy
/// `chi' >= max(Delta + 2, n + 1)`.
pub fn heavy_core(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (3..=max_n, prop::bool::ANY).prop_flat_map(|(n, five)| {
        let core = if five && n >= 5 { 5 } else { 3 };
        let pairs = core * (core - 1) / 2;
        (
            prop::collection::vec(1usize..=4, pairs),
            prop::collection::vec((0..n, 1..n), 0..=6),
        )
            .prop_map(move |(mults, extra)| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..core {
                    for v in u + 1..core {
                        edges.extend(std::iter::repeat_n((u, v), mults[i]));
                        i += 1;
                    }
                }
                edges.extend(extra.into_iter().map(|(u, off)| (u, (u + off) % n)));
                Multigraph::new(n, edges).unwrap()
            })
    })
}

pub fn degrees(g: &Multigraph) -> Vec<usize> {
    let mut deg = vec![0; g.vertex_count()];
    for &(u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

pub fn max_degree(g: &Multigraph) -> usize {
    degrees(g).into_iter().max().unwrap_or(0)
}

/// Edges with both ends in the bitmask.
pub fn edges_in(g: &Multigraph, mask: u32) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .count()
}

/// Density by recounting every odd subset of size at least 3.
pub fn density(g: &Multigraph) -> Ratio<u64> {
    let n = g.vertex_count();
    let mut best = Ratio::from_integer(0u64);
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as u64;
        if size >= 3 && size % 2 == 1 {
            let r = Ratio::new(2 * edges_in(g, mask) as u64, size - 1);
            if r > best {
                best = r;
            }
        }
    }
    best
}

/// Plain backtracking over edges in id order, no heuristics.
pub fn edge_colorable(g: &Multigraph, k: usize) -> bool {
    fn go(g: &Multigraph, k: usize, i: usize, colors: &mut Vec<usize>) -> bool {
        if i == g.edge_count() {
            return true;
        }
        let (u, v) = g.edges()[i];
        for c in 1..=k {
            let clash = (0..i).any(|j| {
                let (a, b) = g.edges()[j];
                colors[j] == c && (a == u || a == v || b == u || b == v)
            });
            if !clash {
                colors[i] = c;
                if go(g, k, i + 1, colors) {
                    return true;
                }
            }
        }
        colors[i] = 0;
        false
    }
    go(g, k, 0, &mut vec![0; g.edge_count()])
}

pub fn chromatic_index(g: &Multigraph) -> usize {
    (0..).find(|&k| edge_colorable(g, k)).unwrap()
}

/// Plain backtracking over vertices then edges.
pub fn total_colorable(g: &Multigraph, k: usize) -> bool {
    let n = g.vertex_count();
    let elems = n + g.edge_count();
    let conflicts = |a: usize, b: usize| -> bool {
        match (a < n, b < n) {
            (true, true) => g.edges().iter().any(|&(u, v)| (u, v) == (a, b) || (v, u) == (a, b)),
            (true, false) => {
                let (u, v) = g.edges()[b - n];
                u == a || v == a
            }
            (false, true) => {
                let (u, v) = g.edges()[a - n];
                u == b || v == b
            }
            (false, false) => {
                let (u, v) = g.edges()[a - n];
                let (x, y) = g.edges()[b - n];
                u == x || u == y || v == x || v == y
            }
        }
    };
    fn go(i: usize, elems: usize, k: usize, colors: &mut Vec<usize>, conflicts: &dyn Fn(usize, usize) -> bool) -> bool {
        if i == elems {
            return true;
        }
        for c in 1..=k {
            if (0..i).all(|j| colors[j] != c || !conflicts(j, i)) {
                colors[i] = c;
                if go(i + 1, elems, k, colors, conflicts) {
                    return true;
                }
            }
        }
        false
    }
    go(0, elems, k, &mut vec![0; elems], &conflicts)
}

pub fn total_chromatic_number(g: &Multigraph) -> usize {
    (0..).find(|&k| total_colorable(g, k)).unwrap()
}
