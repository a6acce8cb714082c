//! Exact k-edge-colorability by peeling off one color class at a time.
//!
//! Parallel edges are interchangeable, so the search works on pair
//! multiplicities rather than edge ids. A coloring can always be rearranged
//! so that each class is a maximal matching of the edges not yet colored
//! (move any edge whose ends are both free into the class), and a vertex
//! whose residual degree equals the number of colors left must be covered
//! by every remaining class. Failed residual states are memoized, which also
//! absorbs the symmetry between color orders.

use std::collections::HashSet;

use crate::error::Result;
use crate::graph::Multigraph;
use crate::solver::Budget;

/// Largest vertex count for the odd-subset check at every node.
const SUBSET_CHECK_MAX_N: usize = 11;
const MEMO_CAP: usize = 1 << 21;

const UNDECIDED: u8 = 0;
const MATCHED: u8 = 1;
const SKIPPED: u8 = 2;

struct ClassSearch<'a> {
    n: usize,
    mult: Vec<u32>,
    deg: Vec<usize>,
    edges_left: usize,
    failed: HashSet<Vec<u32>>,
    classes: Vec<Vec<(usize, usize)>>,
    subset_edges: Vec<u32>,
    budget: &'a mut Budget,
}

impl<'a> ClassSearch<'a> {
    fn m(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    fn adjust(&mut self, u: usize, v: usize, add: bool) {
        let n = self.n;
        if add {
            self.mult[u * n + v] += 1;
            self.mult[v * n + u] += 1;
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.edges_left += 1;
        } else {
            self.mult[u * n + v] -= 1;
            self.mult[v * n + u] -= 1;
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            self.edges_left -= 1;
        }
    }

    fn key(&self, r: usize) -> Vec<u32> {
        let mut key = Vec::with_capacity(self.n * (self.n - 1) / 2 + 1);
        key.push(r as u32);
        for u in 0..self.n {
            key.extend_from_slice(&self.mult[u * self.n + u + 1..(u + 1) * self.n]);
        }
        key
    }

    /// Every odd set `S` needs `2|E(S)| <= r(|S| - 1)`.
    fn subsets_ok(&mut self, r: usize) -> bool {
        let n = self.n;
        self.subset_edges.resize(1 << n, 0);
        self.subset_edges[0] = 0;
        for s in 1usize..1 << n {
            let v = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let mut e = self.subset_edges[rest];
            let mut bits = rest;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                e += self.m(u, v);
                bits &= bits - 1;
            }
            self.subset_edges[s] = e;
            let size = s.count_ones() as usize;
            if size >= 3 && size % 2 == 1 && 2 * e as usize > r * (size - 1) {
                return false;
            }
        }
        true
    }

    fn solve(&mut self, r: usize) -> Result<bool> {
        if self.edges_left == 0 {
            return Ok(true);
        }
        if r == 0 || self.deg.iter().any(|&d| d > r) {
            return Ok(false);
        }
        let active = self.deg.iter().filter(|&&d| d > 0).count();
        if self.edges_left > r * (active / 2) {
            return Ok(false);
        }
        if self.n <= SUBSET_CHECK_MAX_N && !self.subsets_ok(r) {
            return Ok(false);
        }
        let key = self.key(r);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let min_size = self.edges_left.saturating_sub((r - 1) * (active / 2));
        let mut status = vec![UNDECIDED; self.n];
        let mut pairs = Vec::new();
        let found = self.build(r, min_size, &mut status, &mut pairs)?;
        if !found && self.failed.len() < MEMO_CAP {
            self.failed.insert(key);
        }
        Ok(found)
    }

    fn has_skipped_neighbor(&self, v: usize, status: &[u8]) -> bool {
        (0..self.n).any(|u| status[u] == SKIPPED && self.m(u, v) > 0)
    }

    fn build(&mut self, r: usize, min_size: usize, status: &mut [u8], pairs: &mut Vec<(usize, usize)>) -> Result<bool> {
        self.budget.tick()?;
        let open: Vec<usize> = (0..self.n)
            .filter(|&v| status[v] == UNDECIDED && self.deg[v] > 0)
            .collect();
        if pairs.len() + open.len() / 2 < min_size {
            return Ok(false);
        }
        let pick = open.iter().copied().max_by_key(|&v| {
            let forced = self.deg[v] == r || self.has_skipped_neighbor(v, status);
            (forced, self.deg[v], std::cmp::Reverse(v))
        });
        let Some(v) = pick else {
            for &(a, b) in pairs.iter() {
                self.adjust(a, b, false);
            }
            self.classes.push(pairs.clone());
            let ok = self.solve(r - 1)?;
            if !ok {
                self.classes.pop();
            }
            for &(a, b) in pairs.iter() {
                self.adjust(a, b, true);
            }
            return Ok(ok);
        };

        let mut partners: Vec<usize> = open.iter().copied().filter(|&w| w != v && self.m(v, w) > 0).collect();
        partners.sort_by_key(|&w| (std::cmp::Reverse(self.deg[w]), w));
        for w in partners {
            status[v] = MATCHED;
            status[w] = MATCHED;
            pairs.push((v.min(w), v.max(w)));
            let ok = self.build(r, min_size, status, pairs)?;
            pairs.pop();
            status[v] = UNDECIDED;
            status[w] = UNDECIDED;
            if ok {
                return Ok(true);
            }
        }
        if self.deg[v] < r && !self.has_skipped_neighbor(v, status) {
            status[v] = SKIPPED;
            let ok = self.build(r, min_size, status, pairs)?;
            status[v] = UNDECIDED;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// A proper `k`-edge-coloring (colors `1..=k`, indexed by edge id), or
/// `None` once the search space is exhausted.
pub(crate) fn color_edges(g: &Multigraph, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut mult = vec![0u32; n * n];
    for &(u, v) in g.edges() {
        mult[u * n + v] += 1;
        mult[v * n + u] += 1;
    }
    let mut search = ClassSearch {
        n,
        mult,
        deg: g.degrees(),
        edges_left: g.edge_count(),
        failed: HashSet::new(),
        classes: Vec::new(),
        subset_edges: Vec::new(),
        budget,
    };
    if !search.solve(k)? {
        return Ok(None);
    }

    let mut queues = vec![Vec::new(); n * n];
    for (id, &(u, v)) in g.edges().iter().enumerate().rev() {
        queues[u.min(v) * n + u.max(v)].push(id);
    }
    let mut colors = vec![0; g.edge_count()];
    for (c, class) in search.classes.iter().enumerate() {
        for &(u, v) in class {
            let id = queues[u * n + v].pop().expect("class uses an existing edge");
            colors[id] = c + 1;
        }
    }
    Ok(Some(colors))
}
