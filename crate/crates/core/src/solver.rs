//! Exact k-colorability of a conflict graph by backtracking.
//!
//! Elements are either edges (conflict = shared endpoint) or vertices plus
//! edges (conflict = adjacency or incidence). The search picks the most
//! saturated uncolored element, breaks color symmetry by never opening more
//! than one fresh color per level, and prunes with a per-clique Hall count.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub(crate) struct ConflictGraph {
    neighbors: Vec<Vec<usize>>,
    cliques: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

impl ConflictGraph {
    fn build(neighbors: Vec<Vec<usize>>, cliques: Vec<Vec<usize>>, priority: Vec<usize>) -> Self {
        let mut neighbors = neighbors;
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
        }
        let mut order: Vec<usize> = (0..neighbors.len()).collect();
        order.sort_by_key(|&e| (std::cmp::Reverse(priority[e]), e));
        let mut rank = vec![0; order.len()];
        for (r, &e) in order.iter().enumerate() {
            rank[e] = r;
        }
        Self {
            neighbors,
            cliques,
            rank,
        }
    }

    /// Edge `i` is element `i`. Static order: decreasing endpoint-degree sum.
    /// Used only to cross-check the color-class search.
    #[cfg(test)]
    pub(crate) fn for_edges(g: &Multigraph) -> Self {
        let deg = g.degrees();
        let cliques: Vec<Vec<usize>> = (0..g.vertex_count())
            .map(|v| g.incident_edges(v).expect("vertex in range").to_vec())
            .collect();
        let mut neighbors = vec![Vec::new(); g.edge_count()];
        for clique in &cliques {
            for &a in clique {
                neighbors[a].extend(clique.iter().copied().filter(|&b| b != a));
            }
        }
        let priority = g.edges().iter().map(|&(u, v)| deg[u] + deg[v]).collect();
        Self::build(neighbors, cliques, priority)
    }

    /// Vertex `v` is element `v`, edge `i` is element `n + i`.
    pub(crate) fn for_total(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let deg = g.degrees();
        let mut neighbors = vec![Vec::new(); n + g.edge_count()];
        let mut cliques = Vec::with_capacity(n);
        for v in 0..n {
            let mut clique = vec![v];
            clique.extend(g.incident_edges(v).expect("vertex in range").iter().map(|&e| n + e));
            for &a in &clique {
                neighbors[a].extend(clique.iter().copied().filter(|&b| b != a));
            }
            cliques.push(clique);
        }
        for &(u, v) in g.edges() {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        let mut priority: Vec<usize> = deg.clone();
        priority.extend(g.edges().iter().map(|&(u, v)| deg[u] + deg[v]));
        Self::build(neighbors, cliques, priority)
    }

    pub(crate) fn len(&self) -> usize {
        self.neighbors.len()
    }
}

/// Shared node counter; exceeding `limit` aborts the search.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    pub limit: u64,
    pub used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

struct Search<'a> {
    cg: &'a ConflictGraph,
    k: usize,
    palette: u64,
    color: Vec<usize>,
    /// `counts[e * k + c - 1]`: colored neighbors of `e` with color `c`.
    counts: Vec<u32>,
    forbidden: Vec<u64>,
    uncolored_degree: Vec<usize>,
    budget: &'a mut Budget,
}

impl<'a> Search<'a> {
    fn select(&self) -> Option<usize> {
        (0..self.cg.len()).filter(|&e| self.color[e] == 0).max_by_key(|&e| {
            (
                (self.forbidden[e] & self.palette).count_ones(),
                self.uncolored_degree[e],
                std::cmp::Reverse(self.cg.rank[e]),
            )
        })
    }

    fn assign(&mut self, e: usize, c: usize) -> bool {
        self.color[e] = c;
        let mut alive = true;
        for &nb in &self.cg.neighbors[e] {
            self.uncolored_degree[nb] -= 1;
            let slot = &mut self.counts[nb * self.k + c - 1];
            *slot += 1;
            if *slot == 1 {
                self.forbidden[nb] |= 1 << (c - 1);
                if self.color[nb] == 0 && self.forbidden[nb] & self.palette == self.palette {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, e: usize, c: usize) {
        self.color[e] = 0;
        for &nb in &self.cg.neighbors[e] {
            self.uncolored_degree[nb] += 1;
            let slot = &mut self.counts[nb * self.k + c - 1];
            *slot -= 1;
            if *slot == 0 {
                self.forbidden[nb] &= !(1 << (c - 1));
            }
        }
    }

    /// Uncolored members of each clique need distinct colors from their free sets.
    fn hall_ok(&self) -> bool {
        self.cg.cliques.iter().all(|clique| {
            let mut free = 0u64;
            let mut open = 0u32;
            for &e in clique {
                if self.color[e] == 0 {
                    open += 1;
                    free |= self.palette & !self.forbidden[e];
                }
            }
            free.count_ones() >= open
        })
    }

    fn solve(&mut self, max_used: usize) -> Result<bool> {
        let Some(e) = self.select() else {
            return Ok(true);
        };
        let top = (max_used + 1).min(self.k);
        let allowed = self.palette & !self.forbidden[e];
        for c in 1..=top {
            if allowed & (1 << (c - 1)) == 0 {
                continue;
            }
            self.budget.tick()?;
            if self.assign(e, c) && self.hall_ok() && self.solve(max_used.max(c))? {
                return Ok(true);
            }
            self.unassign(e, c);
        }
        Ok(false)
    }
}

/// A proper `k`-coloring of the conflict graph (colors `1..=k`, indexed by
/// element), or `None` after the search space is exhausted.
pub(crate) fn color_conflict_graph(cg: &ConflictGraph, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    let len = cg.len();
    if len == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    debug_assert!(k <= 64);
    let mut search = Search {
        cg,
        k,
        palette: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
        color: vec![0; len],
        counts: vec![0; len * k],
        forbidden: vec![0; len],
        uncolored_degree: cg.neighbors.iter().map(Vec::len).collect(),
        budget,
    };
    if !search.hall_ok() {
        return Ok(None);
    }
    if search.solve(0)? {
        Ok(Some(search.color))
    } else {
        Ok(None)
    }
}
