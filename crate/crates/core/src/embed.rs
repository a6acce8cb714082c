//! Embedding a multigraph into a k-dense supergraph.
//!
//! Given `G` with `chi'(G) = k >= max(Delta(G) + 2, n + 1)`, build `G' ⊇ G`
//! on an odd number of vertices with `2|E(G')| = k(|V(G')| - 1)`,
//! `Delta(G') <= k - 1` and `chi'(G') = k`. Additions are only accepted while
//! `Delta <= k - 1` and `rho <= k`, which together pin `chi'` at `k`.
//!
//! Construction, in order:
//! 1. pad to odd order with one isolated vertex;
//! 2. greedy saturation by smallest endpoint-degree sum;
//! 3. exchange moves `G - xy + xa + yb` on previously added edges `xy`;
//! 4. exact branch-and-bound for a maximum feasible supergraph on small `n`.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::config::Config;
use crate::density::{density, edge_keeps_density, is_k_dense, maximal_k_dense_subgraphs};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::oracles::chromatic_index;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeMove {
    pub removed: (usize, usize),
    pub added: [(usize, usize); 2],
}

/// How `chi'(G') = k` was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChiProvenance {
    /// Exact oracle run on `G'`.
    Exact,
    /// `G'` exceeded the oracle caps; `rho(G') = k` and `Delta(G') < k` certify it.
    ByDensity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub parity_vertex_added: bool,
    /// Edges of `G'` not in `G`, in `G'` id order (0-indexed endpoints).
    pub added_edges: Vec<(usize, usize)>,
    pub exchange_moves: Vec<ExchangeMove>,
    pub used_exact_fallback: bool,
    pub final_n: usize,
    pub final_m: usize,
    pub k: usize,
    pub dense_check: bool,
    pub chi_prime_check: bool,
    pub chi_prime_provenance: ChiProvenance,
}

/// Working supergraph: the original edges stay as an id prefix.
#[derive(Clone)]
struct Builder {
    n: usize,
    k: usize,
    base_m: usize,
    edges: Vec<(usize, usize)>,
    deg: Vec<usize>,
    mult: Vec<Vec<u64>>,
}

impl Builder {
    fn new(g: &Multigraph, k: usize) -> Self {
        let n = g.vertex_count();
        let mut b = Self {
            n,
            k,
            base_m: g.edge_count(),
            edges: Vec::new(),
            deg: vec![0; n],
            mult: vec![vec![0; n]; n],
        };
        for &(u, v) in g.edges() {
            b.push(u, v);
        }
        b
    }

    fn push(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.mult[u][v] += 1;
        self.mult[v][u] += 1;
        debug_assert!(self.n.is_multiple_of(2) || 2 * self.edges.len() <= self.k * (self.n - 1));
    }

    fn remove(&mut self, idx: usize) -> (usize, usize) {
        debug_assert!(idx >= self.base_m);
        let (u, v) = self.edges.remove(idx);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        self.mult[u][v] -= 1;
        self.mult[v][u] -= 1;
        (u, v)
    }

    fn pop(&mut self) {
        let last = self.edges.len() - 1;
        self.remove(last);
    }

    fn residual(&self, v: usize) -> usize {
        (self.k - 1).saturating_sub(self.deg[v])
    }

    fn feasible(&self, u: usize, v: usize) -> bool {
        u != v && self.residual(u) >= 1 && self.residual(v) >= 1 && edge_keeps_density(&self.mult, u, v, self.k)
    }

    fn try_push(&mut self, u: usize, v: usize) -> bool {
        if self.feasible(u, v) {
            self.push(u, v);
            true
        } else {
            false
        }
    }

    fn target(&self) -> usize {
        self.k * (self.n - 1) / 2
    }

    fn is_dense(&self) -> bool {
        self.n % 2 == 1 && self.n >= 3 && 2 * self.edges.len() == self.k * (self.n - 1)
    }

    fn graph(&self) -> Multigraph {
        Multigraph::new(self.n, self.edges.clone()).expect("builder keeps edges valid")
    }

    /// Adds feasible edges until none remains, smallest degree sum first.
    fn saturate(&mut self) {
        loop {
            let mut pairs: Vec<(usize, usize, usize)> = (0..self.n)
                .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
                .filter(|&(u, v)| self.residual(u) >= 1 && self.residual(v) >= 1)
                .map(|(u, v)| (self.deg[u] + self.deg[v], u, v))
                .collect();
            pairs.sort_unstable();
            match pairs.into_iter().find(|&(_, u, v)| self.feasible(u, v)) {
                Some((_, u, v)) => self.push(u, v),
                None => return,
            }
        }
    }

    /// One exchange `G - xy + xa + yb` that nets one extra edge, if any is feasible.
    fn exchange(&mut self, config: &Config) -> Result<Option<ExchangeMove>> {
        let dense = maximal_k_dense_subgraphs(&self.graph(), self.k, config)?;
        let mut in_dense = vec![false; self.n];
        for set in &dense {
            for &v in set {
                in_dense[v] = true;
            }
        }
        let deficient: Vec<usize> = (0..self.n).filter(|&v| self.deg[v] + 1 < self.k).collect();

        let mut candidates: Vec<(bool, usize)> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for idx in self.base_m..self.edges.len() {
            let (x, y) = self.edges[idx];
            if seen.insert((x.min(y), x.max(y))) {
                candidates.push((in_dense[x] || in_dense[y], idx));
            }
        }
        // edges clear of every maximal k-dense set first
        candidates.sort_unstable();

        for (_, idx) in candidates {
            let mut trial = self.clone();
            let (x, y) = trial.remove(idx);
            for &a in &deficient {
                for &b in &deficient {
                    if a == x || b == y {
                        continue;
                    }
                    if !trial.try_push(x, a) {
                        continue;
                    }
                    if trial.try_push(y, b) {
                        *self = trial;
                        return Ok(Some(ExchangeMove {
                            removed: (x, y),
                            added: [(x, a), (y, b)],
                        }));
                    }
                    trial.pop();
                }
            }
        }
        Ok(None)
    }
}

/// Exact search for a feasible supergraph with exactly the k-dense edge count.
struct Fallback {
    pairs: Vec<(usize, usize)>,
    /// Index of the last pair touching each vertex.
    last_touch: Vec<usize>,
    budget: u64,
    nodes: u64,
}

impl Fallback {
    fn new(n: usize, budget: u64) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut last_touch = vec![0; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            last_touch[u] = i;
            last_touch[v] = i;
        }
        Self {
            pairs,
            last_touch,
            budget,
            nodes: 0,
        }
    }

    fn search(&mut self, b: &mut Builder, idx: usize, needed: usize) -> Result<bool> {
        if needed == 0 {
            return Ok(true);
        }
        if idx == self.pairs.len() {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let capacity: usize = (0..b.n)
            .filter(|&w| self.last_touch[w] >= idx)
            .map(|w| b.residual(w))
            .sum();
        if capacity < 2 * needed {
            return Ok(false);
        }
        let (u, v) = self.pairs[idx];
        let mut added = 0;
        while added < needed && b.try_push(u, v) {
            added += 1;
        }
        loop {
            if self.search(b, idx + 1, needed - added)? {
                return Ok(true);
            }
            if added == 0 {
                return Ok(false);
            }
            b.pop();
            added -= 1;
        }
    }
}

/// Whether adding one `u`-`v` edge keeps `Delta <= k - 1` and `rho <= k`.
pub fn can_add_edge(g: &Multigraph, u: usize, v: usize, k: usize, config: &Config) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::LoopRequested { vertex: u });
    }
    let h = g.with_edge(u, v)?;
    if h.max_degree() + 1 > k {
        return Ok(false);
    }
    let rho = density(&h, config)?;
    Ok(rho.value <= num_rational::Ratio::from_integer(k as u64))
}

/// Embeds `g` into a k-dense supergraph. When `g` fits the oracle caps,
/// `chi'(g) = k` is recomputed first.
pub fn embed_k_dense(g: &Multigraph, k: usize, config: &Config) -> Result<(Multigraph, EmbeddingReport)> {
    if g.edge_count() <= config.chi_max_edges {
        let found = chromatic_index(g, config)?.k;
        if found != k {
            return Err(Error::ChromaticIndexMismatch { expected: k, found });
        }
    }
    let (graph, report, _) = embed_trusted(g, k, config)?;
    Ok((graph, report))
}

/// Embedding with `chi'(g) = k` taken on trust. Also returns the oracle's
/// k-edge-coloring of `G'` when it was computed.
pub(crate) fn embed_trusted(
    g: &Multigraph,
    k: usize,
    config: &Config,
) -> Result<(Multigraph, EmbeddingReport, Option<EdgeColoring>)> {
    let n = g.vertex_count();
    let delta = g.max_degree();
    if k < delta + 2 || k < n + 1 {
        return Err(Error::HypothesisNotMet {
            chi_prime: k,
            delta_plus_2: delta + 2,
            n_plus_1: n + 1,
        });
    }
    let rho = density(g, config)?;
    if rho.value > num_rational::Ratio::from_integer(k as u64) {
        return Err(Error::ChromaticIndexMismatch {
            expected: k,
            found: rho.ceil(),
        });
    }

    let parity_vertex_added = n.is_multiple_of(2);
    let start = if parity_vertex_added {
        g.with_isolated_vertices(1)
    } else {
        g.clone()
    };
    let mut builder = Builder::new(&start, k);
    let mut exchange_moves = Vec::new();

    builder.saturate();
    if config.embed_exchange {
        while !builder.is_dense() {
            match builder.exchange(config)? {
                Some(mv) => {
                    exchange_moves.push(mv);
                    builder.saturate();
                }
                None => break,
            }
        }
    }

    let mut used_exact_fallback = false;
    if !builder.is_dense() && config.embed_exact_fallback && builder.n <= config.embed_exact_max_n {
        used_exact_fallback = true;
        exchange_moves.clear();
        let mut fresh = Builder::new(&start, k);
        let needed = fresh.target() - fresh.edges.len();
        let mut fallback = Fallback::new(fresh.n, config.search_budget);
        if fallback.search(&mut fresh, 0, needed)? {
            builder = fresh;
        }
    }

    if !builder.is_dense() {
        return Err(Error::SaturationWithoutDensity {
            k,
            m: builder.edges.len(),
            target: builder.target(),
            graph: Box::new(builder.graph()),
        });
    }

    let embedded = builder.graph();
    certify(g, &embedded, k, config)?;
    let (chi_prime_provenance, coloring) = if embedded.edge_count() <= config.chi_max_edges {
        let cert = chromatic_index(&embedded, config)?;
        if cert.k != k {
            return Err(Error::ChromaticIndexMismatch {
                expected: k,
                found: cert.k,
            });
        }
        (ChiProvenance::Exact, Some(cert.witness))
    } else {
        (ChiProvenance::ByDensity, None)
    };

    let report = EmbeddingReport {
        parity_vertex_added,
        added_edges: embedded.edges()[g.edge_count()..].to_vec(),
        exchange_moves,
        used_exact_fallback,
        final_n: embedded.vertex_count(),
        final_m: embedded.edge_count(),
        k,
        dense_check: true,
        chi_prime_check: true,
        chi_prime_provenance,
    };
    Ok((embedded, report, coloring))
}

/// Re-checks the embedding guarantees independently of the builder.
fn certify(g: &Multigraph, embedded: &Multigraph, k: usize, config: &Config) -> Result<()> {
    let all: Vec<usize> = (0..embedded.vertex_count()).collect();
    if !is_k_dense(embedded, &all, k)? {
        return Err(Error::GuaranteeViolated("embedding is not k-dense".into()));
    }
    if embedded.max_degree() + 1 > k {
        return Err(Error::GuaranteeViolated(format!(
            "embedding has maximum degree {} >= k = {k}",
            embedded.max_degree()
        )));
    }
    if embedded.edges()[..g.edge_count()] != *g.edges() {
        return Err(Error::GuaranteeViolated("original edge ids were not preserved".into()));
    }
    if embedded.vertex_count() <= config.density_max_n {
        let rho = density(embedded, config)?;
        if rho.value != num_rational::Ratio::from_integer(k as u64) {
            return Err(Error::GuaranteeViolated(format!(
                "embedding has density {} instead of {k}",
                rho.value
            )));
        }
    }
    Ok(())
}

/// Vertices of degree below `k - 1` are either at most one, or all inside a
/// single k-dense set.
pub fn deficient_vertices_covered(g: &Multigraph, k: usize, config: &Config) -> Result<bool> {
    let deficient: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.degree(v).map(|d| d + 1 < k).unwrap_or(false))
        .collect();
    if deficient.len() <= 1 {
        return Ok(true);
    }
    Ok(maximal_k_dense_subgraphs(g, k, config)?
        .iter()
        .any(|set| deficient.iter().all(|v| set.binary_search(v).is_ok())))
}
