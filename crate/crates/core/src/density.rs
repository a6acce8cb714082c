//! Odd-subset density and k-dense vertex sets.
//!
//! `rho(G) = max 2|E(G[S])| / (|S| - 1)` over odd `S` with `|S| >= 3`. All
//! enumeration here is exact; vertex sets are bitmasks internally, so the
//! vertex count is bounded by both the configured cap and 63.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

const MASK_LIMIT: usize = 63;

/// The density of a graph and the lexicographically smallest odd vertex
/// set attaining it. The witness is absent exactly when the value is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityWitness {
    pub value: Ratio<u64>,
    pub witness: Option<Vec<usize>>,
}

impl DensityWitness {
    pub fn ceil(&self) -> usize {
        self.value.ceil().to_integer() as usize
    }
}

impl Serialize for DensityWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            value: String,
            numerator: u64,
            denominator: u64,
            ceil: usize,
            witness: &'a Option<Vec<usize>>,
        }
        Doc {
            value: format!("{}", self.value),
            numerator: *self.value.numer(),
            denominator: *self.value.denom(),
            ceil: self.ceil(),
            witness: &self.witness,
        }
        .serialize(s)
    }
}

fn check_cap(g: &Multigraph, config: &Config) -> Result<()> {
    let cap = config.density_max_n.min(MASK_LIMIT);
    if g.vertex_count() > cap {
        Err(Error::TooLarge {
            what: "vertex count",
            size: g.vertex_count(),
            cap,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1 << i) != 0).collect()
}

pub(crate) fn multiplicities(g: &Multigraph) -> Vec<Vec<u64>> {
    g.multiplicity_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as u64).collect())
        .collect()
}

/// `a/b > c/d` for nonnegative fractions with positive denominators.
fn greater(a: u64, b: u64, c: u64, d: u64) -> bool {
    a as u128 * d as u128 > c as u128 * b as u128
}

struct DensitySearch {
    n: usize,
    mult: Vec<Vec<u64>>,
    /// `suffix[s][a]`: edges from `a` to vertices with index `>= s`.
    suffix: Vec<Vec<u64>>,
    to_members: Vec<u64>,
    members: Vec<usize>,
    best: (u64, u64),
    best_set: Option<Vec<usize>>,
}

impl DensitySearch {
    fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mult = multiplicities(g);
        let mut suffix = vec![vec![0; n]; n + 1];
        for s in (0..n).rev() {
            for a in 0..n {
                suffix[s][a] = suffix[s + 1][a] + mult[a][s];
            }
        }
        Self {
            n,
            mult,
            suffix,
            to_members: vec![0; n],
            members: Vec::new(),
            best: (0, 1),
            best_set: None,
        }
    }

    /// Could some odd superset built from `members` plus vertices `>= next`
    /// strictly beat the incumbent?
    fn promising(&self, twice_edges: u64, next: usize) -> bool {
        let mut weights: Vec<u64> = (next..self.n)
            .map(|a| 2 * self.to_members[a] + self.suffix[next][a])
            .collect();
        weights.sort_unstable_by(|x, y| y.cmp(x));
        let size = self.members.len();
        let mut total = twice_edges;
        for (t, w) in weights.into_iter().enumerate() {
            total += w;
            let final_size = size + t + 1;
            if final_size % 2 == 1 && final_size >= 3 && greater(total, final_size as u64 - 1, self.best.0, self.best.1)
            {
                return true;
            }
        }
        false
    }

    fn run(&mut self, next: usize, twice_edges: u64) {
        for v in next..self.n {
            let add = 2 * self.to_members[v];
            let e2 = twice_edges + add;
            self.members.push(v);
            for a in 0..self.n {
                self.to_members[a] += self.mult[v][a];
            }
            let size = self.members.len();
            if size % 2 == 1 && size >= 3 && greater(e2, size as u64 - 1, self.best.0, self.best.1) {
                self.best = (e2, size as u64 - 1);
                self.best_set = Some(self.members.clone());
            }
            if self.promising(e2, v + 1) {
                self.run(v + 1, e2);
            }
            for a in 0..self.n {
                self.to_members[a] -= self.mult[v][a];
            }
            self.members.pop();
        }
    }
}

/// Exact density with the lexicographically smallest maximizing witness.
pub fn density(g: &Multigraph, config: &Config) -> Result<DensityWitness> {
    check_cap(g, config)?;
    let mut search = DensitySearch::new(g);
    search.run(0, 0);
    Ok(DensityWitness {
        value: Ratio::new(search.best.0, search.best.1),
        witness: search.best_set,
    })
}

/// Whether `G[s]` has odd order at least 3 and exactly `k(|s| - 1) / 2` edges.
pub fn is_k_dense(g: &Multigraph, s: &[usize], k: usize) -> Result<bool> {
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    let edges = g.edges_within(&set)?;
    let size = set.len();
    Ok(size % 2 == 1 && size >= 3 && 2 * edges == k * (size - 1))
}

/// Every k-dense vertex set, as bitmasks, in enumeration order.
fn k_dense_masks(g: &Multigraph, k: usize) -> Vec<u64> {
    fn walk(mult: &[Vec<u64>], k: u64, next: usize, mask: u64, size: u64, edges: u64, out: &mut Vec<u64>) {
        for v in next..mult.len() {
            let add: u64 = (0..v).filter(|&u| mask & (1 << u) != 0).map(|u| mult[v][u]).sum();
            let (m2, s2, e2) = (mask | 1 << v, size + 1, edges + add);
            if s2 % 2 == 1 && s2 >= 3 && 2 * e2 == k * (s2 - 1) {
                out.push(m2);
            }
            walk(mult, k, v + 1, m2, s2, e2, out);
        }
    }
    let mut out = Vec::new();
    walk(&multiplicities(g), k as u64, 0, 0, 0, 0, &mut out);
    out
}

/// Inclusion-maximal k-dense vertex sets, sorted lexicographically.
pub fn maximal_k_dense_subgraphs(g: &Multigraph, k: usize, config: &Config) -> Result<Vec<Vec<usize>>> {
    check_cap(g, config)?;
    let all = k_dense_masks(g, k);
    let mut maximal: Vec<Vec<usize>> = all
        .iter()
        .filter(|&&a| !all.iter().any(|&b| b != a && a & b == a))
        .map(|&m| mask_to_vec(m))
        .collect();
    maximal.sort();
    Ok(maximal)
}

/// Whether adding one `u`-`v` edge keeps every odd set through both ends at
/// ratio `<= k`. Sets missing `u` or `v` are unaffected, so if `rho(G) <= k`
/// this decides `rho(G + uv) <= k`.
pub(crate) fn edge_keeps_density(mult: &[Vec<u64>], u: usize, v: usize, k: usize) -> bool {
    let n = mult.len();
    let k = k as i64;
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let mut to_members: Vec<i64> = (0..n).map(|a| (mult[a][u] + mult[a][v]) as i64).collect();
    // excess(S) = 2(e(S) + 1) - k(|S| - 1), starting from S = {u, v}.
    let start = 2 * (mult[u][v] as i64 + 1) - k;

    fn exceeds(
        mult: &[Vec<u64>],
        others: &[usize],
        idx: usize,
        size: usize,
        excess: i64,
        k: i64,
        to_members: &mut [i64],
    ) -> bool {
        if size % 2 == 1 && excess > 0 {
            return true;
        }
        // Each extra vertex a changes the excess by at most 2 e(a, S) + e(a, rest) - k.
        let mut optimistic = excess;
        for (j, &a) in others[idx..].iter().enumerate() {
            let rest: i64 = others[idx + j + 1..].iter().map(|&b| mult[a][b] as i64).sum::<i64>()
                + others[idx..idx + j].iter().map(|&b| mult[a][b] as i64).sum::<i64>();
            let gain = 2 * to_members[a] + rest - k;
            if gain > 0 {
                optimistic += gain;
            }
        }
        if optimistic <= 0 {
            return false;
        }
        for j in idx..others.len() {
            let a = others[j];
            let delta = 2 * to_members[a] - k;
            for x in 0..mult.len() {
                to_members[x] += mult[a][x] as i64;
            }
            let hit = exceeds(mult, others, j + 1, size + 1, excess + delta, k, to_members);
            for x in 0..mult.len() {
                to_members[x] -= mult[a][x] as i64;
            }
            if hit {
                return true;
            }
        }
        false
    }

    !exceeds(mult, &others, 0, 2, start, k, &mut to_members)
}
