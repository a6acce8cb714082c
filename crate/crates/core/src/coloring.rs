//! Edge and total colorings, the present/missing color calculus, and the
//! elementary / closed / strongly closed set predicates.
//!
//! Colors are `1..=k`. A [`ColoredGraph`] pairs a graph with an edge
//! coloring; building one with [`ColoredGraph::new`] checks properness
//! first, while [`ColoredGraph::trusted`] only checks shape.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest palette representable by [`ColorSet`].
pub const PALETTE_CAP: usize = 64;

/// A subset of `1..=PALETTE_CAP`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn palette(k: usize) -> ColorSet {
        debug_assert!(k <= PALETTE_CAP);
        if k == PALETTE_CAP {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << k) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> ColorSet {
        ColorSet(bits)
    }

    pub fn insert(&mut self, color: usize) {
        debug_assert!((1..=PALETTE_CAP).contains(&color));
        self.0 |= 1 << (color - 1);
    }

    pub fn contains(self, color: usize) -> bool {
        (1..=PALETTE_CAP).contains(&color) && self.0 & (1 << (color - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(c + 1)
        })
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = ColorSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

fn check_palette(k: usize) -> Result<()> {
    if k > PALETTE_CAP {
        Err(Error::PaletteTooLarge { k, cap: PALETTE_CAP })
    } else {
        Ok(())
    }
}

fn check_colors(k: usize, colors: &[usize], kind: &str) -> Result<()> {
    for (i, &c) in colors.iter().enumerate() {
        if c == 0 || c > k {
            return Err(Error::ColorOutOfRange {
                element: format!("{kind} {i}"),
                color: c,
                k,
            });
        }
    }
    Ok(())
}

/// A total map from edge ids to colors in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    /// `colors[id]` is the color of edge `id`.
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        check_palette(k)?;
        check_colors(k, &colors, "edge")?;
        Ok(Self { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    /// Relabels color `c` as `perm[c - 1]`; `perm` must be a permutation of `1..=k`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(self.k, perm)?;
        Ok(Self {
            k: self.k,
            colors: self.colors.iter().map(|&c| perm[c - 1]).collect(),
        })
    }

    pub fn to_doc(&self) -> ColoringDoc {
        ColoringDoc {
            k: self.k,
            edges: edge_entries(&self.colors),
            vertices: None,
        }
    }
}

/// A total map from vertices and edge ids to colors in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalColoring {
    k: usize,
    edge_colors: Vec<usize>,
    vertex_colors: Vec<usize>,
}

impl TotalColoring {
    pub fn new(k: usize, edge_colors: Vec<usize>, vertex_colors: Vec<usize>) -> Result<Self> {
        check_palette(k)?;
        check_colors(k, &edge_colors, "edge")?;
        check_colors(k, &vertex_colors, "vertex")?;
        Ok(Self {
            k,
            edge_colors,
            vertex_colors,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_colors(&self) -> &[usize] {
        &self.edge_colors
    }

    pub fn vertex_colors(&self) -> &[usize] {
        &self.vertex_colors
    }

    pub fn edge_part(&self) -> EdgeColoring {
        EdgeColoring {
            k: self.k,
            colors: self.edge_colors.clone(),
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(self.k, perm)?;
        let map = |cs: &[usize]| cs.iter().map(|&c| perm[c - 1]).collect();
        Ok(Self {
            k: self.k,
            edge_colors: map(&self.edge_colors),
            vertex_colors: map(&self.vertex_colors),
        })
    }

    pub fn to_doc(&self) -> ColoringDoc {
        ColoringDoc {
            k: self.k,
            edges: edge_entries(&self.edge_colors),
            vertices: Some(
                self.vertex_colors
                    .iter()
                    .enumerate()
                    .map(|(v, &color)| VertexEntry { v, color })
                    .collect(),
            ),
        }
    }
}

fn check_permutation(k: usize, perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; k + 1];
    if perm.len() != k {
        return Err(Error::invalid(format!(
            "permutation has {} entries, palette has {k}",
            perm.len()
        )));
    }
    for &c in perm {
        if c == 0 || c > k || std::mem::replace(&mut seen[c], true) {
            return Err(Error::invalid("not a permutation of the palette"));
        }
    }
    Ok(())
}

fn edge_entries(colors: &[usize]) -> Vec<EdgeEntry> {
    colors
        .iter()
        .enumerate()
        .map(|(id, &color)| EdgeEntry { id, color })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub id: usize,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub v: usize,
    pub color: usize,
}

/// Structured coloring document. `vertices` is absent for edge colorings.
/// Edge ids and vertices are 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub k: usize,
    pub edges: Vec<EdgeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<VertexEntry>>,
}

/// A coloring decoded from a [`ColoringDoc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyColoring {
    Edge(EdgeColoring),
    Total(TotalColoring),
}

impl ColoringDoc {
    pub fn decode(&self) -> Result<AnyColoring> {
        let edges = dense(self.edges.iter().map(|e| (e.id, e.color)), "edge")?;
        match &self.vertices {
            None => Ok(AnyColoring::Edge(EdgeColoring::new(self.k, edges)?)),
            Some(vs) => {
                let vertices = dense(vs.iter().map(|e| (e.v, e.color)), "vertex")?;
                Ok(AnyColoring::Total(TotalColoring::new(self.k, edges, vertices)?))
            }
        }
    }
}

fn dense(entries: impl Iterator<Item = (usize, usize)>, kind: &str) -> Result<Vec<usize>> {
    let entries: Vec<_> = entries.collect();
    let mut out: Vec<Option<usize>> = vec![None; entries.len()];
    for (idx, color) in entries {
        match out.get_mut(idx) {
            Some(slot @ None) => *slot = Some(color),
            _ => {
                return Err(Error::invalid(format!(
                    "{kind} ids must be exactly 0..{} with no repeats (bad id {idx})",
                    out.len()
                )))
            }
        }
    }
    Ok(out.into_iter().map(|c| c.expect("every slot filled")).collect())
}

/// Checks totality and properness of an edge coloring, reporting the first conflict.
pub fn check_edge_coloring(g: &Multigraph, phi: &EdgeColoring) -> Result<()> {
    check_shape("edges", g.edge_count(), phi.colors.len())?;
    for v in 0..g.vertex_count() {
        let mut seen = ColorSet::EMPTY;
        for &e in g.incident_edges(v)? {
            let c = phi.colors[e];
            if seen.contains(c) {
                return Err(Error::NotProper(format!("two edges at vertex {v} share color {c}")));
            }
            seen.insert(c);
        }
    }
    Ok(())
}

pub fn is_proper_edge_coloring(g: &Multigraph, phi: &EdgeColoring) -> bool {
    check_edge_coloring(g, phi).is_ok()
}

/// Checks totality and properness of a total coloring: the edge part is
/// proper, adjacent vertices differ, and no vertex shares a color with an
/// incident edge.
pub fn check_total_coloring(g: &Multigraph, psi: &TotalColoring) -> Result<()> {
    check_shape("vertices", g.vertex_count(), psi.vertex_colors.len())?;
    check_edge_coloring(g, &psi.edge_part())?;
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let c = psi.edge_colors[id];
        if psi.vertex_colors[u] == psi.vertex_colors[v] {
            return Err(Error::NotProper(format!(
                "adjacent vertices {u} and {v} share color {}",
                psi.vertex_colors[u]
            )));
        }
        for x in [u, v] {
            if psi.vertex_colors[x] == c {
                return Err(Error::NotProper(format!(
                    "vertex {x} and incident edge {id} share color {c}"
                )));
            }
        }
    }
    Ok(())
}

pub fn is_proper_total_coloring(g: &Multigraph, psi: &TotalColoring) -> bool {
    check_total_coloring(g, psi).is_ok()
}

fn check_shape(kind: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ColoringShape { kind, expected, found })
    }
}

/// A graph paired with an edge coloring of it.
#[derive(Debug, Clone, Copy)]
pub struct ColoredGraph<'a> {
    graph: &'a Multigraph,
    coloring: &'a EdgeColoring,
}

impl<'a> ColoredGraph<'a> {
    /// Verifies that `coloring` is a proper edge coloring of `graph`.
    pub fn new(graph: &'a Multigraph, coloring: &'a EdgeColoring) -> Result<Self> {
        check_edge_coloring(graph, coloring)?;
        Ok(Self { graph, coloring })
    }

    /// Skips the properness check; only the shape is validated.
    pub fn trusted(graph: &'a Multigraph, coloring: &'a EdgeColoring) -> Result<Self> {
        check_shape("edges", graph.edge_count(), coloring.colors.len())?;
        Ok(Self { graph, coloring })
    }

    pub fn k(&self) -> usize {
        self.coloring.k
    }

    /// Colors on edges incident with `v`.
    pub fn present_colors(&self, v: usize) -> Result<ColorSet> {
        Ok(self
            .graph
            .incident_edges(v)?
            .iter()
            .map(|&e| self.coloring.colors[e])
            .collect())
    }

    /// Palette colors not present at `v`.
    pub fn missing_colors(&self, v: usize) -> Result<ColorSet> {
        Ok(ColorSet::palette(self.k()).difference(self.present_colors(v)?))
    }

    pub fn missing_union(&self, w: &[usize]) -> Result<ColorSet> {
        let mut acc = ColorSet::EMPTY;
        for &v in w {
            acc = acc.union(self.missing_colors(v)?);
        }
        Ok(acc)
    }

    /// Colors on the boundary edges of `w`.
    pub fn boundary_colors(&self, w: &[usize]) -> Result<ColorSet> {
        Ok(self
            .graph
            .boundary_edges(w)?
            .into_iter()
            .map(|e| self.coloring.colors[e])
            .collect())
    }

    /// First pair of distinct vertices of `w` sharing a missing color, with that color.
    pub fn elementary_violation(&self, w: &[usize]) -> Result<Option<(usize, usize, usize)>> {
        let mut distinct: Vec<usize> = w.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let missing = distinct
            .iter()
            .map(|&v| self.missing_colors(v))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..distinct.len() {
            for j in i + 1..distinct.len() {
                if let Some(c) = missing[i].intersection(missing[j]).min() {
                    return Ok(Some((distinct[i], distinct[j], c)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_elementary(&self, w: &[usize]) -> Result<bool> {
        Ok(self.elementary_violation(w)?.is_none())
    }

    pub fn is_closed(&self, w: &[usize]) -> Result<bool> {
        Ok(self.missing_union(w)?.intersection(self.boundary_colors(w)?).is_empty())
    }

    pub fn is_strongly_closed(&self, w: &[usize]) -> Result<bool> {
        if !self.is_closed(w)? {
            return Ok(false);
        }
        let boundary = self.graph.boundary_edges(w)?;
        let distinct: ColorSet = boundary.iter().map(|&e| self.coloring.colors[e]).collect();
        Ok(distinct.len() == boundary.len())
    }
}
