//! Exact chromatic index, total chromatic number, criticality and the
//! density identity check.
//!
//! Every returned palette size is certified twice over: the witness coloring
//! is proper, and the next smaller palette is ruled out either by a lower
//! bound (maximum degree, density) or by an exhausted search.

use serde::Serialize;

use crate::classes::color_edges;
use crate::coloring::{
    check_edge_coloring, check_total_coloring, ColoringDoc, EdgeColoring, TotalColoring, PALETTE_CAP,
};
use crate::config::Config;
use crate::density::{density, DensityWitness};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::solver::{color_conflict_graph, Budget, ConflictGraph};

/// Why no smaller palette works.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBoundReason {
    MaxDegree,
    Density,
    Exhaustion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticCertificate<C> {
    pub k: usize,
    pub witness: C,
    pub lower_bound_reason: LowerBoundReason,
    pub search_nodes: u64,
}

pub type EdgeCertificate = ChromaticCertificate<EdgeColoring>;
pub type TotalCertificate = ChromaticCertificate<TotalColoring>;

/// Certificate document: a header plus the coloring document.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateDoc {
    pub quantity: &'static str,
    pub k: usize,
    pub lower_bound_reason: LowerBoundReason,
    pub search_nodes: u64,
    pub coloring: ColoringDoc,
}

impl EdgeCertificate {
    pub fn to_doc(&self) -> CertificateDoc {
        CertificateDoc {
            quantity: "chromatic-index",
            k: self.k,
            lower_bound_reason: self.lower_bound_reason,
            search_nodes: self.search_nodes,
            coloring: self.witness.to_doc(),
        }
    }
}

impl TotalCertificate {
    pub fn to_doc(&self) -> CertificateDoc {
        CertificateDoc {
            quantity: "total-chromatic-number",
            k: self.k,
            lower_bound_reason: self.lower_bound_reason,
            search_nodes: self.search_nodes,
            coloring: self.witness.to_doc(),
        }
    }
}

fn check_palette(k: usize) -> Result<()> {
    if k > PALETTE_CAP {
        Err(Error::PaletteTooLarge { k, cap: PALETTE_CAP })
    } else {
        Ok(())
    }
}

fn check_edge_cap(g: &Multigraph, config: &Config) -> Result<()> {
    if g.edge_count() > config.chi_max_edges {
        return Err(Error::TooLarge {
            what: "edge count",
            size: g.edge_count(),
            cap: config.chi_max_edges,
        });
    }
    Ok(())
}

/// A proper `k`-edge-coloring if one exists, plus the nodes spent.
pub fn edge_coloring_with(g: &Multigraph, k: usize, config: &Config) -> Result<(Option<EdgeColoring>, u64)> {
    check_palette(k)?;
    let mut budget = Budget::new(config.search_budget);
    let found = color_edges(g, k, &mut budget)?;
    let coloring = found.map(|colors| EdgeColoring::new(k, colors)).transpose()?;
    if let Some(phi) = &coloring {
        check_edge_coloring(g, phi)?;
    }
    Ok((coloring, budget.used))
}

/// Exact chromatic index by iterative deepening from `max(Delta, ceil(rho))`.
///
/// The density bound is used only when the vertex count is within the
/// enumeration cap.
pub fn chromatic_index(g: &Multigraph, config: &Config) -> Result<EdgeCertificate> {
    check_edge_cap(g, config)?;
    let delta = g.max_degree();
    let rho_ceil = if g.vertex_count() <= config.density_max_n {
        density(g, config)?.ceil()
    } else {
        0
    };
    let lower = delta.max(rho_ceil);
    let mut nodes = 0;
    let mut k = lower;
    loop {
        let (found, used) = edge_coloring_with(g, k, config)?;
        nodes += used;
        if let Some(witness) = found {
            let lower_bound_reason = if k > lower {
                LowerBoundReason::Exhaustion
            } else if rho_ceil > delta {
                LowerBoundReason::Density
            } else {
                LowerBoundReason::MaxDegree
            };
            return Ok(ChromaticCertificate {
                k,
                witness,
                lower_bound_reason,
                search_nodes: nodes,
            });
        }
        k += 1;
    }
}

/// Exact total chromatic number by iterative deepening from `Delta + 1`.
pub fn total_chromatic_number(g: &Multigraph, config: &Config) -> Result<TotalCertificate> {
    let n = g.vertex_count();
    let elements = n + g.edge_count();
    if elements > config.total_max_elements {
        return Err(Error::TooLarge {
            what: "element count (n + m)",
            size: elements,
            cap: config.total_max_elements,
        });
    }
    let lower = if n == 0 { 0 } else { g.max_degree() + 1 };
    let cg = ConflictGraph::for_total(g);
    let mut budget = Budget::new(config.search_budget);
    let mut k = lower;
    loop {
        check_palette(k)?;
        if let Some(colors) = color_conflict_graph(&cg, k, &mut budget)? {
            let witness = TotalColoring::new(k, colors[n..].to_vec(), colors[..n].to_vec())?;
            check_total_coloring(g, &witness)?;
            return Ok(ChromaticCertificate {
                k,
                witness,
                lower_bound_reason: if k == lower {
                    LowerBoundReason::MaxDegree
                } else {
                    LowerBoundReason::Exhaustion
                },
                search_nodes: budget.used,
            });
        }
        k += 1;
    }
}

/// Whether deleting any single edge lowers the chromatic index. Edgeless
/// graphs are not critical.
pub fn is_edge_critical(g: &Multigraph, config: &Config) -> Result<bool> {
    if g.edge_count() == 0 {
        return Ok(false);
    }
    let k = chromatic_index(g, config)?.k;
    let mut seen = std::collections::BTreeSet::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        // parallel copies give identical deletions
        if !seen.insert((u.min(v), u.max(v))) {
            continue;
        }
        let (found, _) = edge_coloring_with(&g.without_edge(id)?, k - 1, config)?;
        if found.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three quantities behind the identity `chi' = ceil(rho)` for graphs
/// with `chi' > Delta + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GsReport {
    pub max_degree: usize,
    pub chromatic_index: usize,
    pub density: DensityWitness,
    /// `chi' > Delta + 1`; otherwise the identity holds vacuously.
    pub applies: bool,
    pub holds: bool,
}

pub fn gs_verify(g: &Multigraph, config: &Config) -> Result<GsReport> {
    let rho = density(g, config)?;
    let chi = chromatic_index(g, config)?.k;
    let delta = g.max_degree();
    let applies = chi > delta + 1;
    Ok(GsReport {
        max_degree: delta,
        chromatic_index: chi,
        holds: !applies || chi == rho.ceil(),
        density: rho,
        applies,
    })
}
