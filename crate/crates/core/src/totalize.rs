//! Total colorings from edge colorings of k-dense graphs, and the pipeline
//! that turns `chi'(G) >= max(Delta + 2, n + 1)` into a total
//! `chi'(G)`-coloring of `G`.

use serde::Serialize;

use crate::coloring::{
    check_edge_coloring, check_total_coloring, ColoredGraph, ColoringDoc, EdgeColoring, TotalColoring,
};
use crate::config::Config;
use crate::density::is_k_dense;
use crate::embed::{embed_trusted, EmbeddingReport};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::oracles::{chromatic_index, edge_coloring_with, is_edge_critical};

/// Extends a proper k-edge-coloring of a k-dense graph with `Delta <= k - 1`
/// by giving every vertex its smallest missing color.
pub fn extend_to_total(g: &Multigraph, phi: &EdgeColoring, k: usize) -> Result<TotalColoring> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    if !is_k_dense(g, &all, k)? {
        return Err(Error::NotKDense { k });
    }
    if phi.k() != k {
        return Err(Error::invalid(format!(
            "edge coloring has palette {} but k = {k}",
            phi.k()
        )));
    }
    let colored = ColoredGraph::new(g, phi)?;
    let mut vertex_colors = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        match colored.missing_colors(v)?.min() {
            Some(c) => vertex_colors.push(c),
            None => return Err(Error::DegreeCapViolated { vertex: v }),
        }
    }
    if let Some((u, v, color)) = colored.elementary_violation(&all)? {
        return Err(Error::NotElementary { u, v, color });
    }
    let psi = TotalColoring::new(k, phi.colors().to_vec(), vertex_colors)?;
    check_total_coloring(g, &psi)?;
    Ok(psi)
}

/// Restricts a total coloring of `big` to `small`, whose vertices and edge
/// ids must be prefixes of those of `big`.
pub fn restrict_total(psi: &TotalColoring, big: &Multigraph, small: &Multigraph) -> Result<TotalColoring> {
    let (n, m) = (small.vertex_count(), small.edge_count());
    if n > big.vertex_count() || m > big.edge_count() {
        return Err(Error::IdMappingMismatch(format!(
            "graph with {n} vertices and {m} edges does not fit in one with {} and {}",
            big.vertex_count(),
            big.edge_count()
        )));
    }
    if let Some(id) = (0..m).find(|&id| small.edges()[id] != big.edges()[id]) {
        return Err(Error::IdMappingMismatch(format!(
            "edge {id} is {:?} in the subgraph but {:?} in the supergraph",
            small.edges()[id],
            big.edges()[id]
        )));
    }
    check_total_coloring(big, psi)?;
    let restricted = TotalColoring::new(
        psi.k(),
        psi.edge_colors()[..m].to_vec(),
        psi.vertex_colors()[..n].to_vec(),
    )?;
    check_total_coloring(small, &restricted)?;
    Ok(restricted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub delta_plus_2: usize,
    pub n_plus_1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pipeline {
    pub chi_prime: usize,
    pub hypothesis: Hypothesis,
    pub embedding: EmbeddingReport,
    pub elementary_checked: bool,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalizeCertificate {
    pub k: usize,
    pub coloring: TotalColoring,
    pub pipeline: Pipeline,
}

#[derive(Debug, Clone, Serialize)]
pub struct TotalizeDoc {
    pub k: usize,
    pub coloring: ColoringDoc,
    pub pipeline: Pipeline,
}

impl TotalizeCertificate {
    pub fn to_doc(&self) -> TotalizeDoc {
        TotalizeDoc {
            k: self.k,
            coloring: self.coloring.to_doc(),
            pipeline: self.pipeline.clone(),
        }
    }
}

/// The k-dense supergraph and its k-edge-coloring behind a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalizeWitness {
    pub embedded: Multigraph,
    pub edge_coloring: EdgeColoring,
}

pub fn totalize(g: &Multigraph, config: &Config) -> Result<TotalizeCertificate> {
    totalize_with_witness(g, config).map(|(cert, _)| cert)
}

pub fn totalize_with_witness(g: &Multigraph, config: &Config) -> Result<(TotalizeCertificate, TotalizeWitness)> {
    let k = chromatic_index(g, config)?.k;
    let hypothesis = Hypothesis {
        delta_plus_2: g.max_degree() + 2,
        n_plus_1: g.vertex_count() + 1,
    };
    if k < hypothesis.delta_plus_2 || k < hypothesis.n_plus_1 {
        return Err(Error::HypothesisNotMet {
            chi_prime: k,
            delta_plus_2: hypothesis.delta_plus_2,
            n_plus_1: hypothesis.n_plus_1,
        });
    }

    let (embedded, embedding, coloring) = embed_trusted(g, k, config)?;
    let phi = match coloring {
        Some(phi) => phi,
        // beyond the oracle cap: a single palette-k search, no minimality claim
        None => match edge_coloring_with(&embedded, k, config)?.0 {
            Some(phi) => phi,
            None => {
                return Err(Error::GuaranteeViolated(format!(
                    "k-dense supergraph with density {k} has no {k}-edge-coloring"
                )))
            }
        },
    };
    check_edge_coloring(&embedded, &phi)?;

    let psi = extend_to_total(&embedded, &phi, k)?;
    let coloring = restrict_total(&psi, &embedded, g)?;
    let verified = coloring.k() == k && check_total_coloring(g, &coloring).is_ok();
    if !verified {
        return Err(Error::GuaranteeViolated(
            "restricted total coloring failed verification".into(),
        ));
    }
    let cert = TotalizeCertificate {
        k,
        coloring,
        pipeline: Pipeline {
            chi_prime: k,
            hypothesis,
            embedding,
            elementary_checked: true,
            verified,
        },
    };
    Ok((
        cert,
        TotalizeWitness {
            embedded,
            edge_coloring: phi,
        },
    ))
}

/// `|V(H)| >= (|V(G)| - 2) / (chi' - Delta - 1)`, evaluated without division.
/// False when `chi' <= Delta + 1`.
pub fn corollary_inequality(n_g: usize, n_h: usize, chi_prime: usize, delta: usize) -> bool {
    let gap = chi_prime as i64 - delta as i64 - 1;
    gap > 0 && n_h as i64 * gap >= n_g as i64 - 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub n_g: usize,
    pub n_h: usize,
    pub chi_prime_g: usize,
    pub max_degree_g: usize,
    pub chi_prime_h: Option<usize>,
    pub h_critical: Option<bool>,
    pub inequality_holds: bool,
    pub applicable: bool,
    pub reason: Option<String>,
}

/// Whether the subgraph `H` (given by vertex ids and edge ids of `g`)
/// certifies `chi'' = chi'` through the critical-subgraph size bound.
pub fn corollary_applicable(
    g: &Multigraph,
    h_vertices: &[usize],
    h_edges: &[usize],
    config: &Config,
) -> Result<CorollaryReport> {
    let mut vertices = h_vertices.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.len() != h_vertices.len() {
        return Err(Error::invalid("subgraph vertex list has repeats"));
    }
    for &v in &vertices {
        g.check_vertex(v)?;
    }
    let mut edge_ids = h_edges.to_vec();
    edge_ids.sort_unstable();
    edge_ids.dedup();
    if edge_ids.len() != h_edges.len() {
        return Err(Error::invalid("subgraph edge list has repeats"));
    }
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::with_capacity(edge_ids.len());
    for &id in &edge_ids {
        let (u, v) = g.endpoints(id)?;
        if index[u] == usize::MAX || index[v] == usize::MAX {
            return Err(Error::invalid(format!(
                "edge {id} has an endpoint outside the subgraph"
            )));
        }
        edges.push((index[u], index[v]));
    }
    let h = Multigraph::new(vertices.len(), edges)?;

    let chi_g = chromatic_index(g, config)?.k;
    let delta = g.max_degree();
    let mut report = CorollaryReport {
        n_g: g.vertex_count(),
        n_h: h.vertex_count(),
        chi_prime_g: chi_g,
        max_degree_g: delta,
        chi_prime_h: None,
        h_critical: None,
        inequality_holds: corollary_inequality(g.vertex_count(), h.vertex_count(), chi_g, delta),
        applicable: false,
        reason: None,
    };
    if chi_g < delta + 2 {
        report.reason = Some(format!("chi' = {chi_g} is below Delta + 2 = {}", delta + 2));
        return Ok(report);
    }
    let chi_h = chromatic_index(&h, config)?.k;
    report.chi_prime_h = Some(chi_h);
    if chi_h != chi_g {
        report.reason = Some(format!("chi'(H) = {chi_h} differs from chi'(G) = {chi_g}"));
        return Ok(report);
    }
    let critical = is_edge_critical(&h, config)?;
    report.h_critical = Some(critical);
    if !critical {
        report.reason = Some("H is not edge-chromatic critical".into());
    } else if !report.inequality_holds {
        report.reason = Some("H has too few vertices".into());
    } else {
        report.applicable = true;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper_total_coloring;
    use crate::gen::{fat_cycle, fixture};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn extend_t2() {
        let t2 = fixture("T2").unwrap();
        let phi = chromatic_index(&t2, &cfg()).unwrap().witness;
        let psi = extend_to_total(&t2, &phi, 6).unwrap();
        assert_eq!(psi.edge_colors(), phi.colors());
        let vc = psi.vertex_colors();
        assert!(vc[0] != vc[1] && vc[1] != vc[2] && vc[0] != vc[2]);
        let colored = ColoredGraph::new(&t2, &phi).unwrap();
        for (v, &c) in vc.iter().enumerate() {
            assert_eq!(colored.missing_colors(v).unwrap().len(), 2);
            assert!(colored.missing_colors(v).unwrap().contains(c));
        }
    }

    #[test]
    fn extend_rejects_sparse() {
        let c5 = fixture("C5").unwrap();
        let phi = chromatic_index(&c5, &cfg()).unwrap().witness;
        assert!(matches!(extend_to_total(&c5, &phi, 3), Err(Error::NotKDense { k: 3 })));
    }

    #[test]
    fn restrict_identity_and_empty() {
        let t2 = fixture("T2").unwrap();
        let phi = chromatic_index(&t2, &cfg()).unwrap().witness;
        let psi = extend_to_total(&t2, &phi, 6).unwrap();
        assert_eq!(restrict_total(&psi, &t2, &t2).unwrap(), psi);
        let empty = restrict_total(&psi, &t2, &Multigraph::empty(0)).unwrap();
        assert!(empty.edge_colors().is_empty() && empty.vertex_colors().is_empty());
        let other = Multigraph::new(3, vec![(1, 2)]).unwrap();
        assert!(matches!(
            restrict_total(&psi, &t2, &other),
            Err(Error::IdMappingMismatch(_))
        ));
    }

    #[test]
    fn totalize_examples() {
        let t2 = fixture("T2").unwrap();
        let cert = totalize(&t2, &cfg()).unwrap();
        assert_eq!(cert.k, 6);
        assert!(cert.pipeline.verified);
        assert!(is_proper_total_coloring(&t2, &cert.coloring));

        let base = fixture("T2-2K1").unwrap();
        let (cert, witness) = totalize_with_witness(&base, &cfg()).unwrap();
        assert_eq!(cert.pipeline.embedding.added_edges.len(), 6);
        assert_eq!(&witness.edge_coloring.colors()[..6], cert.coloring.edge_colors());
        assert!(is_proper_total_coloring(&base, &cert.coloring));
    }

    #[test]
    fn totalize_rejects_c5() {
        assert!(matches!(
            totalize(&fixture("C5").unwrap(), &cfg()),
            Err(Error::HypothesisNotMet {
                chi_prime: 3,
                delta_plus_2: 4,
                ..
            })
        ));
    }

    #[test]
    fn corollary_arithmetic() {
        assert!(corollary_inequality(5, 5, 10, 8));
        // threshold 8 > 3
        assert!(!corollary_inequality(10, 3, 10, 8));
        assert!(!corollary_inequality(3, 3, 4, 3));
    }

    #[test]
    fn corollary_on_graphs() {
        let fat = fat_cycle(5, 4).unwrap();
        let all_v: Vec<usize> = (0..5).collect();
        let all_e: Vec<usize> = (0..20).collect();
        let r = corollary_applicable(&fat, &all_v, &all_e, &cfg()).unwrap();
        // one edge fewer still has density 38/4, so chi' stays 10
        assert!(r.inequality_holds && !r.applicable);
        assert_eq!(r.h_critical, Some(false));

        let t2 = fixture("T2").unwrap();
        let r = corollary_applicable(&t2, &[0, 1, 2], &[0, 1, 2, 3, 4, 5], &cfg()).unwrap();
        assert!(r.applicable, "{r:?}");

        // a single triangle edge bundle has smaller chromatic index
        let r = corollary_applicable(&fat, &[0, 1], &[0, 1, 2, 3], &cfg()).unwrap();
        assert_eq!(r.chi_prime_h, Some(4));
        assert!(!r.applicable);

        let c5 = fixture("C5").unwrap();
        let r = corollary_applicable(&c5, &[0, 1, 2, 3, 4], &[0, 1, 2, 3, 4], &cfg()).unwrap();
        assert!(!r.applicable && r.reason.is_some());

        assert!(corollary_applicable(&c5, &[0, 1], &[1], &cfg()).is_err());
    }
}
