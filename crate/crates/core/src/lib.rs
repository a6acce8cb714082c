//! Exact chromatic index, odd-set density and total coloring of small
//! loopless multigraphs, with certificates for every computed quantity.
//!
//! The main entry point is [`totalize`], which turns a multigraph with
//! `chi'(G) >= max(Delta(G) + 2, |V(G)| + 1)` into a verified total
//! coloring with `chi'(G)` colors by embedding it into a k-dense supergraph.

mod classes;
pub mod coloring;
pub mod config;
pub mod density;
pub mod embed;
pub mod error;
pub mod format;
pub mod gen;
pub mod graph;
pub mod harness;
pub mod oracles;
mod solver;
pub mod totalize;

pub use coloring::{
    check_edge_coloring, check_total_coloring, is_proper_edge_coloring, is_proper_total_coloring, AnyColoring,
    ColorSet, ColoredGraph, ColoringDoc, EdgeColoring, TotalColoring, PALETTE_CAP,
};
pub use config::Config;
pub use density::{density, is_k_dense, maximal_k_dense_subgraphs, DensityWitness};
pub use embed::{
    can_add_edge, deficient_vertices_covered, embed_k_dense, ChiProvenance, EmbeddingReport, ExchangeMove,
};
pub use error::{Error, Result};
pub use graph::{Multigraph, Subgraph};
pub use harness::{search_goldberg, SearchReport, Status};
pub use oracles::{
    chromatic_index, edge_coloring_with, gs_verify, is_edge_critical, total_chromatic_number, EdgeCertificate,
    GsReport, LowerBoundReason, TotalCertificate,
};
pub use totalize::{
    corollary_applicable, corollary_inequality, extend_to_total, restrict_total, totalize, totalize_with_witness,
    CorollaryReport, TotalizeCertificate,
};
