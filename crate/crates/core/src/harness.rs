//! Counterexample search for `chi'' = chi'` whenever `chi' >= Delta + 3`.
//!
//! Each instance gets its exact chromatic index, and its total chromatic
//! number either from the total-coloring pipeline (when its hypothesis
//! holds) or from the exact total oracle.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::ColoringDoc;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::gen::fat_cycle;
use crate::graph::Multigraph;
use crate::oracles::{chromatic_index, total_chromatic_number};
use crate::totalize::totalize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "detail")]
pub enum Status {
    /// `chi' < Delta + 3`.
    OutOfHypothesis,
    Holds,
    Violation,
    /// A cap or budget stopped one of the oracles.
    Skipped(String),
}

/// How `chi''` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TotalSource {
    Totalize,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph: String,
    pub edge_coloring: ColoringDoc,
    pub total_coloring: ColoringDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub chi_prime: Option<usize>,
    pub chi_total: Option<usize>,
    pub total_source: Option<TotalSource>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchCounts {
    pub total: usize,
    pub in_hypothesis: usize,
    pub holds: usize,
    pub violations: usize,
    pub out_of_hypothesis: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub counts: SearchCounts,
    pub instances: Vec<InstanceResult>,
}

/// Fat odd cycles named `fatC{n}-{mult}`.
pub fn fat_cycle_corpus(lengths: &[usize], mults: &[usize]) -> Result<Vec<(String, Multigraph)>> {
    let mut out = Vec::new();
    for &n in lengths {
        for &mult in mults {
            out.push((format!("fatC{n}-{mult}"), fat_cycle(n, mult)?));
        }
    }
    Ok(out)
}

fn skip_reason(err: &Error) -> Option<String> {
    match err {
        Error::TooLarge { .. } | Error::BudgetExceeded { .. } | Error::PaletteTooLarge { .. } => Some(err.to_string()),
        _ => None,
    }
}

fn run_instance(name: &str, g: &Multigraph, config: &Config) -> Result<InstanceResult> {
    let mut result = InstanceResult {
        name: name.to_string(),
        n: g.vertex_count(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        chi_prime: None,
        chi_total: None,
        total_source: None,
        status: Status::OutOfHypothesis,
        counterexample: None,
    };
    let edge_cert = match chromatic_index(g, config) {
        Ok(cert) => cert,
        Err(e) => match skip_reason(&e) {
            Some(reason) => {
                result.status = Status::Skipped(reason);
                return Ok(result);
            }
            None => return Err(e),
        },
    };
    let k = edge_cert.k;
    result.chi_prime = Some(k);
    let delta = result.max_degree;
    let in_hypothesis = k >= delta + 3;

    let theorem_applies = k >= delta + 2 && k > g.vertex_count();
    let total = if theorem_applies {
        totalize(g, config).map(|cert| (cert.k, cert.coloring, TotalSource::Totalize))
    } else {
        total_chromatic_number(g, config).map(|cert| (cert.k, cert.witness, TotalSource::Oracle))
    };
    match total {
        Ok((chi_total, witness, source)) => {
            result.chi_total = Some(chi_total);
            result.total_source = Some(source);
            if in_hypothesis {
                if chi_total == k {
                    result.status = Status::Holds;
                } else {
                    result.status = Status::Violation;
                    result.counterexample = Some(Counterexample {
                        graph: crate::format::serialize(g),
                        edge_coloring: edge_cert.witness.to_doc(),
                        total_coloring: witness.to_doc(),
                    });
                }
            }
        }
        Err(e) => match skip_reason(&e) {
            Some(reason) if in_hypothesis => result.status = Status::Skipped(reason),
            Some(_) => {}
            None => return Err(e),
        },
    }
    Ok(result)
}

/// Runs every instance in parallel. Results are sorted by name, then by
/// vertex and edge count, so the report does not depend on scheduling.
pub fn search_goldberg(corpus: &[(String, Multigraph)], config: &Config) -> Result<SearchReport> {
    let mut instances = corpus
        .par_iter()
        .map(|(name, g)| run_instance(name, g, config))
        .collect::<Result<Vec<_>>>()?;
    instances.sort_by(|a, b| (&a.name, a.n, a.m).cmp(&(&b.name, b.n, b.m)));
    let mut counts = SearchCounts {
        total: instances.len(),
        ..SearchCounts::default()
    };
    for inst in &instances {
        match inst.status {
            Status::OutOfHypothesis => counts.out_of_hypothesis += 1,
            Status::Holds => counts.holds += 1,
            Status::Violation => counts.violations += 1,
            Status::Skipped(_) => counts.skipped += 1,
        }
    }
    counts.in_hypothesis = counts.holds + counts.violations;
    Ok(SearchReport { counts, instances })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixture;

    #[test]
    fn empty_corpus() {
        let report = search_goldberg(&[], &Config::default()).unwrap();
        assert!(report.instances.is_empty());
        assert_eq!(report.counts, SearchCounts::default());
    }

    #[test]
    fn c5_is_out_of_hypothesis() {
        let corpus = vec![("C5".to_string(), fixture("C5").unwrap())];
        let report = search_goldberg(&corpus, &Config::default()).unwrap();
        let c5 = &report.instances[0];
        assert_eq!(c5.status, Status::OutOfHypothesis);
        assert_eq!((c5.chi_prime, c5.chi_total), (Some(3), Some(4)));
        assert_eq!(report.counts.violations, 0);
    }

    #[test]
    fn fat_triangles() {
        let corpus = fat_cycle_corpus(&[3], &[2, 3]).unwrap();
        let report = search_goldberg(&corpus, &Config::default()).unwrap();
        assert_eq!(report.instances[0].status, Status::OutOfHypothesis);
        assert_eq!(report.instances[0].chi_total, Some(6));
        assert_eq!(report.instances[1].status, Status::Holds);
        assert_eq!(report.instances[1].total_source, Some(TotalSource::Totalize));
    }
}
