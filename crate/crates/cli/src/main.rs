use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use totalchroma::{
    check_edge_coloring, check_total_coloring, chromatic_index, density, embed_k_dense, format, gen, harness,
    search_goldberg, total_chromatic_number, totalize_with_witness, AnyColoring, ColoringDoc, Config, Error,
    Multigraph,
};

#[derive(Parser)]
#[command(
    name = "totalchroma",
    version,
    about = "Exact edge and total coloring of small multigraphs"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Also print witnesses (density set, colorings, the dense supergraph).
    #[arg(long, global = true)]
    witness: bool,
    /// Vertex cap for odd-subset enumeration.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Edge cap for the chromatic index oracle.
    #[arg(long, global = true)]
    max_edges: Option<usize>,
    /// Cap on vertices plus edges for the total chromatic number oracle.
    #[arg(long, global = true)]
    max_elements: Option<usize>,
    /// Vertex cap for the exact fallback of the embedding.
    #[arg(long, global = true)]
    max_exact_n: Option<usize>,
    /// Node budget per search.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Directory of graph files, or a single graph file, for `search`.
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum of 2|E(S)|/(|S|-1) over odd vertex sets S with |S| >= 3.
    Density { graph: Option<PathBuf> },
    /// Exact chromatic index with a witness coloring.
    ChiIndex { graph: Option<PathBuf> },
    /// Exact total chromatic number with a witness coloring.
    ChiTotal { graph: Option<PathBuf> },
    /// Embed into a k-dense supergraph, k the chromatic index.
    Embed { graph: Option<PathBuf> },
    /// Total coloring with chromatic-index many colors via a k-dense supergraph.
    Totalize { graph: Option<PathBuf> },
    /// Check a coloring document (or certificate containing one) against a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Look for graphs with chi' >= Delta + 3 and chi'' > chi'.
    Search {
        /// Number of seeded random instances to add to the corpus.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 5)]
        random_n: usize,
        #[arg(long, default_value_t = 10)]
        random_m: usize,
        #[arg(long, default_value_t = 3)]
        mult_cap: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Odd cycle with every edge repeated.
    FatCycle { n: usize, mult: usize },
    /// Uniform multigraph with a per-pair multiplicity cap (uses --seed).
    Random { n: usize, m: usize, mult_cap: usize },
    /// Named fixture.
    Fixture { name: String },
}

fn config(opts: &Opts) -> anyhow::Result<Config> {
    let mut config = Config::default();
    let caps = [
        (opts.max_n, &mut config.density_max_n, "--max-n"),
        (opts.max_edges, &mut config.chi_max_edges, "--max-edges"),
        (opts.max_elements, &mut config.total_max_elements, "--max-elements"),
        (opts.max_exact_n, &mut config.embed_exact_max_n, "--max-exact-n"),
    ];
    for (value, slot, flag) in caps {
        if let Some(v) = value {
            if v == 0 {
                bail!(Error::InvalidArgument(format!("{flag} must be positive")));
            }
            *slot = v;
        }
    }
    if let Some(b) = opts.budget {
        if b == 0 {
            bail!(Error::InvalidArgument("--budget must be positive".into()));
        }
        config.search_budget = b;
    }
    Ok(config)
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> anyhow::Result<Multigraph> {
    Ok(format::parse(&read_input(path)?)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// The serialized name of a unit enum variant.
fn label<T: Serialize>(value: &T) -> String {
    serde_json::to_value(value)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn one_based(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn edge_lines(out: &mut String, g: &Multigraph, colors: &[usize]) {
    for (&(u, v), c) in g.edges().iter().zip(colors) {
        writeln!(out, "e {} {} {c}", u + 1, v + 1).unwrap();
    }
}

fn vertex_lines(out: &mut String, colors: &[usize]) {
    for (v, c) in colors.iter().enumerate() {
        writeln!(out, "v {} {c}", v + 1).unwrap();
    }
}

#[derive(Serialize)]
struct GraphDoc {
    graph: String,
}

#[derive(Serialize)]
struct EmbedDoc<'a> {
    graph: String,
    report: &'a totalchroma::EmbeddingReport,
}

#[derive(Serialize)]
struct TotalizeWitnessDoc {
    graph: String,
    edge_coloring: ColoringDoc,
}

#[derive(Serialize)]
struct TotalizeOut {
    #[serde(flatten)]
    certificate: totalchroma::totalize::TotalizeDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<TotalizeWitnessDoc>,
}

#[derive(Serialize)]
struct VerifyDoc {
    kind: &'static str,
    k: usize,
    proper: bool,
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    let opts = &cli.opts;
    let config = config(opts)?;
    let json = opts.format == OutputFormat::Json;
    let mut out = String::new();
    match &cli.command {
        Command::Density { graph } => {
            let g = read_graph(graph.as_deref())?;
            let rho = density(&g, &config)?;
            if json {
                return Ok(to_json(&rho));
            }
            writeln!(out, "density {} (ceil {})", rho.value, rho.ceil())?;
            if opts.witness {
                match &rho.witness {
                    Some(w) => writeln!(out, "witness {}", one_based(w))?,
                    None => writeln!(out, "witness none")?,
                }
            }
        }
        Command::ChiIndex { graph } => {
            let g = read_graph(graph.as_deref())?;
            let cert = chromatic_index(&g, &config)?;
            check_edge_coloring(&g, &cert.witness)?;
            if json {
                return Ok(to_json(&cert.to_doc()));
            }
            writeln!(out, "chromatic index {}", cert.k)?;
            writeln!(out, "lower bound {}", label(&cert.lower_bound_reason))?;
            writeln!(out, "search nodes {}", cert.search_nodes)?;
            if opts.witness {
                edge_lines(&mut out, &g, cert.witness.colors());
            }
        }
        Command::ChiTotal { graph } => {
            let g = read_graph(graph.as_deref())?;
            let cert = total_chromatic_number(&g, &config)?;
            check_total_coloring(&g, &cert.witness)?;
            if json {
                return Ok(to_json(&cert.to_doc()));
            }
            writeln!(out, "total chromatic number {}", cert.k)?;
            writeln!(out, "lower bound {}", label(&cert.lower_bound_reason))?;
            writeln!(out, "search nodes {}", cert.search_nodes)?;
            if opts.witness {
                vertex_lines(&mut out, cert.witness.vertex_colors());
                edge_lines(&mut out, &g, cert.witness.edge_colors());
            }
        }
        Command::Embed { graph } => {
            let g = read_graph(graph.as_deref())?;
            let k = chromatic_index(&g, &config)?.k;
            let (embedded, report) = embed_k_dense(&g, k, &config)?;
            if json {
                return Ok(to_json(&EmbedDoc {
                    graph: format::serialize(&embedded),
                    report: &report,
                }));
            }
            writeln!(out, "c k = {k}, added {} edges", report.added_edges.len())?;
            writeln!(out, "c parity vertex added: {}", report.parity_vertex_added)?;
            writeln!(out, "c exchange moves: {}", report.exchange_moves.len())?;
            writeln!(out, "c exact fallback used: {}", report.used_exact_fallback)?;
            writeln!(
                out,
                "c chromatic index of the supergraph: {}",
                label(&report.chi_prime_provenance)
            )?;
            out.push_str(&format::serialize(&embedded));
        }
        Command::Totalize { graph } => {
            let g = read_graph(graph.as_deref())?;
            let (cert, witness) = totalize_with_witness(&g, &config)?;
            check_total_coloring(&g, &cert.coloring)?;
            check_edge_coloring(&witness.embedded, &witness.edge_coloring)?;
            if json {
                return Ok(to_json(&TotalizeOut {
                    certificate: cert.to_doc(),
                    witness: opts.witness.then(|| TotalizeWitnessDoc {
                        graph: format::serialize(&witness.embedded),
                        edge_coloring: witness.edge_coloring.to_doc(),
                    }),
                }));
            }
            writeln!(
                out,
                "total coloring with {} colors (chromatic index {})",
                cert.k, cert.pipeline.chi_prime
            )?;
            writeln!(out, "verified {}", cert.pipeline.verified)?;
            writeln!(
                out,
                "supergraph {} vertices, {} edges, {} added",
                cert.pipeline.embedding.final_n,
                cert.pipeline.embedding.final_m,
                cert.pipeline.embedding.added_edges.len()
            )?;
            vertex_lines(&mut out, cert.coloring.vertex_colors());
            edge_lines(&mut out, &g, cert.coloring.edge_colors());
            if opts.witness {
                writeln!(out, "c supergraph")?;
                out.push_str(&format::serialize(&witness.embedded));
                writeln!(out, "c supergraph edge coloring")?;
                edge_lines(&mut out, &witness.embedded, witness.edge_coloring.colors());
            }
        }
        Command::Verify { graph, coloring } => {
            let g = read_graph(Some(graph))?;
            let text = read_input(Some(coloring))?;
            let mut value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::InvalidArgument(format!("coloring document: {e}")))?;
            if let Some(inner) = value.get("coloring") {
                value = inner.clone();
            }
            let doc: ColoringDoc =
                serde_json::from_value(value).map_err(|e| Error::InvalidArgument(format!("coloring document: {e}")))?;
            let (kind, k) = match doc.decode()? {
                AnyColoring::Edge(phi) => {
                    check_edge_coloring(&g, &phi)?;
                    ("edge", phi.k())
                }
                AnyColoring::Total(psi) => {
                    check_total_coloring(&g, &psi)?;
                    ("total", psi.k())
                }
            };
            if json {
                return Ok(to_json(&VerifyDoc { kind, k, proper: true }));
            }
            writeln!(out, "proper {kind} coloring with {k} colors")?;
        }
        Command::Gen { kind } => {
            let g = match kind {
                GenKind::FatCycle { n, mult } => gen::fat_cycle(*n, *mult)?,
                GenKind::Random { n, m, mult_cap } => gen::random_multigraph(*n, *m, *mult_cap, opts.seed)?,
                GenKind::Fixture { name } => gen::fixture(name)?,
            };
            let text = format::serialize(&g);
            if json {
                return Ok(to_json(&GraphDoc { graph: text }));
            }
            out.push_str(&text);
        }
        Command::Search {
            random,
            random_n,
            random_m,
            mult_cap,
        } => {
            let corpus = search_corpus(opts, *random, *random_n, *random_m, *mult_cap)?;
            let report = search_goldberg(&corpus, &config)?;
            if json {
                return Ok(to_json(&report));
            }
            let c = &report.counts;
            writeln!(
                out,
                "instances {} in-hypothesis {} holds {} violations {} out-of-hypothesis {} skipped {}",
                c.total, c.in_hypothesis, c.holds, c.violations, c.out_of_hypothesis, c.skipped
            )?;
            for inst in &report.instances {
                let show = |x: Option<usize>| x.map_or("?".to_string(), |v| v.to_string());
                let status = match &inst.status {
                    harness::Status::OutOfHypothesis => "out-of-hypothesis".to_string(),
                    harness::Status::Holds => "holds".to_string(),
                    harness::Status::Violation => "VIOLATION".to_string(),
                    harness::Status::Skipped(why) => format!("skipped ({why})"),
                };
                writeln!(
                    out,
                    "{} n={} m={} delta={} chi'={} chi''={} {status}",
                    inst.name,
                    inst.n,
                    inst.m,
                    inst.max_degree,
                    show(inst.chi_prime),
                    show(inst.chi_total)
                )?;
                if let Some(ce) = &inst.counterexample {
                    out.push_str(&ce.graph);
                }
            }
        }
    }
    Ok(out)
}

fn search_corpus(
    opts: &Opts,
    random: usize,
    random_n: usize,
    random_m: usize,
    mult_cap: usize,
) -> anyhow::Result<Vec<(String, Multigraph)>> {
    let mut corpus = Vec::new();
    match &opts.corpus {
        Some(path) if path.is_dir() => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(path)
                .with_context(|| format!("reading {}", path.display()))?
                .map(|entry| entry.map(|e| e.path()))
                .collect::<Result<_, _>>()?;
            files.retain(|p| p.is_file());
            files.sort();
            for file in files {
                let name = file.file_name().unwrap_or_default().to_string_lossy().into_owned();
                let g = read_graph(Some(&file)).with_context(|| format!("parsing {}", file.display()))?;
                corpus.push((name, g));
            }
        }
        Some(path) => {
            let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
            corpus.push((name, read_graph(Some(path))?));
        }
        None if random == 0 => {
            for name in gen::FIXTURES {
                corpus.push((name.to_string(), gen::fixture(name)?));
            }
            for (name, g) in harness::fat_cycle_corpus(&[3, 5, 7], &[2, 3, 4])? {
                if !gen::FIXTURES.contains(&name.as_str()) {
                    corpus.push((name, g));
                }
            }
        }
        None => {}
    }
    for i in 0..random {
        let seed = opts.seed.wrapping_add(i as u64);
        let g = gen::random_multigraph(random_n, random_m, mult_cap, seed)?;
        corpus.push((format!("random-{seed}"), g));
    }
    Ok(corpus)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let Some(e) = err.downcast_ref::<Error>() else {
        return 4;
    };
    match e {
        Error::HypothesisNotMet { .. } => 2,
        Error::TooLarge { .. } | Error::BudgetExceeded { .. } | Error::PaletteTooLarge { .. } => 3,
        Error::Syntax { .. }
        | Error::LoopEdge { .. }
        | Error::VertexOutOfRange { .. }
        | Error::LoopRequested { .. }
        | Error::EdgeCountMismatch { .. }
        | Error::OverlappingSets { .. }
        | Error::EdgeOutOfRange { .. }
        | Error::ColoringShape { .. }
        | Error::ColorOutOfRange { .. }
        | Error::NotProper(_)
        | Error::InvalidArgument(_) => 4,
        Error::NotKDense { .. }
        | Error::NotElementary { .. }
        | Error::DegreeCapViolated { .. }
        | Error::SaturationWithoutDensity { .. }
        | Error::ChromaticIndexMismatch { .. }
        | Error::IdMappingMismatch(_)
        | Error::GuaranteeViolated(_) => 5,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            if let Some(Error::SaturationWithoutDensity { graph, .. }) = err.downcast_ref::<Error>() {
                eprint!("{}", format::serialize(graph));
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
