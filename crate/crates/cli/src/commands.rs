//! Subcommands. Each returns text or JSON for standard output.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use congraph::canon::{automorphism_group, PermutationGroup, AUTOMORPHISM_LIMIT};
use congraph::capacity::{capacity_report, spectrum_product_check, unimodularity_check};
use congraph::catalog;
use congraph::homotopy::{
    barycentric_trace, homotopy_reduce, is_contractible, psi_to_phi_trace, sphere_dimension, Budget, HomotopyTrace,
};
use congraph::invariants::{complex_report, graph_report};
use congraph::io::{parse_complex, parse_graph, to_dot, write_edg, write_scx, ComplexJson, GraphJson};
use congraph::reconstruct::{complex_automorphisms, reconstruct_complex};
use congraph::{phi, phi_product, psi, psi_product, Complex, ComplexGraph, Graph};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] congraph::Error),
    #[error("{0}")]
    Input(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub enum Output {
    Text(String),
    Json(Value),
}

#[derive(Parser, Debug)]
#[command(name = "congraph", version, about = "Connection and Barycentric graphs of simplicial complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// How a graph is written.
#[derive(clap::Args, Debug, Clone, Copy)]
pub struct GraphFormat {
    /// Graphviz DOT instead of JSON
    #[arg(long, conflicts_with = "edg")]
    pub dot: bool,
    /// `.edg` text instead of JSON
    #[arg(long)]
    pub edg: bool,
}

#[derive(clap::Args, Debug, Clone)]
pub struct ComplexInput {
    /// `.scx` or JSON file, `-` for standard input, or a catalog name
    pub complex: String,
    /// Close the sets downward on load
    #[arg(long)]
    pub facets: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Strong,
    Phi,
    Psi,
    Join,
    Union,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Connection graph: sets joined when they intersect
    Psi {
        #[command(flatten)]
        input: ComplexInput,
        #[command(flatten)]
        format: GraphFormat,
    },
    /// Barycentric graph: sets joined when one contains the other
    Phi {
        #[command(flatten)]
        input: ComplexInput,
        #[command(flatten)]
        format: GraphFormat,
    },
    /// Recover the complex from its connection or Barycentric graph; prints `.scx`
    Reconstruct {
        /// `.edg` or graph JSON file, or `-`
        graph: String,
        /// Print JSON with the set of every graph vertex
        #[arg(long)]
        json: bool,
    },
    /// f-vector, Euler characteristic, Betti numbers (and curvature for graphs)
    Invariants {
        input: String,
        /// Read the input as a graph
        #[arg(long)]
        graph: bool,
        #[arg(long)]
        facets: bool,
    },
    /// Whether the graph is contractible
    Contractible { graph: String },
    /// Sphere dimension of the graph, or null
    Sphere { graph: String },
    /// Contract greedily, then optionally try expansions
    HomotopyReduce {
        graph: String,
        #[arg(long, default_value_t = 10_000)]
        max_moves: usize,
        #[arg(long, default_value_t = 64)]
        max_vertices: usize,
        /// Expansion rounds after greedy contraction stalls
        #[arg(long, default_value_t = 0)]
        expansions: usize,
    },
    /// Certified homotopy from ψ(G) to φ(G)
    Psi2phi {
        #[command(flatten)]
        input: ComplexInput,
        /// Refine the complex first
        #[arg(long)]
        refine: bool,
    },
    /// Certified homotopy from a graph to its Barycentric refinement
    Barycentric { graph: String },
    /// Products and sums of graphs or complexes
    Product {
        a: String,
        b: String,
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[arg(long)]
        facets: bool,
        #[command(flatten)]
        format: GraphFormat,
    },
    /// Independence number, umbrella bound and capacity certificate
    Capacity {
        #[command(flatten)]
        input: ComplexInput,
        /// Largest strong power for lower bounds
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Use the Barycentric graph instead of the connection graph
        #[arg(long)]
        phi: bool,
    },
    /// Connection Laplacian determinant and signature; with a second complex,
    /// the product spectrum check
    Spectrum {
        #[command(flatten)]
        input: ComplexInput,
        other: Option<String>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Automorphism group order and generators
    Aut {
        input: String,
        #[arg(long)]
        graph: bool,
        #[arg(long)]
        facets: bool,
        #[arg(long, default_value_t = AUTOMORPHISM_LIMIT)]
        limit: usize,
    },
    /// List catalog names, or print one entry
    Catalog { name: Option<String> },
    /// Serve the session API over HTTP
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Append sessions to this newline-delimited JSON file and replay it on start
        #[arg(long)]
        journal: Option<PathBuf>,
    },
}

/// File contents, standard input for `-`, or `None` when no such file exists.
fn read_source(source: &str) -> CliResult<Option<String>> {
    if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(Some(s));
    }
    let path = Path::new(source);
    if path.exists() {
        return std::fs::read_to_string(path).map(Some).map_err(|e| CliError::Input(format!("{source}: {e}")));
    }
    Ok(None)
}

pub fn load_complex(source: &str, facets: bool) -> CliResult<Complex> {
    match read_source(source)? {
        Some(text) => Ok(parse_complex(&text, facets)?),
        None => catalog::complex(source).map_err(|_| CliError::Input(format!("{source}: no such file or catalog entry"))),
    }
}

pub fn load_graph(source: &str) -> CliResult<Graph> {
    match read_source(source)? {
        Some(text) => Ok(parse_graph(&text)?),
        None => catalog::graph(source).map_err(|_| CliError::Input(format!("{source}: no such file or catalog entry"))),
    }
}

/// Whether `source` holds a graph rather than a complex: `.edg` files, `.edg`
/// text and graph JSON.
fn looks_like_graph(source: &str) -> CliResult<bool> {
    if source.ends_with(".edg") {
        return Ok(true);
    }
    let Some(text) = read_source(source)? else { return Ok(false) };
    let t = text.trim_start();
    Ok(if t.starts_with('{') {
        serde_json::from_str::<GraphJson>(t).is_ok()
    } else {
        t.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).is_some_and(|l| l.starts_with('n'))
    })
}

/// Original point names from the `sets` field written next to a graph by
/// `psi` and `phi`: a vertex whose set is `{p}` is the point `p`.
fn point_names(text: &str) -> Option<std::collections::HashMap<u32, u32>> {
    let v: Value = serde_json::from_str(text).ok()?;
    let sets: Vec<Vec<u32>> = serde_json::from_value(v.get("sets")?.clone()).ok()?;
    let labels: Vec<u32> = match v.get("labels") {
        Some(l) => serde_json::from_value(l.clone()).ok()?,
        None => (0..sets.len() as u32).collect(),
    };
    if labels.len() != sets.len() {
        return None;
    }
    Some(labels.into_iter().zip(sets).filter(|(_, s)| s.len() == 1).map(|(l, s)| (l, s[0])).collect())
}

fn graph_out(g: &Graph, format: GraphFormat, name: &str) -> Output {
    if format.dot {
        Output::Text(to_dot(g, name))
    } else if format.edg {
        Output::Text(write_edg(g))
    } else {
        Output::Json(serde_json::to_value(g).expect("graph json"))
    }
}

fn complex_graph_out(cg: &ComplexGraph, format: GraphFormat, name: &str) -> Output {
    match graph_out(&cg.graph, format, name) {
        Output::Json(mut v) => {
            let sets: Vec<&[u32]> = cg.labeling.sets().iter().map(|s| s.vertices()).collect();
            v["sets"] = json!(sets);
            Output::Json(v)
        }
        text => text,
    }
}

fn group_json(g: &PermutationGroup) -> Value {
    json!({ "order": g.order.to_string(), "degree": g.degree, "generators": g.generators })
}

fn trace_json(trace: &HomotopyTrace) -> CliResult<Value> {
    let replay = trace.replay()?;
    let mut v = serde_json::to_value(trace).expect("trace json");
    v["primitive_steps"] = json!(replay.primitive_steps);
    v["euler"] = json!(replay.euler);
    Ok(v)
}

pub fn run(command: Command) -> CliResult<Output> {
    Ok(match command {
        Command::Psi { input, format } => complex_graph_out(&psi(&load_complex(&input.complex, input.facets)?), format, "psi"),
        Command::Phi { input, format } => complex_graph_out(&phi(&load_complex(&input.complex, input.facets)?), format, "phi"),
        Command::Reconstruct { graph, json } => {
            let text = read_source(&graph)?;
            let a = match &text {
                Some(t) => parse_graph(t)?,
                None => load_graph(&graph)?,
            };
            let mut r = reconstruct_complex(&a)?;
            if let Some(names) = text.as_deref().and_then(point_names) {
                r.complex = r.complex.relabel(|v| names.get(&v).copied().unwrap_or(v))?;
            }
            if json {
                let sets: std::collections::BTreeMap<String, &[u32]> =
                    r.sets.iter().map(|(k, s)| (k.to_string(), s.vertices())).collect();
                Output::Json(json!({
                    "functor": r.functor,
                    "complex": ComplexJson::from_complex(&r.complex),
                    "sets": sets,
                }))
            } else {
                Output::Text(write_scx(&r.complex))
            }
        }
        Command::Invariants { input, graph, facets } => {
            let report = if graph || looks_like_graph(&input)? {
                graph_report(&load_graph(&input)?)?
            } else {
                complex_report(&load_complex(&input, facets)?)?
            };
            Output::Json(serde_json::to_value(report).expect("report json"))
        }
        Command::Contractible { graph } => Output::Json(json!({ "contractible": is_contractible(&load_graph(&graph)?) })),
        Command::Sphere { graph } => Output::Json(json!({ "sphere_dimension": sphere_dimension(&load_graph(&graph)?) })),
        Command::HomotopyReduce { graph, max_moves, max_vertices, expansions } => {
            let budget = Budget { max_moves, max_vertices, expansion_rounds: expansions };
            let r = homotopy_reduce(&load_graph(&graph)?, budget);
            Output::Json(json!({
                "verdict": r.verdict,
                "vertices": r.graph.n(),
                "graph": r.graph,
                "trace": trace_json(&r.trace)?,
            }))
        }
        Command::Psi2phi { input, refine } => {
            let mut g = load_complex(&input.complex, input.facets)?;
            if refine {
                g = g.barycentric_refine()?;
            }
            Output::Json(trace_json(&psi_to_phi_trace(&g)?)?)
        }
        Command::Barycentric { graph } => {
            let b = barycentric_trace(&load_graph(&graph)?)?;
            let cliques: std::collections::BTreeMap<String, &[u32]> =
                b.cliques.iter().map(|(k, s)| (k.to_string(), s.vertices())).collect();
            Output::Json(json!({ "trace": trace_json(&b.trace)?, "cliques": cliques }))
        }
        Command::Product { a, b, kind, facets, format } => {
            let g = match kind {
                ProductKind::Phi => phi_product(&load_complex(&a, facets)?, &load_complex(&b, facets)?),
                ProductKind::Psi => psi_product(&load_complex(&a, facets)?, &load_complex(&b, facets)?),
                ProductKind::Strong => load_graph(&a)?.strong_product(&load_graph(&b)?),
                ProductKind::Join => load_graph(&a)?.zykov_join(&load_graph(&b)?),
                ProductKind::Union => load_graph(&a)?.disjoint_union(&load_graph(&b)?),
            };
            graph_out(&g, format, "product")
        }
        Command::Capacity { input, power, phi } => {
            let r = capacity_report(&load_complex(&input.complex, input.facets)?, power.max(1), phi)?;
            Output::Json(serde_json::to_value(r).expect("capacity json"))
        }
        Command::Spectrum { input, other, tol } => {
            let g = load_complex(&input.complex, input.facets)?;
            let mut v = json!({ "unimodularity": unimodularity_check(&g)? });
            if let Some(o) = other {
                let h = load_complex(&o, input.facets)?;
                v["product"] = serde_json::to_value(spectrum_product_check(&g, &h, tol)?).expect("report json");
            }
            Output::Json(v)
        }
        Command::Aut { input, graph, facets, limit } => {
            if graph || looks_like_graph(&input)? {
                Output::Json(group_json(&automorphism_group(&load_graph(&input)?, limit)?))
            } else {
                let g = load_complex(&input, facets)?;
                let mut v = group_json(&complex_automorphisms(&g, limit)?);
                let sets: Vec<&[u32]> = g.sets().iter().map(|s| s.vertices()).collect();
                v["acts_on"] = json!(sets);
                Output::Json(v)
            }
        }
        Command::Catalog { name: None } => Output::Json(json!({
            "graphs": catalog::GRAPH_NAMES,
            "complexes": catalog::COMPLEX_NAMES,
        })),
        Command::Catalog { name: Some(name) } => {
            let graph = catalog::graph(&name).ok();
            let complex = catalog::complex(&name).ok();
            if graph.is_none() && complex.is_none() {
                return Err(CliError::Input(format!("{name}: not in the catalog")));
            }
            Output::Json(json!({
                "name": name,
                "graph": graph,
                "complex": complex.map(|c| ComplexJson::from_complex(&c)),
            }))
        }
        Command::Serve { .. } => unreachable!("serve is dispatched by main"),
    })
}
