//! Command-line surface.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use crate::balance::{cooperative_clique_separator, domination_to_stability, BreakabilityConfig, LoopOptions, DEFAULT_D};
use crate::decompose::{
    mwis_td, td_independence_number, tree_alpha_pipeline, validate_tree_decomposition, PipelineOptions,
    TreeDecomposition,
};
use crate::detect::{find_3pc, DetectOptions};
use crate::error::{input_err, Error, Result};
use crate::generate::{generate, GeneratorSpec};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::io::{emit_graph, emit_td, parse_any, parse_td, GraphDocument};
use crate::separate::separate_vertex_pair;
use crate::stable::{mwis_bruteforce, MWIS_ORACLE_LIMIT};
use crate::weight::{format_rational, parse_rational, rational, Rational, WeightFunction};

#[derive(Debug, Parser)]
#[command(name = "treealpha", version, about = "3PC detection, small-stability separators and tree decompositions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Graph file (native format or DIMACS); stdin when omitted or "-"
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the main document here instead of stdout
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    /// Exact-search vertex cap for 3PC detection
    #[arg(long, global = true)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args, Clone)]
pub struct LoopArgs {
    /// Domination parameter d
    #[arg(long, default_value_t = DEFAULT_D)]
    pub d: usize,
    /// Run the high-degree filter whenever Bad is nonempty
    #[arg(long)]
    pub eager: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a theta, pyramid or prism, or report "3pc-free"
    Detect {
        #[command(flatten)]
        common: Common,
    },
    /// Separate two nonadjacent vertices by a set of small stability number
    Separate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: Vertex,
        #[arg(long)]
        b: Vertex,
    },
    /// Balanced separator of small stability number
    Balance {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lp: LoopArgs,
    },
    /// Tree decomposition with its statistics
    Decompose {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lp: LoopArgs,
        /// Balance parameter of the decomposition, "p/q" in [1/2, 1)
        #[arg(long, default_value = "1/2")]
        c: String,
        /// Skip the 3PC check
        #[arg(long)]
        assume_free: bool,
    },
    /// Optimization problems over tree decompositions
    Solve {
        #[command(subcommand)]
        problem: Problem,
    },
    /// Validate a decomposition file against a graph
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        td: PathBuf,
    },
    /// Emit a generated graph, e.g. "theta(2,2,2)" or "chordal-random(30,0.3,7)"
    Gen {
        #[command(flatten)]
        common: Common,
        spec: String,
        /// Replace the seed of a random family
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decompose a corpus and print CSV rows
    Bench {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lp: LoopArgs,
        /// chordal or composite
        #[arg(long, default_value = "chordal")]
        family: String,
        #[arg(long, value_delimiter = ',', default_value = "16,32,64")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Problem {
    /// Maximum weight independent set
    Mwis {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lp: LoopArgs,
        /// Use this decomposition instead of building one
        #[arg(long)]
        td: Option<PathBuf>,
        /// Compare against the brute-force oracle
        #[arg(long)]
        check: bool,
    },
}

fn read_text(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| input_err!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| input_err!("cannot read stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn read_graph(common: &Common) -> Result<GraphDocument> {
    parse_any(&read_text(&common.input)?)
}

fn detect_opts(common: &Common) -> DetectOptions {
    common.limit.map(DetectOptions::exact_up_to).unwrap_or_default()
}

fn loop_opts(lp: &LoopArgs) -> LoopOptions {
    if lp.eager {
        LoopOptions::eager()
    } else {
        LoopOptions::default()
    }
}

fn ids(set: &VertexSet) -> String {
    set.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn normal_weights(doc: &GraphDocument) -> Result<WeightFunction> {
    let all = doc.graph.vertex_set();
    match &doc.weights {
        Some(w) => w.normalized_on(&all).ok_or_else(|| input_err!("weights sum to zero")),
        None => WeightFunction::uniform_on(&all),
    }
}

/// Where the main document goes.
fn deliver(common: &Common, doc: String, out: &mut String) -> Result<()> {
    match &common.output {
        Some(p) => std::fs::write(p, doc).map_err(|e| input_err!("cannot write {}: {e}", p.display())),
        None => {
            out.push_str(&doc);
            Ok(())
        }
    }
}

fn pipeline_opts(lp: &LoopArgs, c: Rational, common: &Common, assume_free: bool) -> PipelineOptions {
    PipelineOptions { d: lp.d, c, loop_opts: loop_opts(lp), detect: detect_opts(common), assume_free }
}

fn bench_graph(family: &str, n: usize, seed: u64) -> Result<Graph> {
    match family {
        "chordal" => crate::generate::chordal_random(n, 0.3, seed),
        "composite" => crate::generate::tpcfree_composite(n.div_ceil(6), 8, 0.3, seed),
        other => Err(input_err!("unknown bench family {other:?}; use chordal or composite")),
    }
}

/// Runs one command, appending its stdout text to `out`.
pub fn execute(cli: Cli, out: &mut String) -> Result<()> {
    match cli.command {
        Command::Detect { common } => {
            let g = read_graph(&common)?.graph;
            let det = find_3pc(&g, &detect_opts(&common))?;
            if common.json {
                let _ = writeln!(out, "{}", json!({ "witness": det.witness, "exact": det.exact }));
            } else {
                match det.witness {
                    Some(w) => {
                        let _ = writeln!(out, "{}", w.kind);
                        for p in &w.paths {
                            let _ = writeln!(out, "path {}", p.iter().map(u32::to_string).collect::<Vec<_>>().join(" "));
                        }
                    }
                    None if det.exact => out.push_str("3pc-free\n"),
                    None => out.push_str("none found (search budget exhausted)\n"),
                }
            }
        }
        Command::Separate { common, a, b } => {
            let g = read_graph(&common)?.graph;
            let r = separate_vertex_pair(&g, a, b)?;
            if common.json {
                let _ = writeln!(out, "{}", serde_json::to_string(&r).expect("plain data"));
            } else {
                let _ = writeln!(out, "cut {}\nalpha {}\nbound {:.3}\ndepth {}", ids(&r.cut), r.alpha, r.bound, r.depth);
            }
        }
        Command::Balance { common, lp } => {
            let doc = read_graph(&common)?;
            let w = normal_weights(&doc)?;
            let n = doc.graph.len().max(2);
            let cfg = BreakabilityConfig::for_graph(n, lp.d)?;
            let r = domination_to_stability(&doc.graph, &w, &cfg, &cooperative_clique_separator, &loop_opts(&lp))?;
            if common.json {
                let _ = writeln!(out, "{}", serde_json::to_string(&r).expect("plain data"));
            } else {
                let _ = writeln!(out, "cut {}\nalpha {}\nbound {:.3}\nsteps {}", ids(&r.cut), r.alpha, r.bound, r.steps);
            }
        }
        Command::Decompose { common, lp, c, assume_free } => {
            let g = read_graph(&common)?.graph;
            let c = parse_rational(&c)?;
            let (td, stats) = tree_alpha_pipeline(&g, &pipeline_opts(&lp, c, &common, assume_free))?;
            if common.output.is_some() {
                deliver(&common, emit_td(&td), out)?;
                let _ = writeln!(out, "{}", serde_json::to_string(&stats).expect("plain data"));
            } else {
                let _ = writeln!(out, "{}", json!({ "decomposition": td, "stats": stats }));
            }
        }
        Command::Solve { problem: Problem::Mwis { common, lp, td, check } } => {
            let doc = read_graph(&common)?;
            let g = &doc.graph;
            let w = doc.weights.clone().unwrap_or_else(|| WeightFunction::unit(g));
            let td: TreeDecomposition = match &td {
                Some(p) => parse_td(&read_text(&Some(p.clone()))?)?,
                None => tree_alpha_pipeline(g, &pipeline_opts(&lp, rational(1, 2), &common, false))?.0,
            };
            let (set, weight) = mwis_td(g, &w, &td)?;
            let verdict = if check {
                if g.len() > MWIS_ORACLE_LIMIT {
                    return Err(Error::Resource(format!("--check is limited to {MWIS_ORACLE_LIMIT} vertices")));
                }
                let (_, brute) = mwis_bruteforce(g, &w)?;
                if brute != weight {
                    return Err(Error::Invariant(format!(
                        "decomposition weight {} differs from oracle weight {}",
                        format_rational(&weight),
                        format_rational(&brute)
                    )));
                }
                Some("match")
            } else {
                None
            };
            if common.json {
                let _ = writeln!(out, "{}", json!({ "set": set, "weight": format_rational(&weight), "check": verdict }));
            } else {
                let _ = writeln!(out, "set {}\nweight {}", ids(&set), format_rational(&weight));
                if let Some(v) = verdict {
                    let _ = writeln!(out, "{v}");
                }
            }
        }
        Command::Verify { common, td } => {
            let g = read_graph(&common)?.graph;
            let td = parse_td(&read_text(&Some(td))?)?;
            let report = validate_tree_decomposition(&g, &td);
            if !report.is_valid() {
                return Err(input_err!("invalid decomposition: {}", report.summary()));
            }
            let alpha = td_independence_number(&g, &td)?;
            if common.json {
                let _ = writeln!(out, "{}", json!({ "valid": true, "independence_number": alpha, "width": td.width() }));
            } else {
                let _ = writeln!(out, "valid\nindependence_number {alpha}\nwidth {}", td.width());
            }
        }
        Command::Gen { common, spec, seed } => {
            let mut spec: GeneratorSpec = spec.parse()?;
            if let Some(s) = seed {
                match &mut spec {
                    GeneratorSpec::ChordalRandom { seed, .. }
                    | GeneratorSpec::TpcFreeRandom { seed, .. }
                    | GeneratorSpec::TpcFreeComposite { seed, .. } => *seed = s,
                    _ => return Err(input_err!("{spec} takes no seed")),
                }
            }
            let g = generate(&spec)?;
            deliver(&common, emit_graph(&g, None)?, out)?;
        }
        Command::Bench { common, lp, family, sizes, count, seed } => {
            let jobs: Vec<(usize, u64)> =
                sizes.iter().flat_map(|&n| (0..count as u64).map(move |k| (n, seed + k))).collect();
            let rows: Vec<Result<String>> = jobs
                .par_iter()
                .enumerate()
                .map(|(i, &(n, s))| {
                    let g = bench_graph(&family, n, s)?;
                    let start = Instant::now();
                    let opts = pipeline_opts(&lp, rational(1, 2), &common, true);
                    let (_, stats) = tree_alpha_pipeline(&g, &opts)?;
                    let ms = start.elapsed().as_secs_f64() * 1e3;
                    Ok(format!(
                        "{i},{family},{},{s},{},{},{},{ms:.1}",
                        g.len(),
                        stats.bound,
                        stats.independence_number,
                        stats.max_cut_alpha
                    ))
                })
                .collect();
            let mut csv = String::from("index,family,n,seed,bound,realized_alpha,max_cut_alpha,runtime_ms\n");
            for r in rows {
                csv.push_str(&r?);
                csv.push('\n');
            }
            deliver(&common, csv, out)?;
        }
    }
    Ok(())
}

/// Parses `argv`, runs the command and returns the exit code with the text
/// meant for stdout and stderr.
pub fn run_command<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, if code == 0 { e.to_string() } else { String::new() }, if code == 0 { String::new() } else { e.to_string() });
        }
    };
    let mut out = String::new();
    match execute(cli, &mut out) {
        Ok(()) => (0, out, String::new()),
        Err(e) => (e.exit_code(), out, format!("error: {e}\n")),
    }
}
