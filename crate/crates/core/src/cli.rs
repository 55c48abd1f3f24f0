//! The `zf` command line.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forcing::{self, closure, enumerate_min_zfs_with, is_zero_forcing_set, trace};
use crate::graph::{self, connected_components, Graph, VertexSet};
use crate::io::{self, Format};
use crate::laws::{self, LawParams};
use crate::limits::Limits;
use crate::reconfig::{build_zfg_with, zfg_distance, zfg_stats_with};
use crate::trees;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Zero forcing sets, zero forcing graphs and path covers of trees.
///
/// Graph files are edge lists (`n m` then `m` lines `u v`) or JSON
/// `{"n": .., "edges": [[u, v], ..]}`; the format is detected automatically.
/// Vertex sets are comma-separated indices without spaces, e.g. `0,3,5`.
#[derive(Debug, Parser)]
#[command(name = "zf", version)]
pub struct Cli {
    /// Largest graph order for exhaustive enumeration (default 30).
    #[arg(long, global = true, value_name = "N")]
    pub cap: Option<usize>,

    /// Acknowledge that a --cap above 30 may take a very long time.
    #[arg(long, global = true)]
    pub allow_slow: bool,

    /// Largest zero forcing graph for the clique number in --stats.
    #[arg(long, global = true, value_name = "N")]
    pub clique_cap: Option<usize>,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    /// Seed for sampled corpora.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// `dot`, `data`/`json` or `edgelist` for stdout, or a file path whose
    /// extension (`.json`, `.dot`) selects the format.
    #[arg(long, global = true, value_name = "FORMAT|PATH")]
    pub out: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the zero forcing number.
    Num { file: String },
    /// List every minimum zero forcing set.
    Sets { file: String },
    /// Test whether a set is a zero forcing set (exit 1 if not).
    Check {
        file: String,
        #[arg(long)]
        set: String,
    },
    /// Closure of a set under the color change rule.
    Closure {
        file: String,
        #[arg(long)]
        set: String,
        /// Print the forces, forcing chains and reversal.
        #[arg(long)]
        trace: bool,
    },
    /// Build the zero forcing graph.
    Rgraph {
        file: String,
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        components: bool,
    },
    /// Distance between two minimum zero forcing sets in the zero forcing graph.
    Rdist {
        file: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Emit a named graph family, e.g. `family cycle 5`.
    Family {
        name: String,
        params: Vec<usize>,
    },
    /// Path covers of trees.
    #[command(subcommand)]
    Tree(TreeCommand),
    /// Check laws over generated corpora (exit 1 on any failure).
    Verify(VerifyArgs),
    /// Convert between graph formats.
    Convert {
        file: String,
        /// `edgelist`, `json` or `dot`.
        #[arg(long)]
        to: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TreeCommand {
    /// Minimum path cover, one path per line.
    Pathcover {
        file: String,
        /// A minimum cover in which every path contains a leaf (default).
        #[arg(long, conflicts_with = "all")]
        leafy: bool,
        /// Every minimum path cover, separated by blank lines.
        #[arg(long)]
        all: bool,
    },
    /// Suppress the middle vertex of a degree-2 triple `u,v,w`.
    Suppress {
        file: String,
        #[arg(long)]
        triple: String,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A law id or `all`.
    #[arg(required_unless_present = "list")]
    pub law: Option<String>,
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Number of random instances for sampled corpora.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Write the reports as JSON to this path.
    #[arg(long)]
    pub report: Option<String>,
    /// List the registered laws.
    #[arg(long)]
    pub list: bool,
}

/// What a command produced, before the output destination is applied.
struct Emit {
    text: String,
    data: Value,
    graph: Option<(Graph, Option<Vec<VertexSet>>)>,
    code: i32,
}

impl Emit {
    fn new(text: String, data: Value) -> Self {
        Emit {
            text,
            data,
            graph: None,
            code: EXIT_OK,
        }
    }

    fn graph(g: Graph, labels: Option<Vec<VertexSet>>, text: String, data: Value) -> Self {
        Emit {
            graph: Some((g, labels)),
            ..Emit::new(text, data)
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("zf: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

fn limits(cli: &Cli) -> Result<Limits> {
    let mut limits = Limits::default();
    if let Some(cap) = cli.cap {
        if cap > limits.enumeration && !cli.allow_slow {
            return Err(Error::Input(format!(
                "--cap {cap} exceeds the default {}; pass --allow-slow to confirm",
                limits.enumeration
            )));
        }
        Error::check_cap("--cap", cap, crate::limits::MASK_BITS)?;
        limits.enumeration = cap;
    }
    if let Some(c) = cli.clique_cap {
        limits.clique = c;
    }
    Ok(limits)
}

fn execute(cli: &Cli) -> Result<i32> {
    let limits = limits(cli)?;
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Error::input("--jobs must be at least 1"));
        }
        // Fails only if a pool already exists, which keeps its size.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let emit = dispatch(cli, &limits)?;
    let code = emit.code;
    deliver(cli.out.as_deref(), emit)?;
    Ok(code)
}

fn deliver(out: Option<&str>, emit: Emit) -> Result<()> {
    let render = |format: Option<Format>| -> Result<String> {
        match (format, &emit.graph) {
            (None, _) => Ok(emit.text.clone()),
            (Some(Format::Json), _) => Ok(emit.data.to_string() + "\n"),
            (Some(Format::Dot), Some((g, labels))) => Ok(io::write_dot(g, labels.as_deref())),
            (Some(Format::EdgeList), Some((g, _))) => Ok(io::write_edge_list(g)),
            (Some(f), None) => Err(Error::Input(format!("{f:?} output needs a graph-producing command"))),
        }
    };
    match out {
        None => print!("{}", emit.text),
        Some(name) => match Format::from_name(name) {
            Some(f) => print!("{}", render(Some(f))?),
            None => {
                let format = match Format::from_path(name) {
                    Format::EdgeList => None,
                    f => Some(f),
                };
                std::fs::write(name, render(format)?).map_err(|e| Error::Io(format!("{name}: {e}")))?;
            }
        },
    }
    Ok(())
}

fn set_list(sets: &[VertexSet]) -> Value {
    json!(sets.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>())
}

fn dispatch(cli: &Cli, limits: &Limits) -> Result<Emit> {
    match &cli.command {
        Command::Num { file } => {
            let g = io::read_graph_file(file)?;
            let z = forcing::zero_forcing_number_with(&g, limits)?;
            Ok(Emit::new(format!("{z}\n"), json!({ "z": z })))
        }
        Command::Sets { file } => {
            let g = io::read_graph_file(file)?;
            let cat = enumerate_min_zfs_with(&g, limits)?;
            let text: String = cat.sets.iter().map(|s| format!("{s}\n")).collect();
            Ok(Emit::new(text, json!({ "z": cat.z, "sets": set_list(&cat.sets) })))
        }
        Command::Check { file, set } => {
            let g = io::read_graph_file(file)?;
            let s = io::parse_set(set, g.order())?;
            let ok = is_zero_forcing_set(&g, &s);
            let text = if ok { "zero forcing set\n" } else { "not a zero forcing set\n" };
            let mut e = Emit::new(text.to_string(), json!({ "set": s.members(), "zero_forcing": ok }));
            e.code = if ok { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(e)
        }
        Command::Closure { file, set, trace: show } => {
            let g = io::read_graph_file(file)?;
            let s = io::parse_set(set, g.order())?;
            if !show {
                let c = closure(&g, &s);
                return Ok(Emit::new(format!("{c}\n"), json!({ "closure": c.members() })));
            }
            let t = trace(&g, &s);
            let mut text = String::new();
            for f in &t.forces {
                let _ = writeln!(text, "{} -> {}", f.from, f.to);
            }
            let chains: Vec<String> = t
                .chains
                .iter()
                .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = writeln!(text, "chains: {}", chains.join(" | "));
            let _ = writeln!(text, "reversal: {}", t.reversal);
            let data = json!({
                "initial": t.initial.members(),
                "forces": t.forces,
                "closure": t.final_set.members(),
                "chains": t.chains,
                "reversal": t.reversal.members(),
            });
            Ok(Emit::new(text, data))
        }
        Command::Rgraph { file, stats, components } => {
            let g = io::read_graph_file(file)?;
            let r = build_zfg_with(&g, limits)?;
            let comps = connected_components(&r.graph);
            let mut text = String::new();
            let mut data = json!({
                "base_signature": r.base_signature,
                "z": r.z,
                "nodes": set_list(&r.nodes),
                "edges": r.graph.edges(),
            });
            if *stats {
                let s = zfg_stats_with(&r, limits)?;
                let shape = graph::shape_predicates(&r.graph, limits)?;
                let mut shapes: Vec<String> = Vec::new();
                for (flag, name) in [
                    (shape.is_path, "path"),
                    (shape.is_cycle, "cycle"),
                    (shape.is_complete, "complete"),
                    (shape.is_star, "star"),
                ] {
                    if flag {
                        shapes.push(name.to_string());
                    }
                }
                if let Some(d) = shape.hypercube_dimension {
                    shapes.push(format!("hypercube Q{d}"));
                }
                if shapes.is_empty() {
                    shapes.push("other".to_string());
                }
                let _ = writeln!(text, "z: {}", r.z);
                let _ = writeln!(text, "order: {}", s.order);
                let _ = writeln!(text, "size: {}", r.graph.size());
                let _ = writeln!(text, "connected: {}", comps.len() == 1);
                let _ = writeln!(text, "components: {}", comps.len());
                let _ = writeln!(text, "max_degree: {}", s.max_degree);
                let _ = writeln!(text, "clique_number: {}", s.clique_number);
                let _ = writeln!(text, "triangle_free: {}", s.triangle_free);
                let _ = writeln!(text, "c3c4_free: {}", s.c3c4_free);
                let _ = writeln!(text, "shape: {}", shapes.join(", "));
                data["stats"] = json!(s);
                data["connected"] = json!(comps.len() == 1);
                data["shape"] = json!(shapes);
            }
            if *components {
                for (i, c) in comps.iter().enumerate() {
                    let sets: Vec<String> = c.iter().map(|k| r.nodes[k].to_string()).collect();
                    let _ = writeln!(text, "component {i}: {}", sets.join(" "));
                }
                data["components"] = json!(comps.iter().map(|c| c.members().to_vec()).collect::<Vec<_>>());
            }
            if !stats && !components {
                for (i, s) in r.nodes.iter().enumerate() {
                    let _ = writeln!(text, "{i}: {s}");
                }
                for &(a, b) in r.graph.edges() {
                    let _ = writeln!(text, "{} -- {}", r.nodes[a], r.nodes[b]);
                }
            }
            let labels = r.nodes.clone();
            Ok(Emit::graph(r.graph, Some(labels), text, data))
        }
        Command::Rdist { file, from, to } => {
            let g = io::read_graph_file(file)?;
            let r = build_zfg_with(&g, limits)?;
            let a = io::parse_set(from, g.order())?;
            let b = io::parse_set(to, g.order())?;
            let d = zfg_distance(&r, &a, &b)?;
            let text = match d {
                Some(d) => format!("{d}\n"),
                None => "unreachable\n".to_string(),
            };
            Ok(Emit::new(text, json!({ "distance": d })))
        }
        Command::Family { name, params } => {
            let g = crate::families::by_name(name, params)?;
            Ok(graph_emit(g))
        }
        Command::Convert { file, to } => {
            let g = io::read_graph_file(file)?;
            match to {
                None => Ok(graph_emit(g)),
                Some(name) => {
                    let f = Format::from_name(name)
                        .ok_or_else(|| Error::Input(format!("unknown format `{name}`")))?;
                    let text = io::write_graph(&g, f);
                    let data = serde_json::from_str(&io::write_json(&g)).expect("graph JSON");
                    Ok(Emit::graph(g, None, text, data))
                }
            }
        }
        Command::Tree(TreeCommand::Pathcover { file, all, .. }) => {
            let t = io::read_graph_file(file)?;
            let covers = if *all {
                trees::enumerate_min_path_covers_with(&t, limits)?
            } else {
                vec![trees::leafy_min_path_cover(&t)?]
            };
            let text = covers
                .iter()
                .map(|c| {
                    c.paths
                        .iter()
                        .map(|p| p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n")
                        .collect::<String>()
                })
                .collect::<Vec<_>>()
                .join("\n");
            let data = json!(covers.iter().map(|c| &c.paths).collect::<Vec<_>>());
            Ok(Emit::new(text, data))
        }
        Command::Tree(TreeCommand::Suppress { file, triple }) => {
            let t = io::read_graph_file(file)?;
            let raw: Vec<usize> = triple
                .split(',')
                .map(|x| x.parse().map_err(|_| Error::input("--triple must be u,v,w")))
                .collect::<Result<_>>()?;
            if raw.len() != 3 {
                return Err(Error::input("--triple needs three vertices u,v,w"));
            }
            let (reduced, map) = trees::suppress_degree2_triple(&t, raw[0], raw[1], raw[2])?;
            let mut text = io::write_edge_list(&reduced);
            let shown: Vec<String> = map
                .iter()
                .enumerate()
                .map(|(i, m)| match m {
                    Some(j) => format!("{i}->{j}"),
                    None => format!("{i}->-"),
                })
                .collect();
            let _ = writeln!(text, "# map: {}", shown.join(" "));
            let data = json!({
                "graph": serde_json::from_str::<Value>(&io::write_json(&reduced)).expect("graph JSON"),
                "map": map,
            });
            Ok(Emit::graph(reduced, None, text, data))
        }
        Command::Verify(args) => verify(cli, args),
    }
}

fn graph_emit(g: Graph) -> Emit {
    let text = io::write_edge_list(&g);
    let data = serde_json::from_str(&io::write_json(&g)).expect("graph JSON");
    Emit::graph(g, None, text, data)
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Emit> {
    if args.list {
        let mut text = String::new();
        for l in laws::laws() {
            let _ = writeln!(text, "{:<28} {} (max_n {} by default, at most {})", l.id, l.summary, l.default_max_n, l.max_max_n);
        }
        let data = json!(laws::laws().map(|l| l.id).collect::<Vec<_>>());
        return Ok(Emit::new(text, data));
    }
    let params = LawParams {
        max_n: args.max_n,
        seed: cli.seed,
        samples: args.samples,
    };
    let law = args.law.as_deref().expect("clap requires a law");
    let reports = if law == "all" {
        laws::run_all(&params)?
    } else {
        vec![laws::run_law(law, &params)?]
    };
    let mut text = String::new();
    for r in &reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{verdict} {:<28} checked {:>6}, skipped {:>4}, failures {:>3}  {:.2}s  [{}]",
            r.law_id,
            r.instances_checked,
            r.skipped,
            r.failures.len(),
            r.elapsed.as_secs_f64(),
            r.corpus_description
        );
        for f in r.failures.iter().take(5) {
            let _ = writeln!(text, "    {}: {}", f.details, f.graph);
        }
    }
    let data = serde_json::to_value(&reports).expect("reports serialize");
    if let Some(path) = &args.report {
        let body = serde_json::to_string_pretty(&data).expect("reports serialize");
        std::fs::write(path, body + "\n").map_err(|e| Error::Io(format!("{path}: {e}")))?;
    }
    let mut e = Emit::new(text, data);
    if reports.iter().any(|r| !r.passed()) {
        e.code = EXIT_CHECK_FAILED;
    }
    Ok(e)
}
