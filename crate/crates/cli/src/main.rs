mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fancross::catalog;
use fancross::classify::{verdicts, PatternReport};
use fancross::embedding::{from_json, map_isomorphic, to_json};
use fancross::enumerate::{enumerate_embeddings, parse_filter, EnumSpec};
use fancross::reroute::{fan_planarize, make_fan_crossing, RerouteTrace};
use fancross::{Embedding, Graph};
use serde::Deserialize;

#[derive(Parser)]
#[command(name = "fancross", version, about = "Fan-crossing and fan-planar embeddings of simple topological graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check an embedding document for structural consistency.
    Validate { file: PathBuf },
    /// Report the crossing patterns of an embedding.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Reroute edges toward a fan-crossing or fan-planar embedding.
    Transform {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        /// Write the rerouting trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Fail unless the result is map-isomorphic to this embedding.
        #[arg(long)]
        expect_iso: Option<PathBuf>,
        /// Output file; standard output by default.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// List all embeddings of a graph up to a crossing budget.
    Enumerate {
        /// Graph document ({"n": .., "edges": [[u, v], ..]}) or embedding document.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        max_crossings: usize,
        /// Keep one embedding per map-isomorphism class.
        #[arg(long)]
        dedupe: bool,
        /// Keep only embeddings with this verdict.
        #[arg(long)]
        filter: Option<String>,
        /// Print the count only.
        #[arg(long)]
        count: bool,
    },
    /// List the named embeddings or print one as a document.
    Catalog {
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<String>,
    },
    /// Draw an embedding as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    FanCrossing,
    FanPlanar,
}

/// Failures mapped to exit codes.
enum Fail {
    /// The input lacks the required property, or an operation refused it.
    Property(String),
    /// Bad arguments or unreadable input.
    Usage(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Property(_) => 1,
            Fail::Usage(_) => 2,
        }
    }
}

type Outcome = Result<(), Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|err| Fail::Usage(format!("{}: {err}", path.display())))
}

fn load(path: &Path) -> Result<Embedding, Fail> {
    from_json(&read(path)?).map_err(|err| Fail::Usage(format!("{}: {err}", path.display())))
}

fn load_valid(path: &Path) -> Result<Embedding, Fail> {
    let e = load(path)?;
    let report = e.validate();
    if !report.is_valid() {
        return Err(Fail::Property(format!("{}: {report}", path.display())));
    }
    Ok(e)
}

fn write(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|err| Fail::Usage(format!("{}: {err}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn load_graph(path: &Path) -> Result<Graph, Fail> {
    let text = read(path)?;
    if let Ok(e) = from_json(&text) {
        return Ok(e.graph);
    }
    let doc: GraphDoc = serde_json::from_str(&text).map_err(|err| Fail::Usage(format!("{}: {err}", path.display())))?;
    Graph::new(doc.n, doc.edges.into_iter().map(|[u, v]| (u, v))).map_err(|err| Fail::Usage(format!("{}: {err}", path.display())))
}

fn summary(r: &PatternReport) -> String {
    let mut s = String::new();
    let flags = [
        ("adjacency-crossing", r.adjacency_crossing),
        ("fan-crossing", r.fan_crossing),
        ("fan-planar", r.fan_planar),
        ("fan-crossing-free", r.fan_crossing_free),
        ("1-planar", r.one_planar),
    ];
    for (name, v) in flags {
        s += &format!("{name}: {v}\n");
    }
    s += &format!("independent crossings: {}\n", r.independent_crossings.len());
    s += &format!("triangle-crossings: {}\n", r.triangle_crossings.len());
    for t in &r.triangle_crossings {
        s += &format!("  triangle {:?} crossed by edges {:?}\n", t.triangle(), t.crossing_edges);
    }
    s += &format!("configuration II instances: {}\n", r.config_ii.len());
    for c in &r.config_ii {
        s += &format!("  base {} ({}, {}) apex {} crossers {:?}\n", c.base, c.u, c.v, c.apex, c.crossers());
    }
    let d = r.density;
    s += &format!("density: m = {} {} 5n - 10 = {}\n", d.m, if d.within { "<=" } else { ">" }, d.bound);
    s
}

fn transform(e: &Embedding, to: Target) -> Result<(Embedding, RerouteTrace), Fail> {
    let refuse = |err: fancross::reroute::RerouteError| Fail::Property(err.to_string());
    let (fan, mut trace) = make_fan_crossing(e).map_err(refuse)?;
    if let Target::FanCrossing = to {
        return Ok((fan, trace));
    }
    let (out, more) = fan_planarize(&fan).map_err(refuse)?;
    trace.steps.extend(more.steps);
    Ok((out, trace))
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Validate { file } => {
            let e = load(&file)?;
            let report = e.validate();
            println!("{report}");
            if !report.is_valid() {
                return Err(Fail::Property(format!("{}: invalid", file.display())));
            }
        }
        Cmd::Classify { file, json } => {
            let r = verdicts(&load_valid(&file)?);
            if json {
                println!("{}", serde_json::to_string_pretty(&r).expect("reports serialize"));
            } else {
                print!("{}", summary(&r));
            }
        }
        Cmd::Transform { file, to, trace, expect_iso, out } => {
            let e = load_valid(&file)?;
            let expected = expect_iso.as_deref().map(load_valid).transpose()?;
            let (result, steps) = transform(&e, to)?;
            if let Some(path) = &trace {
                write(Some(path), &steps.to_json())?;
            }
            write(out.as_deref(), &to_json(&result))?;
            if let Some(x) = expected {
                if !map_isomorphic(&result, &x) {
                    return Err(Fail::Property("result is not map-isomorphic to the expected embedding".into()));
                }
                eprintln!("result is map-isomorphic to the expected embedding");
            }
        }
        Cmd::Enumerate { graph, max_crossings, dedupe, filter, count } => {
            let mut spec = EnumSpec::new(load_graph(&graph)?, max_crossings);
            if dedupe {
                spec = spec.deduped();
            }
            if let Some(name) = filter {
                let v = parse_filter(&name).ok_or_else(|| Fail::Usage(format!("unknown verdict {name:?}")))?;
                spec = spec.filtered(v);
            }
            let all = enumerate_embeddings(&spec).map_err(|err| Fail::Property(err.to_string()))?;
            if count {
                println!("{}", all.len());
            } else {
                let docs: Vec<serde_json::Value> =
                    all.iter().map(|e| serde_json::from_str(&to_json(e)).expect("documents are JSON")).collect();
                println!("{}", serde_json::to_string_pretty(&docs).expect("documents serialize"));
                eprintln!("{} embeddings", all.len());
            }
        }
        Cmd::Catalog { list, emit } => match emit {
            Some(name) => {
                let e = catalog::entry(&name).ok_or_else(|| Fail::Usage(format!("no catalog entry {name:?}")))?;
                print!("{}", to_json(&e));
            }
            None => {
                let _ = list;
                for x in catalog::entries() {
                    println!("{:<10} {}", x.name, x.about);
                }
            }
        },
        Cmd::Render { file, svg, seed } => {
            let e = load_valid(&file)?;
            let text = render::render_svg(&e, seed).map_err(|err| Fail::Property(err.to_string()))?;
            write(Some(&svg), &text)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Fail::Property(msg) | Fail::Usage(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
