//! Batch command-line front end: graph checks, root enumeration, `T`
//! polynomials, the verification suites, decoding, equality, lcm's, and
//! folding.
//!
//! Exit codes are uniform across commands: 0 for success or a true
//! verdict, 1 for a false verdict or a failed verification, 2 for usage,
//! parse, or cap errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::closed;
use crate::fold;
use crate::graph::CoxeterGraph;
use crate::monoid::{self, MonoidWord};
use crate::rep::RepContext;
use crate::report::VerificationReport;
use crate::roots::{Root, RootSystem};

#[derive(Parser)]
#[command(name = "artin", version, about = "Exact computation in Artin monoids")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural verdicts for a graph: small type, no triangle, spherical.
    GraphCheck {
        /// Graph JSON file.
        file: PathBuf,
        /// Report only the small-type verdict (exit 1 when false).
        #[arg(long)]
        small_type: bool,
        /// Report only the no-triangle verdict (exit 1 when false).
        #[arg(long)]
        no_triangle: bool,
        /// Report only the spherical verdict (exit 1 when false).
        #[arg(long)]
        spherical: bool,
        /// Vertex subset for --spherical, whitespace-separated (default: all).
        #[arg(long)]
        subset: Option<String>,
    },
    /// Enumerate positive roots with their depths (small type only).
    Roots {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_depth: u32,
        #[arg(long)]
        json: bool,
    },
    /// Print T(s, β) polynomials (small type, no triangle).
    Tpoly {
        file: PathBuf,
        /// The vertex s.
        #[arg(short, long)]
        vertex: String,
        #[arg(long, default_value_t = 5)]
        max_depth: u32,
        /// A single root as JSON, e.g. '{"s":1,"t":1}' (overrides --max-depth).
        #[arg(long)]
        root: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_depth: u32,
        /// Word-length bound for the order and closed suites.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Work cap for braid-closure and cancellation searches.
        #[arg(long, default_value_t = monoid::DEFAULT_CAP)]
        cap: usize,
        /// Seed for the closed-suite sampling harness.
        #[arg(long, default_value_t = 0xA2C0FFEE)]
        seed: u64,
        /// Sample count for the closed-suite sampling harness.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decode a positive word into its greedy group-element factors.
    Decode {
        file: PathBuf,
        /// The word, whitespace-separated vertex names.
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = monoid::DEFAULT_CAP)]
        cap: usize,
    },
    /// Decide equality of two positive words; prints true/false.
    Eq {
        file: PathBuf,
        #[arg(short, long)]
        a: String,
        #[arg(short, long)]
        b: String,
        #[arg(long, value_enum, default_value_t = EqMethod::Decode)]
        method: EqMethod,
        #[arg(long, default_value_t = monoid::DEFAULT_CAP)]
        cap: usize,
    },
    /// Least common multiple of two positive words, or "none".
    Lcm {
        file: PathBuf,
        #[arg(short, long)]
        a: String,
        #[arg(short, long)]
        b: String,
        /// Length cap for the bounded multiple search.
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Fold a graph into small type (twice: also no triangle).
    Fold {
        file: PathBuf,
        /// Fold twice, reaching small type with no triangle.
        #[arg(long)]
        twice: bool,
        /// Write the target graph JSON here.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write the morphism JSON (target + generator map) here.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Run the respects-lcm suite on the morphism.
        #[arg(long)]
        check_lcm: bool,
        #[arg(long, default_value_t = monoid::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Relations,
    Tpoly,
    Closed,
    Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum EqMethod {
    Decode,
    Bfs,
}

/// Anything that should terminate the process with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult = Result<ExitCode, UsageError>;

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &Path) -> Result<CoxeterGraph, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(CoxeterGraph::parse_json(&text)?)
}

fn small_type_system(graph: &CoxeterGraph) -> Result<RootSystem, UsageError> {
    Ok(RootSystem::new(graph.clone())?)
}

fn decode_context(graph: &CoxeterGraph) -> Result<RootSystem, UsageError> {
    if !graph.is_small_type() || !graph.has_no_triangle() {
        return Err(UsageError(
            "decoding requires a small-type graph with no triangle".to_owned(),
        ));
    }
    small_type_system(graph)
}

fn verdict_exit(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_report(report: &VerificationReport, json: bool) -> ExitCode {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).unwrap()
        );
    } else {
        println!("{report}");
    }
    verdict_exit(report.passed())
}

fn dispatch(cli: Cli) -> CliResult {
    match cli.command {
        Command::GraphCheck {
            file,
            small_type,
            no_triangle,
            spherical,
            subset,
        } => {
            let graph = load_graph(&file)?;
            let subset_names: Vec<String> = match &subset {
                Some(text) => text.split_whitespace().map(str::to_owned).collect(),
                None => graph.vertices().to_vec(),
            };
            let spherical_verdict = graph.is_spherical(&subset_names)?;
            let focused = small_type || no_triangle || spherical;
            if !focused {
                println!("small-type: {}", graph.is_small_type());
                println!("no-triangle: {}", graph.has_no_triangle());
                println!("spherical: {spherical_verdict}");
                return Ok(ExitCode::SUCCESS);
            }
            let mut pass = true;
            if small_type {
                let v = graph.is_small_type();
                println!("{v}");
                pass &= v;
            }
            if no_triangle {
                let v = graph.has_no_triangle();
                println!("{v}");
                pass &= v;
            }
            if spherical {
                println!("{spherical_verdict}");
                pass &= spherical_verdict;
            }
            Ok(verdict_exit(pass))
        }

        Command::Roots {
            file,
            max_depth,
            json,
        } => {
            let graph = load_graph(&file)?;
            let sys = small_type_system(&graph)?;
            let roots = sys.positive_roots_up_to(max_depth);
            if json {
                let rows: Vec<serde_json::Value> = roots
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "depth": sys.depth(r).unwrap(),
                            "root": r.to_json(&graph),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                println!("depth  root");
                for r in &roots {
                    println!("{:>5}  {}", sys.depth(r).unwrap(), r.to_json_string(&graph));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Tpoly {
            file,
            vertex,
            max_depth,
            root,
            json,
        } => {
            let graph = load_graph(&file)?;
            let ctx = RepContext::new(graph.clone())?;
            let s = graph
                .vertex_index(&vertex)
                .ok_or_else(|| UsageError(format!("unknown vertex {vertex:?}")))?;
            let roots: Vec<Root> = match root {
                Some(text) => {
                    let value: serde_json::Value = serde_json::from_str(&text)?;
                    vec![Root::from_json(&graph, &value)?]
                }
                None => ctx.roots().positive_roots_up_to(max_depth),
            };
            let mut rows = Vec::new();
            for beta in &roots {
                rows.push((beta.to_json_string(&graph), ctx.tpoly(s, beta)?.to_string()));
            }
            if json {
                let value: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(b, t)| serde_json::json!({"root": b, "tpoly": t}))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                for (b, t) in rows {
                    println!("T({vertex}, {b}) = {t}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            file,
            suite,
            max_depth,
            max_len,
            cap,
            seed,
            samples,
            json,
        } => {
            let graph = load_graph(&file)?;
            let report = match suite {
                Suite::Relations => RepContext::new(graph)?.verify_relations(max_depth)?,
                Suite::Tpoly => RepContext::new(graph)?.verify_tpoly_lemmas(max_depth)?,
                Suite::Closed => {
                    let sys = small_type_system(&graph)?;
                    closed::verify_closed_laws(&sys, max_depth, max_len, seed, samples, cap)?
                }
                Suite::Order => {
                    let sys = small_type_system(&graph)?;
                    monoid::verify_order_laws(&sys, max_len, cap)?
                }
            };
            Ok(print_report(&report, json))
        }

        Command::Decode { file, word, cap } => {
            let graph = load_graph(&file)?;
            let sys = decode_context(&graph)?;
            let f = MonoidWord::parse(&graph, &word)?;
            let mut budget = cap;
            let parts = closed::decode(&sys, &f, &mut budget)?;
            for u in &parts {
                println!("{}", u.display(&graph));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Eq {
            file,
            a,
            b,
            method,
            cap,
        } => {
            let graph = load_graph(&file)?;
            let fa = MonoidWord::parse(&graph, &a)?;
            let fb = MonoidWord::parse(&graph, &b)?;
            let equal = match method {
                EqMethod::Decode => {
                    let sys = decode_context(&graph)?;
                    let mut budget = cap;
                    closed::eq_via_decode(&sys, &fa, &fb, &mut budget)?
                }
                EqMethod::Bfs => monoid::monoid_eq_bfs(&graph, &fa, &fb, cap)?,
            };
            println!("{equal}");
            Ok(verdict_exit(equal))
        }

        Command::Lcm { file, a, b, cap } => {
            let graph = load_graph(&file)?;
            let fa = MonoidWord::parse(&graph, &a)?;
            let fb = MonoidWord::parse(&graph, &b)?;
            let mut budget = monoid::DEFAULT_CAP;
            match monoid::lcm(&graph, &fa, &fb, cap, &mut budget)? {
                Some(word) => println!("{}", word.display(&graph)),
                None => println!("none"),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Fold {
            file,
            twice,
            out,
            map,
            check_lcm,
            cap,
            json,
        } => {
            let graph = load_graph(&file)?;
            let morphism = if twice {
                fold::fold_to_small_no_triangle(&graph)
            } else {
                fold::fold_once(&graph)
            };
            let target = morphism.target();
            if let Some(path) = &out {
                std::fs::write(path, target.to_json_string())
                    .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = &map {
                let text = serde_json::to_string_pretty(&morphism.to_json()).unwrap();
                std::fs::write(path, text)
                    .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            }
            println!(
                "target: {} vertices, {} edges, small-type: {}, no-triangle: {}",
                target.vertex_count(),
                target.edges().count(),
                target.is_small_type(),
                target.has_no_triangle()
            );
            if check_lcm {
                let report = morphism.check_respects_lcm(cap)?;
                return Ok(print_report(&report, json));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
