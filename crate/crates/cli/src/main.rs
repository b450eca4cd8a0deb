//! `wcm`: solve, verify and generate connected matching instances.
//!
//! Exit status: 0 for success or a yes answer, 1 for a no answer, 2 for errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use wcm_core::dispatch::{dispatch_solve, verify_certificate, verify_vertex_set, SolveRequest, SolverChoice};
use wcm_core::graph::classify;
use wcm_core::io;
use wcm_core::reductions::{generate, lift_certificate, project_certificate, ReductionKind};
use wcm_core::treedecomp::{heuristic_td, validate_td, Heuristic};
use wcm_core::Weight;

#[derive(Parser)]
#[command(name = "wcm", version, about = "Maximum weight connected matching toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Solver {
    Auto,
    Brute,
    Tree,
    Cycle,
    Chordal,
    Treewidth,
}

impl From<Solver> for SolverChoice {
    fn from(s: Solver) -> Self {
        match s {
            Solver::Auto => SolverChoice::Auto,
            Solver::Brute => SolverChoice::Brute,
            Solver::Tree => SolverChoice::Tree,
            Solver::Cycle => SolverChoice::Cycle,
            Solver::Chordal => SolverChoice::Chordal,
            Solver::Treewidth => SolverChoice::Treewidth,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Starlike,
    Bip4,
    Steiner,
    PlanarBipartite,
    Crosscomp,
    Wcs,
    Setcover,
}

impl From<Kind> for ReductionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Starlike => ReductionKind::Starlike,
            Kind::Bip4 => ReductionKind::Bip4,
            Kind::Steiner => ReductionKind::Steiner,
            Kind::PlanarBipartite => ReductionKind::PlanarBipartite,
            Kind::Crosscomp => ReductionKind::CrossComp,
            Kind::Wcs => ReductionKind::WcsToWcm,
            Kind::Setcover => ReductionKind::SetCoverToWcs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Source solution to target certificate.
    Lift,
    /// Target certificate to source solution.
    Project,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    MinFill,
    MinDegree,
}

#[derive(Subcommand)]
enum Command {
    /// Print "w <weight>" and write the matching as "m <u> <v>" lines.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        solver: Solver,
        /// Tree decomposition in .td format; implies the treewidth solver under auto.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Answer yes (exit 0) iff the optimum is at least this value.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<Weight>,
        /// Certificate output; standard output when absent.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long, default_value_t = wcm_core::oracle::DEFAULT_EDGE_LIMIT)]
        brute_limit: usize,
    },
    /// Check a certificate against a .gr graph (matching) or a .wcs graph (vertex set).
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: Weight,
    },
    /// Build the gadget instance of a source problem.
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Translate solutions between a source instance and its generated instance.
    MapCert {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        source: PathBuf,
        /// Label map written by generate; must match the regenerated instance.
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a heuristic tree decomposition and print its width.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "min-fill")]
        method: Method,
    },
    /// Print the structural report used by solver selection.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
}

fn yes_no(b: bool) -> ExitCode {
    println!("{}", if b { "yes" } else { "no" });
    ExitCode::from(if b { 0 } else { 1 })
}

fn read(path: &PathBuf) -> Result<String> {
    Ok(io::read_file(path)?)
}

fn write(path: &PathBuf, text: &str) -> Result<()> {
    Ok(io::write_file(path, text)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            graph,
            solver,
            td,
            k,
            cert,
            brute_limit,
        } => {
            let g = io::parse_graph(&read(&graph)?).with_context(|| graph.display().to_string())?;
            let td = match td {
                Some(p) => Some(io::parse_td(&read(&p)?, g.n()).with_context(|| p.display().to_string())?),
                None => None,
            };
            let req = SolveRequest {
                solver: solver.into(),
                td,
                brute_limit,
            };
            let report = dispatch_solve(&g, &req)?;
            let lines = io::write_certificate(&g, &report.solution.matching);
            println!("w {}", report.solution.weight);
            match cert {
                Some(p) => write(&p, &lines)?,
                None => print!("{lines}"),
            }
            Ok(match k {
                Some(k) => yes_no(report.solution.weight >= k),
                None => ExitCode::SUCCESS,
            })
        }
        Command::Verify { graph, cert, k } => {
            let text = read(&graph)?;
            let c = read(&cert)?;
            let vertex_weighted = text
                .lines()
                .map(|l| l.split_whitespace().take(2).collect::<Vec<_>>())
                .find(|t| !t.is_empty() && t[0] != "c")
                .is_some_and(|t| t == ["p", "wcs"]);
            let ok = if vertex_weighted {
                let (g, _) = io::parse_wcs(&text).with_context(|| graph.display().to_string())?;
                let vs = io::parse_vertex_set(&c, g.n()).with_context(|| cert.display().to_string())?;
                verify_vertex_set(&g, &vs, k)?
            } else {
                let g = io::parse_graph(&text).with_context(|| graph.display().to_string())?;
                let m = io::parse_certificate(&g, &c).with_context(|| cert.display().to_string())?;
                verify_certificate(&g, &m, k)?
            };
            Ok(yes_no(ok))
        }
        Command::Generate { kind, source, out, map } => {
            let src = io::parse_source(kind.into(), &read(&source)?).with_context(|| source.display().to_string())?;
            let inst = generate(kind.into(), &src)?;
            write(&out, &io::write_target(&inst))?;
            write(&map, &io::write_map(inst.k, &inst.labels))?;
            println!("k {}", inst.k);
            Ok(ExitCode::SUCCESS)
        }
        Command::MapCert {
            kind,
            direction,
            source,
            map,
            input,
            out,
        } => {
            let src = io::parse_source(kind.into(), &read(&source)?).with_context(|| source.display().to_string())?;
            let inst = generate(kind.into(), &src)?;
            let (k, labels) = io::parse_map(&read(&map)?).with_context(|| map.display().to_string())?;
            if k != inst.k || labels != inst.labels {
                bail!(
                    "{}: label map does not match the instance generated from {}",
                    map.display(),
                    source.display()
                );
            }
            let text = read(&input)?;
            let result = match direction {
                Direction::Lift => {
                    let sol = io::parse_solution(&text, io::solution_shape(&inst))
                        .with_context(|| input.display().to_string())?;
                    io::write_target_certificate(&inst, &lift_certificate(&inst, &sol)?)?
                }
                Direction::Project => {
                    let cert =
                        io::parse_target_certificate(&inst, &text).with_context(|| input.display().to_string())?;
                    io::write_solution(&project_certificate(&inst, &cert)?)
                }
            };
            write(&out, &result)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { graph, out, method } => {
            let g = io::parse_graph(&read(&graph)?).with_context(|| graph.display().to_string())?;
            let method = match method {
                Method::MinFill => Heuristic::MinFill,
                Method::MinDegree => Heuristic::MinDegree,
            };
            let td = heuristic_td(&g, method);
            let width = validate_td(&g, &td)?;
            write(&out, &io::write_td(&td, g.n()))?;
            println!("width {width}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { graph } => {
            let g = io::parse_graph(&read(&graph)?).with_context(|| graph.display().to_string())?;
            let r = classify(&g);
            println!("vertices {}", g.n());
            println!("edges {}", g.m());
            println!("connected {}", r.connected);
            println!("tree {}", r.is_tree);
            println!("path {}", r.is_path);
            println!("cycle {}", r.is_cycle);
            println!("max_degree {}", r.max_degree);
            println!("bipartite {}", r.bipartition.is_some());
            println!("chordal {}", r.chordal_peo.is_some());
            println!("nonnegative {}", r.all_weights_nonnegative);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
