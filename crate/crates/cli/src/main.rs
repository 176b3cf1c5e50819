use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use seidel_core::classes::{census, census_jsonl, MAX_CENSUS_ORDER};
use seidel_core::findings::write_jsonl;
use seidel_core::generators::{gen, Family};
use seidel_core::graph6::{from_graph6, to_graph6};
use seidel_core::iss::{edge_iss_theorem, iss_family, vertex_iss_set, MAX_FAMILY_ORDER};
use seidel_core::switching::switch_set;
use seidel_core::verify::{run_suite, Suite};
use seidel_core::{Graph, VertexSet};
use serde_json::json;

#[derive(Parser)]
#[command(name = "seidel", version, about = "Seidel switching, switching classes and identity switches")]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GraphInput {
    /// Graph in graph6.
    #[arg(long, conflicts_with = "stdin", required_unless_present = "stdin")]
    graph: Option<String>,
    /// Read graph6 lines from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Switch a graph by a vertex set and print the result in graph6.
    Switch {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated vertex indices; empty for the empty set.
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Identity switches of a graph.
    Iss {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = IssMode::Family)]
        mode: IssMode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Switching-class census of one order as JSONL.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; findings go out as JSONL.
    Verify {
        /// Comma-separated suite names, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a named graph in graph6.
    Gen {
        family: String,
        params: Vec<usize>,
        /// Part A of half_join.
        #[arg(long, value_enum, default_value_t = Part::Empty)]
        a: Part,
        /// Part B of half_join.
        #[arg(long, value_enum, default_value_t = Part::Empty)]
        b: Part,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IssMode {
    Family,
    Vertices,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Part {
    Empty,
    Complete,
}

/// Usage or input problems exit with 2, asserted violations with 1.
enum Outcome {
    Ok,
    Violations,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("seidel: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(e) => {
            if let Some(io_err) = e.downcast_ref::<io::Error>() {
                if io_err.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("seidel: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Switch { input, set } => {
            let mut out = io::stdout().lock();
            for g in read_graphs(&input)? {
                let s = parse_set(&set, g.order())?;
                writeln!(out, "{}", to_graph6(&switch_set(&g, &s)?))?;
            }
        }
        Command::Iss { input, mode, out } => {
            let mut sink = open_sink(out.as_ref())?;
            for g in read_graphs(&input)? {
                if g.order() > MAX_FAMILY_ORDER {
                    bail!("iss supports order at most {MAX_FAMILY_ORDER}, got {}", g.order());
                }
                iss_report(&g, mode, &mut sink)?;
            }
            sink.flush()?;
        }
        Command::Census { order, out } => {
            if order == 0 || order > MAX_CENSUS_ORDER {
                bail!("census supports orders 1..={MAX_CENSUS_ORDER}, got {order}");
            }
            let records = census(order)?;
            let body = census_jsonl(&records);
            let noun = if records.len() == 1 { "class" } else { "classes" };
            let summary = format!("order {order}: {} {noun}", records.len());
            match out {
                Some(path) => {
                    std::fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
                    println!("{summary}");
                }
                None => {
                    io::stdout().lock().write_all(body.as_bytes())?;
                    eprintln!("{summary}");
                }
            }
        }
        Command::Verify { suite, max_order, out } => return verify(&suite, max_order, out),
        Command::Gen { family, params, a, b } => {
            let family: Family = family.parse()?;
            let g = gen(family, &params, a == Part::Complete, b == Part::Complete)?;
            println!("{}", to_graph6(&g));
        }
    }
    Ok(Outcome::Ok)
}

fn verify(suite: &str, max_order: usize, out: Option<PathBuf>) -> Result<Outcome> {
    let suites = Suite::parse_selection(suite)?;
    let to_file = out.is_some();
    let mut sink = open_sink(out.as_ref())?;
    let mut summary = Vec::new();
    let mut failed = false;
    for suite in suites {
        let report = run_suite(suite, max_order)?;
        write_jsonl(&mut sink, &report.violations)?;
        write_jsonl(&mut sink, &report.findings)?;
        summary.extend(report.summary.iter().cloned());
        summary.push(format!(
            "{} {}: {} asserted checks, {} violations, {} findings",
            if report.passed() { "PASS" } else { "FAIL" },
            report.suite,
            report.checks,
            report.violations.len(),
            report.findings.len()
        ));
        failed |= !report.passed();
    }
    sink.flush()?;
    let verdict = if failed { "FAIL" } else { "PASS" };
    summary.push(format!("{verdict} (max order {max_order})"));
    for line in summary {
        if to_file {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
    Ok(if failed { Outcome::Violations } else { Outcome::Ok })
}

fn iss_report(g: &Graph, mode: IssMode, out: &mut dyn Write) -> Result<()> {
    let set_json = |s: &VertexSet| json!({"mask": s.to_binary(), "set": s.to_vec()});
    match mode {
        IssMode::Family => {
            let fam = iss_family(g)?;
            for s in &fam.members {
                writeln!(out, "{}", set_json(s))?;
            }
            let witness = fam
                .witness
                .map(|(s, t, d)| json!([set_json(&s), set_json(&t), set_json(&d)]));
            writeln!(
                out,
                "{}",
                json!({
                    "graph6": to_graph6(g),
                    "members": fam.len(),
                    "closed_under_delta": fam.closed_under_delta,
                    "witness": witness,
                })
            )?;
        }
        IssMode::Vertices => {
            let vis = vertex_iss_set(g)?;
            for v in 0..g.order() {
                writeln!(out, "{}", json!({"vertex": v, "iss": vis.contains(v)}))?;
            }
        }
        IssMode::Edges => {
            for (x, y) in g.edges() {
                writeln!(out, "{}", serde_json::to_string(&edge_iss_theorem(g, x, y)?)?)?;
            }
        }
    }
    Ok(())
}

fn read_graphs(input: &GraphInput) -> Result<Vec<Graph>> {
    if let Some(text) = &input.graph {
        return Ok(vec![from_graph6(text.trim())?]);
    }
    let mut graphs = Vec::new();
    for (k, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        graphs.push(from_graph6(line).with_context(|| format!("stdin line {}", k + 1))?);
    }
    Ok(graphs)
}

fn parse_set(text: &str, n: usize) -> Result<VertexSet> {
    let indices = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| anyhow!("bad vertex index {t:?}: {e}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexSet::from_indices(n, &indices)?)
}

fn open_sink(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}
