//! `mis` — maximal independent set toolkit.
//!
//! Exit codes: 0 success, 1 validation failure (bad graph data, capacity
//! limits), 2 usage error (bad flags or arguments).

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};

use mis_core::bound;
use mis_core::enumerate::{self, EnumAlgorithm};
use mis_core::format::{decode_graph6, encode_graph6, parse_edge_list};
use mis_core::graph::Graph;
use mis_core::verify::{sweep_all_graphs, SweepOptions};

#[derive(Parser)]
#[command(
    name = "mis",
    version,
    about = "Maximal independent set toolkit: extremal bounds, enumeration, and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the maximum number of maximal independent sets an n-vertex graph can have
    Bound {
        /// Vertex count to evaluate
        n: Option<usize>,
        /// Print "k g(k)" lines for k = 0..=N_MAX
        #[arg(long, value_name = "N_MAX")]
        table: Option<usize>,
        /// Run the sandwich, monotonicity, and product-partition checks
        #[arg(long)]
        check: bool,
    },
    /// Emit a member of a named graph family as graph6
    Generate {
        /// Family: moon-moser, complete, cycle, path, or empty
        #[arg(value_parser = Family::from_str)]
        family: Family,
        /// Vertex count
        n: usize,
    },
    /// Count maximal independent sets of one input graph
    Count {
        /// Input file, inline graph6, or omitted to read stdin
        input: Option<String>,
        #[arg(long, default_value = "pivot", value_parser = EnumAlgorithm::from_str)]
        algo: EnumAlgorithm,
        /// Also print enumeration instrumentation counters
        #[arg(long)]
        stats: bool,
        /// Force the input format instead of auto-detecting
        #[arg(long, value_parser = InputFormat::from_str)]
        format: Option<InputFormat>,
    },
    /// Print every maximal independent set, one sorted vertex list per line
    Enumerate {
        /// Input file, inline graph6, or omitted to read stdin
        input: Option<String>,
        #[arg(long, default_value = "pivot", value_parser = EnumAlgorithm::from_str)]
        algo: EnumAlgorithm,
        /// Force the input format instead of auto-detecting
        #[arg(long, value_parser = InputFormat::from_str)]
        format: Option<InputFormat>,
    },
    /// Exhaustively check the bound over every labeled graph on n vertices
    Verify {
        /// Vertex count to sweep (n <= 7; n = 8 needs --long-run)
        n: usize,
        #[arg(long, default_value = "pivot", value_parser = EnumAlgorithm::from_str)]
        algo: EnumAlgorithm,
        /// Worker threads (0 = all cores, 1 = serial reference run)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the extremal witnesses as graph6 lines to this file
        #[arg(long, value_name = "FILE")]
        witnesses: Option<PathBuf>,
        /// Allow the 2^28-graph sweep at n = 8
        #[arg(long)]
        long_run: bool,
    },
    /// Time MIS counting across a graph family; TSV on stdout
    Bench {
        #[arg(long, default_value = "moon-moser", value_parser = Family::from_str)]
        family: Family,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value = "pivot", value_parser = EnumAlgorithm::from_str)]
        algo: EnumAlgorithm,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Family {
    MoonMoser,
    Complete,
    Cycle,
    Path,
    Empty,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "moon-moser" => Ok(Family::MoonMoser),
            "complete" => Ok(Family::Complete),
            "cycle" => Ok(Family::Cycle),
            "path" => Ok(Family::Path),
            "empty" => Ok(Family::Empty),
            other => Err(format!(
                "unknown family '{other}' (expected moon-moser, complete, cycle, path, or empty)"
            )),
        }
    }
}

impl Family {
    fn build(self, n: usize) -> Result<Graph, CliError> {
        let g = match self {
            Family::MoonMoser => Graph::moon_moser(n),
            Family::Complete => Graph::complete(n),
            Family::Cycle => Graph::cycle(n),
            Family::Path => Graph::path(n),
            Family::Empty => Graph::edgeless(n),
        };
        g.map_err(|e| CliError::Validation(e.to_string()))
    }

    /// Bench stride: the Moon-Moser family grows a triangle at a time, so
    /// consecutive rows are n and n - 3; other families step by one.
    fn bench_step(self) -> usize {
        match self {
            Family::MoonMoser => 3,
            _ => 1,
        }
    }
}

#[derive(Copy, Clone, Debug)]
enum InputFormat {
    Graph6,
    EdgeList,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(InputFormat::Graph6),
            "edge-list" | "edges" => Ok(InputFormat::EdgeList),
            other => Err(format!(
                "unknown format '{other}' (expected graph6 or edge-list)"
            )),
        }
    }
}

enum CliError {
    /// Bad data: exit 1.
    Validation(String),
    /// Bad invocation: exit 2.
    Usage(String),
}

impl CliError {
    fn validation(e: impl ToString) -> CliError {
        CliError::Validation(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Bound { n, table, check } => cmd_bound(n, table, check),
        Command::Generate { family, n } => cmd_generate(family, n),
        Command::Count {
            input,
            algo,
            stats,
            format,
        } => cmd_count(input, algo, stats, format),
        Command::Enumerate {
            input,
            algo,
            format,
        } => cmd_enumerate(input, algo, format),
        Command::Verify {
            n,
            algo,
            jobs,
            witnesses,
            long_run,
        } => cmd_verify(n, algo, jobs, witnesses, long_run),
        Command::Bench {
            family,
            n_min,
            n_max,
            algo,
        } => cmd_bench(family, n_min, n_max, algo),
    }
}

// ============================================================================
// bound
// ============================================================================

fn cmd_bound(n: Option<usize>, table: Option<usize>, check: bool) -> Result<(), CliError> {
    if n.is_none() && table.is_none() && !check {
        return Err(CliError::Usage(
            "bound needs a vertex count, --table, or --check".into(),
        ));
    }
    if let Some(n) = n {
        println!("{}", bound::mis_bound(n).map_err(CliError::validation)?);
    }
    if let Some(n_max) = table {
        let mut out = String::new();
        for k in 0..=n_max {
            let value = bound::mis_bound(k).map_err(CliError::validation)?;
            writeln!(out, "{k} {value}").expect("string writes cannot fail");
        }
        print!("{out}");
    }
    if check {
        let sandwich = (4..=bound::MAX_N).all(bound::sandwich_check);
        let nondecreasing = bound::is_nondecreasing(bound::MAX_N).map_err(CliError::validation)?;
        let mut product = true;
        for k in 2..=bound::MAX_N {
            let partition = bound::max_product_partition(k).map_err(CliError::validation)?;
            product &= partition == bound::mis_bound(k).map_err(CliError::validation)?;
        }
        let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
        println!("sandwich: {}", verdict(sandwich));
        println!("nondecreasing: {}", verdict(nondecreasing));
        println!("product-partition: {}", verdict(product));
        if !(sandwich && nondecreasing && product) {
            return Err(CliError::Validation("bound self-checks failed".into()));
        }
    }
    Ok(())
}

// ============================================================================
// generate
// ============================================================================

fn cmd_generate(family: Family, n: usize) -> Result<(), CliError> {
    let g = family.build(n)?;
    println!("{}", encode_graph6(&g).map_err(CliError::validation)?);
    Ok(())
}

// ============================================================================
// count / enumerate
// ============================================================================

/// Resolves the input source: an existing file path, inline text, or
/// stdin when no argument is given. The flag says whether the text came
/// from a non-file argument, so parse failures can mention both readings.
fn read_input_text(input: Option<String>) -> Result<(String, bool), CliError> {
    match input {
        Some(arg) => {
            if Path::new(&arg).is_file() {
                let text = std::fs::read_to_string(&arg)
                    .map_err(|e| CliError::Validation(format!("reading {arg}: {e}")))?;
                Ok((text, false))
            } else {
                Ok((arg, true))
            }
        }
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Validation(format!("reading stdin: {e}")))?;
            if text.trim().is_empty() {
                return Err(CliError::Usage(
                    "no input: pass a file, an inline graph6 string, or pipe a graph to stdin"
                        .into(),
                ));
            }
            Ok((text, false))
        }
    }
}

/// Graph6 unless the first significant line is an `n <count>` edge-list
/// header (every printable graph6 header also has byte >= 63, so the
/// header line is the only reliable discriminator).
fn detect_format(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let mut tokens = first.split_whitespace();
    if tokens.next() == Some("n") && tokens.next().is_some_and(|t| t.parse::<usize>().is_ok()) {
        InputFormat::EdgeList
    } else {
        InputFormat::Graph6
    }
}

fn parse_graph(text: &str, format: Option<InputFormat>) -> Result<Graph, CliError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        InputFormat::EdgeList => parse_edge_list(text).map_err(CliError::validation),
        InputFormat::Graph6 => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let first = lines.next().ok_or_else(|| {
                CliError::Validation("empty input where a graph6 line was expected".into())
            })?;
            if lines.next().is_some() {
                return Err(CliError::Validation(
                    "input holds multiple graph6 lines; pass exactly one graph".into(),
                ));
            }
            decode_graph6(first).map_err(CliError::validation)
        }
    }
}

fn read_graph(input: Option<String>, format: Option<InputFormat>) -> Result<Graph, CliError> {
    let (text, inline_arg) = read_input_text(input)?;
    parse_graph(&text, format).map_err(|e| match e {
        CliError::Validation(msg) if inline_arg => CliError::Validation(format!(
            "argument is not an existing file and did not parse as an inline graph: {msg}"
        )),
        other => other,
    })
}

fn cmd_count(
    input: Option<String>,
    algo: EnumAlgorithm,
    stats: bool,
    format: Option<InputFormat>,
) -> Result<(), CliError> {
    let g = read_graph(input, format)?;
    if stats {
        let report = enumerate::run(&g, algo).map_err(CliError::validation)?;
        println!("{}", report.count());
        println!(
            "candidates_generated: {}",
            report.stats.candidates_generated
        );
        println!("recursive_calls: {}", report.stats.recursive_calls);
        println!("max_depth: {}", report.stats.max_depth);
    } else {
        let count = enumerate::count_mis(&g, algo).map_err(CliError::validation)?;
        println!("{count}");
    }
    Ok(())
}

fn cmd_enumerate(
    input: Option<String>,
    algo: EnumAlgorithm,
    format: Option<InputFormat>,
) -> Result<(), CliError> {
    let g = read_graph(input, format)?;
    let report = enumerate::run(&g, algo).map_err(CliError::validation)?;
    let mut out = String::new();
    for set in &report.sets {
        let mut first = true;
        for v in set.iter() {
            if !first {
                out.push(' ');
            }
            write!(out, "{v}").expect("string writes cannot fail");
            first = false;
        }
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}

// ============================================================================
// verify
// ============================================================================

fn cmd_verify(
    n: usize,
    algo: EnumAlgorithm,
    jobs: usize,
    witnesses: Option<PathBuf>,
    long_run: bool,
) -> Result<(), CliError> {
    let opts = SweepOptions {
        algo,
        jobs,
        long_run,
    };
    let cert = sweep_all_graphs(n, &opts).map_err(CliError::validation)?;
    print!("{}", cert.to_report());
    if let Some(path) = witnesses {
        let mut lines = String::new();
        for witness in &cert.extremal_witnesses {
            lines.push_str(&encode_graph6(witness).map_err(CliError::validation)?);
            lines.push('\n');
        }
        std::fs::write(&path, lines)
            .map_err(|e| CliError::Validation(format!("writing {}: {e}", path.display())))?;
    }
    Ok(())
}

// ============================================================================
// bench
// ============================================================================

fn cmd_bench(
    family: Family,
    n_min: usize,
    n_max: usize,
    algo: EnumAlgorithm,
) -> Result<(), CliError> {
    if n_min > n_max {
        return Err(CliError::Usage(format!(
            "--n-min {n_min} exceeds --n-max {n_max}"
        )));
    }
    println!("n\tcount\tseconds\tratio");
    let mut prev_seconds: Option<f64> = None;
    for n in (n_min..=n_max).step_by(family.bench_step()) {
        let g = family.build(n)?;
        let start = Instant::now();
        let count = enumerate::count_mis(&g, algo).map_err(CliError::validation)?;
        let seconds = start.elapsed().as_secs_f64();
        let ratio = match prev_seconds {
            Some(prev) if prev > 0.0 => format!("{:.3}", seconds / prev),
            _ => "-".to_string(),
        };
        println!("{n}\t{count}\t{seconds:.9}\t{ratio}");
        prev_seconds = Some(seconds);
    }
    Ok(())
}
