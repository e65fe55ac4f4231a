//! Command-line front end. Exit codes: 0 success/valid, 1 invalid word,
//! 2 usage, parse or I/O error. Diagnostics go to stderr only.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ucycle::count::{bounds, enumerate_ucycles, spanning_tree_count, Multigraph};
use ucycle::generate::{parse_word, SymbolReader, WordWriter};
use ucycle::treebuild::{build_tree, write_graphviz, write_records};
use ucycle::verify::{verify, StreamVerifier, VerifyReport};
use ucycle::WordFormat;

/// Words and trees at or above this `n` are streamed, never held in memory.
const STREAM_FROM: usize = 10;
/// Big integers with more bits than this are reported by size only.
const MAX_PRINTED_BITS: u64 = 100_000;

#[derive(Parser)]
#[command(
    name = "ucycle",
    version,
    about = "Universal cycles for permutations over {0, ..., n}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Spaced,
    Compact,
    Records,
    Graphviz,
}

#[derive(Subcommand)]
enum Command {
    /// Write a universal cycle for S_n.
    Generate {
        #[arg(long)]
        n: usize,
        /// One digit per symbol (n <= 9).
        #[arg(long)]
        compact: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a word read from a file or stdin.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Export the link tree for n >= 5.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        graphviz: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact lower and upper bounds on the number of normalized cycles.
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive count of normalized cycles for n = 3, 4.
    Census {
        #[arg(long)]
        n: usize,
        /// Include the words in the report.
        #[arg(long)]
        words: bool,
    },
    /// Count spanning trees of a graph in edge-list format.
    Stcount {
        #[arg(long)]
        graph: PathBuf,
    },
}

/// Error that maps to exit code 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Fail>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Generate {
            n,
            compact,
            format,
            output,
        } => cmd_generate(n, compact, format, output),
        Command::Verify { n, input } => cmd_verify(n, input),
        Command::Tree {
            n,
            graphviz,
            format,
            output,
        } => cmd_tree(n, graphviz, format, output),
        Command::Bounds { n } => cmd_bounds(n),
        Command::Census { n, words } => cmd_census(n, words),
        Command::Stcount { graph } => cmd_stcount(graph),
    };
    match result {
        Ok(code) => code,
        Err(Fail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn open_output(path: Option<PathBuf>) -> Result<Box<dyn Write>, Fail> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn open_input(path: Option<PathBuf>) -> Result<Box<dyn BufRead>, Fail> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin().lock())),
    })
}

fn cmd_generate(
    n: usize,
    compact: bool,
    format: Option<Format>,
    output: Option<PathBuf>,
) -> CmdResult {
    let format = match (compact, format) {
        (true, None | Some(Format::Compact)) | (false, Some(Format::Compact)) => {
            WordFormat::Compact
        }
        (false, None | Some(Format::Spaced)) => WordFormat::Spaced,
        _ => return Err(Fail("generate supports --format spaced or compact".into())),
    };
    if n < 3 {
        return Err(Fail(format!(
            "n = {n}: universal cycles over 0..=n need n >= 3"
        )));
    }
    let out = open_output(output)?;
    let mut writer = WordWriter::new(out, format, n)?;
    let mut io_err = None;
    let len = if n >= STREAM_FROM {
        ucycle::stream(n, |s| {
            if io_err.is_none() {
                io_err = writer.push(s).err();
            }
        })?
    } else {
        let word = ucycle::generate(n)?;
        for &s in word.symbols() {
            writer.push(s)?;
        }
        word.len() as u64
    };
    if let Some(e) = io_err {
        return Err(e.into());
    }
    writer.finish()?;
    eprintln!("n = {n}, length = {len}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(n: usize, input: Option<PathBuf>) -> CmdResult {
    let mut reader = open_input(input)?;
    let report: VerifyReport = if n >= STREAM_FROM {
        let mut v = StreamVerifier::new(n);
        for s in SymbolReader::new(reader) {
            v.push(s?);
        }
        v.finish()
    } else {
        let mut text = String::new();
        reader.read_to_string(&mut text)?;
        verify(n, &parse_word(&text)?)
    };
    if report.valid {
        eprintln!("valid: n = {n}, {} patterns", report.patterns_seen);
        Ok(ExitCode::SUCCESS)
    } else {
        let why = report
            .first_failure
            .map(|f| f.to_string())
            .unwrap_or_default();
        eprintln!("invalid: {why} ({} patterns seen)", report.patterns_seen);
        Ok(ExitCode::from(1))
    }
}

fn cmd_tree(
    n: usize,
    graphviz: bool,
    format: Option<Format>,
    output: Option<PathBuf>,
) -> CmdResult {
    let graphviz = match (graphviz, format) {
        (_, Some(Format::Graphviz)) | (true, None) => true,
        (false, None | Some(Format::Records)) => false,
        _ => return Err(Fail("tree supports --format records or graphviz".into())),
    };
    if !(5..=STREAM_FROM).contains(&n) {
        return Err(Fail(format!(
            "tree export supports 5 <= n <= {STREAM_FROM}"
        )));
    }
    let tree = build_tree(n)?;
    let mut out = open_output(output)?;
    if graphviz {
        write_graphviz(&tree, &mut out)?;
    } else {
        write_records(&tree, &mut out)?;
    }
    out.flush()?;
    eprintln!(
        "n = {n}, {} vertices, {} edges",
        tree.len(),
        tree.edges().len()
    );
    Ok(ExitCode::SUCCESS)
}

fn big(v: &num_bigint::BigUint) -> Value {
    if v.bits() <= MAX_PRINTED_BITS {
        Value::String(v.to_string())
    } else {
        Value::Null
    }
}

fn print_json(v: &Value) -> Result<(), Fail> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_bounds(n: usize) -> CmdResult {
    let b = bounds(n)?;
    print_json(&json!({
        "n": n,
        "lower": b.lower.as_ref().map(big),
        "lower_bits": b.lower.as_ref().map(|l| l.bits()),
        "upper": big(&b.upper),
        "upper_bits": b.upper.bits(),
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(n: usize, with_words: bool) -> CmdResult {
    let census = enumerate_ucycles(n)?;
    let all_verified = census.words.iter().all(|w| verify(n, w).valid);
    let b = bounds(n)?;
    let mut report = json!({
        "n": n,
        "exact_count": census.count,
        "lower": b.lower.as_ref().map(big),
        "upper": big(&b.upper),
        "all_verified": all_verified,
    });
    if with_words {
        let words: Vec<String> = census
            .words
            .iter()
            .map(|w| w.iter().map(|d| char::from(b'0' + d)).collect())
            .collect();
        report["words"] = json!(words);
    }
    print_json(&report)?;
    Ok(if all_verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_stcount(path: PathBuf) -> CmdResult {
    let g = Multigraph::parse_edge_list(BufReader::new(File::open(path)?))?;
    let count = spanning_tree_count(&g);
    print_json(&json!({
        "vertices": g.vertices,
        "edges": g.edges.len(),
        "spanning_trees": count.to_string(),
    }))?;
    Ok(ExitCode::SUCCESS)
}
