mod commands;
mod output;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::Value;

use commands::CliError;

/// Exact equivariant Euler characteristics and indices.
///
/// Reads one JSON request (or a JSON array of requests) from `--in`,
/// `--json` or stdin and writes the result to `--out` or stdout.
#[derive(Parser, Debug)]
#[command(name = "eqindex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args, Debug)]
struct IoArgs {
    /// Input file (defaults to stdin)
    #[arg(long = "in", global = true, value_name = "FILE", conflicts_with = "json")]
    input: Option<PathBuf>,

    /// Inline JSON input
    #[arg(long, global = true, value_name = "TEXT")]
    json: Option<String>,

    /// Output file (defaults to stdout)
    #[arg(long = "out", global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for batch input
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    /// Report timing on stderr
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Finite groups and their subgroup lattices
    #[command(subcommand)]
    Group(GroupCommand),
    /// Burnside ring arithmetic
    #[command(subcommand)]
    Burnside(BurnsideCommand),
    /// Equivariant and orbifold Euler characteristics
    #[command(subcommand)]
    Euler(EulerCommand),
    /// Equivariant indices
    #[command(subcommand)]
    Index(IndexCommand),
    /// Invertible polynomials and their diagonal symmetries
    #[command(subcommand)]
    Poly(PolyCommand),
}

#[derive(Subcommand, Debug, Clone)]
pub enum GroupCommand {
    /// Order, fingerprint and lattice sizes
    Info,
    /// Subgroups, conjugacy classes and normalizers
    Lattice,
}

#[derive(Subcommand, Debug, Clone)]
pub enum BurnsideCommand {
    /// Table of marks, or the marks of one element
    Marks,
    /// Product of two elements
    Mul,
    /// Restriction to a subgroup
    Restrict,
    /// Induction from a subgroup
    Induce,
    /// Higher-order reduction r_k
    Rk {
        #[arg(long)]
        k: usize,
    },
    /// Permutation character
    Char,
}

#[derive(Subcommand, Debug, Clone)]
pub enum EulerCommand {
    /// From orbit-type strata
    Strat,
    /// From a simplicial complex with a vertex action
    Simplicial {
        /// Replace the complex by its barycentric subdivision first
        #[arg(long)]
        subdivide: bool,
    },
    /// Higher-order Euler characteristic by commuting tuples
    Orbifold {
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum IndexCommand {
    /// From per-stratum radial indices
    FromStrata,
    /// From fixed-point indices by Möbius inversion
    Invert,
    /// Induce a local index from an isotropy subgroup
    Induce,
    /// Poincaré–Hopf check against a given characteristic
    PhCheck,
    /// GSV index from radial data or from dimension data
    Gsv,
}

#[derive(Subcommand, Debug, Clone)]
pub enum PolyCommand {
    /// Atoms, weights, Milnor number and symmetry group
    Analyze,
    /// Equivariant index of df
    Index,
    /// Consistency with the transposed polynomial
    DualCheck,
}

fn read_input(io: &IoArgs) -> io::Result<String> {
    if let Some(text) = &io.json {
        return Ok(text.clone());
    }
    match &io.input {
        Some(path) => fs::read_to_string(path),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn prefix_path(mut e: CliError, i: usize) -> CliError {
    e.path = Some(match e.path {
        Some(p) if !p.is_empty() => format!("[{i}].{p}"),
        _ => format!("[{i}]"),
    });
    e
}

fn run(command: &Command, io: &IoArgs) -> Result<(Value, bool), CliError> {
    let text = read_input(io).map_err(|e| CliError::new("io", e.to_string()))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError {
        kind: "malformed_json".into(),
        message: e.to_string(),
        path: Some(format!("line {} column {}", e.line(), e.column())),
    })?;
    match value {
        Value::Array(items) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(io.jobs as usize)
                .build()
                .map_err(|e| CliError::new("io", e.to_string()))?;
            let results: Vec<Result<Value, CliError>> = pool.install(|| {
                items
                    .par_iter()
                    .enumerate()
                    .map(|(i, item)| commands::dispatch(command, item).map_err(|e| prefix_path(e, i)))
                    .collect()
            });
            let ok = results.iter().all(Result::is_ok);
            let out = results.into_iter().map(|r| r.unwrap_or_else(|e| e.to_json())).collect();
            Ok((Value::Array(out), ok))
        }
        item => commands::dispatch(command, &item).map(|v| (v, true)),
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Tsv => output::to_tsv(value),
    }
}

fn emit(text: &str, io: &IoArgs) -> io::Result<()> {
    match &io.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let start = std::time::Instant::now();
    let (value, ok) = match run(&cli.command, &cli.io) {
        Ok(r) => r,
        Err(e) => (e.to_json(), false),
    };
    if let Err(e) = emit(&render(&value, cli.io.format), &cli.io) {
        eprintln!("eqindex: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if cli.io.verbose {
        eprintln!("eqindex: {:?} in {:.3?}", cli.command, start.elapsed());
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn unknown_subcommands_are_usage_errors() {
        let e = Cli::try_parse_from(["eqindex", "burnside", "divide"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(Cli::try_parse_from(["eqindex", "burnside", "rk"]).is_err());
        assert!(Cli::try_parse_from(["eqindex", "burnside", "rk", "--k", "2"]).is_ok());
        assert!(Cli::try_parse_from(["eqindex", "poly", "analyze", "--jobs", "0"]).is_err());
    }

    #[test]
    fn batch_paths_are_prefixed() {
        let e = prefix_path(CliError::new("x", "y"), 3);
        assert_eq!(e.path.as_deref(), Some("[3]"));
        let mut e = CliError::new("x", "y");
        e.path = Some("E[0]".into());
        assert_eq!(prefix_path(e, 1).path.as_deref(), Some("[1].E[0]"));
    }

    #[test]
    fn errors_render_as_objects() {
        let v = CliError::new("unknown_label", "no such subgroup").to_json();
        assert_eq!(
            v,
            json!({"error": {"kind": "unknown_label", "message": "no such subgroup"}})
        );
    }
}
