//! Command-line front end for `charpoly-core`: JSON matrix files, algorithm
//! dispatch and a benchmark harness with CSV or JSON output.

pub mod bench;
pub mod compute;
pub mod error;
pub mod format;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use bench::{cell_seed, run_bench, BenchConfig, BenchOutcome, BenchRecord, Emit};
pub use compute::{run_algorithm, Algorithm, Computed, OutputFormat};
pub use error::CliError;
pub use format::{
    parse_matrix_file, parse_matrix_str, serialize_matrix, AnyMatrix, Codec, MatrixFile, RingKind,
    RingSpec,
};

#[derive(Debug, Parser)]
#[command(
    name = "charpoly",
    version,
    about = "Characteristic polynomials, determinants and adjugates over exact rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one algorithm on a matrix file.
    Compute(ComputeArgs),
    /// Time algorithms on seeded random matrices.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// JSON matrix file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algorithm::Ps)]
    pub algorithm: Algorithm,
    /// Block size for ps (default floor(sqrt(n))).
    #[arg(long)]
    pub m: Option<usize>,
    /// Also print the adjugate.
    #[arg(long)]
    pub adjugate: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Also print operation counts.
    #[arg(long)]
    pub count_ops: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// int, rational, intmod:<m> or polyint.
    #[arg(long, default_value = "int")]
    pub ring: RingSpec,
    /// Comma-separated matrix sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "ps,fl,berkowitz"
    )]
    pub algorithms: Vec<Algorithm>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Smallest sampled integer.
    #[arg(long, default_value_t = -10, allow_hyphen_values = true)]
    pub lo: i64,
    /// Largest sampled integer.
    #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
    pub hi: i64,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long, value_enum, default_value_t = Emit::Csv)]
    pub emit: Emit,
    /// Write records here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Executes a parsed command line, writing results to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Compute(args) => {
            let a = parse_matrix_file(&args.input)?;
            with_matrix!(&a, m => compute::compute_and_write(
                m, args.algorithm, args.m, args.adjugate, args.output, args.count_ops, stdout
            ))
        }
        Command::Bench(args) => {
            let cfg = BenchConfig {
                ring: args.ring.clone(),
                sizes: args.sizes.clone(),
                algorithms: args.algorithms.clone(),
                seed: args.seed,
                lo: args.lo,
                hi: args.hi,
                reps: args.reps,
            };
            let outcome = run_bench(&cfg)?;
            match &args.out {
                Some(path) => {
                    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
                    let mut w = BufWriter::new(file);
                    bench::write_records(&outcome.records, args.emit, &mut w)
                        .map_err(|e| CliError::io(path, e))?;
                }
                None => bench::write_records(&outcome.records, args.emit, stdout)
                    .map_err(|e| CliError::io("<stdout>", e))?,
            }
            if outcome.mismatches.is_empty() {
                Ok(())
            } else {
                Err(CliError::Mismatch(outcome.mismatches.join("; ")))
            }
        }
    }
}
