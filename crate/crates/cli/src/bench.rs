//! Benchmark grid: sizes x algorithms x repetitions on seeded random
//! matrices, with cross-algorithm agreement checks.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use charpoly_core::{
    random_matrix_with_degree, Integers, IntegersMod, PolyOverIntegers, Rationals,
};
use clap::ValueEnum;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::compute::{run_algorithm, Algorithm, Computed};
use crate::error::CliError;
use crate::format::{Codec, RingKind, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub ring: RingSpec,
    pub sizes: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub seed: u64,
    pub lo: i64,
    pub hi: i64,
    pub reps: usize,
}

/// One timed algorithm run. `digest` hashes the characteristic polynomial
/// and determinant, or the determinant alone for determinant-only methods.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub ring: String,
    pub algorithm: String,
    pub seed: u64,
    pub rep: usize,
    pub wall_seconds: f64,
    pub full_matmul: u64,
    pub ring_mul: u64,
    pub ring_divexact: u64,
    pub digest: String,
}

/// Result of a whole grid.
#[derive(Debug, Clone)]
pub struct BenchOutcome {
    pub records: Vec<BenchRecord>,
    /// One message per cell whose algorithms disagreed.
    pub mismatches: Vec<String>,
}

/// Input seed of cell `(n, rep)`, independent of the algorithm list.
pub fn cell_seed(master: u64, n: usize, rep: usize) -> u64 {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update((n as u64).to_le_bytes());
    h.update((rep as u64).to_le_bytes());
    let bytes = h.finalize();
    u64::from_le_bytes(bytes[..8].try_into().expect("8 bytes"))
}

fn hex_sha256(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn digest_text<R: Codec>(ring: &R, out: &Computed<R>) -> String {
    let det = format!("det={}", ring.text(&out.det));
    match &out.coeffs {
        Some(coeffs) => {
            let cs: Vec<String> = coeffs.iter().map(|c| ring.text(c)).collect();
            format!("coeffs={};{det}", cs.join(","))
        }
        None => det,
    }
}

struct Cell {
    record: BenchRecord,
    det: String,
    charpoly: bool,
}

fn run_ring<R: Codec>(ring: R, cfg: &BenchConfig, degree: usize) -> Result<Vec<Cell>, CliError> {
    let label = ring.spec().to_string();
    let mut cells = Vec::new();
    for &n in &cfg.sizes {
        let inputs: Vec<_> = (0..cfg.reps)
            .map(|rep| {
                let seed = cell_seed(cfg.seed, n, rep);
                (
                    seed,
                    random_matrix_with_degree(ring.clone(), n, cfg.lo, cfg.hi, degree, seed),
                )
            })
            .collect();
        for &algorithm in &cfg.algorithms {
            for (rep, (seed, a)) in inputs.iter().enumerate() {
                let start = Instant::now();
                let out = run_algorithm(a, algorithm, None, false)?;
                let wall_seconds = start.elapsed().as_secs_f64();
                cells.push(Cell {
                    det: ring.text(&out.det),
                    charpoly: out.coeffs.is_some(),
                    record: BenchRecord {
                        n,
                        ring: label.clone(),
                        algorithm: algorithm.name().into(),
                        seed: *seed,
                        rep,
                        wall_seconds,
                        full_matmul: out.counter.full_matmul,
                        ring_mul: out.counter.ring_mul,
                        ring_divexact: out.counter.ring_divexact,
                        digest: hex_sha256(&digest_text(&ring, &out)),
                    },
                });
            }
        }
    }
    Ok(cells)
}

fn mismatches(cells: &[Cell]) -> Vec<String> {
    let mut groups: BTreeMap<(usize, usize), Vec<&Cell>> = BTreeMap::new();
    for c in cells {
        groups
            .entry((c.record.n, c.record.rep))
            .or_default()
            .push(c);
    }
    let mut out = Vec::new();
    for ((n, rep), group) in groups {
        let charpolys: Vec<&&Cell> = group.iter().filter(|c| c.charpoly).collect();
        let digest_split = charpolys
            .windows(2)
            .any(|w| w[0].record.digest != w[1].record.digest);
        let det_split = group.windows(2).any(|w| w[0].det != w[1].det);
        if digest_split || det_split {
            let detail: Vec<String> = group
                .iter()
                .map(|c| format!("{}={}", c.record.algorithm, &c.record.digest[..12]))
                .collect();
            out.push(format!("n={n} rep={rep}: {}", detail.join(" ")));
        }
    }
    out
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchOutcome, CliError> {
    if cfg.lo > cfg.hi {
        return Err(CliError::Precondition(format!(
            "--lo {} exceeds --hi {}",
            cfg.lo, cfg.hi
        )));
    }
    let modulus = cfg.ring.parsed_modulus().map_err(CliError::Precondition)?;
    let cells = match cfg.ring.kind {
        RingKind::Int => run_ring(Integers, cfg, 1)?,
        RingKind::Rational => run_ring(Rationals, cfg, 1)?,
        RingKind::Intmod => run_ring(IntegersMod::new(modulus.expect("validated"))?, cfg, 1)?,
        RingKind::Polyint => run_ring(PolyOverIntegers, cfg, 1)?,
    };
    let mismatches = mismatches(&cells);
    Ok(BenchOutcome {
        records: cells.into_iter().map(|c| c.record).collect(),
        mismatches,
    })
}

pub fn write_records(
    records: &[BenchRecord],
    emit: Emit,
    w: &mut dyn Write,
) -> std::io::Result<()> {
    match emit {
        Emit::Csv => {
            let mut wtr = csv::Writer::from_writer(w);
            if records.is_empty() {
                wtr.write_record([
                    "n",
                    "ring",
                    "algorithm",
                    "seed",
                    "rep",
                    "wall_seconds",
                    "full_matmul",
                    "ring_mul",
                    "ring_divexact",
                    "digest",
                ])?;
            }
            for r in records {
                wtr.serialize(r)?;
            }
            wtr.flush()
        }
        Emit::Json => {
            serde_json::to_writer_pretty(&mut *w, records)?;
            writeln!(w)
        }
    }
}
