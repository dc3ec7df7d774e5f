//! Effectiveness and timing sweeps over generated graph pairs, CSV
//! output, and log-log least-squares estimation of the polynomial
//! degree of the runtime curve.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::compare::{match_graphs, CompareMode, Verdict};
use crate::gen::{
    derive_seed, isomorphic_pair, perturbed_pair, random_graph, GenConfig, GenError, GENERATOR_ID,
};
use crate::graph::Graph;

/// Attempts per pair slot before a perturbed sweep gives up on finding
/// a graph with a replaceable edge.
pub const PERTURB_RETRY_CAP: u32 = 32;

pub const CSV_HEADER: &str = "n,pair_kind,pairs,elapsed_ms,iso_verdicts,noniso_verdicts,seed,generator";

#[derive(Debug, Error, PartialEq)]
pub enum BenchError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("sweep bounds invalid: n_min {n_min}, n_max {n_max}, pairs_per_n {pairs_per_n}")]
    InvalidSweep {
        n_min: usize,
        n_max: usize,
        pairs_per_n: usize,
    },
    #[error("no graph with a replaceable edge found for n = {n} after {attempts} attempts")]
    PerturbRetriesExhausted { n: usize, attempts: u32 },
    #[error("need at least 3 positive-time records with n ≥ {n_min_fit}, found {found}")]
    TooFewFitPoints { n_min_fit: usize, found: usize },
    #[error("CSV line {line}: {msg}")]
    CsvParse { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Iso,
    Perturbed,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::Iso => "iso",
            PairKind::Perturbed => "perturbed",
        })
    }
}

impl FromStr for PairKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "iso" => Ok(PairKind::Iso),
            "perturbed" => Ok(PairKind::Perturbed),
            other => Err(format!("unknown pair kind {other:?}")),
        }
    }
}

/// One sweep row: all pairs of one size, their total match time, and
/// the verdict tally.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub pair_kind: PairKind,
    pub pairs: usize,
    /// Wall-clock milliseconds spent in match_graphs across all pairs
    /// at this n (monotonic timer, sub-millisecond resolution).
    pub elapsed_ms: f64,
    pub iso_verdicts: usize,
    pub noniso_verdicts: usize,
    pub seed: u64,
    pub generator: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub kind: PairKind,
    pub n_min: usize,
    pub n_max: usize,
    pub pairs_per_n: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

/// Generate `pairs_per_n` pairs for every n in the sweep range and time
/// profile-mode match_graphs over each size class. Pair generation and
/// I/O stay outside the timed section. Verdicts are deterministic given
/// the seed; elapsed times are not.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<BenchRecord>, BenchError> {
    validate(cfg)?;
    (cfg.n_min..=cfg.n_max).map(|n| sweep_one_n(cfg, n)).collect()
}

/// `run_sweep` with the size classes spread round-robin over worker
/// threads. Verdict tallies match the sequential run record for record;
/// elapsed times are contended and only suitable for accuracy sweeps,
/// never for timing measurements.
pub fn run_sweep_parallel(
    cfg: &SweepConfig,
    threads: usize,
) -> Result<Vec<BenchRecord>, BenchError> {
    validate(cfg)?;
    let threads = threads.max(1);
    let ns: Vec<usize> = (cfg.n_min..=cfg.n_max).collect();
    let per_worker: Vec<Result<Vec<BenchRecord>, BenchError>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let ns = &ns;
                s.spawn(move || {
                    ns.iter()
                        .skip(t)
                        .step_by(threads)
                        .map(|&n| sweep_one_n(cfg, n))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut records = Vec::with_capacity(ns.len());
    for worker in per_worker {
        records.extend(worker?);
    }
    records.sort_by_key(|r| r.n);
    Ok(records)
}

fn validate(cfg: &SweepConfig) -> Result<(), BenchError> {
    if cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.pairs_per_n < 1 {
        return Err(BenchError::InvalidSweep {
            n_min: cfg.n_min,
            n_max: cfg.n_max,
            pairs_per_n: cfg.pairs_per_n,
        });
    }
    if !(0.0..=1.0).contains(&cfg.edge_probability) {
        return Err(GenError::InvalidProbability(cfg.edge_probability).into());
    }
    Ok(())
}

fn sweep_one_n(cfg: &SweepConfig, n: usize) -> Result<BenchRecord, BenchError> {
    let mut pairs = Vec::with_capacity(cfg.pairs_per_n);
    for i in 0..cfg.pairs_per_n {
        pairs.push(generate_pair(cfg, n, i as u64)?);
    }

    let start = Instant::now();
    let mut iso_verdicts = 0;
    let mut noniso_verdicts = 0;
    for (g, h) in &pairs {
        match match_graphs(g, h, CompareMode::Profile).verdict {
            Verdict::Isomorphic => iso_verdicts += 1,
            Verdict::NonIsomorphic => noniso_verdicts += 1,
        }
    }
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    Ok(BenchRecord {
        n,
        pair_kind: cfg.kind,
        pairs: cfg.pairs_per_n,
        elapsed_ms,
        iso_verdicts,
        noniso_verdicts,
        seed: cfg.seed,
        generator: GENERATOR_ID.to_string(),
    })
}

fn generate_pair(cfg: &SweepConfig, n: usize, i: u64) -> Result<(Graph, Graph), BenchError> {
    match cfg.kind {
        PairKind::Iso => {
            let g = random_graph(&GenConfig {
                n,
                edge_probability: cfg.edge_probability,
                seed: derive_seed(cfg.seed, n as u64, i, 0),
            })?;
            let (h, _) = isomorphic_pair(&g, derive_seed(cfg.seed, n as u64, i, 1));
            Ok((g, h))
        }
        PairKind::Perturbed => {
            // retry with fresh sub-seeds when the drawn graph is empty
            // or complete
            for attempt in 0..PERTURB_RETRY_CAP {
                let g = random_graph(&GenConfig {
                    n,
                    edge_probability: cfg.edge_probability,
                    seed: derive_seed(cfg.seed, n as u64, i, 2 * attempt as u64),
                })?;
                match perturbed_pair(&g, derive_seed(cfg.seed, n as u64, i, 2 * attempt as u64 + 1))
                {
                    Ok(h) => return Ok((g, h)),
                    Err(GenError::NoReplaceableEdge { .. }) => continue,
                    Err(e) => return Err(e.into()),
                }
            }
            Err(BenchError::PerturbRetriesExhausted {
                n,
                attempts: PERTURB_RETRY_CAP,
            })
        }
    }
}

/// Slope and fit quality of ln(elapsed) against ln(n).
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    /// Estimated polynomial degree.
    pub slope: f64,
    /// Intercept in log-milliseconds.
    pub intercept: f64,
    pub r_squared: f64,
    /// Inclusive n bounds of the records used.
    pub n_range: (usize, usize),
    pub used_points: usize,
    /// Records at or above the cutoff dropped for non-positive time.
    pub excluded_zero: usize,
}

/// Ordinary least squares on (ln n, ln elapsed_ms) over records with
/// n ≥ `n_min_fit`. Records with non-positive elapsed time are excluded
/// and counted in the result.
pub fn loglog_fit(records: &[BenchRecord], n_min_fit: usize) -> Result<FitResult, BenchError> {
    let mut points = Vec::new();
    let mut excluded_zero = 0;
    let mut n_range = (usize::MAX, 0);
    for r in records {
        if r.n < n_min_fit {
            continue;
        }
        if r.elapsed_ms <= 0.0 {
            excluded_zero += 1;
            continue;
        }
        points.push(((r.n as f64).ln(), r.elapsed_ms.ln()));
        n_range = (n_range.0.min(r.n), n_range.1.max(r.n));
    }
    if points.len() < 3 {
        return Err(BenchError::TooFewFitPoints {
            n_min_fit,
            found: points.len(),
        });
    }

    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points
        .iter()
        .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
        .sum();
    if sxx == 0.0 {
        return Err(BenchError::TooFewFitPoints {
            n_min_fit,
            found: 1,
        });
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;

    let ss_tot: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let ss_res: f64 = points
        .iter()
        .map(|p| (p.1 - (intercept + slope * p.0)).powi(2))
        .sum();
    let r_squared = if ss_tot == 0.0 {
        // flat data fitted by a flat line
        1.0
    } else {
        1.0 - ss_res / ss_tot
    };

    Ok(FitResult {
        slope,
        intercept,
        r_squared,
        n_range,
        used_points: points.len(),
        excluded_zero,
    })
}

pub fn records_to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.n,
            r.pair_kind,
            r.pairs,
            r.elapsed_ms,
            r.iso_verdicts,
            r.noniso_verdicts,
            r.seed,
            r.generator
        ));
    }
    out
}

pub fn records_from_csv(text: &str) -> Result<Vec<BenchRecord>, BenchError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(BenchError::CsvParse {
        line: 1,
        msg: "empty document".into(),
    })?;
    if header.trim() != CSV_HEADER {
        return Err(BenchError::CsvParse {
            line: 1,
            msg: format!("unexpected header {header:?}"),
        });
    }
    let mut records = Vec::new();
    for (i, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(BenchError::CsvParse {
                line: i + 1,
                msg: format!("expected 8 fields, found {}", fields.len()),
            });
        }
        let parse = |field: &str, what: &str| -> Result<usize, BenchError> {
            field.parse().map_err(|_| BenchError::CsvParse {
                line: i + 1,
                msg: format!("invalid {what}: {field:?}"),
            })
        };
        records.push(BenchRecord {
            n: parse(fields[0], "n")?,
            pair_kind: fields[1].parse().map_err(|msg| BenchError::CsvParse {
                line: i + 1,
                msg,
            })?,
            pairs: parse(fields[2], "pairs")?,
            elapsed_ms: fields[3].parse().map_err(|_| BenchError::CsvParse {
                line: i + 1,
                msg: format!("invalid elapsed_ms: {:?}", fields[3]),
            })?,
            iso_verdicts: parse(fields[4], "iso_verdicts")?,
            noniso_verdicts: parse(fields[5], "noniso_verdicts")?,
            seed: fields[6].parse().map_err(|_| BenchError::CsvParse {
                line: i + 1,
                msg: format!("invalid seed: {:?}", fields[6]),
            })?,
            generator: fields[7].to_string(),
        });
    }
    Ok(records)
}
