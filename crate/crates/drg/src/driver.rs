//! Parallel enumeration with resumable, byte-identical output.
//!
//! Work units are processed in batches on a rayon pool and written in unit
//! order, so the output never depends on the worker count. After a batch
//! the driver may write a checkpoint recording how many units and output
//! bytes are final; resuming truncates the output to that length and
//! carries on from the next unit.

use std::fs::{self, OpenOptions};
use std::io::{Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use drg_core::enumerate::{
    census_constraints, enumerate_unit, CensusSummary, Emitted, Enumeration,
    EnumerationConstraints, EnumerationStats, WorkUnit,
};
use drg_core::graphcheck::{assemble, check_source, reference_numbers, Certification, Graph, GraphError};
use drg_core::Rational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::io::{read_json, write_atomic};
use crate::json::ArrayRecord;
use crate::DrgError;

pub const CHECKPOINT_DIR_ENV: &str = "DRG_CHECKPOINT_DIR";
const CHECKPOINT_VERSION: u32 = 1;

/// Hex SHA-256 of the canonical JSON form of `cons`.
pub fn constraints_hash(cons: &EnumerationConstraints) -> String {
    let bytes = serde_json::to_vec(cons).expect("constraints serialise");
    hex::encode(Sha256::digest(&bytes))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    pub constraints_hash: String,
    /// Units completed; the search resumes at this index.
    pub next_unit: usize,
    /// Key prefix of the next unit, for people reading the file.
    pub cursor: Option<Vec<u32>>,
    pub output_bytes: u64,
    pub complete: bool,
    pub stats: EnumerationStats,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    /// Stop after this many units in total, as if interrupted.
    pub unit_limit: Option<usize>,
    pub every_visited: u64,
    pub every: Duration,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            workers: 1,
            checkpoint: None,
            resume: false,
            unit_limit: None,
            every_visited: 1_000_000,
            every: Duration::from_secs(30),
        }
    }
}

/// Checkpoint path from the explicit flag, else from the environment
/// directory keyed by constraint hash.
pub fn default_checkpoint(cons: &EnumerationConstraints, explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| {
        std::env::var_os(CHECKPOINT_DIR_ENV)
            .map(|dir| Path::new(&dir).join(format!("{}.checkpoint.json", constraints_hash(cons))))
    })
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

type UnitResult = (Vec<Emitted>, EnumerationStats);

fn run_batch(pool: &rayon::ThreadPool, cons: &EnumerationConstraints, units: &[WorkUnit]) -> Vec<UnitResult> {
    pool.install(|| {
        units
            .par_iter()
            .map(|&u| {
                let mut out = Vec::new();
                let stats = enumerate_unit(cons, u, |e| out.push(e));
                (out, stats)
            })
            .collect()
    })
}

/// Whole search in memory, ordered as the serial run.
pub fn parallel_enumerate(cons: &EnumerationConstraints, workers: usize) -> Result<Enumeration, DrgError> {
    cons.validate()?;
    let units = cons.work_units();
    let mut run = Enumeration::default();
    for (emitted, stats) in run_batch(&pool(workers), cons, &units) {
        run.emitted.extend(emitted);
        run.stats.merge(&stats);
    }
    Ok(run)
}

pub fn run_census(c: Rational, d: usize, k_max: u32, workers: usize) -> Result<CensusSummary, DrgError> {
    if c <= Rational::ZERO {
        return Err(DrgError::Usage("C must be positive".into()));
    }
    let cons = census_constraints(c, d, k_max);
    let run = if k_max < 3 {
        Enumeration::default()
    } else {
        parallel_enumerate(&cons, workers)?
    };
    Ok(CensusSummary::from_run(&cons, run))
}

/// Streams JSON lines to `out` without checkpointing.
pub fn run_to_writer(
    cons: &EnumerationConstraints,
    out: &mut impl Write,
    workers: usize,
) -> Result<EnumerationStats, DrgError> {
    cons.validate()?;
    let units = cons.work_units();
    let pool = pool(workers);
    let mut stats = EnumerationStats::default();
    let batch = (workers.max(1) * 4).max(8);
    for chunk in units.chunks(batch) {
        for (emitted, s) in run_batch(&pool, cons, chunk) {
            for e in &emitted {
                out.write_all(ArrayRecord::line(e).as_bytes())
                    .map_err(DrgError::io("<output>"))?;
            }
            stats.merge(&s);
        }
    }
    out.flush().map_err(DrgError::io("<output>"))?;
    Ok(stats)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunSummary {
    pub stats: EnumerationStats,
    pub units_done: usize,
    pub total_units: usize,
    pub complete: bool,
}

/// Runs into the file `out`, checkpointing to `opts.checkpoint`.
pub fn run_to_file(
    cons: &EnumerationConstraints,
    out_path: &Path,
    opts: &RunOptions,
) -> Result<RunSummary, DrgError> {
    cons.validate()?;
    let hash = constraints_hash(cons);
    let units = cons.work_units();

    let (mut next, mut stats, mut out) = match (&opts.checkpoint, opts.resume) {
        (Some(cp_path), true) => {
            let cp: Checkpoint = read_json(cp_path)?;
            if cp.constraints_hash != hash {
                return Err(DrgError::HashMismatch {
                    expected: hash,
                    found: cp.constraints_hash,
                });
            }
            let mut f = OpenOptions::new()
                .read(true)
                .write(true)
                .open(out_path)
                .map_err(DrgError::io(out_path))?;
            let len = f.metadata().map_err(DrgError::io(out_path))?.len();
            if len < cp.output_bytes {
                return Err(DrgError::TruncatedOutput {
                    path: out_path.into(),
                    expected: cp.output_bytes,
                    found: len,
                });
            }
            f.set_len(cp.output_bytes).map_err(DrgError::io(out_path))?;
            f.seek(SeekFrom::End(0)).map_err(DrgError::io(out_path))?;
            (cp.next_unit, cp.stats, f)
        }
        (None, true) => return Err(DrgError::Usage("--resume needs a checkpoint path".into())),
        _ => {
            let f = fs::File::create(out_path).map_err(DrgError::io(out_path))?;
            (0, EnumerationStats::default(), f)
        }
    };

    let stop = opts.unit_limit.unwrap_or(usize::MAX).min(units.len());
    let pool = pool(opts.workers);
    let batch = (opts.workers.max(1) * 4).max(8);
    let mut bytes = out.stream_position().map_err(DrgError::io(out_path))?;
    let mut last = Instant::now();
    let mut visited_at_last = stats.visited;

    let save = |next: usize, bytes: u64, stats: &EnumerationStats, out: &mut fs::File| -> Result<(), DrgError> {
        let Some(cp_path) = &opts.checkpoint else {
            return Ok(());
        };
        out.sync_data().map_err(DrgError::io(out_path))?;
        let cp = Checkpoint {
            version: CHECKPOINT_VERSION,
            constraints_hash: hash.clone(),
            next_unit: next,
            cursor: units.get(next).map(WorkUnit::key_prefix),
            output_bytes: bytes,
            complete: next >= units.len(),
            stats: stats.clone(),
        };
        let doc = serde_json::to_vec_pretty(&cp).expect("checkpoint serialises");
        write_atomic(cp_path, &doc)
    };

    while next < stop {
        let end = (next + batch).min(stop);
        for (emitted, s) in run_batch(&pool, cons, &units[next..end]) {
            for e in &emitted {
                let line = ArrayRecord::line(e);
                out.write_all(line.as_bytes()).map_err(DrgError::io(out_path))?;
                bytes += line.len() as u64;
            }
            stats.merge(&s);
        }
        next = end;
        if stats.visited - visited_at_last >= opts.every_visited || last.elapsed() >= opts.every {
            save(next, bytes, &stats, &mut out)?;
            last = Instant::now();
            visited_at_last = stats.visited;
        }
    }
    save(next, bytes, &stats, &mut out)?;
    out.flush().map_err(DrgError::io(out_path))?;
    Ok(RunSummary {
        stats,
        units_done: next,
        total_units: units.len(),
        complete: next >= units.len(),
    })
}

/// Certification with sources split across `workers` threads. The witness
/// is the one from the smallest failing source, as in the serial check.
pub fn certify_parallel(g: &Graph, workers: usize) -> Result<Certification, GraphError> {
    let reference = reference_numbers(g)?;
    let witness = pool(workers).install(|| {
        (0..g.order())
            .into_par_iter()
            .find_map_first(|x| check_source(g, x, &reference))
    });
    assemble(&reference, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use drg_core::bounds::RatioKind;
    use drg_core::graphcheck::{certify, generators};

    fn small() -> EnumerationConstraints {
        EnumerationConstraints::new(3, 6, 1, 5)
    }

    fn full_bytes(cons: &EnumerationConstraints, workers: usize) -> Vec<u8> {
        let mut buf = Vec::new();
        run_to_writer(cons, &mut buf, workers).unwrap();
        buf
    }

    #[test]
    fn workers_do_not_change_output() {
        let cons = small();
        assert_eq!(full_bytes(&cons, 1), full_bytes(&cons, 4));
    }

    #[test]
    fn resume_reproduces_tail() {
        let cons = small();
        let full = full_bytes(&cons, 2);
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("out.jsonl");
        let cp = dir.path().join("cp.json");
        let mut opts = RunOptions {
            workers: 2,
            checkpoint: Some(cp.clone()),
            unit_limit: Some(9),
            ..RunOptions::default()
        };
        let partial = run_to_file(&cons, &out, &opts).unwrap();
        assert!(!partial.complete);
        let head = fs::read(&out).unwrap();
        assert!(full.starts_with(&head));
        // Garbage after the checkpointed length is discarded on resume.
        fs::OpenOptions::new().append(true).open(&out).unwrap().write_all(b"{\"torn").unwrap();
        opts.unit_limit = None;
        opts.resume = true;
        let done = run_to_file(&cons, &out, &opts).unwrap();
        assert!(done.complete);
        assert_eq!(fs::read(&out).unwrap(), full);

        let mut whole = Vec::new();
        let stats = run_to_writer(&cons, &mut whole, 1).unwrap();
        assert_eq!(done.stats, stats);

        let again = run_to_file(&cons, &out, &opts).unwrap();
        assert_eq!(again.stats, stats);
        assert_eq!(fs::read(&out).unwrap(), full);
    }

    #[test]
    fn edited_constraints_rejected() {
        let cons = small();
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("out.jsonl");
        let cp = dir.path().join("cp.json");
        let opts = RunOptions {
            checkpoint: Some(cp.clone()),
            unit_limit: Some(3),
            ..RunOptions::default()
        };
        run_to_file(&cons, &out, &opts).unwrap();
        let edited = small().with_ratio_cap(RatioKind::K2OverK, Rational::from_int(2));
        let resume = RunOptions { resume: true, ..opts };
        assert!(matches!(run_to_file(&edited, &out, &resume), Err(DrgError::HashMismatch { .. })));
    }

    #[test]
    fn parallel_certify_agrees() {
        for g in [generators::petersen(), generators::hypercube(4).unwrap()] {
            assert_eq!(certify_parallel(&g, 3).unwrap(), certify(&g).unwrap());
        }
        let q = generators::hypercube(3).unwrap();
        let broken = Graph::from_edges(8, q.edges().skip(2)).unwrap();
        assert_eq!(certify_parallel(&broken, 3).unwrap(), certify(&broken).unwrap());
    }
}
