//! Minimum search over all degree sequences of a given order.
//!
//! For each order the search walks every (optionally filtered) degree
//! sequence, evaluates its greedy tree, and keeps every candidate within a
//! small tolerance of the running minimum. When more than one candidate
//! survives, the finalists are re-evaluated in extended precision: exact
//! ties are real below order 10 (any edge at a degree-2 vertex contributes
//! exactly sqrt(1/2)), and floats alone cannot tell a tie from a near miss.

use std::path::Path;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::degseq::{self, DegSeqError, DegreeSequence, Shard};
use crate::filters::{self, DeltaWindow, FilterConfig, FilterError, FilterMode, PendantProfile,
                     PROPOSITION_FLOOR};
use crate::greedy::{self, AbcValue, FixedAbc, GreedyTree, Precision};
use crate::record;

/// Candidates within this distance of the running float minimum stay in the
/// finalist pool and trigger extended-precision arbitration.
pub const STANDARD_TIE_TOLERANCE: f64 = 1e-9;

/// Distance below which two extended-precision finalists count as tied.
pub const EXTENDED_TIE_EXPONENT: u32 = 30;

/// Tolerance for claiming two independently computed index values equal.
pub const VALUE_EQUALITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    Enumeration(#[from] DegSeqError),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error("no candidate of order {n} survived the filter")]
    NoCandidates { n: u32 },
    #[error("order range must satisfy 2 <= from <= to, got {from}..={to}")]
    BadRange { from: u32, to: u32 },
    #[error("cannot merge an empty set of shard records")]
    MergeEmpty,
    #[error("shard records to merge must all have the same order")]
    MergeMismatch,
    #[error("runs cover different orders and cannot be compared")]
    RunShapeMismatch,
    #[error("checkpoint {path}: {reason}")]
    BadCheckpoint { path: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One minimal tree: its degree sequence and greedy realization.
#[derive(Debug, Clone, PartialEq)]
pub struct Winner {
    pub sequence: DegreeSequence,
    pub tree: GreedyTree,
}

/// The outcome of one order's search.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchRecord {
    pub n: u32,
    /// Extended precision whenever tie arbitration ran.
    pub abc_min: AbcValue,
    /// Every minimal sequence, lexicographically smallest first; the first
    /// entry is the canonical winner.
    pub winners: Vec<Winner>,
    /// Maximum degree of the canonical winner.
    pub max_degree: u32,
    /// Pendant-path profile of the canonical winner.
    pub pendant_profile: PendantProfile,
    pub unique: bool,
    /// Whether an unproven pruning heuristic (the delta window) shaped the
    /// candidate set.
    pub heuristic: bool,
    /// Candidates actually evaluated, after filtering.
    pub sequences_scanned: u64,
    pub elapsed: Duration,
}

impl SearchRecord {
    pub fn canonical(&self) -> &Winner {
        &self.winners[0]
    }
}

struct ScanOutcome {
    /// `(float value, sequence)` finalists within tolerance of the minimum.
    pool: Vec<(f64, DegreeSequence)>,
    evaluated: u64,
}

fn scan(n: u32, cfg: &FilterConfig, shard: Option<Shard>) -> Result<ScanOutcome, SearchError> {
    let mut pool: Vec<(f64, DegreeSequence)> = Vec::new();
    let mut min = f64::INFINITY;
    let mut evaluated = 0u64;
    degseq::visit_sequences(n, shard, |cur| {
        let degrees = cur.current();
        if !filters::passes_counts(degrees.len(), cur.leaf_count(), cur.two_count(), degrees[0], cfg)
        {
            return;
        }
        evaluated += 1;
        let v = greedy::abc_standard_of_slice(degrees);
        if v < min {
            min = v;
            pool.retain(|(held, _)| *held <= min + STANDARD_TIE_TOLERANCE);
        }
        if v <= min + STANDARD_TIE_TOLERANCE {
            pool.push((v, DegreeSequence::from_sorted_unchecked(degrees.to_vec())));
        }
    })?;
    Ok(ScanOutcome { pool, evaluated })
}

/// Turns a finalist pool into a record. `force_extended` makes arbitration
/// run even over a single finalist, used when merging shards whose local
/// searches escalated.
fn resolve(
    n: u32,
    mut pool: Vec<(f64, DegreeSequence)>,
    force_extended: bool,
    heuristic: bool,
    sequences_scanned: u64,
    elapsed: Duration,
) -> SearchRecord {
    let min = pool.iter().map(|(v, _)| *v).fold(f64::INFINITY, f64::min);
    pool.retain(|(v, _)| *v <= min + STANDARD_TIE_TOLERANCE);
    let (abc_min, winner_seqs) = if pool.len() > 1 || force_extended {
        let exts: Vec<(FixedAbc, DegreeSequence)> = pool
            .into_iter()
            .map(|(_, s)| (FixedAbc::of_sequence(&s), s))
            .collect();
        let best = exts.iter().map(|(v, _)| v).min().unwrap().clone();
        let eps = FixedAbc::tolerance_units(EXTENDED_TIE_EXPONENT);
        let mut seqs: Vec<DegreeSequence> = exts
            .into_iter()
            .filter(|(v, _)| v.abs_diff_units(&best) <= eps)
            .map(|(_, s)| s)
            .collect();
        seqs.sort();
        (AbcValue::Extended(best), seqs)
    } else {
        let (v, s) = pool.pop().unwrap();
        (AbcValue::Standard(v), vec![s])
    };
    let unique = winner_seqs.len() == 1;
    let winners: Vec<Winner> = winner_seqs
        .into_iter()
        .map(|sequence| {
            let tree = greedy::build_greedy_tree(&sequence);
            Winner { sequence, tree }
        })
        .collect();
    let max_degree = winners[0].sequence.max_degree();
    let pendant_profile = filters::pendant_path_profile(&winners[0].tree);
    SearchRecord {
        n,
        abc_min,
        winners,
        max_degree,
        pendant_profile,
        unique,
        heuristic,
        sequences_scanned,
        elapsed,
    }
}

fn is_heuristic(n: u32, cfg: &FilterConfig) -> bool {
    cfg.delta_window.is_some() && n >= PROPOSITION_FLOOR && cfg.mode != FilterMode::Off
}

/// Finds the minimal-index trees of order `n` under `cfg`.
pub fn find_min(n: u32, cfg: &FilterConfig) -> Result<SearchRecord, SearchError> {
    let started = Instant::now();
    let outcome = scan(n, cfg, None)?;
    if outcome.pool.is_empty() {
        return Err(SearchError::NoCandidates { n });
    }
    Ok(resolve(
        n,
        outcome.pool,
        false,
        is_heuristic(n, cfg),
        outcome.evaluated,
        started.elapsed(),
    ))
}

/// Runs one shard of the order-`n` search. Returns None when the shard's
/// slice of the enumeration contains no surviving candidate.
pub fn find_min_sharded(
    n: u32,
    cfg: &FilterConfig,
    shard: Shard,
) -> Result<Option<SearchRecord>, SearchError> {
    let started = Instant::now();
    let outcome = scan(n, cfg, Some(shard))?;
    if outcome.pool.is_empty() {
        return Ok(None);
    }
    Ok(Some(resolve(
        n,
        outcome.pool,
        false,
        is_heuristic(n, cfg),
        outcome.evaluated,
        started.elapsed(),
    )))
}

/// Combines shard records of one order into the record the unsharded search
/// would produce (except for `elapsed`, which sums shard times).
///
/// Shards prune independently, so the merged pool is rebuilt from every
/// shard's winners; arbitration is re-forced when the best shard had
/// already escalated, keeping the precision tag faithful.
pub fn merge_shard_records(parts: &[SearchRecord]) -> Result<SearchRecord, SearchError> {
    if parts.is_empty() {
        return Err(SearchError::MergeEmpty);
    }
    let n = parts[0].n;
    if parts.iter().any(|p| p.n != n) {
        return Err(SearchError::MergeMismatch);
    }
    let mut pool: Vec<(f64, DegreeSequence, Precision)> = Vec::new();
    for part in parts {
        for w in &part.winners {
            pool.push((
                greedy::abc_standard_of_slice(w.sequence.degrees()),
                w.sequence.clone(),
                part.abc_min.precision(),
            ));
        }
    }
    let min = pool.iter().map(|(v, _, _)| *v).fold(f64::INFINITY, f64::min);
    let force_extended = pool
        .iter()
        .any(|(v, _, p)| *p == Precision::Extended && *v <= min + STANDARD_TIE_TOLERANCE);
    let pool: Vec<(f64, DegreeSequence)> = pool.into_iter().map(|(v, s, _)| (v, s)).collect();
    let sequences_scanned = parts.iter().map(|p| p.sequences_scanned).sum();
    let elapsed = parts.iter().map(|p| p.elapsed).sum();
    let heuristic = parts.iter().any(|p| p.heuristic);
    Ok(resolve(n, pool, force_extended, heuristic, sequences_scanned, elapsed))
}

/// A discontinuity in the winner's maximum degree between consecutive
/// orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaJump {
    pub n: u32,
    pub delta: u32,
    pub next_n: u32,
    pub next_delta: u32,
}

/// Findings accumulated over a range search.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RangeSummary {
    pub from: u32,
    pub to: u32,
    /// Consecutive orders whose maximum degree moved by more than one.
    pub delta_jumps: Vec<DeltaJump>,
    /// Orders with more than one minimal tree.
    pub non_unique: Vec<u32>,
    /// Orders (at least 10) whose winner carries a length-3 pendant path.
    pub winners_with_path_3: Vec<u32>,
}

impl RangeSummary {
    pub fn is_unremarkable(&self) -> bool {
        self.delta_jumps.is_empty() && self.non_unique.is_empty()
    }
}

/// Searches every order in `from..=to`, feeding each record to `sink` in
/// order.
///
/// `window_radius` switches on the delta-window heuristic: each order's
/// window is centered on the previous winner's maximum degree (the first
/// order searched is never windowed). With a checkpoint path, completed
/// orders are flushed after every step and a later run resumes behind the
/// last completed order, replaying restored records through `sink` first.
pub fn search_range<F: FnMut(&SearchRecord)>(
    from: u32,
    to: u32,
    mode: FilterMode,
    window_radius: Option<u32>,
    checkpoint: Option<&Path>,
    mut sink: F,
) -> Result<RangeSummary, SearchError> {
    if from < 2 || from > to {
        return Err(SearchError::BadRange { from, to });
    }
    let mut records = resume(checkpoint, from, to)?;
    for r in &records {
        sink(r);
    }
    let mut next = from + records.len() as u32;
    while next <= to {
        let window = match (window_radius, records.last()) {
            (Some(radius), Some(prev)) => Some(DeltaWindow::new(prev.max_degree, radius)?),
            _ => None,
        };
        let cfg = FilterConfig { mode, delta_window: window };
        let rec = find_min(next, &cfg)?;
        records.push(rec);
        if let Some(path) = checkpoint {
            record::write_checkpoint(path, &records)?;
        }
        sink(records.last().unwrap());
        next += 1;
    }
    Ok(summarize(from, to, &records))
}

fn summarize(from: u32, to: u32, records: &[SearchRecord]) -> RangeSummary {
    let mut summary = RangeSummary {
        from,
        to,
        ..RangeSummary::default()
    };
    for pair in records.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if a.max_degree.abs_diff(b.max_degree) > 1 {
            summary.delta_jumps.push(DeltaJump {
                n: a.n,
                delta: a.max_degree,
                next_n: b.n,
                next_delta: b.max_degree,
            });
        }
    }
    for r in records {
        if !r.unique {
            summary.non_unique.push(r.n);
        }
        if r.n >= PROPOSITION_FLOOR && r.pendant_profile.count_of(3) > 0 {
            summary.winners_with_path_3.push(r.n);
        }
    }
    summary
}

fn resume(
    checkpoint: Option<&Path>,
    from: u32,
    to: u32,
) -> Result<Vec<SearchRecord>, SearchError> {
    let Some(path) = checkpoint else {
        return Ok(Vec::new());
    };
    if !path.exists() {
        return Ok(Vec::new());
    }
    let bad = |reason: String| SearchError::BadCheckpoint {
        path: path.display().to_string(),
        reason,
    };
    let (records, marker) =
        record::read_checkpoint(path).map_err(|e| bad(e.to_string()))?;
    if records.is_empty() {
        return Err(bad("no completed orders recorded".into()));
    }
    for (i, r) in records.iter().enumerate() {
        let want = from + i as u32;
        if r.n != want {
            return Err(bad(format!(
                "expected order {want} at position {i}, found {}",
                r.n
            )));
        }
    }
    let last = records.last().unwrap().n;
    if last > to {
        return Err(bad(format!(
            "covers orders up to {last}, beyond the requested range end {to}"
        )));
    }
    if marker != last {
        return Err(bad(format!(
            "completion marker says {marker} but the last record is order {last}"
        )));
    }
    Ok(records)
}

/// One disagreement between two runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Divergence {
    /// Minimum values drifted beyond [`VALUE_EQUALITY_TOLERANCE`].
    Value { n: u32, a: String, b: String },
    /// Same minimum, structurally different winners.
    Winners { n: u32 },
}

/// Order-by-order comparison of two runs over the same orders.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivergenceReport {
    pub divergences: Vec<Divergence>,
}

impl DivergenceReport {
    pub fn agreement(&self) -> bool {
        self.divergences.is_empty()
    }
}

/// Compares two runs record by record, typically a filtered against an
/// unfiltered one.
pub fn compare_runs(a: &[SearchRecord], b: &[SearchRecord]) -> Result<DivergenceReport, SearchError> {
    if a.len() != b.len() || a.iter().zip(b).any(|(x, y)| x.n != y.n) {
        return Err(SearchError::RunShapeMismatch);
    }
    let mut report = DivergenceReport::default();
    for (x, y) in a.iter().zip(b) {
        if (x.abc_min.value() - y.abc_min.value()).abs() > VALUE_EQUALITY_TOLERANCE {
            report.divergences.push(Divergence::Value {
                n: x.n,
                a: x.abc_min.to_decimal_string(),
                b: y.abc_min.to_decimal_string(),
            });
        } else if x.canonical().sequence != y.canonical().sequence
            || x.canonical().tree != y.canonical().tree
            || x.unique != y.unique
        {
            report.divergences.push(Divergence::Winners { n: x.n });
        }
    }
    Ok(report)
}
