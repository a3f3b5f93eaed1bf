//! Command-line front end over the library.
//!
//! Subcommands: `count`, `enum`, `search`, `verify`, `oracle-check`,
//! `bench`. Validation failures and mismatches exit nonzero with a
//! diagnostic on stderr; results go to stdout or to `--output` files.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::degseq::{self, DegSeqError, Shard};
use crate::filters::{FilterConfig, FilterMode};
use crate::oracle::{self, OracleError, MAX_BRUTE_FORCE_N};
use crate::record::{self, OutputFormat, RecordError, RecordWriter, SequenceWriter};
use crate::search::{self, SearchError, SearchRecord, RangeSummary, VALUE_EQUALITY_TOLERANCE};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Enumeration(#[from] DegSeqError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed for {0} record(s)")]
    VerifyFailed(usize),
    #[error("oracle check failed at order {0}")]
    OracleMismatch(u32),
}

/// Top-level invocation.
#[derive(Debug, Parser)]
#[command(
    name = "abc-trees",
    version,
    about = "Search for the trees of a given order with minimal atom-bond connectivity index"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum FormatArg {
    #[default]
    Jsonl,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Jsonl => OutputFormat::Jsonl,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    Strict,
    Relaxed,
    Off,
}

impl From<FilterArg> for FilterMode {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Strict => FilterMode::Strict,
            FilterArg::Relaxed => FilterMode::Relaxed,
            FilterArg::Off => FilterMode::Off,
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ShardArgs {
    /// Split the enumeration into this many shards.
    #[arg(long, requires = "shard_index")]
    pub shards: Option<u32>,
    /// Zero-based shard to run.
    #[arg(long, requires = "shards")]
    pub shard_index: Option<u32>,
}

impl ShardArgs {
    fn resolve(&self) -> Result<Option<Shard>, CliError> {
        match (self.shards, self.shard_index) {
            (None, None) => Ok(None),
            (Some(count), Some(index)) => Ok(Some(Shard::new(count, index)?)),
            _ => Err(CliError::Usage(
                "--shards and --shard-index go together".into(),
            )),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the degree sequences of trees of order n.
    Count {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        shard: ShardArgs,
    },
    /// Write every degree sequence of order n to a file.
    #[command(name = "enum")]
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Find the minimal-index trees for one order or a range of orders.
    Search(SearchArgs),
    /// Re-derive the fields of previously written records and report drift.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Cross-check small orders against brute force over all labeled trees.
    OracleCheck {
        /// Largest order to check.
        #[arg(long, default_value_t = 9)]
        max_n: u32,
    },
    /// Time the enumeration and report per-sequence cost.
    Bench {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Single order to search.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    pub n: Option<u32>,
    /// First order of a range search.
    #[arg(long, requires = "to")]
    pub from: Option<u32>,
    /// Last order of a range search.
    #[arg(long, requires = "from")]
    pub to: Option<u32>,
    /// Candidate filter; strict is sound for every order this tool reaches.
    #[arg(long, value_enum, default_value_t = FilterArg::Strict)]
    pub filter: FilterArg,
    /// Maximum-degree window radius around the previous order's winner
    /// (range searches only; marks results as heuristic).
    #[arg(long)]
    pub delta_window: Option<u32>,
    /// Record completed orders here and resume from them on rerun.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[command(flatten)]
    pub shard: ShardArgs,
    /// Destination for the result records.
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
}

/// Executes one parsed invocation.
pub fn run(cfg: RunConfig) -> Result<(), CliError> {
    match cfg.command {
        Command::Count { n, shard } => count(n, &shard),
        Command::Enumerate { n, output, format } => enumerate(n, &output, format.into()),
        Command::Search(args) => search(&args),
        Command::Verify { input } => verify(&input),
        Command::OracleCheck { max_n } => oracle_check(max_n),
        Command::Bench { from, to } => bench(from, to),
    }
}

fn count(n: u32, shard: &ShardArgs) -> Result<(), CliError> {
    let total = degseq::count(n, shard.resolve()?)?;
    println!("{n},{total}");
    Ok(())
}

fn enumerate(n: u32, output: &PathBuf, format: OutputFormat) -> Result<(), CliError> {
    let mut writer = SequenceWriter::new(BufWriter::new(File::create(output)?), format)?;
    let mut failure: Option<RecordError> = None;
    degseq::enumerate(n, None, |seq| {
        if failure.is_none() {
            if let Err(e) = writer.write(seq) {
                failure = Some(e);
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    writer.finish()?;
    Ok(())
}

fn search(args: &SearchArgs) -> Result<(), CliError> {
    let mode: FilterMode = args.filter.into();
    let shard = args.shard.resolve()?;
    match (args.n, args.from, args.to) {
        (Some(n), None, None) => {
            if args.delta_window.is_some() {
                return Err(CliError::Usage(
                    "--delta-window needs a range search; its window is seeded from the previous order".into(),
                ));
            }
            if args.checkpoint.is_some() {
                return Err(CliError::Usage(
                    "--checkpoint applies to range searches".into(),
                ));
            }
            let cfg = FilterConfig { mode, delta_window: None };
            let records: Vec<SearchRecord> = match shard {
                None => vec![search::find_min(n, &cfg)?],
                Some(s) => match search::find_min_sharded(n, &cfg, s)? {
                    Some(rec) => vec![rec],
                    None => {
                        eprintln!(
                            "note: shard {}/{} holds no candidate of order {n}; output stays empty",
                            s.index(),
                            s.count()
                        );
                        Vec::new()
                    }
                },
            };
            let out = BufWriter::new(File::create(&args.output)?);
            record::write_records(out, args.format.into(), &records)?;
            Ok(())
        }
        (None, Some(from), Some(to)) => {
            if shard.is_some() {
                return Err(CliError::Usage(
                    "sharding applies to a single order; run one process per (order, shard) instead".into(),
                ));
            }
            let mut writer =
                RecordWriter::new(BufWriter::new(File::create(&args.output)?), args.format.into())?;
            let mut failure: Option<RecordError> = None;
            let summary = search::search_range(
                from,
                to,
                mode,
                args.delta_window,
                args.checkpoint.as_deref(),
                |rec| {
                    if failure.is_none() {
                        if let Err(e) = writer.write(rec) {
                            failure = Some(e);
                        }
                    }
                },
            )?;
            if let Some(e) = failure {
                return Err(e.into());
            }
            writer.finish()?;
            print_summary(&summary);
            Ok(())
        }
        _ => Err(CliError::Usage(
            "give either --n or both --from and --to".into(),
        )),
    }
}

fn print_summary(summary: &RangeSummary) {
    println!("searched orders {}..={}", summary.from, summary.to);
    for jump in &summary.delta_jumps {
        println!(
            "delta jump: order {} (max degree {}) -> order {} (max degree {})",
            jump.n, jump.delta, jump.next_n, jump.next_delta
        );
    }
    if !summary.non_unique.is_empty() {
        println!(
            "non-unique minimum at orders: {}",
            join_ns(&summary.non_unique)
        );
    }
    if !summary.winners_with_path_3.is_empty() {
        println!(
            "winners carrying a length-3 pendant path at orders: {}",
            join_ns(&summary.winners_with_path_3)
        );
    }
    if summary.is_unremarkable() {
        println!("no delta jumps, every minimum unique");
    }
}

fn join_ns(ns: &[u32]) -> String {
    ns.iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn verify(input: &PathBuf) -> Result<(), CliError> {
    let mut text = String::new();
    BufReader::new(File::open(input)?).read_to_string(&mut text)?;
    let records = parse_any_format(&text)?;
    if records.is_empty() {
        println!("no records");
        return Ok(());
    }
    let mut failures = 0usize;
    for rec in &records {
        let issues = record::verify_record(rec);
        if issues.is_empty() {
            println!("n={} ok", rec.n);
        } else {
            failures += 1;
            for issue in issues {
                println!("n={} FAIL: {issue}", rec.n);
            }
        }
    }
    if failures > 0 {
        return Err(CliError::VerifyFailed(failures));
    }
    Ok(())
}

/// Accepts JSONL (including checkpoints with their marker) or CSV, told
/// apart by the first meaningful byte.
fn parse_any_format(text: &str) -> Result<Vec<SearchRecord>, CliError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.starts_with('{') => {
            Ok(record::read_records_jsonl(BufReader::new(text.as_bytes()))?)
        }
        Some(_) => Ok(record::read_records_csv(text.as_bytes())?),
    }
}

fn oracle_check(max_n: u32) -> Result<(), CliError> {
    if !(2..=MAX_BRUTE_FORCE_N).contains(&max_n) {
        return Err(CliError::Usage(format!(
            "--max-n must lie in 2..={MAX_BRUTE_FORCE_N}"
        )));
    }
    for n in 2..=max_n {
        let brute = oracle::min_abc_all_trees(n)?;
        let rec = search::find_min(n, &FilterConfig::off())?;
        let value_ok = (brute.abc - rec.abc_min.value()).abs() <= VALUE_EQUALITY_TOLERANCE;
        let witness = brute.witness.degree_multiset();
        let witness_ok = rec
            .winners
            .iter()
            .any(|w| w.sequence.degrees() == witness.as_slice());
        if !(value_ok && witness_ok) {
            println!(
                "n={n} MISMATCH: brute force {:.15} over {} trees vs search {}",
                brute.abc,
                brute.trees_seen,
                rec.abc_min.to_decimal_string()
            );
            return Err(CliError::OracleMismatch(n));
        }
        println!(
            "n={n} ok: minimum {} over {} labeled trees, witness among {} winner(s)",
            rec.abc_min.to_decimal_string(),
            brute.trees_seen,
            rec.winners.len()
        );
    }
    Ok(())
}

fn bench(from: u32, to: u32) -> Result<(), CliError> {
    if from < 2 || from > to {
        return Err(CliError::Usage(format!(
            "bench range must satisfy 2 <= from <= to, got {from}..={to}"
        )));
    }
    let mut out = io::stdout().lock();
    writeln!(out, "n,count,elapsed_ms,ns_per_sequence")?;
    for n in from..=to {
        let started = Instant::now();
        let total = degseq::count(n, None)?;
        let elapsed = started.elapsed();
        writeln!(
            out,
            "{n},{total},{:.3},{:.1}",
            elapsed.as_secs_f64() * 1e3,
            elapsed.as_nanos() as f64 / total as f64
        )?;
    }
    Ok(())
}
