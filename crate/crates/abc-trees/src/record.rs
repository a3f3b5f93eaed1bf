//! Record serialization: JSONL, CSV, and checkpoint files.
//!
//! Both formats carry the same ten fields in the same order, one record per
//! line or row. Index values travel as decimal strings with 15 significant
//! digits from standard-precision searches and 30 from extended ones, which
//! lets a reader restore the precision regime without a side channel. A
//! checkpoint is the JSONL stream plus a terminal `#complete n=K` marker
//! and is only trusted when the marker matches its last record.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degseq::{DegSeqError, DegreeSequence};
use crate::filters::PendantProfile;
use crate::greedy::{AbcValue, FixedAbc, GreedyTree, TreeError};
use crate::search::{SearchRecord, Winner, VALUE_EQUALITY_TOLERANCE};

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("bad json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("unusable index value {0:?}")]
    BadAbc(String),
    #[error(transparent)]
    BadSequence(#[from] DegSeqError),
    #[error(transparent)]
    BadTree(#[from] TreeError),
    #[error("bad numeric field {0:?}")]
    BadNumber(String),
    #[error("inconsistent record: {0}")]
    Inconsistent(String),
    #[error("csv header {found:?} does not match the record layout")]
    BadHeader { found: String },
    #[error("checkpoint has no completion marker")]
    MissingMarker,
    #[error("bad checkpoint marker {0:?}")]
    BadMarker(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// On-disk encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

const CSV_HEADER: [&str; 10] = [
    "n",
    "abc_min",
    "degree_sequence",
    "parent_array",
    "max_degree",
    "pendant_profile",
    "unique",
    "heuristic",
    "sequences_scanned",
    "elapsed_ns",
];

/// The wire form of a record; field order here fixes the JSON key order and
/// the CSV column order.
#[derive(Debug, Serialize, Deserialize)]
struct RecordLine {
    n: u32,
    abc_min: String,
    degree_sequence: Vec<u32>,
    parent_array: Vec<i64>,
    max_degree: u32,
    pendant_profile: Vec<u32>,
    unique: bool,
    heuristic: bool,
    sequences_scanned: u64,
    elapsed_ns: u64,
}

impl RecordLine {
    fn from_record(rec: &SearchRecord) -> Self {
        let canonical = rec.canonical();
        Self {
            n: rec.n,
            abc_min: rec.abc_min.to_decimal_string(),
            degree_sequence: canonical.sequence.degrees().to_vec(),
            parent_array: canonical.tree.parent_array(),
            max_degree: rec.max_degree,
            pendant_profile: rec.pendant_profile.lengths().to_vec(),
            unique: rec.unique,
            heuristic: rec.heuristic,
            sequences_scanned: rec.sequences_scanned,
            elapsed_ns: rec.elapsed.as_nanos() as u64,
        }
    }

    fn into_record(self) -> Result<SearchRecord, RecordError> {
        let abc_min = parse_abc(&self.abc_min)?;
        let sequence = DegreeSequence::new(self.degree_sequence)?;
        let tree = GreedyTree::from_parent_array(&self.parent_array)?;
        if tree.degrees() != sequence.degrees() {
            return Err(RecordError::Inconsistent(
                "parent array does not realize the degree sequence vertex by vertex".into(),
            ));
        }
        if self.pendant_profile.windows(2).any(|w| w[0] > w[1]) {
            return Err(RecordError::Inconsistent(
                "pendant profile must be sorted ascending".into(),
            ));
        }
        let pendant_profile = if self.pendant_profile.is_empty() {
            if sequence.max_degree() > 2 {
                return Err(RecordError::Inconsistent(
                    "empty pendant profile is reserved for whole-graph paths".into(),
                ));
            }
            PendantProfile::WholeGraphPath
        } else {
            PendantProfile::Lengths(self.pendant_profile)
        };
        Ok(SearchRecord {
            n: self.n,
            abc_min,
            winners: vec![Winner { sequence, tree }],
            max_degree: self.max_degree,
            pendant_profile,
            unique: self.unique,
            heuristic: self.heuristic,
            sequences_scanned: self.sequences_scanned,
            elapsed: Duration::from_nanos(self.elapsed_ns),
        })
    }
}

fn sig_digits(s: &str) -> usize {
    let mut seen_nonzero = false;
    let mut count = 0;
    for b in s.bytes() {
        if b.is_ascii_digit() {
            if b != b'0' {
                seen_nonzero = true;
            }
            if seen_nonzero {
                count += 1;
            }
        }
    }
    count
}

fn parse_abc(s: &str) -> Result<AbcValue, RecordError> {
    let well_formed = s.bytes().filter(|&b| b == b'.').count() <= 1
        && !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_digit() || b == b'.');
    if !well_formed {
        return Err(RecordError::BadAbc(s.into()));
    }
    // More digits than a float can carry means the value came from an
    // extended-precision arbitration.
    if sig_digits(s) > 17 {
        FixedAbc::parse_decimal(s)
            .map(AbcValue::Extended)
            .ok_or_else(|| RecordError::BadAbc(s.into()))
    } else {
        s.parse::<f64>()
            .map(AbcValue::Standard)
            .map_err(|_| RecordError::BadAbc(s.into()))
    }
}

/// One record as a JSON line (no trailing newline).
pub fn serialize_record(rec: &SearchRecord) -> String {
    serde_json::to_string(&RecordLine::from_record(rec)).expect("record serialization is total")
}

/// Parses one JSON line back into a record.
///
/// The parsed record carries the canonical winner; when the original search
/// ended in a tie, the other winners are recoverable only from `unique`
/// being false, not from the file.
pub fn deserialize_record(line: &str) -> Result<SearchRecord, RecordError> {
    let parsed: RecordLine = serde_json::from_str(line)?;
    parsed.into_record()
}

/// Streaming record writer for either format.
pub struct RecordWriter<W: Write> {
    sink: RecordSink<W>,
}

enum RecordSink<W: Write> {
    Jsonl(W),
    Csv(csv::Writer<W>),
}

impl<W: Write> RecordWriter<W> {
    pub fn new(writer: W, format: OutputFormat) -> Result<Self, RecordError> {
        let sink = match format {
            OutputFormat::Jsonl => RecordSink::Jsonl(writer),
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(writer);
                w.write_record(CSV_HEADER)?;
                RecordSink::Csv(w)
            }
        };
        Ok(Self { sink })
    }

    pub fn write(&mut self, rec: &SearchRecord) -> Result<(), RecordError> {
        match &mut self.sink {
            RecordSink::Jsonl(w) => {
                writeln!(w, "{}", serialize_record(rec))?;
                Ok(())
            }
            RecordSink::Csv(w) => {
                let line = RecordLine::from_record(rec);
                w.write_record([
                    line.n.to_string(),
                    line.abc_min,
                    join(&line.degree_sequence),
                    join(&line.parent_array),
                    line.max_degree.to_string(),
                    join(&line.pendant_profile),
                    line.unique.to_string(),
                    line.heuristic.to_string(),
                    line.sequences_scanned.to_string(),
                    line.elapsed_ns.to_string(),
                ])?;
                Ok(())
            }
        }
    }

    pub fn finish(self) -> Result<(), RecordError> {
        match self.sink {
            RecordSink::Jsonl(mut w) => w.flush()?,
            RecordSink::Csv(mut w) => w.flush()?,
        }
        Ok(())
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn split_nums<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, RecordError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(' ')
        .map(|tok| tok.parse().map_err(|_| RecordError::BadNumber(tok.into())))
        .collect()
}

/// Writes records to `writer` in the given format.
pub fn write_records<W: Write>(
    writer: W,
    format: OutputFormat,
    records: &[SearchRecord],
) -> Result<(), RecordError> {
    let mut w = RecordWriter::new(writer, format)?;
    for rec in records {
        w.write(rec)?;
    }
    w.finish()
}

/// Reads JSONL records, skipping blank and `#`-comment lines.
pub fn read_records_jsonl<R: BufRead>(reader: R) -> Result<Vec<SearchRecord>, RecordError> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(deserialize_record(trimmed)?);
    }
    Ok(out)
}

/// Reads CSV records written by [`RecordWriter`].
pub fn read_records_csv<R: io::Read>(reader: R) -> Result<Vec<SearchRecord>, RecordError> {
    let mut rdr = csv::Reader::from_reader(reader);
    {
        let headers = rdr.headers()?;
        if headers.iter().ne(CSV_HEADER) {
            return Err(RecordError::BadHeader {
                found: headers.iter().collect::<Vec<_>>().join(","),
            });
        }
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row?;
        let field = |i: usize| row.get(i).unwrap_or_default();
        let num = |i: usize| -> Result<u64, RecordError> {
            field(i)
                .parse()
                .map_err(|_| RecordError::BadNumber(field(i).into()))
        };
        let flag = |i: usize| -> Result<bool, RecordError> {
            field(i)
                .parse()
                .map_err(|_| RecordError::BadNumber(field(i).into()))
        };
        let line = RecordLine {
            n: num(0)? as u32,
            abc_min: field(1).to_string(),
            degree_sequence: split_nums(field(2))?,
            parent_array: split_nums(field(3))?,
            max_degree: num(4)? as u32,
            pendant_profile: split_nums(field(5))?,
            unique: flag(6)?,
            heuristic: flag(7)?,
            sequences_scanned: num(8)?,
            elapsed_ns: num(9)?,
        };
        out.push(line.into_record()?);
    }
    Ok(out)
}

/// Rewrites the checkpoint to cover exactly `records`, atomically: the new
/// content lands under a temporary name and replaces the old file only once
/// fully written.
pub fn write_checkpoint(path: &Path, records: &[SearchRecord]) -> io::Result<()> {
    assert!(!records.is_empty(), "a checkpoint records at least one order");
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    {
        let mut file = io::BufWriter::new(fs::File::create(&tmp)?);
        for rec in records {
            writeln!(file, "{}", serialize_record(rec))?;
        }
        writeln!(file, "#complete n={}", records.last().unwrap().n)?;
        file.flush()?;
        file.get_ref().sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// Reads a checkpoint back: its records and the order claimed by the
/// completion marker. Structural validity only; range consistency is the
/// caller's business.
pub fn read_checkpoint(path: &Path) -> Result<(Vec<SearchRecord>, u32), RecordError> {
    let text = fs::read_to_string(path)?;
    let mut records = Vec::new();
    let mut marker: Option<u32> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if marker.is_some() {
            // Nothing may follow the completion marker.
            return Err(RecordError::BadMarker(line.into()));
        }
        if let Some(rest) = line.strip_prefix('#') {
            let n = rest
                .strip_prefix("complete n=")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| RecordError::BadMarker(line.into()))?;
            marker = Some(n);
        } else {
            records.push(deserialize_record(line)?);
        }
    }
    let marker = marker.ok_or(RecordError::MissingMarker)?;
    Ok((records, marker))
}

/// One degree sequence as written by the enumeration listing.
#[derive(Debug, Serialize)]
struct SequenceLine<'a> {
    n: usize,
    degree_sequence: &'a [u32],
}

/// Streaming writer for plain sequence listings.
pub struct SequenceWriter<W: Write> {
    sink: RecordSink<W>,
}

impl<W: Write> SequenceWriter<W> {
    pub fn new(writer: W, format: OutputFormat) -> Result<Self, RecordError> {
        let sink = match format {
            OutputFormat::Jsonl => RecordSink::Jsonl(writer),
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(writer);
                w.write_record(["n", "degree_sequence"])?;
                RecordSink::Csv(w)
            }
        };
        Ok(Self { sink })
    }

    pub fn write(&mut self, seq: &DegreeSequence) -> Result<(), RecordError> {
        let line = SequenceLine {
            n: seq.n(),
            degree_sequence: seq.degrees(),
        };
        match &mut self.sink {
            RecordSink::Jsonl(w) => {
                writeln!(w, "{}", serde_json::to_string(&line)?)?;
                Ok(())
            }
            RecordSink::Csv(w) => {
                w.write_record([line.n.to_string(), join(line.degree_sequence)])?;
                Ok(())
            }
        }
    }

    pub fn finish(self) -> Result<(), RecordError> {
        match self.sink {
            RecordSink::Jsonl(mut w) => w.flush()?,
            RecordSink::Csv(mut w) => w.flush()?,
        }
        Ok(())
    }
}

/// Re-derives every derived field of `rec` and reports mismatches; an empty
/// result means the record is internally consistent.
pub fn verify_record(rec: &SearchRecord) -> Vec<String> {
    let mut issues = Vec::new();
    let canonical = rec.canonical();
    if canonical.sequence.n() != rec.n as usize {
        issues.push(format!(
            "order field {} does not match the sequence length {}",
            rec.n,
            canonical.sequence.n()
        ));
        return issues;
    }
    if canonical.tree.degrees() != canonical.sequence.degrees() {
        issues.push("parent array does not realize the degree sequence".into());
        return issues;
    }
    match &rec.abc_min {
        AbcValue::Standard(v) => {
            let recomputed = crate::greedy::abc_standard_of_slice(canonical.sequence.degrees());
            if (recomputed - v).abs() > VALUE_EQUALITY_TOLERANCE {
                issues.push(format!(
                    "stored minimum {v} is off by {:e} from the recomputed value",
                    (recomputed - v).abs()
                ));
            }
        }
        AbcValue::Extended(v) => {
            let recomputed = FixedAbc::of_sequence(&canonical.sequence);
            if recomputed.abs_diff_units(v) > FixedAbc::tolerance_units(28) {
                issues.push("stored extended minimum deviates from the recomputed value".into());
            }
        }
    }
    if rec.max_degree != canonical.sequence.max_degree() {
        issues.push(format!(
            "stored maximum degree {} differs from the sequence's {}",
            rec.max_degree,
            canonical.sequence.max_degree()
        ));
    }
    let profile = crate::filters::pendant_path_profile(&canonical.tree);
    if profile != rec.pendant_profile {
        issues.push("stored pendant profile differs from the recomputed one".into());
    }
    if rec.unique && rec.winners.len() > 1 {
        issues.push("record claims a unique minimum but carries several winners".into());
    }
    issues
}
