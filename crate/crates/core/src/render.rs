//! Text renderings of trajectories and verdicts.
//!
//! Markdown merges runs of equal consecutive entries into one column; CSV and
//! JSON keep one record per interval and parse back to the same trajectory.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::ReducedFraction;
use crate::partition::Partition;
use crate::verify::Verdict;
use crate::wallcross::{FareyInterval, Trajectory, TrajectoryEntry};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "markdown" => Ok(OutputFormat::Markdown),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

fn d_cell(d: Option<usize>) -> String {
    d.map_or_else(|| "-".to_string(), |d| d.to_string())
}

fn table_row(label: &str, cells: impl IntoIterator<Item = String>) -> String {
    let mut line = format!("| {label} |");
    for c in cells {
        let _ = write!(line, " {c} |");
    }
    line.push('\n');
    line
}

fn separator(columns: usize) -> String {
    format!("|{}\n", "---|".repeat(columns + 1))
}

/// One trajectory as three table rows: intervals, partitions and `D`.
pub fn trajectory_markdown(t: &Trajectory) -> String {
    let groups = t.grouped();
    let mut out = table_row("Intervals", groups.iter().map(|g| g.interval.to_string()));
    out.push_str(&separator(groups.len()));
    out.push_str(&table_row(
        "Partitions",
        groups.iter().map(|g| g.partition.exponential()),
    ));
    out.push_str(&table_row("D", groups.iter().map(|g| d_cell(g.d))));
    out
}

/// Several trajectories of the same `n` over the full list of intervals,
/// with a partition row and a `D` row per start.
pub fn trajectories_markdown(ts: &[Trajectory]) -> String {
    let Some(first) = ts.first() else {
        return String::new();
    };
    let mut out = table_row(
        "Start",
        first.entries.iter().map(|e| e.interval.to_string()),
    );
    out.push_str(&separator(first.entries.len()));
    for t in ts {
        out.push_str(&table_row(
            &t.start.exponential(),
            t.entries.iter().map(|e| e.partition.exponential()),
        ));
        out.push_str(&table_row("D", t.entries.iter().map(|e| d_cell(e.d))));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRecord {
    start: String,
    lo: String,
    hi: String,
    partition: String,
    d: String,
}

/// Dense CSV with header `start,lo,hi,partition,d`.
pub fn trajectories_csv(ts: &[Trajectory]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if ts.is_empty() {
        w.write_record(["start", "lo", "hi", "partition", "d"])
            .expect("in-memory write");
    }
    for t in ts {
        for e in &t.entries {
            w.serialize(CsvRecord {
                start: t.start.to_string(),
                lo: e.interval.lo.to_string(),
                hi: e.interval.hi.to_string(),
                partition: e.partition.to_string(),
                d: d_cell(e.d),
            })
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn trajectory_csv(t: &Trajectory) -> String {
    trajectories_csv(std::slice::from_ref(t))
}

fn parse_err(reason: impl Into<String>) -> Error {
    Error::ParsePartition {
        text: String::new(),
        reason: reason.into(),
    }
}

/// Parses the output of [`trajectories_csv`], one trajectory per start.
pub fn trajectories_from_csv(text: &str) -> Result<Vec<Trajectory>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out: Vec<Trajectory> = Vec::new();
    for row in reader.deserialize::<CsvRecord>() {
        let row = row.map_err(|e| parse_err(e.to_string()))?;
        let start: Partition = row.start.parse()?;
        let entry = TrajectoryEntry {
            interval: FareyInterval {
                lo: row.lo.parse::<ReducedFraction>()?,
                hi: row.hi.parse::<ReducedFraction>()?,
            },
            partition: row.partition.parse()?,
            d: match row.d.as_str() {
                "-" => None,
                d => Some(
                    d.parse()
                        .map_err(|_| parse_err(format!("bad d value {d:?}")))?,
                ),
            },
        };
        match out.last_mut() {
            Some(t) if t.start == start && entry.interval.lo != ReducedFraction::ZERO => {
                t.entries.push(entry)
            }
            _ => out.push(Trajectory {
                n: start.size(),
                start,
                entries: vec![entry],
            }),
        }
    }
    for t in &out {
        t.validate().map_err(parse_err)?;
    }
    Ok(out)
}

pub fn trajectory_json(t: &Trajectory) -> String {
    let mut s = serde_json::to_string_pretty(t).expect("serializable");
    s.push('\n');
    s
}

pub fn trajectories_json(ts: &[Trajectory]) -> String {
    let mut s = serde_json::to_string_pretty(ts).expect("serializable");
    s.push('\n');
    s
}

pub fn render_trajectory(t: &Trajectory, format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => trajectory_markdown(t),
        OutputFormat::Csv => trajectory_csv(t),
        OutputFormat::Json => trajectory_json(t),
    }
}

pub fn render_trajectories(ts: &[Trajectory], format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => trajectories_markdown(ts),
        OutputFormat::Csv => trajectories_csv(ts),
        OutputFormat::Json => trajectories_json(ts),
    }
}

pub fn render_verdicts(vs: &[Verdict], format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => {
            let mut out = String::new();
            for v in vs {
                let _ = writeln!(out, "- {v}");
                for c in &v.counterexamples {
                    let _ = writeln!(out, "  - {c}");
                }
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "claim",
                "n_min",
                "n_max",
                "holds",
                "counterexamples",
                "elapsed_ms",
            ])
            .expect("in-memory write");
            for v in vs {
                let lo = v.n_range.first().map_or(String::new(), usize::to_string);
                let hi = v.n_range.last().map_or(String::new(), usize::to_string);
                w.write_record([
                    v.claim.to_string(),
                    lo,
                    hi,
                    v.holds.to_string(),
                    v.counterexamples.len().to_string(),
                    v.elapsed.as_millis().to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
        OutputFormat::Json => {
            let mut s = match vs {
                [single] => serde_json::to_string_pretty(single),
                _ => serde_json::to_string_pretty(vs),
            }
            .expect("serializable");
            s.push('\n');
            s
        }
    }
}
