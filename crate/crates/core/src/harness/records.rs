use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use super::config::{KnotFamily, Task};
use crate::error::{Error, Result};

pub const ENGINE_VERSION: &str = concat!("gnknot ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BucketDigest {
    pub name: String,
    pub count: usize,
    pub undefined: usize,
    pub digest: String,
}

/// Outcome of one sweep cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecordValue {
    Count { count: u64 },
    Property { holds: bool, extensions: u64, valid: u64 },
    Talex { homs: u64, buckets: Vec<BucketDigest> },
    Skip { reason: String },
}

impl RecordValue {
    pub fn is_skip(&self) -> bool {
        matches!(self, RecordValue::Skip { .. })
    }

    /// Compact text for report tables.
    pub fn summary(&self) -> String {
        match self {
            RecordValue::Count { count } => count.to_string(),
            RecordValue::Property { holds, valid, extensions } => format!("{holds} ({valid}/{extensions})"),
            RecordValue::Talex { homs, buckets } => {
                let parts: Vec<String> =
                    buckets.iter().map(|b| format!("{}:{}:{}", b.name, b.count, &b.digest[..12.min(b.digest.len())])).collect();
                format!("{homs} homs {}", parts.join(" "))
            }
            RecordValue::Skip { reason } => format!("skip ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub knot: KnotFamily,
    pub n: u32,
    pub target: String,
    pub task: Task,
    pub value: RecordValue,
    #[serde(default)]
    pub stats: BTreeMap<String, u64>,
    /// seconds since the Unix epoch
    pub timestamp: u64,
    pub engine_version: String,
}

impl ResultRecord {
    pub fn new(knot: KnotFamily, n: u32, target: impl Into<String>, task: Task, value: RecordValue) -> Self {
        ResultRecord {
            knot,
            n,
            target: target.into(),
            task,
            value,
            stats: BTreeMap::new(),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
            engine_version: ENGINE_VERSION.to_string(),
        }
    }
}

/// Appends records, one JSON object per line.
pub fn append_records(path: &Path, records: &[ResultRecord]) -> Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut buf = String::new();
    for r in records {
        buf.push_str(&serde_json::to_string(r)?);
        buf.push('\n');
    }
    file.write_all(buf.as_bytes())?;
    Ok(())
}

pub fn read_records(path: &Path) -> Result<Vec<ResultRecord>> {
    let file = std::fs::File::open(path)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(
            serde_json::from_str(&line)
                .map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), i + 1)))?,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.jsonl");
        let records = vec![
            ResultRecord::new(KnotFamily::Square, 2, "S3", Task::Count, RecordValue::Count { count: 12 }),
            ResultRecord::new(KnotFamily::Granny, 2, "S24", Task::Count, RecordValue::Skip { reason: "too big".into() }),
            ResultRecord::new(
                KnotFamily::Square,
                3,
                "PSL2(7)",
                Task::Talex,
                RecordValue::Talex {
                    homs: 3,
                    buckets: vec![BucketDigest { name: "all".into(), count: 3, undefined: 0, digest: "ab".into() }],
                },
            ),
        ];
        append_records(&path, &records[..1]).unwrap();
        append_records(&path, &records[1..]).unwrap();
        assert_eq!(read_records(&path).unwrap(), records);
        std::fs::write(&path, "{not json}\n").unwrap();
        assert!(read_records(&path).is_err());
    }
}
