use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::config::{KnotFamily, Task};
use super::records::{RecordValue, ResultRecord};

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SKIP: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Knot pairs whose invariants are compared: SK against GK, and the two
/// trefoils.
pub const PAIRS: [(KnotFamily, KnotFamily); 2] =
    [(KnotFamily::Square, KnotFamily::Granny), (KnotFamily::TrefoilRight, KnotFamily::TrefoilLeft)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// only one side of the pair was recorded
    Incomplete,
    /// at least one side is a skip record
    Skip,
    /// recorded for both sides but not expected to agree
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub left_knot: KnotFamily,
    pub right_knot: KnotFamily,
    pub n: u32,
    pub target: String,
    pub task: Task,
    pub left: Option<String>,
    pub right: Option<String>,
    pub status: RowStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| r.status == RowStatus::Mismatch).count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.mismatches() > 0 {
            EXIT_MISMATCH
        } else if self.rows.iter().any(|r| r.status == RowStatus::Skip) {
            EXIT_SKIP
        } else {
            EXIT_CLEAN
        }
    }
}

/// Pairs records by `(n, target, task)`; the latest record of each cell
/// wins. Property T is reported but not required to agree between knots.
pub fn compare_report(records: &[ResultRecord]) -> Report {
    let mut latest: BTreeMap<(KnotFamily, u32, String, Task), &RecordValue> = BTreeMap::new();
    for r in records {
        latest.insert((r.knot, r.n, r.target.clone(), r.task), &r.value);
    }
    let mut rows = Vec::new();
    for (lk, rk) in PAIRS {
        let mut keys: Vec<(u32, String, Task)> = latest
            .keys()
            .filter(|(k, ..)| *k == lk || *k == rk)
            .map(|(_, n, t, task)| (*n, t.clone(), *task))
            .collect();
        keys.sort();
        keys.dedup();
        for (n, target, task) in keys {
            let left = latest.get(&(lk, n, target.clone(), task)).copied();
            let right = latest.get(&(rk, n, target.clone(), task)).copied();
            let status = match (left, right) {
                (Some(a), Some(b)) if a.is_skip() || b.is_skip() => RowStatus::Skip,
                (Some(_), Some(_)) if task == Task::PropertyT => RowStatus::Info,
                (Some(a), Some(b)) if a == b => RowStatus::Match,
                (Some(_), Some(_)) => RowStatus::Mismatch,
                _ => RowStatus::Incomplete,
            };
            rows.push(ReportRow {
                left_knot: lk,
                right_knot: rk,
                n,
                target,
                task,
                left: left.map(RecordValue::summary),
                right: right.map(RecordValue::summary),
                status,
            });
        }
    }
    Report { rows }
}

fn cell(v: Option<&str>) -> String {
    match v {
        None => "-".into(),
        Some(s) if s.chars().count() > 24 => format!("{}..", s.chars().take(22).collect::<String>()),
        Some(s) => s.into(),
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<20} {:>2}  {:<10} {:<11} {:<24} {:<24} status", "pair", "n", "target", "task", "left", "right")?;
        for r in &self.rows {
            let status = match r.status {
                RowStatus::Match => "match",
                RowStatus::Mismatch => "MISMATCH",
                RowStatus::Incomplete => "incomplete",
                RowStatus::Skip => "skip",
                RowStatus::Info => "info",
            };
            writeln!(
                f,
                "{:<20} {:>2}  {:<10} {:<11} {:<24} {:<24} {status}",
                format!("{}/{}", r.left_knot, r.right_knot),
                r.n,
                r.target,
                r.task.as_str(),
                cell(r.left.as_deref()),
                cell(r.right.as_deref()),
            )?;
        }
        write!(f, "{} rows, {} mismatches", self.rows.len(), self.mismatches())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(knot: KnotFamily, n: u32, count: u64) -> ResultRecord {
        ResultRecord::new(knot, n, "S3", Task::Count, RecordValue::Count { count })
    }

    #[test]
    fn empty_report_is_clean() {
        let r = compare_report(&[]);
        assert!(r.rows.is_empty());
        assert_eq!(r.exit_code(), EXIT_CLEAN);
    }

    #[test]
    fn mismatch_is_flagged() {
        let r = compare_report(&[rec(KnotFamily::Square, 2, 10), rec(KnotFamily::Granny, 2, 11)]);
        assert_eq!(r.rows[0].status, RowStatus::Mismatch);
        assert_eq!(r.exit_code(), EXIT_MISMATCH);
    }

    #[test]
    fn match_incomplete_and_skip() {
        let mut records = vec![rec(KnotFamily::Square, 2, 10), rec(KnotFamily::Granny, 2, 10), rec(KnotFamily::Square, 3, 4)];
        let r = compare_report(&records);
        assert_eq!(r.rows.iter().map(|x| x.status).collect::<Vec<_>>(), [RowStatus::Match, RowStatus::Incomplete]);
        assert_eq!(r.exit_code(), EXIT_CLEAN);
        records.push(ResultRecord::new(KnotFamily::Granny, 3, "S3", Task::Count, RecordValue::Skip { reason: "x".into() }));
        assert_eq!(compare_report(&records).exit_code(), EXIT_SKIP);
        // the latest record of a cell wins
        records.push(rec(KnotFamily::Granny, 2, 99));
        assert_eq!(compare_report(&records).exit_code(), EXIT_MISMATCH);
        assert_eq!(compare_report(&records), compare_report(&records));
    }
}
