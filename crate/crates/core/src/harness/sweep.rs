use std::collections::HashMap;

use rayon::prelude::*;

use super::config::{KnotFamily, SweepConfig, Task};
use super::records::{append_records, BucketDigest, RecordValue, ResultRecord};
use crate::error::{Error, Result};
use crate::fingroups::{GroupSpec, TableGroup};
use crate::homsearch::{check_property_t, count_homs_total, enumerate_homs_sharded, orbit_count, structured_count, SearchStats};
use crate::talex::{psl27_to_sl32, sl2_natural, talex_sweep, FpMatrix};

/// Element-to-matrix table used by the talex task: the 3-dimensional form
/// over F_2 for PSL(2,7), the natural one for SL(2,p).
pub fn representation_table(spec: &GroupSpec) -> Option<Result<Vec<FpMatrix>>> {
    match spec {
        GroupSpec::Psl2(7) => Some(psl27_to_sl32()),
        GroupSpec::Sl2(p) => Some(sl2_natural(*p)),
        _ => None,
    }
}

fn skip(reason: impl Into<String>) -> RecordValue {
    RecordValue::Skip { reason: reason.into() }
}

/// Runs one (knot, n, target, task) cell.
pub fn run_cell(
    knot: KnotFamily,
    n: u32,
    spec: &GroupSpec,
    group: &TableGroup,
    task: Task,
    shards: usize,
) -> Result<ResultRecord> {
    let pres = knot.presentation(n);
    let mut stats = None;
    let value = match task {
        Task::Count => {
            let (count, parts) = count_homs_total(&pres, group, shards)?;
            stats = Some(SearchStats::merge(&parts));
            RecordValue::Count { count }
        }
        Task::Classes => {
            let homs = enumerate_homs_sharded(&pres, group, shards)?;
            RecordValue::Count { count: orbit_count(&homs, group)? as u64 }
        }
        Task::Structured => match knot.knot() {
            Some(_) => RecordValue::Count { count: structured_count(group, n)? },
            None => skip("structured count is defined for SK and GK"),
        },
        Task::PropertyT => match knot.knot() {
            Some(k) => {
                let r = check_property_t(group, n, k)?;
                RecordValue::Property { holds: r.holds, extensions: r.extensions, valid: r.valid }
            }
            None => skip("property T is defined for SK and GK"),
        },
        Task::Talex => match representation_table(spec) {
            Some(table) => {
                let sweep = talex_sweep(&pres, group, &table?, shards)?;
                let buckets = sweep
                    .buckets
                    .iter()
                    .map(|b| BucketDigest { name: b.name.clone(), count: b.count, undefined: b.undefined, digest: b.digest.clone() })
                    .collect();
                RecordValue::Talex { homs: sweep.homs as u64, buckets }
            }
            None => skip(format!("no matrix representation table for {spec}")),
        },
    };
    let mut record = ResultRecord::new(knot, n, spec.to_string(), task, value);
    if let Some(s) = stats {
        record.stats = s.as_map();
    }
    Ok(record)
}

/// Runs every cell of the config, in parallel, and returns the records in
/// config order. Capability errors become skip records; any other error
/// aborts the sweep. Records are appended to `cfg.output` if set.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<ResultRecord>> {
    cfg.validate()?;
    let groups: HashMap<&GroupSpec, std::result::Result<TableGroup, String>> = cfg
        .targets
        .iter()
        .map(|spec| match spec.build() {
            Ok(g) => Ok((spec, Ok(g))),
            Err(e) if e.is_capability() => Ok((spec, Err(e.to_string()))),
            Err(e) => Err(Error::Config(format!("target {spec}: {e}"))),
        })
        .collect::<Result<_>>()?;
    let mut cells = Vec::with_capacity(cfg.cell_count());
    for &knot in &cfg.knots {
        for &n in &cfg.n_values {
            for spec in &cfg.targets {
                for &task in &cfg.tasks {
                    cells.push((knot, n, spec, task));
                }
            }
        }
    }
    let records = cells
        .par_iter()
        .map(|&(knot, n, spec, task)| match &groups[spec] {
            Ok(group) => match run_cell(knot, n, spec, group, task, cfg.shards) {
                Err(e) if e.is_capability() => Ok(ResultRecord::new(knot, n, spec.to_string(), task, skip(e.to_string()))),
                other => other,
            },
            Err(reason) => Ok(ResultRecord::new(knot, n, spec.to_string(), task, skip(reason.clone()))),
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(path) = &cfg.output {
        append_records(path, &records)?;
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> SweepConfig {
        SweepConfig::parse(text).unwrap()
    }

    #[test]
    fn cartesian_records_and_determinism() {
        let base = "knots = [\"SK\", \"GK\"]\nn_values = [1, 2]\ntargets = [\"S3\", \"S4\"]\ntasks = [\"count\"]\n";
        let one = run_sweep(&cfg(base)).unwrap();
        assert_eq!(one.len(), 8);
        let sharded = run_sweep(&cfg(&format!("{base}shards = 5\n"))).unwrap();
        let values = |rs: &[ResultRecord]| rs.iter().map(|r| (r.knot, r.n, r.target.clone(), r.value.clone())).collect::<Vec<_>>();
        assert_eq!(values(&one), values(&sharded));
        assert!(one.iter().all(|r| r.stats.contains_key("nodes")));
    }

    #[test]
    fn oversized_target_is_skipped() {
        let records = run_sweep(&cfg("knots = [\"SK\"]\nn_values = [2]\ntargets = [\"S24\", \"Z2\"]\ntasks = [\"count\"]\n")).unwrap();
        assert!(matches!(&records[0].value, RecordValue::Skip { reason } if reason.contains("enumeration bound")));
        assert_eq!(records[1].value, RecordValue::Count { count: 2 });
    }

    #[test]
    fn output_is_appended() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("out.jsonl");
        let text = format!(
            "knots = [\"trefoil_r\"]\nn_values = [1]\ntargets = [\"S3\"]\ntasks = [\"count\", \"classes\", \"property_t\"]\noutput = {:?}\n",
            out.display().to_string()
        );
        let c = cfg(&text);
        let first = run_sweep(&c).unwrap();
        run_sweep(&c).unwrap();
        let all = super::super::records::read_records(&out).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].value, RecordValue::Count { count: 12 });
        assert_eq!(all[1].value, RecordValue::Count { count: 4 });
        assert!(all[2].value.is_skip());
        assert_eq!(all[3..].iter().map(|r| &r.value).collect::<Vec<_>>(), first.iter().map(|r| &r.value).collect::<Vec<_>>());
    }
}
