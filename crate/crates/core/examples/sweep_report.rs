//! A small sweep written to a results file, then compared pairwise.
use gnknot::harness::{compare_report, read_records, run_sweep, SweepConfig};

fn main() -> gnknot::Result<()> {
    let out = std::env::temp_dir().join("gnknot_example_sweep.jsonl");
    let _ = std::fs::remove_file(&out);
    let mut cfg = SweepConfig::parse(
        r#"
        knots = ["SK", "GK", "trefoil_r", "trefoil_l"]
        n_values = [1, 2]
        targets = ["S3", "D5", "S24"]
        tasks = ["count", "classes", "property_t"]
        shards = 2
        "#,
    )?;
    cfg.output = Some(out.clone());
    run_sweep(&cfg)?;
    let report = compare_report(&read_records(&out)?);
    println!("{report}");
    println!("exit code {}", report.exit_code());
    Ok(())
}
