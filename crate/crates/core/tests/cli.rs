use std::process::{Command, Output};

fn gnknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gnknot")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn every_subcommand_has_help() {
    for sub in
        ["present", "count-homs", "count-classes", "roots", "check-t", "extend", "verify-witness", "talex", "sweep", "report"]
    {
        let o = gnknot(&[sub, "--help"]);
        assert!(o.status.success(), "{sub}");
        assert!(stdout(&o).contains("--format"), "{sub}");
    }
}

#[test]
fn trefoil_into_s3() {
    let o = gnknot(&["count-homs", "--knot", "trefoil_r", "--n", "1", "--target", "S3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("12"));
    let o = gnknot(&["--format", "json", "count-homs", "--knot", "trefoil_r", "--target", "S3", "--list"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 12);
    assert_eq!(v["homs"].as_array().unwrap().len(), 12);
}

#[test]
fn shards_add_up() {
    let mut total = 0;
    for id in 0..4 {
        let o = gnknot(&["count-homs", "--knot", "sk", "--n", "2", "--target", "S4", "--shards", "4", "--shard-id", &id.to_string()]);
        total += stdout(&o).lines().next().unwrap().parse::<u64>().unwrap();
    }
    assert_eq!(total, 144);
}

#[test]
fn usage_and_capability_exits() {
    let o = gnknot(&["count-homs", "--knot", "sk"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    assert_eq!(gnknot(&["frobnicate"]).status.code(), Some(1));
    let o = gnknot(&["count-homs", "--knot", "sk", "--n", "2", "--target", "S24"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_then_report() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.toml");
    std::fs::write(
        &cfg,
        "knots = [\"SK\", \"GK\"]\nn_values = [2]\ntargets = [\"S3\", \"D5\"]\ntasks = [\"count\", \"classes\", \"structured\"]\noutput = \"out.jsonl\"\n",
    )
    .unwrap();
    let o = gnknot(&["sweep", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let results = dir.path().join("out.jsonl");
    assert_eq!(std::fs::read_to_string(&results).unwrap().lines().count(), 12);
    let r = gnknot(&["report", results.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert!(stdout(&r).contains("6 rows, 0 mismatches"), "{}", stdout(&r));
    assert_eq!(stdout(&r), stdout(&gnknot(&["report", results.to_str().unwrap()])));

    // a doctored record makes the report fail
    let text = std::fs::read_to_string(&results).unwrap();
    let mut last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    last["value"]["count"] = serde_json::json!(999);
    std::fs::write(&results, format!("{text}{last}\n")).unwrap();
    assert_eq!(gnknot(&["report", results.to_str().unwrap()]).status.code(), Some(3));

    std::fs::write(&cfg, "knots = [\"SK\"]\nn_values = [2]\ntargets = [\"S24\"]\ntasks = [\"count\"]\n").unwrap();
    assert_eq!(gnknot(&["sweep", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn presentation_from_diagram_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trefoil.txt");
    std::fs::write(&path, gnknot::diagram::right_trefoil_diagram().to_text()).unwrap();
    let o = gnknot(&["present", "--knot", "trefoil_r", "--n", "2", "--diagram-file", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rel:"));
}

#[test]
fn witness_and_talex() {
    let o = gnknot(&["verify-witness"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("CONFIRMED"));
    let o = gnknot(&["talex", "--knot", "trefoil_r", "--trivial", "5"]);
    assert_eq!(stdout(&o).trim(), "p=5 k=1 num=1 + 4*t + 1*t^2 den=1 + 4*t");
    let o = gnknot(&["talex", "--knot", "sk", "--n", "2", "--target", "SL2(3)"]);
    assert!(stdout(&o).starts_with("homs: "), "{}", stdout(&o));
}
