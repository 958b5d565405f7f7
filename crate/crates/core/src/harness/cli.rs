use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use super::config::{KnotFamily, SweepConfig};
use super::records::read_records;
use super::report::{compare_report, EXIT_SKIP, EXIT_USAGE};
use super::sweep::{representation_table, run_sweep};
use crate::diagram::{gn_from_diagram, granny_knot_diagram, left_trefoil_diagram, right_trefoil_diagram, square_knot_diagram, KnotDiagram};
use crate::error::{Error, Result};
use crate::fingroups::{root_table, FiniteGroup, GroupSpec, TableGroup};
use crate::homsearch::{
    check_property_t, count_homs, count_homs_total, enumerate_homs_sharded, extend_g1_hom, orbit_count, verify_paper_witness,
    SearchStats, SubgroupImages,
};
use crate::presentation::{base_subgroup_presentation, Knot, Presentation};
use crate::talex::{talex_sweep, twisted_alexander, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "gnknot", version, about = "Generalized knot groups G_n(K) and their finite quotients")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct KnotArgs {
    /// trefoil_r, trefoil_l, sk or gk
    #[arg(long)]
    knot: String,
    #[arg(long, default_value_t = 1)]
    n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a presentation of G_n(K)
    Present {
        #[command(flatten)]
        k: KnotArgs,
        /// Build from the knot diagram instead of the reduced presentation
        #[arg(long)]
        diagram: bool,
        /// Build from a diagram file (`arcs N` then `+ over in out` lines)
        #[arg(long, conflicts_with = "diagram")]
        diagram_file: Option<PathBuf>,
    },
    /// Count homomorphisms G_n(K) -> target
    CountHoms {
        #[command(flatten)]
        k: KnotArgs,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Count a single shard instead of all of them
        #[arg(long)]
        shard_id: Option<usize>,
        /// Also list the homomorphisms
        #[arg(long)]
        list: bool,
    },
    /// Count conjugacy classes of homomorphisms G_n(K) -> target
    CountClasses {
        #[command(flatten)]
        k: KnotArgs,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
    /// n-th root sets in a target group
    Roots {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Only this element (as printed by the group, e.g. `(1,2,3)`)
        #[arg(long)]
        element: Option<String>,
    },
    /// Check property T(n, K) for a target group
    CheckT {
        #[command(flatten)]
        k: KnotArgs,
        #[arg(long)]
        target: String,
    },
    /// Extend a hom of <D,B,E> through every n-th root of D
    Extend {
        #[command(flatten)]
        k: KnotArgs,
        #[arg(long)]
        target: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        e: String,
    },
    /// Check the S_24 counterexample to property T(2, SK)
    VerifyWitness,
    /// Twisted Alexander invariants over a matrix representation
    Talex {
        #[command(flatten)]
        k: KnotArgs,
        /// PSL2(7) (3-dim over F_2) or SL2(p) (natural); ignored with --trivial
        #[arg(long, default_value = "PSL2(7)")]
        target: String,
        /// Use the trivial 1-dim representation over F_p instead
        #[arg(long)]
        trivial: Option<u32>,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Print the sorted invariant lines of the `all` bucket
        #[arg(long)]
        lines: bool,
    },
    /// Run a sweep config and append its records
    Sweep {
        config: PathBuf,
        /// Results file (overrides the config's `output`)
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare SK/GK (and trefoil) records from a results file
    Report { input: PathBuf },
}

fn knot_family(s: &str) -> Result<KnotFamily> {
    s.parse()
}

fn connected_sum(s: &str) -> Result<Knot> {
    knot_family(s)?.knot().ok_or_else(|| Error::Parse(format!("{s}: expected sk or gk")))
}

fn target(s: &str) -> Result<(GroupSpec, TableGroup)> {
    let spec: GroupSpec = s.parse()?;
    let g = spec.build()?;
    Ok((spec, g))
}

fn element(g: &TableGroup, label: &str) -> Result<u32> {
    g.find_label(label).ok_or_else(|| Error::Parse(format!("{label:?} is not an element of {}", g.name())))
}

fn builtin_diagram(k: KnotFamily) -> KnotDiagram {
    match k {
        KnotFamily::TrefoilRight => right_trefoil_diagram(),
        KnotFamily::TrefoilLeft => left_trefoil_diagram(),
        KnotFamily::Square => square_knot_diagram(),
        KnotFamily::Granny => granny_knot_diagram(),
    }
}

fn stats_text(s: &SearchStats) -> String {
    s.to_string()
}

/// Runs the command line and returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_capability() {
                EXIT_SKIP
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, text: &str, value: serde_json::Value) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{text}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?,
    }
    Ok(())
}

fn presentation_json(p: &Presentation) -> serde_json::Value {
    json!({
        "label": p.label(),
        "n": p.n(),
        "gens": p.gens().names(),
        "relators": p.relators().iter().map(|r| p.gens().format(r)).collect::<Vec<_>>(),
    })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let fmt = cli.format;
    match &cli.command {
        Command::Present { k, diagram, diagram_file } => {
            let family = knot_family(&k.knot)?;
            let p = if let Some(path) = diagram_file {
                gn_from_diagram(&KnotDiagram::parse(&std::fs::read_to_string(path)?)?, k.n)?
            } else if *diagram {
                gn_from_diagram(&builtin_diagram(family), k.n)?
            } else {
                family.presentation(k.n)
            };
            emit(out, fmt, &p.to_string(), presentation_json(&p))?;
        }
        Command::CountHoms { k, target: t, shards, shard_id, list } => {
            let p = knot_family(&k.knot)?.presentation(k.n);
            let (_, g) = target(t)?;
            let (count, stats) = match shard_id {
                Some(id) => count_homs(&p, &g, *shards, *id)?,
                None => {
                    let (c, parts) = count_homs_total(&p, &g, *shards)?;
                    (c, SearchStats::merge(&parts))
                }
            };
            let mut text = format!("{count}\n{}", stats_text(&stats));
            let mut homs_json = Vec::new();
            if *list {
                let homs = enumerate_homs_sharded(&p, &g, *shards)?;
                for h in homs.iter().filter(|h| shard_id.is_none_or(|id| h.images[0] as usize % shards == id)) {
                    text.push('\n');
                    text.push_str(&h.format(&p, &g));
                    homs_json.push(h.format(&p, &g));
                }
            }
            emit(out, fmt, &text, json!({ "count": count, "stats": stats, "homs": homs_json }))?;
        }
        Command::CountClasses { k, target: t, shards } => {
            let p = knot_family(&k.knot)?.presentation(k.n);
            let (_, g) = target(t)?;
            let homs = enumerate_homs_sharded(&p, &g, *shards)?;
            let classes = orbit_count(&homs, &g)?;
            emit(out, fmt, &classes.to_string(), json!({ "classes": classes, "homs": homs.len() }))?;
        }
        Command::Roots { target: t, n, element: e } => {
            let (_, g) = target(t)?;
            let table = root_table(&g, *n)?;
            let rows: Vec<(u32, Vec<u32>)> = match e {
                Some(label) => {
                    let h = element(&g, label)?;
                    vec![(h, table.roots(&h).to_vec())]
                }
                None => table.iter().map(|(h, r)| (*h, r.clone())).collect(),
            };
            let text: Vec<String> = rows
                .iter()
                .map(|(h, r)| {
                    let roots: Vec<&str> = r.iter().map(|x| g.label(*x)).collect();
                    format!("{}: {} [{}]", g.label(*h), r.len(), roots.join(", "))
                })
                .collect();
            let value: Vec<serde_json::Value> = rows
                .iter()
                .map(|(h, r)| json!({ "element": g.label(*h), "roots": r.iter().map(|x| g.label(*x)).collect::<Vec<_>>() }))
                .collect();
            emit(out, fmt, &text.join("\n"), json!(value))?;
        }
        Command::CheckT { k, target: t } => {
            let knot = connected_sum(&k.knot)?;
            let (_, g) = target(t)?;
            let r = check_property_t(&g, k.n, knot)?;
            let mut text = format!(
                "property T({},{}) for {}: {}\nbase homs: {}\nextensions: {}\nvalid: {}",
                k.n, knot, r.target, r.holds, r.base_homs, r.extensions, r.valid
            );
            if let Some(w) = &r.counterexample {
                let l = |x: &u32| g.label(*x).to_string();
                text.push_str(&format!(
                    "\ncounterexample: D={} B={} E={} d^={} b^={} e^={}",
                    l(&w.base.d),
                    l(&w.base.b),
                    l(&w.base.e),
                    l(&w.d_hat),
                    l(&w.b_hat),
                    l(&w.e_hat)
                ));
            }
            emit(out, fmt, &text, serde_json::to_value(&r)?)?;
        }
        Command::Extend { k, target: t, d, b, e } => {
            let knot = connected_sum(&k.knot)?;
            let (_, g) = target(t)?;
            let base = SubgroupImages { d: element(&g, d)?, b: element(&g, b)?, e: element(&g, e)? };
            let images = [base.d, base.b, base.e];
            for r in base_subgroup_presentation().relators() {
                if r.evaluate(&images, &g)? != g.identity() {
                    return Err(Error::Parse(format!("D={d} B={b} E={e} violates BDB=DBD or EDE=DED")));
                }
            }
            let ws = extend_g1_hom(&base, k.n, &g, knot)?;
            let l = |x: &u32| g.label(*x).to_string();
            let text: Vec<String> = ws
                .iter()
                .map(|w| {
                    format!(
                        "d^={} b^={} e^={} root_ok={} braid_ok={} third_ok={}",
                        l(&w.d_hat),
                        l(&w.b_hat),
                        l(&w.e_hat),
                        w.root_ok,
                        w.braid_ok,
                        w.third_ok
                    )
                })
                .collect();
            let text = if text.is_empty() { "no n-th roots of D".to_string() } else { text.join("\n") };
            emit(out, fmt, &text, serde_json::to_value(&ws)?)?;
        }
        Command::VerifyWitness => {
            let r = verify_paper_witness()?;
            emit(out, fmt, &r.to_string(), serde_json::to_value(&r)?)?;
            return Ok(if r.confirmed() { 0 } else { 1 });
        }
        Command::Talex { k, target: t, trivial, shards, lines } => {
            let p = knot_family(&k.knot)?.presentation(k.n);
            if let Some(prime) = trivial {
                let inv = twisted_alexander(&p, &Representation::trivial(&p, *prime)?)?;
                emit(out, fmt, &inv.line(), serde_json::to_value(&inv)?)?;
                return Ok(0);
            }
            let (spec, g) = target(t)?;
            let table = representation_table(&spec)
                .ok_or_else(|| Error::InvalidRepresentation(format!("no matrix representation table for {spec}")))??;
            let sweep = talex_sweep(&p, &g, &table, *shards)?;
            let mut text = format!("homs: {}", sweep.homs);
            for b in &sweep.buckets {
                text.push_str(&format!("\n{}: {} invariants, {} undefined, sha256 {}", b.name, b.count, b.undefined, b.digest));
            }
            if *lines {
                for l in &sweep.buckets[0].lines {
                    text.push('\n');
                    text.push_str(l);
                }
            }
            let mut value = serde_json::to_value(&sweep)?;
            if !*lines {
                for b in value["buckets"].as_array_mut().into_iter().flatten() {
                    b.as_object_mut().map(|o| o.remove("lines"));
                }
            }
            emit(out, fmt, &text, value)?;
        }
        Command::Sweep { config, output } => {
            let mut cfg = SweepConfig::load(config)?;
            if output.is_some() {
                cfg.output = output.clone();
            }
            let records = run_sweep(&cfg)?;
            let text: Vec<String> = records
                .iter()
                .map(|r| format!("{} n={} {} {}: {}", r.knot, r.n, r.target, r.task, r.value.summary()))
                .collect();
            emit(out, fmt, &text.join("\n"), serde_json::to_value(&records)?)?;
            return Ok(if records.iter().any(|r| r.value.is_skip()) { EXIT_SKIP } else { 0 });
        }
        Command::Report { input } => {
            let report = compare_report(&read_records(input)?);
            emit(out, fmt, &report.to_string(), serde_json::to_value(&report)?)?;
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}
