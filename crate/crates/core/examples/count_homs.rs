//! Hom counts from G_n(SK) and G_n(GK) into a few targets, with sharding.
use gnknot::homsearch::{count_homs_total, SearchStats};
use gnknot::fingroups::GroupSpec;
use gnknot::presentation::{knot_gn, Knot};

fn main() -> gnknot::Result<()> {
    for name in ["S3", "S4", "A5", "SL2(3)"] {
        let g = name.parse::<GroupSpec>()?.build()?;
        for n in 1..=3 {
            let (sk, stats) = count_homs_total(&knot_gn(Knot::Square, n), &g, 4)?;
            let (gk, _) = count_homs_total(&knot_gn(Knot::Granny, n), &g, 4)?;
            let m = SearchStats::merge(&stats).as_map();
            println!("{name:<7} n={n}  SK {sk:>6}  GK {gk:>6}  nodes {}", m["nodes"]);
        }
    }
    Ok(())
}
