//! G_3(SK) against G_3(GK) over PSL(2,7): hom counts and twisted Alexander
//! multisets over the 3-dimensional representation on F_2^3.
use gnknot::fingroups::GroupSpec;
use gnknot::presentation::{knot_gn, Knot};
use gnknot::talex::{psl27_to_sl32, talex_sweep};

fn main() -> gnknot::Result<()> {
    let g = GroupSpec::Psl2(7).build()?;
    let table = psl27_to_sl32()?;
    let mut digests = Vec::new();
    for knot in [Knot::Square, Knot::Granny] {
        let sweep = talex_sweep(&knot_gn(knot, 3), &g, &table, 8)?;
        println!("{knot}: {} homs", sweep.homs);
        for b in &sweep.buckets {
            println!("  {:<10} {:>5}  {}", b.name, b.count, b.digest);
        }
        digests.push(sweep.buckets.iter().map(|b| b.digest.clone()).collect::<Vec<_>>());
    }
    println!("multisets equal: {}", digests[0] == digests[1]);
    Ok(())
}
