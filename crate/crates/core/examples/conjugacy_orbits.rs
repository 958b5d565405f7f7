//! Homs up to conjugation in the target.
use gnknot::fingroups::GroupSpec;
use gnknot::homsearch::{enumerate_homs, orbit_representatives};
use gnknot::presentation::trefoil_right_reduced;

fn main() -> gnknot::Result<()> {
    let g = "S3".parse::<GroupSpec>()?.build()?;
    let p = trefoil_right_reduced(1);
    let homs = enumerate_homs(&p, &g)?;
    let reps = orbit_representatives(&homs, &g)?;
    println!("{} homs, {} classes", homs.len(), reps.len());
    for i in reps {
        println!("  {}", homs[i].format(&p, &g));
    }
    Ok(())
}
