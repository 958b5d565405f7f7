//! Square roots in S4 and the conservation of roots.
use gnknot::fingroups::{conjugacy_classes, root_table, FiniteGroup, GroupSpec};

fn main() -> gnknot::Result<()> {
    let g = "S4".parse::<GroupSpec>()?.build()?;
    let table = root_table(&g, 2)?;
    let mut total = 0;
    for (h, roots) in table.iter() {
        let labels: Vec<&str> = roots.iter().map(|r| g.label(*r)).collect();
        println!("{:>12}: {:>2} roots {}", g.label(*h), roots.len(), labels.join(" "));
        total += roots.len();
    }
    println!("sum = {total}, |S4| = {}", g.order());
    println!("{} conjugacy classes", conjugacy_classes(&g)?.len());
    Ok(())
}
