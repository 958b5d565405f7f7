//! Extending homs of <D,B,E> through roots of D, and property T.
use gnknot::fingroups::GroupSpec;
use gnknot::homsearch::{check_property_t, extend_g1_hom, g1_base_homs, structured_count};
use gnknot::presentation::Knot;

fn main() -> gnknot::Result<()> {
    let g = "S4".parse::<GroupSpec>()?.build()?;
    let base = g1_base_homs(&g)?;
    println!("{} homs of the base group into S4", base.len());
    let sample = base.iter().find(|b| b.d != b.b).expect("a nontrivial base hom");
    for w in extend_g1_hom(sample, 2, &g, Knot::Square)? {
        println!(
            "D={} d^={} b^={} e^={} valid={}",
            g.label(w.base.d),
            g.label(w.d_hat),
            g.label(w.b_hat),
            g.label(w.e_hat),
            w.is_valid()
        );
    }
    for name in ["S3", "S4", "D5", "A5"] {
        let h = name.parse::<GroupSpec>()?.build()?;
        for n in [2, 3] {
            let r = check_property_t(&h, n, Knot::Square)?;
            println!("{name} n={n}: T={} structured={}", r.holds, structured_count(&h, n)?);
        }
    }
    Ok(())
}
