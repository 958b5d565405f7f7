//! The trivial representation recovers the Alexander polynomial mod p.
use gnknot::presentation::{knot_gn, trefoil_right_reduced, Knot};
use gnknot::talex::{sl2_natural, twisted_alexander, Representation};

fn main() -> gnknot::Result<()> {
    let trefoil = trefoil_right_reduced(1);
    for p in [2, 3, 5, 7] {
        println!("{}", twisted_alexander(&trefoil, &Representation::trivial(&trefoil, p)?)?);
    }
    let sk = knot_gn(Knot::Square, 1);
    println!("{}", twisted_alexander(&sk, &Representation::trivial(&sk, 5)?)?);
    println!("SL2(5) has {} natural matrices", sl2_natural(5)?.len());
    Ok(())
}
