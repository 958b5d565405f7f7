//! Abelianizations via Smith normal form.
use gnknot::presentation::{knot_gn, Knot};
use gnknot::snf::{abelianization_invariants, smith_normal_form, IntMatrix};

fn main() {
    for n in 1..=5 {
        for knot in [Knot::Square, Knot::Granny] {
            let p = knot_gn(knot, n);
            println!("G_{n}({knot}): {}", abelianization_invariants(&p));
        }
    }
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
    let s = smith_normal_form(&m);
    println!("diag {:?}, verified {}", s.diagonal(), s.verify(&m));
}
