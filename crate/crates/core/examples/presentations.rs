//! G_n presentations of the trefoils and of the square and granny knots,
//! from the reduced form and from a diagram.
use gnknot::diagram::{gn_from_diagram, square_knot_diagram};
use gnknot::presentation::{knot_gn, trefoil_left_reduced, trefoil_right_reduced, Knot};

fn main() -> gnknot::Result<()> {
    println!("{}\n", trefoil_right_reduced(3));
    println!("{}\n", trefoil_left_reduced(3));
    for knot in [Knot::Square, Knot::Granny] {
        println!("{}\n", knot_gn(knot, 2));
    }
    let d = square_knot_diagram();
    println!("diagram:\n{}", d.to_text());
    println!("{}", gn_from_diagram(&d, 2)?);
    Ok(())
}
