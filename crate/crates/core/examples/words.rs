//! Free reduction, powers and the power lemma on syllable words.
use gnknot::words::{GeneratorTable, Word};

fn main() -> gnknot::Result<()> {
    let gens = GeneratorTable::new(["x", "y"])?;
    let w = gens.parse("x y y^-1 x^2 y")?;
    println!("reduced:        {}", gens.format(&w));
    println!("inverse:        {}", gens.format(&w.inverse()));
    println!("cube:           {}", gens.format(&w.power(3)));
    println!("cyclic key:     {}", gens.format(&w.cyclic_key()));

    // (x y^n x^-1)^m = x y^{nm} x^-1
    let (x, y) = (Word::generator(0), Word::generator(1));
    for (n, m) in [(2, 3), (3, -2)] {
        let lhs = y.power(n).conjugate_by(&x).power(m);
        let rhs = y.power(n * m).conjugate_by(&x);
        println!("n={n} m={m}: {} == {}", gens.format(&lhs), gens.format(&rhs));
        assert_eq!(lhs, rhs);
    }
    Ok(())
}
