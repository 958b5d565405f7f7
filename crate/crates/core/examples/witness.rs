//! The S_24 counterexample to property T(2, SK).
use gnknot::homsearch::{verify_paper_witness, WITNESS_B, WITNESS_D, WITNESS_D_HAT, WITNESS_E};

fn main() -> gnknot::Result<()> {
    println!("D  = {WITNESS_D}\nB  = {WITNESS_B}\nE  = {WITNESS_E}\nd^ = {WITNESS_D_HAT}\n");
    println!("{}", verify_paper_witness()?);
    Ok(())
}
