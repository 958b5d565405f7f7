//! The S_24 counterexample to property T(2, SK).

use std::fmt;

use serde::Serialize;

use super::extension::{extend_with_root, SubgroupImages};
use crate::error::Result;
use crate::fingroups::{parse_cycles, Composition, FiniteGroup, Permutation, Symmetric};
use crate::presentation::Knot;

pub const WITNESS_B: &str = "(1,8,10,5,2,7,9,6)(15,17,24,19,16,18,23,20)";
pub const WITNESS_D: &str = "(3,5,12,7,4,6,11,8)(15,17,24,19,16,18,23,20)";
pub const WITNESS_E: &str = "(3,5,12,7,4,6,11,8)(13,20,22,17,14,19,21,18)";
pub const WITNESS_D_HAT: &str = "(3,15,5,17,12,24,7,19,4,16,6,18,11,23,8,20)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub root_ok: bool,
    pub braid_db: bool,
    pub braid_de: bool,
    /// `(ED)^3 d^ (ED)^-3 = (BD)^3 d^ (BD)^-3`, composing left to right
    pub powered_left_to_right: bool,
    pub powered_right_to_left: bool,
    /// the third relator of G_2(SK) under the extension, per convention
    pub third_relator_left_to_right: bool,
    pub third_relator_right_to_left: bool,
}

impl WitnessReport {
    /// A counterexample needs the root and braid checks to pass and the
    /// powered relation to fail under at least one convention.
    pub fn confirmed(&self) -> bool {
        self.root_ok && self.braid_db && self.braid_de && !(self.powered_left_to_right && self.powered_right_to_left)
    }
}

impl fmt::Display for WitnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d^2 = D: {}", self.root_ok)?;
        writeln!(f, "DBD = BDB: {}", self.braid_db)?;
        writeln!(f, "DED = EDE: {}", self.braid_de)?;
        writeln!(f, "powered third relation (left-to-right): {}", self.powered_left_to_right)?;
        writeln!(f, "powered third relation (right-to-left): {}", self.powered_right_to_left)?;
        let verdict = if self.confirmed() { "CONFIRMED" } else { "NOT CONFIRMED" };
        write!(f, "property T(2,SK) counterexample: {verdict}")
    }
}

struct Checks {
    root: bool,
    braid_db: bool,
    braid_de: bool,
    powered: bool,
    third: bool,
}

fn check(convention: Composition) -> Result<Checks> {
    let g = Symmetric::with_convention(24, convention);
    let parse = |s: &str| parse_cycles(s, 24);
    let (b, d, e, d_hat) = (parse(WITNESS_B)?, parse(WITNESS_D)?, parse(WITNESS_E)?, parse(WITNESS_D_HAT)?);
    let prod = |xs: &[&Permutation]| xs.iter().fold(g.identity(), |acc, x| g.mul(&acc, x));
    let ed3 = g.pow(&g.mul(&e, &d), 3);
    let bd3 = g.pow(&g.mul(&b, &d), 3);
    let base = SubgroupImages { d: d.clone(), b: b.clone(), e: e.clone() };
    let w = extend_with_root(&g, &base, &d_hat, 2, Knot::Square)?;
    Ok(Checks {
        root: g.pow(&d_hat, 2) == d,
        braid_db: prod(&[&d, &b, &d]) == prod(&[&b, &d, &b]),
        braid_de: prod(&[&d, &e, &d]) == prod(&[&e, &d, &e]),
        powered: g.conjugate(&d_hat, &ed3) == g.conjugate(&d_hat, &bd3),
        third: w.third_ok,
    })
}

/// Checks the hard-coded S_24 data under both composition conventions.
pub fn verify_paper_witness() -> Result<WitnessReport> {
    let ltr = check(Composition::LeftToRight)?;
    let rtl = check(Composition::RightToLeft)?;
    Ok(WitnessReport {
        root_ok: ltr.root && rtl.root,
        braid_db: ltr.braid_db && rtl.braid_db,
        braid_de: ltr.braid_de && rtl.braid_de,
        powered_left_to_right: ltr.powered,
        powered_right_to_left: rtl.powered,
        third_relator_left_to_right: ltr.third,
        third_relator_right_to_left: rtl.third,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_fails_under_both_conventions() {
        let r = verify_paper_witness().unwrap();
        assert!(r.root_ok && r.braid_db && r.braid_de);
        assert!(!r.powered_left_to_right && !r.powered_right_to_left);
        assert!(!r.third_relator_left_to_right && !r.third_relator_right_to_left);
        assert!(r.confirmed());
        let text = r.to_string();
        assert_eq!(text.lines().count(), 6);
        assert!(text.ends_with("property T(2,SK) counterexample: CONFIRMED"));
    }

    #[test]
    fn extension_keeps_braid_relators() {
        let g = Symmetric::new(24);
        let p = |s| parse_cycles(s, 24).unwrap();
        let base = SubgroupImages { d: p(WITNESS_D), b: p(WITNESS_B), e: p(WITNESS_E) };
        let w = extend_with_root(&g, &base, &p(WITNESS_D_HAT), 2, Knot::Square).unwrap();
        assert!(w.root_ok && w.braid_ok && !w.third_ok);
        assert_eq!(g.pow(&w.b_hat, 2), base.b);
        assert_eq!(g.pow(&w.e_hat, 2), base.e);
    }
}
