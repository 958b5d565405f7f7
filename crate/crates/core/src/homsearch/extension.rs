//! Extending homomorphisms of the subgroup `<D, B, E>` of G_n to G_n.
//!
//! A hom of G_n(K) restricts along `D = d^n, B = b^n, E = e^n` to a hom of
//! `<D, B, E | BDB = DBD, EDE = DED>`. Conversely, given such a base hom
//! and an n-th root `d^` of the image of D, the first two relators of
//! G_n(K) force
//!
//! * SK: `b^ = D B d^ B^-1 D^-1`, `e^ = D E d^ E^-1 D^-1`
//! * GK: `b^ = D B d^ B^-1 D^-1`, `e^ = D^-1 E^-1 d^ E D`
//!
//! and the extension is a hom exactly when the third relator holds too.

use serde::Serialize;

use super::search::enumerate_homs;
use crate::error::Result;
use crate::fingroups::{root_table, FiniteGroup, TableGroup};
use crate::presentation::{base_subgroup_presentation, knot_gn, Knot};

/// Images of `D`, `B`, `E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubgroupImages<E> {
    pub d: E,
    pub b: E,
    pub e: E,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionWitness<E> {
    pub base: SubgroupImages<E>,
    pub d_hat: E,
    pub b_hat: E,
    pub e_hat: E,
    pub n: u32,
    pub knot: Knot,
    /// `d^^n = D`
    pub root_ok: bool,
    /// first two relators of G_n(K)
    pub braid_ok: bool,
    /// third relator of G_n(K)
    pub third_ok: bool,
}

impl<E> ExtensionWitness<E> {
    pub fn is_valid(&self) -> bool {
        self.root_ok && self.braid_ok && self.third_ok
    }

    /// Images of `d, b, e` in generator order.
    pub fn images(&self) -> [&E; 3] {
        [&self.d_hat, &self.b_hat, &self.e_hat]
    }
}

/// All base homs, in canonical order of `(D, B, E)` index triples.
pub fn g1_base_homs(group: &TableGroup) -> Result<Vec<SubgroupImages<u32>>> {
    Ok(enumerate_homs(&base_subgroup_presentation(), group)?
        .into_iter()
        .map(|h| SubgroupImages { d: h.images[0], b: h.images[1], e: h.images[2] })
        .collect())
}

/// Builds `b^`, `e^` from a base and a candidate root and checks every
/// relator of G_n(K). Works in any group, including ones too large to
/// enumerate.
pub fn extend_with_root<G: FiniteGroup>(
    group: &G,
    base: &SubgroupImages<G::Elem>,
    d_hat: &G::Elem,
    n: u32,
    knot: Knot,
) -> Result<ExtensionWitness<G::Elem>> {
    let g = group;
    let (d, b, e) = (&base.d, &base.b, &base.e);
    let db = g.mul(d, b);
    let b_hat = g.conjugate(d_hat, &db);
    let e_hat = match knot {
        Knot::Square => g.conjugate(d_hat, &g.mul(d, e)),
        Knot::Granny => g.conjugate(d_hat, &g.inv(&g.mul(e, d))),
    };
    let p = knot_gn(knot, n);
    let images = [d_hat.clone(), b_hat.clone(), e_hat.clone()];
    let holds = |i: usize| -> Result<bool> { Ok(p.relators()[i].evaluate(&images, g)? == g.identity()) };
    Ok(ExtensionWitness {
        root_ok: g.pow(d_hat, n as i64) == *d,
        braid_ok: holds(0)? && holds(1)?,
        third_ok: holds(2)?,
        base: base.clone(),
        d_hat: d_hat.clone(),
        b_hat,
        e_hat,
        n,
        knot,
    })
}

/// One witness per n-th root of the base image of D.
pub fn extend_g1_hom(
    base: &SubgroupImages<u32>,
    n: u32,
    group: &TableGroup,
    knot: Knot,
) -> Result<Vec<ExtensionWitness<u32>>> {
    crate::fingroups::nth_roots(group, &base.d, n)?
        .iter()
        .map(|r| extend_with_root(group, base, r, n, knot))
        .collect()
}

/// `sum over base homs of |n-th roots of D|`. Equals the number of homs of
/// G_n(K) whenever the group has property T(n, K). The base presentation
/// is the same for both knots.
pub fn structured_count(group: &TableGroup, n: u32) -> Result<u64> {
    let roots = root_table(group, n)?;
    Ok(g1_base_homs(group)?.iter().map(|base| roots.count(&base.d) as u64).sum())
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub target: String,
    pub n: u32,
    pub knot: Knot,
    pub holds: bool,
    pub base_homs: u64,
    /// `(base, root)` pairs examined; equals [`structured_count`].
    pub extensions: u64,
    /// pairs whose extension satisfies every relator
    pub valid: u64,
    pub counterexample: Option<ExtensionWitness<u32>>,
}

/// Property T(n, K): every `(base, root)` extension satisfies the third
/// relator. Reports the first counterexample in canonical order.
pub fn check_property_t(group: &TableGroup, n: u32, knot: Knot) -> Result<PropertyReport> {
    let roots = root_table(group, n)?;
    let bases = g1_base_homs(group)?;
    let mut report = PropertyReport {
        target: group.name(),
        n,
        knot,
        holds: true,
        base_homs: bases.len() as u64,
        extensions: 0,
        valid: 0,
        counterexample: None,
    };
    for base in &bases {
        for r in roots.roots(&base.d) {
            let w = extend_with_root(group, base, r, n, knot)?;
            report.extensions += 1;
            if w.is_valid() {
                report.valid += 1;
            } else if report.counterexample.is_none() {
                report.holds = false;
                report.counterexample = Some(w);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroups::GroupSpec;
    use crate::homsearch::count_homs;
    use std::collections::BTreeSet;

    fn group(name: &str) -> TableGroup {
        name.parse::<GroupSpec>().unwrap().build().unwrap()
    }

    #[test]
    fn abelian_bases_are_diagonal() {
        let g = group("Z3");
        let bases = g1_base_homs(&g).unwrap();
        assert_eq!(bases.len(), 3);
        assert!(bases.iter().all(|s| s.b == s.d && s.e == s.d));
    }

    #[test]
    fn s3_bases_contain_the_diagonal() {
        let g = group("S3");
        let bases = g1_base_homs(&g).unwrap();
        let diagonal = bases.iter().filter(|s| s.b == s.d && s.e == s.d).count();
        assert_eq!(diagonal, 6);
        let id = g.identity_idx();
        assert!(bases.contains(&SubgroupImages { d: id, b: id, e: id }));
    }

    #[test]
    fn abelian_extensions_are_valid() {
        let g = group("Z2xZ4");
        for knot in [Knot::Square, Knot::Granny] {
            for base in g1_base_homs(&g).unwrap() {
                for w in extend_g1_hom(&base, 2, &g, knot).unwrap() {
                    assert_eq!(w.b_hat, w.d_hat);
                    assert_eq!(w.e_hat, w.d_hat);
                    assert!(w.is_valid());
                }
            }
        }
    }

    #[test]
    fn structured_count_examples() {
        assert_eq!(structured_count(&group("Z3"), 2).unwrap(), 3);
        let s3 = group("S3");
        assert_eq!(structured_count(&s3, 2).unwrap(), count_homs(&knot_gn(Knot::Square, 2), &s3, 1, 0).unwrap().0);
        for name in ["S3", "A4", "D5"] {
            let g = group(name);
            let n1 = count_homs(&knot_gn(Knot::Square, 1), &g, 1, 0).unwrap().0;
            assert_eq!(structured_count(&g, 1).unwrap(), n1, "{name}");
        }
    }

    #[test]
    fn exponent_multiple_of_n_has_property_t() {
        // Z2xZ2 and S3 have exponents 2 and 6
        for (name, n) in [("Z2xZ2", 2), ("S3", 2), ("S3", 3)] {
            let g = group(name);
            assert_eq!(g.exponent() % n as u64, 0);
            for knot in [Knot::Square, Knot::Granny] {
                assert!(check_property_t(&g, n, knot).unwrap().holds, "{name} n={n}");
            }
        }
    }

    /// Every hom of G_n(SK) restricts to a base hom and is recovered by
    /// extending that base with its own d-image.
    #[test]
    fn extension_bijection() {
        for name in ["S3", "S4"] {
            let g = group(name);
            for knot in [Knot::Square, Knot::Granny] {
                let n = 2;
                let homs: BTreeSet<Vec<u32>> = enumerate_homs(&knot_gn(knot, n), &g)
                    .unwrap()
                    .into_iter()
                    .map(|h| h.images)
                    .collect();
                let bases: BTreeSet<SubgroupImages<u32>> = g1_base_homs(&g).unwrap().into_iter().collect();
                let mut extended = BTreeSet::new();
                for base in &bases {
                    for w in extend_g1_hom(base, n, &g, knot).unwrap() {
                        assert!(w.root_ok && w.braid_ok);
                        if w.third_ok {
                            extended.insert(w.images().map(|x| *x).to_vec());
                        }
                    }
                }
                for h in &homs {
                    let base = SubgroupImages {
                        d: g.pow(&h[0], n as i64),
                        b: g.pow(&h[1], n as i64),
                        e: g.pow(&h[2], n as i64),
                    };
                    assert!(bases.contains(&base));
                    let w = extend_with_root(&g, &base, &h[0], n, knot).unwrap();
                    assert_eq!(w.images().map(|x| *x).to_vec(), *h);
                }
                assert_eq!(extended, homs, "{name} {knot}");
            }
        }
    }
}
