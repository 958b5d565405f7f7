//! Concrete finite groups behind one contract.
//!
//! Every group exposes a canonical total order on its elements and an
//! enumeration in that order. Permutations compose left to right by
//! default (`x * y` applies `x` first), matching word evaluation.

mod matrix;
mod perm;
mod small;
mod spec;
mod table;

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

pub use matrix::{format_mat2, parse_mat2, Mat2, Psl2, Sl2};
pub use perm::{format_cycles, parse_cycles, Alternating, Composition, Permutation, Symmetric};
pub use small::{Cyclic, Dihedral, DihedralElem};
pub use spec::{standard_suite, GroupSpec};
pub(crate) use matrix::is_prime;
pub use table::{format_cayley_table, parse_cayley_table, TableGroup};

/// Largest group order we are willing to enumerate element by element.
/// Cayley tables are stored with 16-bit entries, and hom search scales
/// with powers of the order.
pub const ENUMERATION_BOUND: u128 = 5040;

pub trait FiniteGroup {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn name(&self) -> String;
    fn order(&self) -> u128;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    fn format_elem(&self, x: &Self::Elem) -> String;

    /// All elements in canonical order. Only called after the order has
    /// been checked against [`ENUMERATION_BOUND`].
    fn enumerate(&self) -> Vec<Self::Elem>;

    fn elements(&self) -> Result<Vec<Self::Elem>> {
        self.check_enumerable()?;
        Ok(self.enumerate())
    }

    fn check_enumerable(&self) -> Result<()> {
        let order = self.order();
        if order > ENUMERATION_BOUND {
            return Err(Error::Capability { name: self.name(), order, bound: ENUMERATION_BOUND });
        }
        Ok(())
    }

    fn pow(&self, x: &Self::Elem, k: i64) -> Self::Elem {
        let base = if k < 0 { self.inv(x) } else { x.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// `k x k^-1`
    fn conjugate(&self, x: &Self::Elem, k: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(k, x), &self.inv(k))
    }

    fn element_order(&self, x: &Self::Elem) -> u64 {
        let id = self.identity();
        let mut y = x.clone();
        let mut k = 1;
        while y != id {
            y = self.mul(&y, x);
            k += 1;
        }
        k
    }
}

/// The set `{ g : g^n = h }`, sorted.
pub fn nth_roots<G: FiniteGroup>(group: &G, h: &G::Elem, n: u32) -> Result<Vec<G::Elem>> {
    Ok(group.elements()?.into_iter().filter(|g| group.pow(g, n as i64) == *h).collect())
}

/// n-th roots of every element, built in one pass over the group.
#[derive(Clone, Debug)]
pub struct RootTable<E> {
    n: u32,
    roots: BTreeMap<E, Vec<E>>,
}

impl<E: Ord + Clone> RootTable<E> {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn roots(&self, h: &E) -> &[E] {
        self.roots.get(h).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, h: &E) -> usize {
        self.roots(h).len()
    }

    /// Elements having at least one root, with their roots.
    pub fn iter(&self) -> impl Iterator<Item = (&E, &Vec<E>)> {
        self.roots.iter()
    }
}

pub fn root_table<G: FiniteGroup>(group: &G, n: u32) -> Result<RootTable<G::Elem>> {
    let mut roots: BTreeMap<G::Elem, Vec<G::Elem>> = BTreeMap::new();
    for g in group.elements()? {
        roots.entry(group.pow(&g, n as i64)).or_default().push(g);
    }
    Ok(RootTable { n, roots })
}

/// Orbits of the conjugation action, each sorted, listed by minimal element.
pub fn conjugacy_classes<G: FiniteGroup>(group: &G) -> Result<Vec<Vec<G::Elem>>> {
    let elements = group.elements()?;
    let mut seen = std::collections::HashSet::new();
    let mut classes = Vec::new();
    for x in &elements {
        if seen.contains(x) {
            continue;
        }
        let mut class: Vec<G::Elem> = elements.iter().map(|k| group.conjugate(x, k)).collect();
        class.sort();
        class.dedup();
        seen.extend(class.iter().cloned());
        classes.push(class);
    }
    Ok(classes)
}

pub fn is_abelian_set<G: FiniteGroup>(group: &G, xs: &[G::Elem]) -> bool {
    xs.iter().enumerate().all(|(i, x)| xs[i + 1..].iter().all(|y| group.mul(x, y) == group.mul(y, x)))
}
