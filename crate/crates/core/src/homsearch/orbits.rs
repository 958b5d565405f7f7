use std::collections::HashMap;

use super::Homomorphism;
use crate::error::{Error, Result};
use crate::fingroups::TableGroup;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as root so representatives are canonical
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

fn check_targets(homs: &[Homomorphism], group: &TableGroup) -> Result<()> {
    let name = group.name_str();
    for h in homs {
        if &*h.target != name {
            return Err(Error::MixedTargets(h.target.to_string(), name.to_string()));
        }
        if h.images.len() != homs[0].images.len() || h.images.iter().any(|&x| x as usize >= group.size()) {
            return Err(Error::MixedTargets(h.target.to_string(), name.to_string()));
        }
    }
    Ok(())
}

/// For each hom in the list, the index of the first hom in its orbit under
/// simultaneous conjugation `x -> k x k^-1` of all generator images.
/// Orbits are taken within the list.
pub fn conjugation_orbits(homs: &[Homomorphism], group: &TableGroup) -> Result<Vec<usize>> {
    check_targets(homs, group)?;
    let index: HashMap<&[u32], usize> = homs.iter().enumerate().map(|(i, h)| (h.images.as_slice(), i)).collect();
    let generators = group.generating_set();
    let all: Vec<u32> = (0..group.size() as u32).collect();
    let mut uf = UnionFind::new(homs.len());
    let mut buf = Vec::new();
    for (i, h) in homs.iter().enumerate() {
        let mut conjugate_into = |k: u32, buf: &mut Vec<u32>| -> bool {
            let k_inv = group.inv_idx(k);
            buf.clear();
            buf.extend(h.images.iter().map(|&x| group.mul_idx(group.mul_idx(k, x), k_inv)));
            match index.get(buf.as_slice()) {
                Some(&j) => {
                    uf.union(i, j);
                    true
                }
                None => false,
            }
        };
        // generators suffice when the list is closed under conjugation
        let closed = generators.iter().all(|&k| conjugate_into(k, &mut buf));
        if !closed {
            for &k in &all {
                conjugate_into(k, &mut buf);
            }
        }
    }
    Ok((0..homs.len()).map(|i| uf.find(i)).collect())
}

pub fn orbit_count(homs: &[Homomorphism], group: &TableGroup) -> Result<usize> {
    let roots = conjugation_orbits(homs, group)?;
    Ok(roots.iter().enumerate().filter(|&(i, &r)| i == r).count())
}

/// First hom of every orbit, in list order.
pub fn orbit_representatives(homs: &[Homomorphism], group: &TableGroup) -> Result<Vec<usize>> {
    let roots = conjugation_orbits(homs, group)?;
    Ok(roots.iter().enumerate().filter(|&(i, &r)| i == r).map(|(i, _)| i).collect())
}
