use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fingroups::{FiniteGroup, TableGroup};
use crate::presentation::Presentation;

/// Generator images of a homomorphism into a [`TableGroup`], indexed by
/// generator. The image tuple is also the canonical serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    pub target: Arc<str>,
    pub images: Vec<u32>,
}

impl Homomorphism {
    /// `d=<img> ; b=<img> ; ...` using the group's element labels.
    pub fn format(&self, p: &Presentation, group: &TableGroup) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(g, &x)| format!("{}={}", p.gens().name(g), group.label(x)))
            .collect::<Vec<_>>()
            .join(" ; ")
    }

    pub fn key(&self) -> String {
        self.images.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub homs: u64,
    pub wall_time: Duration,
    pub shard_id: usize,
    pub shards: usize,
}

impl SearchStats {
    pub fn merge(parts: &[SearchStats]) -> SearchStats {
        SearchStats {
            nodes: parts.iter().map(|s| s.nodes).sum(),
            prunes: parts.iter().map(|s| s.prunes).sum(),
            homs: parts.iter().map(|s| s.homs).sum(),
            wall_time: parts.iter().map(|s| s.wall_time).max().unwrap_or_default(),
            shard_id: 0,
            shards: parts.len().max(1),
        }
    }

    pub fn as_map(&self) -> BTreeMap<String, u64> {
        BTreeMap::from([
            ("nodes".to_string(), self.nodes),
            ("prunes".to_string(), self.prunes),
            ("homs".to_string(), self.homs),
            ("wall_ms".to_string(), self.wall_time.as_millis() as u64),
            ("shard_id".to_string(), self.shard_id as u64),
            ("shards".to_string(), self.shards as u64),
        ])
    }
}

impl fmt::Display for SearchStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes={}", self.nodes)?;
        writeln!(f, "prunes={}", self.prunes)?;
        writeln!(f, "homs={}", self.homs)?;
        writeln!(f, "wall_ms={}", self.wall_time.as_millis())?;
        writeln!(f, "shard_id={}", self.shard_id)?;
        write!(f, "shards={}", self.shards)
    }
}

/// Relator as `(generator, power table)` steps.
struct CompiledRelator {
    steps: Vec<(usize, usize)>,
}

/// Backtracking search for homomorphisms from a presentation into a table
/// group.
///
/// Generators are assigned in presentation order and each relator is
/// checked once its last generator is assigned. Powers `x^k` come from
/// per-exponent tables built up front.
pub struct HomSearch<'a> {
    group: &'a TableGroup,
    target: Arc<str>,
    gen_count: usize,
    checks: Vec<Vec<CompiledRelator>>,
    powers: Vec<Vec<u32>>,
}

impl<'a> HomSearch<'a> {
    pub fn new(p: &Presentation, group: &'a TableGroup) -> Result<Self> {
        group.check_enumerable()?;
        let gen_count = p.generator_count();
        let mut exponents: Vec<i64> = Vec::new();
        let mut checks: Vec<Vec<CompiledRelator>> = (0..gen_count).map(|_| Vec::new()).collect();
        for r in p.relators() {
            let Some(last) = r.max_generator() else {
                continue;
            };
            let steps = r
                .iter()
                .map(|s| {
                    let slot = exponents.iter().position(|&e| e == s.exp).unwrap_or_else(|| {
                        exponents.push(s.exp);
                        exponents.len() - 1
                    });
                    (s.gen, slot)
                })
                .collect();
            checks[last].push(CompiledRelator { steps });
        }
        let powers = exponents
            .iter()
            .map(|&k| (0..group.size() as u32).map(|x| group.pow(&x, k)).collect())
            .collect();
        Ok(HomSearch { group, target: Arc::from(group.name()), gen_count, checks, powers })
    }

    #[inline]
    fn holds(&self, rel: &CompiledRelator, images: &[u32]) -> bool {
        let g = self.group;
        let mut acc = g.identity_idx();
        for &(gen, slot) in &rel.steps {
            acc = g.mul_idx(acc, self.powers[slot][images[gen] as usize]);
        }
        acc == g.identity_idx()
    }

    /// Visits every homomorphism whose first-generator image index is
    /// congruent to `shard_id` mod `shards`, in lexicographic order of
    /// image tuples.
    pub fn for_each<F: FnMut(&[u32])>(&self, shards: usize, shard_id: usize, mut visit: F) -> Result<SearchStats> {
        if shards == 0 || shard_id >= shards {
            return Err(Error::InvalidShard { shards, shard_id });
        }
        let start = Instant::now();
        let mut stats = SearchStats { shard_id, shards, ..SearchStats::default() };
        if self.gen_count == 0 {
            if shard_id == 0 {
                stats.homs = 1;
                visit(&[]);
            }
        } else {
            let mut images = vec![0u32; self.gen_count];
            self.descend(0, shards, shard_id, &mut images, &mut stats, &mut visit);
        }
        stats.wall_time = start.elapsed();
        Ok(stats)
    }

    fn descend<F: FnMut(&[u32])>(
        &self,
        level: usize,
        shards: usize,
        shard_id: usize,
        images: &mut [u32],
        stats: &mut SearchStats,
        visit: &mut F,
    ) {
        let n = self.group.size() as u32;
        let (first, step) = if level == 0 { (shard_id as u32, shards as u32) } else { (0, 1) };
        let mut x = first;
        while x < n {
            images[level] = x;
            stats.nodes += 1;
            if self.checks[level].iter().all(|r| self.holds(r, images)) {
                if level + 1 == self.gen_count {
                    stats.homs += 1;
                    visit(images);
                } else {
                    self.descend(level + 1, shards, shard_id, images, stats, visit);
                }
            } else {
                stats.prunes += 1;
            }
            x += step;
        }
    }

    pub fn collect(&self, shards: usize, shard_id: usize) -> Result<(Vec<Homomorphism>, SearchStats)> {
        let mut homs = Vec::new();
        let stats = self.for_each(shards, shard_id, |imgs| {
            homs.push(Homomorphism { target: self.target.clone(), images: imgs.to_vec() })
        })?;
        Ok((homs, stats))
    }
}

/// All homomorphisms, in canonical (lexicographic) order.
pub fn enumerate_homs(p: &Presentation, group: &TableGroup) -> Result<Vec<Homomorphism>> {
    Ok(HomSearch::new(p, group)?.collect(1, 0)?.0)
}

/// Runs every shard in parallel and merges the lists into canonical order.
pub fn enumerate_homs_sharded(p: &Presentation, group: &TableGroup, shards: usize) -> Result<Vec<Homomorphism>> {
    let search = HomSearch::new(p, group)?;
    let parts: Vec<Vec<Homomorphism>> =
        (0..shards).into_par_iter().map(|s| search.collect(shards, s).map(|r| r.0)).collect::<Result<_>>()?;
    let mut all: Vec<Homomorphism> = parts.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Number of homomorphisms in one shard.
pub fn count_homs(p: &Presentation, group: &TableGroup, shards: usize, shard_id: usize) -> Result<(u64, SearchStats)> {
    let stats = HomSearch::new(p, group)?.for_each(shards, shard_id, |_| {})?;
    Ok((stats.homs, stats))
}

/// Total over all shards, run in parallel.
pub fn count_homs_total(p: &Presentation, group: &TableGroup, shards: usize) -> Result<(u64, Vec<SearchStats>)> {
    let search = HomSearch::new(p, group)?;
    let stats: Vec<SearchStats> =
        (0..shards).into_par_iter().map(|s| search.for_each(shards, s, |_| {})).collect::<Result<_>>()?;
    Ok((stats.iter().map(|s| s.homs).sum(), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroups::{GroupSpec, Symmetric};
    use crate::presentation::trefoil_right_reduced;
    use crate::words::{GeneratorTable, Word};

    fn s3() -> TableGroup {
        TableGroup::from_group(&Symmetric::new(3)).unwrap()
    }

    /// Brute force: every image tuple, every relator evaluated in full.
    fn brute_force(p: &Presentation, g: &TableGroup) -> Vec<Vec<u32>> {
        let n = g.size() as u32;
        let k = p.generator_count();
        let mut out = Vec::new();
        let total = (n as u64).pow(k as u32);
        for code in 0..total {
            let mut c = code;
            let mut imgs = vec![0u32; k];
            for slot in imgs.iter_mut().rev() {
                *slot = (c % n as u64) as u32;
                c /= n as u64;
            }
            if p.relators().iter().all(|r| r.evaluate(&imgs, g).unwrap() == g.identity_idx()) {
                out.push(imgs);
            }
        }
        out
    }

    #[test]
    fn trefoil_into_s3() {
        let g = s3();
        let p = trefoil_right_reduced(1);
        let homs = enumerate_homs(&p, &g).unwrap();
        assert_eq!(homs.len(), 12);
        let oracle = brute_force(&p, &g);
        assert_eq!(homs.iter().map(|h| h.images.clone()).collect::<Vec<_>>(), oracle);
        assert_eq!(count_homs(&p, &g, 1, 0).unwrap().0, 12);
        let total: u64 = (0..3).map(|s| count_homs(&p, &g, 3, s).unwrap().0).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn free_and_cyclic_sources() {
        let g = s3();
        assert_eq!(enumerate_homs(&Presentation::free(2), &g).unwrap().len(), 36);
        assert_eq!(enumerate_homs(&Presentation::free(0), &g).unwrap().len(), 1);
        let x2 = Presentation::new(GeneratorTable::standard(1), vec![Word::power_of(0, 2)], 1, "x^2").unwrap();
        assert_eq!(enumerate_homs(&x2, &g).unwrap().len(), 4);
    }

    #[test]
    fn sharding_is_a_partition() {
        let g: TableGroup = "S4".parse::<GroupSpec>().unwrap().build().unwrap();
        let p = crate::presentation::square_knot_gn(2);
        let single = enumerate_homs(&p, &g).unwrap();
        for shards in [2, 3, 5, 8] {
            assert_eq!(enumerate_homs_sharded(&p, &g, shards).unwrap(), single);
            assert_eq!(count_homs_total(&p, &g, shards).unwrap().0, single.len() as u64);
        }
    }

    #[test]
    fn bad_shards() {
        let g = s3();
        let p = Presentation::free(1);
        assert!(count_homs(&p, &g, 0, 0).is_err());
        assert!(count_homs(&p, &g, 2, 2).is_err());
    }

    #[test]
    fn stats_are_reported() {
        let g = s3();
        let (count, stats) = count_homs(&trefoil_right_reduced(1), &g, 1, 0).unwrap();
        assert_eq!(stats.homs, count);
        assert!(stats.nodes >= 36 && stats.prunes > 0);
        assert!(stats.to_string().contains("homs=12"));
    }
}
