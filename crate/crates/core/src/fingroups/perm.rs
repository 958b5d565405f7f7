use std::fmt;

use itertools::Itertools;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// How a product of two permutations acts on points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Composition {
    /// `x * y` applies `x` first, then `y`.
    #[default]
    LeftToRight,
    /// `x * y` applies `y` first, then `x` (function composition).
    RightToLeft,
}

/// A bijection on `{0, .., m-1}`; displayed 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen
                .get_mut(x as usize)
                .ok_or_else(|| Error::InvalidPermutation(format!("image {x} out of range")))?;
            if *slot {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        let mut transpositions = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// minimum, sorted by minimum. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

/// Parses 1-based disjoint cycle notation such as `(1,8,10)(2,7)`.
/// `()` (or an empty string) is the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let bad = |msg: String| Error::InvalidPermutation(msg);
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad(format!("expected '(' in {text:?}")))?;
        let close = body.find(')').ok_or_else(|| bad(format!("unclosed cycle in {text:?}")))?;
        let inner = &body[..close];
        rest = &body[close + 1..];
        if inner.is_empty() {
            continue;
        }
        let mut points = Vec::new();
        for tok in inner.split(',') {
            let p: usize = tok.parse().map_err(|_| bad(format!("bad point {tok:?} in {text:?}")))?;
            if p == 0 || p > degree {
                return Err(bad(format!("point {p} out of range 1..={degree}")));
            }
            if used[p - 1] {
                return Err(bad(format!("point {p} repeated")));
            }
            used[p - 1] = true;
            points.push(p as u32 - 1);
        }
        for (i, &p) in points.iter().enumerate() {
            images[p as usize] = points[(i + 1) % points.len()];
        }
    }
    Ok(Permutation { images })
}

pub fn format_cycles(perm: &Permutation) -> String {
    let cycles = perm.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles.iter().map(|c| format!("({})", c.iter().map(|p| p + 1).join(","))).collect()
}

fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

fn compose(convention: Composition, x: &Permutation, y: &Permutation) -> Permutation {
    match convention {
        Composition::LeftToRight => x.then(y),
        Composition::RightToLeft => y.then(x),
    }
}

/// The symmetric group on `degree` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetric {
    degree: usize,
    convention: Composition,
}

impl Symmetric {
    pub fn new(degree: usize) -> Self {
        Symmetric { degree, convention: Composition::LeftToRight }
    }

    pub fn with_convention(degree: usize, convention: Composition) -> Self {
        Symmetric { degree, convention }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn convention(&self) -> Composition {
        self.convention
    }
}

impl FiniteGroup for Symmetric {
    type Elem = Permutation;

    fn name(&self) -> String {
        format!("S{}", self.degree)
    }

    fn order(&self) -> u128 {
        factorial(self.degree)
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn mul(&self, x: &Permutation, y: &Permutation) -> Permutation {
        compose(self.convention, x, y)
    }

    fn inv(&self, x: &Permutation) -> Permutation {
        x.inverse()
    }

    fn format_elem(&self, x: &Permutation) -> String {
        format_cycles(x)
    }

    fn enumerate(&self) -> Vec<Permutation> {
        (0..self.degree as u32).permutations(self.degree).map(|images| Permutation { images }).collect()
    }
}

/// The alternating group on `degree` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternating {
    degree: usize,
}

impl Alternating {
    pub fn new(degree: usize) -> Self {
        Alternating { degree }
    }
}

impl FiniteGroup for Alternating {
    type Elem = Permutation;

    fn name(&self) -> String {
        format!("A{}", self.degree)
    }

    fn order(&self) -> u128 {
        if self.degree < 2 {
            1
        } else {
            factorial(self.degree) / 2
        }
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn mul(&self, x: &Permutation, y: &Permutation) -> Permutation {
        x.then(y)
    }

    fn inv(&self, x: &Permutation) -> Permutation {
        x.inverse()
    }

    fn format_elem(&self, x: &Permutation) -> String {
        format_cycles(x)
    }

    fn enumerate(&self) -> Vec<Permutation> {
        (0..self.degree as u32)
            .permutations(self.degree)
            .map(|images| Permutation { images })
            .filter(Permutation::is_even)
            .collect()
    }
}
