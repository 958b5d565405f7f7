//! Free-group words in syllable (run-length) form.
//!
//! A word is a list of syllables `(generator, exponent)` with no zero
//! exponents and no two adjacent syllables on the same generator. All
//! constructors reduce, so every `Word` value is already in normal form.
//!
//! Evaluation is left-to-right: `g1 g2` evaluates to `mul(img(g1), img(g2))`,
//! which for permutation groups means "apply the image of `g1` first".

use std::fmt;

use crate::error::{Error, Result};
use crate::fingroups::FiniteGroup;

pub type Gen = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: Gen,
    pub exp: i64,
}

impl Syllable {
    pub fn new(gen: Gen, exp: i64) -> Self {
        Syllable { gen, exp }
    }
}

/// A reduced word. The derived ordering is lexicographic on syllables,
/// comparing generator index first and exponent second.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

fn push_reduced(stack: &mut Vec<Syllable>, gen: Gen, exp: i64) {
    if exp == 0 {
        return;
    }
    match stack.last_mut() {
        Some(top) if top.gen == gen => {
            top.exp = top.exp.checked_add(exp).expect("word exponent overflow");
            if top.exp == 0 {
                stack.pop();
            }
        }
        _ => stack.push(Syllable { gen, exp }),
    }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(gen: Gen) -> Self {
        Word::power_of(gen, 1)
    }

    pub fn power_of(gen: Gen, exp: i64) -> Self {
        Word::reduce([(gen, exp)])
    }

    /// Free reduction of an arbitrary syllable list. Zero exponents are
    /// allowed in the input and dropped.
    pub fn reduce<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (Gen, i64)>,
    {
        let mut stack = Vec::new();
        for (gen, exp) in raw {
            push_reduced(&mut stack, gen, exp);
        }
        Word { syllables: stack }
    }

    /// Concatenation of several words, reduced once.
    pub fn concat<'a, I>(parts: I) -> Self
    where
        I: IntoIterator<Item = &'a Word>,
    {
        Word::reduce(parts.into_iter().flat_map(|w| w.iter().map(|s| (s.gen, s.exp))))
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn iter(&self) -> impl Iterator<Item = &Syllable> + '_ {
        self.syllables.iter()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn letter_length(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<Gen> {
        self.syllables.iter().map(|s| s.gen).max()
    }

    pub fn mentions(&self, gen: Gen) -> bool {
        self.syllables.iter().any(|s| s.gen == gen)
    }

    pub fn exponent_sum(&self, gen: Gen) -> i64 {
        self.syllables.iter().filter(|s| s.gen == gen).map(|s| s.exp).sum()
    }

    pub fn product(&self, other: &Word) -> Word {
        let mut stack = self.syllables.clone();
        for s in &other.syllables {
            push_reduced(&mut stack, s.gen, s.exp);
        }
        Word { syllables: stack }
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|s| Syllable::new(s.gen, -s.exp)).collect(),
        }
    }

    pub fn power(&self, m: i64) -> Word {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut k = m.unsigned_abs();
        let mut acc = Word::identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.product(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.product(&sq);
            }
        }
        acc
    }

    /// `u v u^-1`
    pub fn conjugate_by(&self, u: &Word) -> Word {
        Word::concat([u, self, &u.inverse()])
    }

    /// Replaces every occurrence of `gen^k` by `replacement^k`.
    pub fn substitute(&self, gen: Gen, replacement: &Word) -> Result<Word> {
        if replacement.mentions(gen) {
            return Err(Error::CyclicSubstitution(gen));
        }
        let mut stack = Vec::new();
        for s in &self.syllables {
            if s.gen == gen {
                for r in replacement.power(s.exp).iter() {
                    push_reduced(&mut stack, r.gen, r.exp);
                }
            } else {
                push_reduced(&mut stack, s.gen, s.exp);
            }
        }
        Ok(Word { syllables: stack })
    }

    /// Cyclic reduction: strips `x^a ... x^b` ends down to a cyclically
    /// reduced word (conjugate to `self`).
    pub fn cyclically_reduced(&self) -> Word {
        let mut syl = self.syllables.clone();
        loop {
            if syl.len() < 2 {
                break;
            }
            let (first, last) = (syl[0], syl[syl.len() - 1]);
            if first.gen != last.gen {
                break;
            }
            // fold the tail into the head
            syl.pop();
            syl[0].exp = syl[0].exp.checked_add(last.exp).expect("word exponent overflow");
            if syl[0].exp == 0 {
                syl.remove(0);
            }
        }
        Word { syllables: syl }
    }

    /// Representative of the class of `self` under cyclic permutation and
    /// inversion: two relators with the same key have the same normal
    /// closure.
    pub fn cyclic_key(&self) -> Word {
        let c = self.cyclically_reduced();
        let mut best = c.clone();
        for w in [c.clone(), c.inverse()] {
            let n = w.syllables.len();
            for shift in 0..n {
                let rot = Word {
                    syllables: w.syllables[shift..].iter().chain(&w.syllables[..shift]).copied().collect(),
                };
                if rot < best {
                    best = rot;
                }
            }
        }
        best
    }

    /// Lexicographically smaller of `self` and its inverse.
    pub fn oriented(&self) -> Word {
        let inv = self.inverse();
        if inv < *self {
            inv
        } else {
            self.clone()
        }
    }

    /// Evaluates the word under a generator assignment, left to right.
    pub fn evaluate<G: FiniteGroup>(&self, images: &[G::Elem], group: &G) -> Result<G::Elem> {
        let mut acc = group.identity();
        for s in &self.syllables {
            let img = images.get(s.gen).ok_or(Error::MissingImage { index: s.gen, len: images.len() })?;
            acc = group.mul(&acc, &group.pow(img, s.exp));
        }
        Ok(acc)
    }
}

/// Ordered list of distinct, non-empty generator names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorTable {
    names: Vec<String>,
}

impl GeneratorTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || "^;:".contains(c)) {
                return Err(Error::Parse(format!("invalid generator name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::Parse(format!("duplicate generator name {name:?}")));
            }
        }
        Ok(GeneratorTable { names })
    }

    /// `a, b, c, ...` for up to 26 generators, `x1, x2, ...` beyond that.
    pub fn standard(count: usize) -> Self {
        let names = if count <= 26 {
            (0..count).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (1..=count).map(|i| format!("x{i}")).collect()
        };
        GeneratorTable { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, gen: Gen) -> &str {
        &self.names[gen]
    }

    pub fn index_of(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check(&self, word: &Word) -> Result<()> {
        match word.max_generator() {
            Some(gen) if gen >= self.len() => Err(Error::GeneratorOutOfRange { gen, len: self.len() }),
            _ => Ok(()),
        }
    }

    /// Product of two words over this table.
    pub fn product(&self, u: &Word, v: &Word) -> Result<Word> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.product(v))
    }

    pub fn format(&self, word: &Word) -> String {
        if word.is_identity() {
            return "1".to_string();
        }
        word.iter()
            .map(|s| {
                let name = self.names.get(s.gen).map(String::as_str).unwrap_or("?");
                if s.exp == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{}", s.exp)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses `a^2 b^-1 c`; `1` or the empty string is the identity.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::identity());
        }
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let exp: i64 = exp.parse().map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
                    (name, exp)
                }
                None => (token, 1),
            };
            let gen = self.index_of(name).ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
            raw.push((gen, exp));
        }
        Ok(Word::reduce(raw))
    }
}

/// Debug-friendly rendering with `g0, g1, ...` names.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if s.exp == 1 {
                write!(f, "g{}", s.gen)?;
            } else {
                write!(f, "g{}^{}", s.gen, s.exp)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroups::{parse_cycles, Symmetric};
    use proptest::prelude::*;

    const X: Gen = 0;
    const Y: Gen = 1;

    fn w(raw: &[(Gen, i64)]) -> Word {
        Word::reduce(raw.iter().copied())
    }

    #[test]
    fn free_cancellation() {
        assert_eq!(w(&[(X, 1), (Y, 1), (Y, -1)]), Word::generator(X));
        assert_eq!(w(&[]), Word::identity());
        assert_eq!(w(&[(X, 0), (Y, 2), (Y, -2), (X, 0)]), Word::identity());
    }

    #[test]
    fn three_conjugates_collapse() {
        let c = w(&[(X, 2), (Y, 1), (X, -2)]);
        let cubed = Word::concat([&c, &c, &c]);
        assert_eq!(cubed, w(&[(X, 2), (Y, 3), (X, -2)]));
        assert_eq!(c.power(3), cubed);
    }

    #[test]
    fn products_and_inverses() {
        assert!(Word::generator(X).product(&Word::power_of(X, -1)).is_identity());
        assert_eq!(w(&[(X, 2), (Y, 1)]).product(&w(&[(Y, 1), (X, -1)])), w(&[(X, 2), (Y, 2), (X, -1)]));
        let u = w(&[(0, 1), (1, 2), (0, -3)]);
        assert!(u.product(&u.inverse()).is_identity());
        assert_eq!(w(&[(0, 1), (1, 2)]).inverse(), w(&[(1, -2), (0, -1)]));
        assert_eq!(Word::generator(X).power(5), Word::power_of(X, 5));
        assert!(u.power(0).is_identity());
        assert_eq!(u.power(-2), u.inverse().power(2));
    }

    #[test]
    fn table_product_rejects_foreign_generators() {
        let table = GeneratorTable::standard(2);
        assert!(table.product(&Word::generator(0), &Word::generator(1)).is_ok());
        assert!(matches!(
            table.product(&Word::generator(0), &Word::generator(2)),
            Err(Error::GeneratorOutOfRange { gen: 2, len: 2 })
        ));
    }

    #[test]
    fn substitution() {
        // a = 0, b = 1, c = 2; eliminating c from b c b^-1 with c = a b a^-1
        let (a, b, c) = (0, 1, 2);
        let u = w(&[(b, 1), (c, 1), (b, -1)]);
        let r = w(&[(a, 1), (b, 1), (a, -1)]);
        assert_eq!(u.substitute(c, &r).unwrap(), w(&[(b, 1), (a, 1), (b, 1), (a, -1), (b, -1)]));
        assert_eq!(w(&[(a, 2)]).substitute(c, &r).unwrap(), w(&[(a, 2)]));
        let (d, e) = (3, 4);
        let r2 = w(&[(d, 2), (e, 1), (d, -2)]);
        assert_eq!(Word::generator(c).substitute(c, &r2).unwrap(), r2);
        assert!(matches!(u.substitute(c, &Word::generator(c)), Err(Error::CyclicSubstitution(2))));
    }

    #[test]
    fn evaluation_in_s3() {
        let s3 = Symmetric::new(3);
        let a = parse_cycles("(1,2)", 3).unwrap();
        let b = parse_cycles("(1,3)", 3).unwrap();
        let aba = w(&[(0, 1), (1, 1), (0, 1)]);
        let v = aba.evaluate(&[a.clone(), b.clone()], &s3).unwrap();
        assert_eq!(v, parse_cycles("(2,3)", 3).unwrap());
        assert_eq!(Word::identity().evaluate(std::slice::from_ref(&a), &s3).unwrap(), s3.identity());
        let c = parse_cycles("(1,2,3)", 3).unwrap();
        assert_eq!(Word::power_of(0, -1).evaluate(std::slice::from_ref(&c), &s3).unwrap(), s3.inv(&c));
        assert!(matches!(Word::generator(3).evaluate(&[a, b], &s3), Err(Error::MissingImage { index: 3, len: 2 })));
    }

    #[test]
    fn text_round_trip() {
        let table = GeneratorTable::new(["a", "b", "c"]).unwrap();
        let word = table.parse("a^2 b^-1 c").unwrap();
        assert_eq!(word, w(&[(0, 2), (1, -1), (2, 1)]));
        assert_eq!(table.format(&word), "a^2 b^-1 c");
        assert_eq!(table.parse("a a b b^-1").unwrap(), Word::power_of(0, 2));
        assert_eq!(table.format(&Word::identity()), "1");
        assert!(table.parse("q").is_err());
        assert!(table.parse("a^x").is_err());
        assert!(GeneratorTable::new(["a", "a"]).is_err());
    }

    #[test]
    fn cyclic_key_identifies_conjugate_inverse_relators() {
        let r = w(&[(0, 1), (1, 2), (2, -1), (1, -2)]);
        let rotated = w(&[(2, -1), (1, -2), (0, 1), (1, 2)]);
        assert_eq!(r.cyclic_key(), rotated.cyclic_key());
        assert_eq!(r.cyclic_key(), rotated.inverse().cyclic_key());
        assert_ne!(r.cyclic_key(), w(&[(0, 1), (1, 1)]).cyclic_key());
        assert_eq!(w(&[(0, 1), (1, 1), (0, -1)]).cyclic_key(), Word::generator(1).cyclic_key());
    }

    fn raw_syllables() -> impl Strategy<Value = Vec<(Gen, i64)>> {
        prop::collection::vec((0usize..3, -3i64..=3), 0..12)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(raw in raw_syllables()) {
            let once = Word::reduce(raw);
            let twice = Word::reduce(once.iter().map(|s| (s.gen, s.exp)));
            prop_assert_eq!(&once, &twice);
            for pair in once.syllables().windows(2) {
                prop_assert_ne!(pair[0].gen, pair[1].gen);
            }
            prop_assert!(once.iter().all(|s| s.exp != 0));
        }

        #[test]
        fn product_is_associative(a in raw_syllables(), b in raw_syllables(), c in raw_syllables()) {
            let (a, b, c) = (Word::reduce(a), Word::reduce(b), Word::reduce(c));
            prop_assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
            prop_assert_eq!(a.product(&Word::identity()), a.clone());
            prop_assert!(a.product(&a.inverse()).is_identity());
        }

        #[test]
        fn evaluation_is_multiplicative(a in raw_syllables(), b in raw_syllables(), seed in 0usize..720) {
            let s4 = Symmetric::new(4);
            let elems = s4.elements().unwrap();
            let images: Vec<_> = (0..3).map(|i| elems[(seed * (i + 7) + i) % elems.len()].clone()).collect();
            let (u, v) = (Word::reduce(a), Word::reduce(b));
            let lhs = u.product(&v).evaluate(&images, &s4).unwrap();
            let rhs = s4.mul(&u.evaluate(&images, &s4).unwrap(), &v.evaluate(&images, &s4).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn substitution_commutes_with_evaluation(a in raw_syllables(), r in prop::collection::vec((0usize..2, -3i64..=3), 0..6), seed in 0usize..24) {
            let s4 = Symmetric::new(4);
            let elems = s4.elements().unwrap();
            let mut images: Vec<_> = (0..3).map(|i| elems[(seed + 5 * i) % 24].clone()).collect();
            let (u, r) = (Word::reduce(a), Word::reduce(r));
            let lhs = u.substitute(2, &r).unwrap().evaluate(&images, &s4).unwrap();
            images[2] = r.evaluate(&images, &s4).unwrap();
            prop_assert_eq!(lhs, u.evaluate(&images, &s4).unwrap());
        }
    }

    #[test]
    fn conjugate_power_lemma() {
        for n in 1..=5 {
            for m in 1..=5 {
                let conj = w(&[(X, n), (Y, 1), (X, -n)]);
                assert_eq!(conj.power(m), w(&[(X, n), (Y, m), (X, -n)]), "n={n} m={m}");
            }
        }
    }
}
