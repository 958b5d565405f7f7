use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::words::{Gen, GeneratorTable, Word};

/// Element of the integral group ring of a free group: a finite sum of
/// reduced words with nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElem {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, 1)
    }

    pub fn term(w: Word, c: i64) -> Self {
        let mut x = Self::zero();
        x.add_term(w, c);
        x
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in o.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem { terms: self.terms.iter().map(|(w, &c)| (w.clone(), -c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in self.terms() {
            for (v, b) in o.terms() {
                out.add_term(u.product(v), a * b);
            }
        }
        out
    }

    /// `w * self`
    pub fn left_mul(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in self.terms() {
            out.add_term(w.product(v), c);
        }
        out
    }

    /// Augmentation: sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn format(&self, gens: &GeneratorTable) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
            let word = gens.format(w);
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                out.push(' ');
            }
            out.push_str(sign);
            if i > 0 {
                out.push(' ');
            }
            match c.abs() {
                1 => out.push_str(&word),
                k => out.push_str(&format!("{k}*{word}")),
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.terms.keys().filter_map(Word::max_generator).max().map_or(0, |g| g + 1);
        write!(f, "{}", self.format(&GeneratorTable::standard(max)))
    }
}

/// Free derivative `dw/dx_g`. A syllable `x^e` preceded by the prefix `u`
/// contributes `u (1 + x + ... + x^(e-1))` for `e > 0` and
/// `-u (x^-1 + ... + x^e)` for `e < 0`.
pub fn fox_derivative(w: &Word, g: Gen) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let mut prefix = Word::identity();
    for s in w.iter() {
        if s.gen == g {
            if s.exp > 0 {
                for k in 0..s.exp {
                    out.add_term(prefix.product(&Word::power_of(g, k)), 1);
                }
            } else {
                for k in 1..=-s.exp {
                    out.add_term(prefix.product(&Word::power_of(g, -k)), -1);
                }
            }
        }
        prefix = prefix.product(&Word::power_of(s.gen, s.exp));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(text: &str) -> Word {
        GeneratorTable::standard(3).parse(text).unwrap()
    }

    fn elem(terms: &[(&str, i64)]) -> GroupRingElem {
        let mut x = GroupRingElem::zero();
        for &(w, c) in terms {
            x.add_term(parse(w), c);
        }
        x
    }

    #[test]
    fn defining_rules() {
        assert_eq!(fox_derivative(&parse("a b"), 0), elem(&[("1", 1)]));
        assert_eq!(fox_derivative(&parse("a^-1"), 0), elem(&[("a^-1", -1)]));
        assert_eq!(fox_derivative(&parse("b"), 0), GroupRingElem::zero());
        assert_eq!(fox_derivative(&parse("a^3"), 0), elem(&[("1", 1), ("a", 1), ("a^2", 1)]));
    }

    #[test]
    fn braid_relator() {
        let r = parse("a b a b^-1 a^-1 b^-1");
        assert_eq!(fox_derivative(&r, 0), elem(&[("1", 1), ("a b", 1), ("a b a b^-1 a^-1", -1)]));
        assert_eq!(fox_derivative(&r, 0).to_string(), "1 + a b - a b a b^-1 a^-1");
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..3, -3i64..=3), 0..8).prop_map(Word::reduce)
    }

    proptest! {
        #[test]
        fn product_rule(u in arb_word(), v in arb_word(), g in 0usize..3) {
            let lhs = fox_derivative(&u.product(&v), g);
            let rhs = fox_derivative(&u, g).add(&fox_derivative(&v, g).left_mul(&u));
            prop_assert_eq!(lhs, rhs);
        }

        /// `sum_j (dw/dx_j)(x_j - 1) = w - 1`
        #[test]
        fn fundamental_identity(w in arb_word()) {
            let mut total = GroupRingElem::zero();
            for g in 0..3 {
                let x_minus_1 = elem(&[]).add(&GroupRingElem::word(Word::generator(g))).add(&GroupRingElem::term(Word::identity(), -1));
                total = total.add(&fox_derivative(&w, g).mul(&x_minus_1));
            }
            let expected = GroupRingElem::word(w.clone()).add(&GroupRingElem::term(Word::identity(), -1));
            prop_assert_eq!(total, expected);
        }
    }
}
