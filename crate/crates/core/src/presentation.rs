//! Finitely presented groups and the explicit presentations of the
//! generalized knot groups G_n of the trefoils, square knot and granny knot.
//!
//! An equality `lhs = rhs` is stored as the single relator `lhs rhs^-1`,
//! oriented as the lexicographically smaller of the relator and its
//! inverse, so presentation equality is relator multiset equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Gen, GeneratorTable, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    gens: GeneratorTable,
    relators: Vec<Word>,
    n: u32,
    label: String,
}

/// Which connected sum of trefoils.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Knot {
    /// Square knot: right trefoil # left trefoil.
    #[serde(rename = "SK")]
    Square,
    /// Granny knot: two trefoils of the same handedness.
    #[serde(rename = "GK")]
    Granny,
}

impl fmt::Display for Knot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Knot::Square => "SK",
            Knot::Granny => "GK",
        })
    }
}

/// Relator for the equality `lhs = rhs`.
pub fn relation(lhs: &Word, rhs: &Word) -> Word {
    lhs.product(&rhs.inverse())
}

impl Presentation {
    pub fn new(gens: GeneratorTable, relators: Vec<Word>, n: u32, label: impl Into<String>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("the G_n parameter must be at least 1".into()));
        }
        for r in &relators {
            gens.check(r)?;
        }
        let relators = relators.into_iter().map(|r| r.oriented()).collect();
        Ok(Presentation { gens, relators, n, label: label.into() })
    }

    pub fn free(rank: usize) -> Self {
        Presentation {
            gens: GeneratorTable::standard(rank),
            relators: Vec::new(),
            n: 1,
            label: format!("free group of rank {rank}"),
        }
    }

    pub fn gens(&self) -> &GeneratorTable {
        &self.gens
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Sorted relators; equal for presentations with the same relator multiset.
    pub fn relator_multiset(&self) -> Vec<Word> {
        let mut rels = self.relators.clone();
        rels.sort();
        rels
    }

    /// Sorted cyclic keys of the relators: equal when the relators agree up
    /// to cyclic permutation and inversion.
    pub fn cyclic_relator_multiset(&self) -> Vec<Word> {
        let mut rels: Vec<Word> = self.relators.iter().map(Word::cyclic_key).collect();
        rels.sort();
        rels
    }

    /// Relator-by-generator matrix of exponent sums.
    pub fn exponent_sum_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| (0..self.gens.len()).map(|g| r.exponent_sum(g)).collect()).collect()
    }

    /// `gens: a b ; rel: ... ; rel: ...`, with a leading `n: k ;` when
    /// `n` is not 1.
    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        if self.n != 1 {
            parts.push(format!("n: {}", self.n));
        }
        parts.push(format!("gens: {}", self.gens.names().join(" ")));
        for r in &self.relators {
            parts.push(format!("rel: {}", self.gens.format(r)));
        }
        parts.join(" ; ")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n = 1;
        let mut gens = None;
        let mut rels = Vec::new();
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) =
                part.split_once(':').ok_or_else(|| Error::Parse(format!("expected `key: value`, got {part:?}")))?;
            match key.trim() {
                "n" => n = value.trim().parse().map_err(|_| Error::Parse(format!("bad n {value:?}")))?,
                "gens" => gens = Some(GeneratorTable::new(value.split_whitespace())?),
                "rel" => rels.push(value.trim().to_string()),
                other => return Err(Error::Parse(format!("unknown section {other:?}"))),
            }
        }
        let gens = gens.ok_or_else(|| Error::Parse("missing `gens:` section".into()))?;
        let relators = rels.iter().map(|r| gens.parse(r)).collect::<Result<Vec<_>>>()?;
        Presentation::new(gens, relators, n, "parsed")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn pw(gen: Gen, exp: i64) -> Word {
    Word::power_of(gen, exp)
}

fn cat(parts: &[Word]) -> Word {
    Word::concat(parts)
}

fn gens_dbe() -> GeneratorTable {
    GeneratorTable::new(["d", "b", "e"]).expect("static names")
}

const D: Gen = 0;
const B: Gen = 1;
const E: Gen = 2;

/// Two-generator presentation of G_n of the right-handed trefoil after
/// eliminating the third arc: `a b^n a^n = b^n a^n b`, `b a^n b^n = a^n b^n a`.
pub fn trefoil_right_reduced(n: u32) -> Presentation {
    let (a, b, k) = (0, 1, n as i64);
    let r1 = relation(&cat(&[pw(a, 1), pw(b, k), pw(a, k)]), &cat(&[pw(b, k), pw(a, k), pw(b, 1)]));
    let r2 = relation(&cat(&[pw(b, 1), pw(a, k), pw(b, k)]), &cat(&[pw(a, k), pw(b, k), pw(a, 1)]));
    Presentation::new(GeneratorTable::standard(2), vec![r1, r2], n.max(1), format!("G_{n}(trefoil_r) reduced"))
        .expect("well-formed")
}

/// The left-handed counterpart; its relations come out in the opposite order.
pub fn trefoil_left_reduced(n: u32) -> Presentation {
    let (a, b, k) = (0, 1, n as i64);
    let r1 = relation(&cat(&[pw(b, 1), pw(a, k), pw(b, k)]), &cat(&[pw(a, k), pw(b, k), pw(a, 1)]));
    let r2 = relation(&cat(&[pw(a, 1), pw(b, k), pw(a, k)]), &cat(&[pw(b, k), pw(a, k), pw(b, 1)]));
    Presentation::new(GeneratorTable::standard(2), vec![r1, r2], n.max(1), format!("G_{n}(trefoil_l) reduced"))
        .expect("well-formed")
}

/// `b d^n b^n = d^n b^n d`, shared by both knots.
fn shared_first_relator(k: i64) -> Word {
    relation(&cat(&[pw(B, 1), pw(D, k), pw(B, k)]), &cat(&[pw(D, k), pw(B, k), pw(D, 1)]))
}

/// `b^n d^n b d^-n b^-n`, the right side of both third relations.
fn b_conjugate(k: i64) -> Word {
    cat(&[pw(B, k), pw(D, k), pw(B, 1), pw(D, -k), pw(B, -k)])
}

/// G_n(SK) on generators d, b, e:
/// `b d^n b^n = d^n b^n d`, `e d^n e^n = d^n e^n d`,
/// `e^n d^n e d^-n e^-n = b^n d^n b d^-n b^-n`.
pub fn square_knot_gn(n: u32) -> Presentation {
    let k = n as i64;
    let r2 = relation(&cat(&[pw(E, 1), pw(D, k), pw(E, k)]), &cat(&[pw(D, k), pw(E, k), pw(D, 1)]));
    let r3 = relation(&cat(&[pw(E, k), pw(D, k), pw(E, 1), pw(D, -k), pw(E, -k)]), &b_conjugate(k));
    Presentation::new(gens_dbe(), vec![shared_first_relator(k), r2, r3], n.max(1), format!("G_{n}(SK)"))
        .expect("well-formed")
}

/// G_n(GK) on generators d, b, e:
/// `b d^n b^n = d^n b^n d`, `d e^n d^n = e^n d^n e`,
/// `e^-n d^-n e d^n e^n = b^n d^n b d^-n b^-n`.
pub fn granny_knot_gn(n: u32) -> Presentation {
    let k = n as i64;
    let r2 = relation(&cat(&[pw(D, 1), pw(E, k), pw(D, k)]), &cat(&[pw(E, k), pw(D, k), pw(E, 1)]));
    let r3 = relation(&cat(&[pw(E, -k), pw(D, -k), pw(E, 1), pw(D, k), pw(E, k)]), &b_conjugate(k));
    Presentation::new(gens_dbe(), vec![shared_first_relator(k), r2, r3], n.max(1), format!("G_{n}(GK)"))
        .expect("well-formed")
}

pub fn knot_gn(knot: Knot, n: u32) -> Presentation {
    match knot {
        Knot::Square => square_knot_gn(n),
        Knot::Granny => granny_knot_gn(n),
    }
}

/// `<d, b, e | dbd = bdb, ded = ede>`: the knot group of both SK and GK,
/// to which the three-relator presentations degenerate at n = 1.
pub fn braid_pair_presentation() -> Presentation {
    let d = Word::generator(D);
    let b = Word::generator(B);
    let e = Word::generator(E);
    let r1 = relation(&cat(&[d.clone(), b.clone(), d.clone()]), &cat(&[b.clone(), d.clone(), b]));
    let r2 = relation(&cat(&[d.clone(), e.clone(), d.clone()]), &cat(&[e.clone(), d, e]));
    Presentation::new(gens_dbe(), vec![r1, r2], 1, "G_1(SK) = G_1(GK)").expect("well-formed")
}

/// `<D, B, E | BDB = DBD, EDE = DED>`, the subgroup generated by
/// `D = d^n, B = b^n, E = e^n`. Generator order D, B, E mirrors d, b, e.
pub fn base_subgroup_presentation() -> Presentation {
    let gens = GeneratorTable::new(["D", "B", "E"]).expect("static names");
    let d = Word::generator(0);
    let b = Word::generator(1);
    let e = Word::generator(2);
    let r1 = relation(&cat(&[b.clone(), d.clone(), b.clone()]), &cat(&[d.clone(), b, d.clone()]));
    let r2 = relation(&cat(&[e.clone(), d.clone(), e.clone()]), &cat(&[d.clone(), e, d]));
    Presentation::new(gens, vec![r1, r2], 1, "base subgroup <D,B,E>").expect("well-formed")
}

/// The two sides of `(ED)^3 d (ED)^-3 = (BD)^3 d (BD)^-3` with
/// `D = d^n, B = b^n, E = e^n`, as words over d, b, e.
pub fn sk_powered_third_relation(n: u32) -> (Word, Word) {
    let k = n as i64;
    let ed = cat(&[pw(E, k), pw(D, k)]);
    let bd = cat(&[pw(B, k), pw(D, k)]);
    let d = Word::generator(D);
    (d.conjugate_by(&ed.power(3)), d.conjugate_by(&bd.power(3)))
}
