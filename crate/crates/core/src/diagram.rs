//! Knot diagrams as crossing lists, and G_n of a diagram.
//!
//! One generator per arc, one relator per crossing. At a crossing with
//! over-arc `y`, incoming under-arc `x` and outgoing under-arc `z`:
//!
//! * positive: `x = y^n z y^-n`
//! * negative: `x = y^-n z y^n`
//!
//! The convention is pinned by the square and granny knot diagrams below,
//! which reproduce their published Wirtinger-type relations exactly.
//!
//! Text format: a header line `arcs N`, then one line per crossing
//! `<+|-> over under_in under_out` with 0-based arc indices. `#` starts a
//! comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::presentation::{relation, Presentation};
use crate::words::{GeneratorTable, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

impl Crossing {
    pub fn new(sign: Sign, over: usize, under_in: usize, under_out: usize) -> Self {
        Crossing { sign, over, under_in, under_out }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    pub arc_count: usize,
    pub crossings: Vec<Crossing>,
}

impl KnotDiagram {
    pub fn new(arc_count: usize, crossings: Vec<Crossing>) -> Result<Self> {
        let d = KnotDiagram { arc_count, crossings };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.arc_count == 0 {
            return Err(Error::InvalidDiagram("a diagram needs at least one arc".into()));
        }
        for (i, c) in self.crossings.iter().enumerate() {
            for arc in [c.over, c.under_in, c.under_out] {
                if arc >= self.arc_count {
                    return Err(Error::InvalidDiagram(format!(
                        "crossing {i} references arc {arc}, but there are {} arcs",
                        self.arc_count
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("arcs {}\n", self.arc_count);
        for c in &self.crossings {
            let sign = if c.sign == Sign::Positive { '+' } else { '-' };
            writeln!(out, "{sign} {} {} {}", c.over, c.under_in, c.under_out).expect("write to string");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty diagram".into()))?;
        let arc_count = header
            .strip_prefix("arcs")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected `arcs N`, got {header:?}")))?;
        let mut crossings = Vec::new();
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [sign, over, under_in, under_out] = fields[..] else {
                return Err(Error::Parse(format!("expected `sign over under_in under_out`, got {line:?}")));
            };
            let sign = match sign {
                "+" | "+1" => Sign::Positive,
                "-" | "-1" => Sign::Negative,
                other => return Err(Error::Parse(format!("bad crossing sign {other:?}"))),
            };
            let arc = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad arc index {s:?}")));
            crossings.push(Crossing::new(sign, arc(over)?, arc(under_in)?, arc(under_out)?));
        }
        KnotDiagram::new(arc_count, crossings)
    }
}

/// G_n of a diagram: `under_in = over^(±n) under_out over^(∓n)` per crossing.
pub fn gn_from_diagram(diagram: &KnotDiagram, n: u32) -> Result<Presentation> {
    diagram.validate()?;
    let relators = diagram
        .crossings
        .iter()
        .map(|c| {
            let k = c.sign.as_i64() * n as i64;
            let rhs = Word::generator(c.under_out).conjugate_by(&Word::power_of(c.over, k));
            relation(&Word::generator(c.under_in), &rhs)
        })
        .collect();
    Presentation::new(GeneratorTable::standard(diagram.arc_count), relators, n, format!("G_{n} of diagram"))
}

fn all(sign: Sign, rows: &[(usize, usize, usize)]) -> Vec<Crossing> {
    rows.iter().map(|&(o, i, u)| Crossing::new(sign, o, i, u)).collect()
}

/// Right-handed trefoil, arcs a, b, c: `a = b^n c b^-n`, `b = c^n a c^-n`,
/// `c = a^n b a^-n`.
pub fn right_trefoil_diagram() -> KnotDiagram {
    KnotDiagram { arc_count: 3, crossings: all(Sign::Positive, &[(1, 0, 2), (2, 1, 0), (0, 2, 1)]) }
}

/// Left-handed trefoil: `a = b^-n c b^n`, `b = c^-n a c^n`, `c = a^-n b a^n`.
pub fn left_trefoil_diagram() -> KnotDiagram {
    KnotDiagram { arc_count: 3, crossings: all(Sign::Negative, &[(1, 0, 2), (2, 1, 0), (0, 2, 1)]) }
}

// Arc indices a..f.
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;

/// Square knot on arcs a..f. The first three crossings are a right-handed
/// trefoil, the last three a left-handed one; orientation runs
/// a, c, e, d, b, f.
pub fn square_knot_diagram() -> KnotDiagram {
    let crossings = vec![
        Crossing::new(Sign::Positive, E, A, C), // a = e^n c e^-n
        Crossing::new(Sign::Positive, C, E, D), // e = c^n d c^-n
        Crossing::new(Sign::Positive, D, C, E), // c = d^n e d^-n
        Crossing::new(Sign::Negative, D, B, F), // f = d^n b d^-n
        Crossing::new(Sign::Negative, F, D, B), // b = f^n d f^-n
        Crossing::new(Sign::Negative, B, F, A), // a = b^n f b^-n
    ];
    KnotDiagram { arc_count: 6, crossings }
}

/// Granny knot on arcs a..f, six positive crossings; orientation runs
/// a, b, c, d, e, f.
pub fn granny_knot_diagram() -> KnotDiagram {
    let crossings = vec![
        Crossing::new(Sign::Positive, C, A, B), // a = c^n b c^-n
        Crossing::new(Sign::Positive, B, C, D), // c = b^n d b^-n
        Crossing::new(Sign::Positive, D, B, C), // b = d^n c d^-n
        Crossing::new(Sign::Positive, F, D, E), // d = f^n e f^-n
        Crossing::new(Sign::Positive, E, F, A), // f = e^n a e^-n
        Crossing::new(Sign::Positive, A, E, F), // e = a^n f a^-n
    ];
    KnotDiagram { arc_count: 6, crossings }
}
