use super::FiniteGroup;
use crate::error::{Error, Result};

/// A 2x2 matrix with entries reduced mod p. The modulus lives on the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn entries(&self) -> [u32; 4] {
        [self.a, self.b, self.c, self.d]
    }

    fn mul_mod(&self, o: &Mat2, p: u32) -> Mat2 {
        let p = p as u64;
        let (a, b, c, d) = (self.a as u64, self.b as u64, self.c as u64, self.d as u64);
        let (e, f, g, h) = (o.a as u64, o.b as u64, o.c as u64, o.d as u64);
        Mat2 {
            a: ((a * e + b * g) % p) as u32,
            b: ((a * f + b * h) % p) as u32,
            c: ((c * e + d * g) % p) as u32,
            d: ((c * f + d * h) % p) as u32,
        }
    }

    pub fn det(&self, p: u32) -> u32 {
        let p = p as u64;
        ((self.a as u64 * self.d as u64 + p * p - self.b as u64 * self.c as u64 % p) % p) as u32
    }

    fn neg(&self, p: u32) -> Mat2 {
        let n = |x: u32| (p - x) % p;
        Mat2 { a: n(self.a), b: n(self.b), c: n(self.c), d: n(self.d) }
    }

    /// Adjugate; equals the inverse when det = 1.
    fn adjugate(&self, p: u32) -> Mat2 {
        let n = |x: u32| (p - x) % p;
        Mat2 { a: self.d, b: n(self.b), c: n(self.c), d: self.a }
    }
}

pub fn format_mat2(m: &Mat2, p: u32) -> String {
    format!("[[{},{}],[{},{}]] mod {}", m.a, m.b, m.c, m.d, p)
}

/// Parses `[[a,b],[c,d]] mod p`; entries are reduced mod p.
pub fn parse_mat2(text: &str) -> Result<(Mat2, u32)> {
    let bad = || Error::Parse(format!("expected `[[a,b],[c,d]] mod p`, got {text:?}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (body, modulus) = compact.split_once("mod").ok_or_else(bad)?;
    let p: u32 = modulus.parse().map_err(|_| bad())?;
    if p < 2 {
        return Err(bad());
    }
    let inner = body.strip_prefix("[[").and_then(|s| s.strip_suffix("]]")).ok_or_else(bad)?;
    let nums: Vec<i64> = inner
        .replace("],[", ",")
        .split(',')
        .map(|t| t.parse::<i64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    if nums.len() != 4 {
        return Err(bad());
    }
    let r = |x: i64| x.rem_euclid(p as i64) as u32;
    Ok((Mat2::new(r(nums[0]), r(nums[1]), r(nums[2]), r(nums[3])), p))
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// SL(2, p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2 {
    p: u32,
}

impl Sl2 {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidGroup(format!("SL(2,{p}): {p} is not prime")));
        }
        Ok(Sl2 { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

fn sl2_elements(p: u32) -> Vec<Mat2> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = Mat2::new(a, b, c, d);
                    if m.det(p) == 1 % p {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

impl FiniteGroup for Sl2 {
    type Elem = Mat2;

    fn name(&self) -> String {
        format!("SL2({})", self.p)
    }

    fn order(&self) -> u128 {
        let p = self.p as u128;
        p * (p * p - 1)
    }

    fn identity(&self) -> Mat2 {
        Mat2::IDENTITY
    }

    fn mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        x.mul_mod(y, self.p)
    }

    fn inv(&self, x: &Mat2) -> Mat2 {
        x.adjugate(self.p)
    }

    fn format_elem(&self, x: &Mat2) -> String {
        format_mat2(x, self.p)
    }

    fn enumerate(&self) -> Vec<Mat2> {
        sl2_elements(self.p)
    }
}

/// PSL(2, p) = SL(2, p) / {±I}. Elements are stored as the representative
/// whose first nonzero entry lies in `1..=(p-1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Psl2 {
    p: u32,
}

impl Psl2 {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidGroup(format!("PSL(2,{p}): {p} is not prime")));
        }
        Ok(Psl2 { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn canonical(&self, m: &Mat2) -> Mat2 {
        if self.p == 2 {
            return *m;
        }
        let first = m.entries().into_iter().find(|&x| x != 0).unwrap_or(0);
        if first <= (self.p - 1) / 2 {
            *m
        } else {
            m.neg(self.p)
        }
    }
}

impl FiniteGroup for Psl2 {
    type Elem = Mat2;

    fn name(&self) -> String {
        format!("PSL2({})", self.p)
    }

    fn order(&self) -> u128 {
        let p = self.p as u128;
        if p == 2 {
            6
        } else {
            p * (p * p - 1) / 2
        }
    }

    fn identity(&self) -> Mat2 {
        Mat2::IDENTITY
    }

    fn mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        self.canonical(&x.mul_mod(y, self.p))
    }

    fn inv(&self, x: &Mat2) -> Mat2 {
        self.canonical(&x.adjugate(self.p))
    }

    fn format_elem(&self, x: &Mat2) -> String {
        format_mat2(x, self.p)
    }

    fn enumerate(&self) -> Vec<Mat2> {
        sl2_elements(self.p).into_iter().filter(|m| self.canonical(m) == *m).collect()
    }
}
