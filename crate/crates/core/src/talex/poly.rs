use std::fmt;

/// Laurent polynomial `sum coeffs[i] t^(low + i)` over F_p, p prime.
/// Trailing zeros are trimmed and leading zeros absorbed into `low`, so
/// each polynomial has one representation; zero is `low = 0`, no coeffs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    p: u32,
    low: i64,
    coeffs: Vec<u32>,
}

pub(crate) fn inv_mod(x: u32, p: u32) -> u32 {
    debug_assert!(!x.is_multiple_of(p));
    let (mut acc, mut base, mut e) = (1u64, (x % p) as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

impl LaurentPoly {
    pub fn new(p: u32, low: i64, coeffs: Vec<u32>) -> Self {
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if coeffs.is_empty() {
            return LaurentPoly { p, low: 0, coeffs };
        }
        coeffs.drain(..lead);
        LaurentPoly { p, low: low + lead as i64, coeffs }
    }

    /// From signed integer coefficients.
    pub fn from_ints(p: u32, low: i64, coeffs: &[i64]) -> Self {
        Self::new(p, low, coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect())
    }

    pub fn zero(p: u32) -> Self {
        LaurentPoly { p, low: 0, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::monomial(p, 1, 0)
    }

    pub fn monomial(p: u32, c: u32, k: i64) -> Self {
        Self::new(p, k, vec![c])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent; `None` for zero.
    pub fn high(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> u32 {
        usize::try_from(k - self.low).ok().and_then(|i| self.coeffs.get(i)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// A unit of F_p[t, t^-1]: a single nonzero term.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().unwrap().max(o.high().unwrap());
        let coeffs = (low..=high).map(|k| (self.coeff(k) + o.coeff(k)) % self.p).collect();
        Self::new(self.p, low, coeffs)
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        Self::new(p, self.low, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::new(self.p, self.low + o.low, out.into_iter().map(|c| c as u32).collect())
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p as u64;
        Self::new(self.p, self.low, self.coeffs.iter().map(|&x| (x as u64 * c as u64 % p) as u32).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { p: self.p, low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// Representative of the class up to units `c t^k`: lowest term has
    /// degree 0 and coefficient 1.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = inv_mod(self.coeffs[0], self.p);
        LaurentPoly { p: self.p, low: 0, coeffs: self.scale(c).coeffs }
    }

    pub fn is_normalized(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs[0] == 1)
    }

    /// Division with remainder as ordinary polynomials; both operands must
    /// have `low >= 0` and the divisor must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero() && self.low >= 0 && d.low >= 0, "polynomial division needs t-free operands");
        let p = self.p;
        let mut rem = dense(self);
        let div = dense(d);
        let dl = div.len() - 1;
        let lead_inv = inv_mod(div[dl], p) as u64;
        if rem.len() < div.len() {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dl];
        for i in (0..quot.len()).rev() {
            let c = (rem[i + dl] as u64 * lead_inv % p as u64) as u32;
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &dj) in div.iter().enumerate() {
                let sub = (c as u64 * dj as u64 % p as u64) as u32;
                rem[i + j] = (rem[i + j] + p - sub) % p;
            }
        }
        (Self::new(p, 0, quot), Self::new(p, 0, rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

fn dense(x: &LaurentPoly) -> Vec<u32> {
    let mut v = vec![0u32; x.low as usize];
    v.extend_from_slice(&x.coeffs);
    v
}

/// `c0 + c1*t + c2*t^2`, terms in increasing degree, zero terms omitted.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match self.low + i as i64 {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                k => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Normalized gcd of two polynomials in F_p[t, t^-1].
pub fn gcd2(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (mut a, mut b) = (a.normalize(), b.normalize());
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = r.normalize();
    }
    a.normalize()
}

/// Normalized gcd of a list; the empty list gives 1.
pub fn poly_gcd(p: u32, xs: &[LaurentPoly]) -> LaurentPoly {
    if xs.is_empty() {
        return LaurentPoly::one(p);
    }
    let mut g = LaurentPoly::zero(p);
    for x in xs {
        g = gcd2(&g, x);
        if g.is_unit() {
            break;
        }
    }
    g
}

/// Rectangular matrix of Laurent polynomials sharing a characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        PolyMatrix { p, rows, cols, entries: vec![LaurentPoly::zero(p); rows * cols] }
    }

    pub fn from_rows(p: u32, rows: Vec<Vec<LaurentPoly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        assert!(rows.iter().flatten().all(|x| x.p() == p), "mixed characteristics");
        PolyMatrix { p, rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: LaurentPoly) {
        assert_eq!(x.p(), self.p, "mixed characteristics");
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let data = rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect();
        let mut m = PolyMatrix::from_rows(self.p, data);
        m.rows = rows.len();
        m.cols = cols.len();
        m
    }

    /// Rows multiplied by powers of t so that no entry has a negative
    /// exponent. Changes maximal minors only by units.
    fn cleared(&self) -> (Vec<Vec<LaurentPoly>>, i64) {
        let mut total = 0;
        let rows = (0..self.rows)
            .map(|i| {
                let low = self.row(i).iter().filter(|x| !x.is_zero()).map(|x| x.low()).min().unwrap_or(0);
                let s = (-low).max(0);
                total += s;
                self.row(i).iter().map(|x| x.shift(s)).collect()
            })
            .collect();
        (rows, total)
    }
}

/// Determinant by fraction-free (Bareiss) elimination after clearing
/// negative exponents row by row.
pub fn poly_det(m: &PolyMatrix) -> LaurentPoly {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let p = m.p;
    let n = m.rows;
    if n == 0 {
        return LaurentPoly::one(p);
    }
    let (mut a, shift) = m.cleared();
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one(p);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return LaurentPoly::zero(p);
            };
            a.swap(k, r);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev);
            }
            a[i][k] = LaurentPoly::zero(p);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].shift(-shift);
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Gcd of all maximal (`cols x cols`) minors of a matrix with at least as
/// many rows as columns, by unimodular row reduction: the row operations
/// preserve the ideal of maximal minors, and the echelon form has a single
/// nonzero one. Zero if the matrix has lower rank.
pub fn maximal_minor_gcd(m: &PolyMatrix) -> LaurentPoly {
    let p = m.p;
    if m.cols == 0 {
        return LaurentPoly::one(p);
    }
    if m.rows < m.cols {
        return LaurentPoly::zero(p);
    }
    let (mut a, _) = m.cleared();
    let mut det = LaurentPoly::one(p);
    for col in 0..m.cols {
        loop {
            // pivot of least degree among the remaining rows
            let pivot = (col..m.rows)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| (a[r][col].high().unwrap(), r));
            let Some(pr) = pivot else {
                return LaurentPoly::zero(p);
            };
            a.swap(col, pr);
            let mut done = true;
            for r in col + 1..m.rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let (q, _) = a[r][col].div_rem(&a[col][col]);
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x = x.sub(&q.mul(y));
                }
                if !a[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        det = det.mul(&a[col][col]);
    }
    det.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn lp(p: u32, low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(p, low, c)
    }

    #[test]
    fn canonical_form() {
        let x = LaurentPoly::new(5, -2, vec![0, 0, 3, 0, 0]);
        assert_eq!(x, LaurentPoly::monomial(5, 3, 0));
        assert_eq!(LaurentPoly::new(5, 7, vec![0, 5]), LaurentPoly::zero(5));
        assert_eq!(lp(5, -1, &[2, 1]).normalize(), lp(5, 0, &[1, 3]));
        assert_eq!(lp(5, 0, &[1, -1, 1]).to_string(), "1 + 4*t + 1*t^2");
        assert_eq!(lp(3, -2, &[1, 0, 2]).to_string(), "1*t^-2 + 2");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let t = LaurentPoly::monomial(7, 1, 1);
        let ti = LaurentPoly::monomial(7, 1, -1);
        assert_eq!(t.mul(&ti), LaurentPoly::one(7));
        let a = lp(7, 0, &[-1, 0, 1]);
        let b = lp(7, 0, &[-1, 1]);
        assert_eq!(a.exact_div(&b), lp(7, 0, &[1, 1]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn spec_determinants_and_gcds() {
        let diag = PolyMatrix::from_rows(
            5,
            vec![vec![LaurentPoly::monomial(5, 1, 1), LaurentPoly::zero(5)], vec![
                LaurentPoly::zero(5),
                LaurentPoly::monomial(5, 1, -1),
            ]],
        );
        assert_eq!(poly_det(&diag), LaurentPoly::one(5));
        let g = poly_gcd(3, &[lp(3, 0, &[-1, 0, 1]), lp(3, 0, &[-1, 1])]);
        assert_eq!(g, lp(3, 0, &[-1, 1]).normalize());
        let m = PolyMatrix::from_rows(3, vec![vec![lp(3, 1, &[1]), lp(3, 0, &[1])], vec![lp(3, 0, &[2]), lp(3, 1, &[1])]]);
        assert_eq!(poly_det(&m), lp(3, 0, &[1, 0, 1]));
        assert_eq!(poly_gcd(2, &[]), LaurentPoly::one(2));
    }

    fn arb_poly(p: u32) -> impl Strategy<Value = LaurentPoly> {
        (-2i64..=2, prop::collection::vec(0u32..p, 0..4)).prop_map(move |(low, c)| LaurentPoly::new(p, low, c))
    }

    fn arb_matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = PolyMatrix> {
        prop::collection::vec(prop::collection::vec(arb_poly(p), cols), rows)
            .prop_map(move |r| PolyMatrix::from_rows(p, r))
    }

    /// Cofactor expansion along the first row.
    fn det_oracle(m: &PolyMatrix) -> LaurentPoly {
        let n = m.rows();
        if n == 0 {
            return LaurentPoly::one(m.p());
        }
        let mut acc = LaurentPoly::zero(m.p());
        for j in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = det_oracle(&m.select(&(1..n).collect::<Vec<_>>(), &rest));
            let term = m.get(0, j).mul(&minor);
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    fn minor_gcd_oracle(m: &PolyMatrix) -> LaurentPoly {
        let k = m.cols();
        let cols: Vec<usize> = (0..k).collect();
        let minors: Vec<LaurentPoly> =
            (0..m.rows()).combinations(k).map(|rows| poly_det(&m.select(&rows, &cols))).collect();
        poly_gcd(m.p(), &minors)
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(x in arb_poly(5)) {
            let n = x.normalize();
            prop_assert!(n.is_normalized());
            prop_assert_eq!(n.normalize(), n);
        }

        #[test]
        fn bareiss_matches_cofactors(m in arb_matrix(3, 3, 3)) {
            prop_assert_eq!(poly_det(&m), det_oracle(&m));
        }

        #[test]
        fn division_identity(a in arb_poly(7), b in arb_poly(7)) {
            prop_assume!(!b.is_zero());
            let (a, b) = (a.shift(2), b.shift(2));
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.is_zero() || r.high() < b.high());
        }

        #[test]
        fn hermite_gcd_matches_minor_enumeration(m in arb_matrix(2, 4, 2)) {
            prop_assert_eq!(maximal_minor_gcd(&m), minor_gcd_oracle(&m).normalize());
        }

        #[test]
        fn hermite_gcd_matches_minor_enumeration_p5(m in arb_matrix(5, 5, 3)) {
            prop_assert_eq!(maximal_minor_gcd(&m), minor_gcd_oracle(&m).normalize());
        }
    }
}
