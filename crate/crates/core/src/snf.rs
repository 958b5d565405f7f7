//! Smith normal form over the integers and abelianization invariants.

use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.iter().flatten().copied().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = checked(out[(i, j)].checked_add(checked(a.checked_mul(other[(k, j)]))));
                }
            }
        }
        out
    }

    /// Determinant by cofactor expansion; only for the small unimodularity
    /// checks in tests and verification.
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        fn rec(m: &[Vec<i64>]) -> i64 {
            match m.len() {
                0 => 1,
                1 => m[0][0],
                n => (0..n)
                    .map(|j| {
                        let minor: Vec<Vec<i64>> = m[1..]
                            .iter()
                            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                            .collect();
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        sign * m[0][j] * rec(&minor)
                    })
                    .sum(),
            }
        }
        let rows: Vec<Vec<i64>> = (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect();
        rec(&rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i64) {
        for j in 0..self.cols {
            let v = checked(self[(src, j)].checked_mul(k));
            self[(dst, j)] = checked(self[(dst, j)].checked_add(v));
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i64) {
        for i in 0..self.rows {
            let v = checked(self[(i, src)].checked_mul(k));
            self[(i, dst)] = checked(self[(i, dst)].checked_add(v));
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)];
        }
    }
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("integer overflow in exact matrix arithmetic")
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, its diagonal
/// entries non-negative, each dividing the next, zeros last.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }

    /// Checks `u m v = d`, unimodularity of `u` and `v`, and the shape of `d`.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let diag_ok = (0..self.d.rows).all(|i| (0..self.d.cols).all(|j| i == j || self.d[(i, j)] == 0));
        let diag = self.diagonal();
        let chain_ok = diag.iter().all(|&x| x >= 0)
            && diag.windows(2).all(|w| if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 });
        diag_ok
            && chain_ok
            && self.u.mul(m).mul(&self.v) == self.d
            && self.u.det().abs() == 1
            && self.v.det().abs() == 1
    }
}

/// Smith normal form by repeated minimal-pivot elimination.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // pivot: smallest nonzero |entry| in the trailing block
            let mut pivot = None;
            for i in t..rows {
                for j in t..cols {
                    let x = d[(i, j)].abs();
                    if x != 0 && pivot.is_none_or(|(_, _, best)| x < best) {
                        pivot = Some((i, j, x));
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else {
                return finish(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = d[(i, t)] / p;
                if q != 0 {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                dirty |= d[(i, t)] != 0;
            }
            for j in t + 1..cols {
                let q = d[(t, j)] / p;
                if q != 0 {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                dirty |= d[(t, j)] != 0;
            }
            if dirty {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[(i, j)] % p != 0));
            match offender {
                Some(i) => {
                    d.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> SmithForm {
    SmithForm { u, d, v }
}

/// Invariant factors of an abelian group; `0` marks a free cyclic factor.
/// Unit factors are dropped, nonzero factors come first in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AbelianInvariants {
    pub factors: Vec<u64>,
}

impl AbelianInvariants {
    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|&&f| f == 0).count()
    }

    pub fn is_infinite_cyclic(&self) -> bool {
        self.factors == [0]
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.factors.iter().map(|&x| if x == 0 { "Z".into() } else { format!("Z/{x}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn relation_matrix(p: &Presentation) -> IntMatrix {
    IntMatrix::from_rows(&p.exponent_sum_matrix(), p.generator_count())
}

pub fn abelianization_invariants(p: &Presentation) -> AbelianInvariants {
    let m = relation_matrix(p);
    let snf = smith_normal_form(&m);
    let diag = snf.diagonal();
    let mut factors: Vec<u64> = diag.iter().filter(|&&x| x > 1).map(|&x| x as u64).collect();
    factors.extend(std::iter::repeat_n(0, p.generator_count() - snf.rank()));
    AbelianInvariants { factors }
}

/// The map from generators onto Z when the abelianization is infinite
/// cyclic, normalized so the first nonzero degree is positive.
pub fn abelianization_degrees(p: &Presentation) -> Result<Vec<i64>> {
    let inv = abelianization_invariants(p);
    if !inv.is_infinite_cyclic() {
        return Err(Error::NotInfiniteCyclic(inv.factors));
    }
    let m = relation_matrix(p);
    let snf = smith_normal_form(&m);
    // Z^g / rowspace(m) is carried to Z^g / rowspace(d) by x -> x v; the
    // free coordinate is the last column.
    let free = p.generator_count() - 1;
    let mut degrees: Vec<i64> = (0..p.generator_count()).map(|j| snf.v[(j, free)]).collect();
    let g = degrees.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()));
    if g > 1 {
        degrees.iter_mut().for_each(|x| *x /= g);
    }
    if degrees.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        degrees.iter_mut().for_each(|x| *x = -*x);
    }
    Ok(degrees)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{granny_knot_gn, square_knot_gn, trefoil_right_reduced};
    use crate::words::{GeneratorTable, Word};
    use itertools::Itertools;
    use proptest::prelude::*;

    /// Invariant factors from determinantal divisors: d_k = gcd of all k x k
    /// minors, s_k = d_k / d_(k-1).
    fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<i64> {
        let r = m.rows().min(m.cols());
        let mut prev = 1;
        let mut out = Vec::new();
        for k in 1..=r {
            let mut g = 0;
            for rows in (0..m.rows()).combinations(k) {
                for cols in (0..m.cols()).combinations(k) {
                    let sub = IntMatrix::from_rows(
                        &rows.iter().map(|&i| cols.iter().map(|&j| m[(i, j)]).collect()).collect::<Vec<_>>(),
                        k,
                    );
                    g = gcd(g, sub.det().abs());
                }
            }
            if g == 0 {
                out.extend(std::iter::repeat_n(0, r - k + 1));
                break;
            }
            out.push(g / prev);
            prev = g;
        }
        out
    }

    #[test]
    fn small_cases() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        let snf = smith_normal_form(&m);
        assert!(snf.verify(&m));
        assert_eq!(snf.diagonal(), vec![2, 6, 12]);
        assert_eq!(snf.diagonal(), invariant_factors_by_minors(&m));

        let z = IntMatrix::zeros(2, 3);
        let snf = smith_normal_form(&z);
        assert!(snf.verify(&z));
        assert_eq!(snf.rank(), 0);
    }

    proptest! {
        #[test]
        fn agrees_with_minor_oracle(rows in 1usize..=4, cols in 1usize..=4, seed in prop::collection::vec(-6i64..=6, 16)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
            let m = IntMatrix::from_rows(&data, cols);
            let snf = smith_normal_form(&m);
            prop_assert!(snf.verify(&m));
            prop_assert_eq!(snf.diagonal(), invariant_factors_by_minors(&m));
        }
    }

    #[test]
    fn cyclic_of_order_three() {
        let p = Presentation::new(GeneratorTable::new(["x"]).unwrap(), vec![Word::power_of(0, 3)], 1, "Z3").unwrap();
        assert_eq!(abelianization_invariants(&p).factors, vec![3]);
        assert!(abelianization_degrees(&p).is_err());
    }

    #[test]
    fn knot_groups_abelianize_to_z() {
        for n in 1..=5 {
            for p in [square_knot_gn(n), granny_knot_gn(n), trefoil_right_reduced(n)] {
                assert_eq!(abelianization_invariants(&p).factors, vec![0], "{}", p.label());
                let m = relation_matrix(&p);
                assert!(smith_normal_form(&m).verify(&m));
            }
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(abelianization_degrees(&square_knot_gn(2)).unwrap(), vec![1, 1, 1]);
        assert_eq!(abelianization_degrees(&trefoil_right_reduced(3)).unwrap(), vec![1, 1]);
        assert_eq!(abelianization_degrees(&Presentation::free(1)).unwrap(), vec![1]);
        assert!(abelianization_degrees(&Presentation::free(2)).is_err());
        let wirtinger = crate::diagram::gn_from_diagram(&crate::diagram::right_trefoil_diagram(), 1).unwrap();
        assert_eq!(abelianization_degrees(&wirtinger).unwrap(), vec![1, 1, 1]);
    }
}
