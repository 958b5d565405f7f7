use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::fox::{fox_derivative, GroupRingElem};
use super::poly::{maximal_minor_gcd, poly_det, LaurentPoly, PolyMatrix};
use super::rep::{FpMatrix, Representation};
use crate::error::{Error, Result};
use crate::fingroups::TableGroup;
use crate::homsearch::{enumerate_homs_sharded, orbit_representatives, Homomorphism};
use crate::presentation::Presentation;
use crate::snf::abelianization_degrees;
use crate::words::Word;

/// Fox derivatives `dr_i/dx_j` of every relator, computed once per
/// presentation and reused across representations.
#[derive(Clone, Debug)]
pub struct FoxMatrix {
    gens: usize,
    derivs: Vec<Vec<GroupRingElem>>,
}

impl FoxMatrix {
    pub fn new(pres: &Presentation) -> Self {
        let gens = pres.generator_count();
        let derivs = pres.relators().iter().map(|r| (0..gens).map(|j| fox_derivative(r, j)).collect()).collect();
        FoxMatrix { gens, derivs }
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElem {
        &self.derivs[i][j]
    }
}

type Block = Vec<Vec<LaurentPoly>>;

fn phi_word(w: &Word, rep: &Representation) -> Result<(FpMatrix, i64)> {
    let m = w.evaluate(rep.images(), &rep.group())?;
    let deg = w.iter().map(|s| rep.alpha()[s.gen] * s.exp).sum();
    Ok((m, deg))
}

/// `Phi(x) = rho(x) t^alpha(x)`, extended linearly to the group ring.
pub fn phi(x: &GroupRingElem, rep: &Representation) -> Result<Block> {
    let (p, k) = (rep.p(), rep.dim());
    let mut out = vec![vec![LaurentPoly::zero(p); k]; k];
    for (w, c) in x.terms() {
        let (m, deg) = phi_word(w, rep)?;
        let c = c.rem_euclid(p as i64) as u32;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let v = (m.get(i, j) as u64 * c as u64 % p as u64) as u32;
                if v != 0 {
                    *cell = cell.add(&LaurentPoly::monomial(p, v, deg));
                }
            }
        }
    }
    Ok(out)
}

/// `Phi(x_j - 1)`
fn phi_generator_minus_one(j: usize, rep: &Representation) -> Block {
    let (p, k) = (rep.p(), rep.dim());
    let m = rep.image(j);
    let deg = rep.alpha()[j];
    (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    let x = LaurentPoly::monomial(p, m.get(a, b), deg);
                    if a == b {
                        x.sub(&LaurentPoly::one(p))
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect()
}

fn block_mul(a: &Block, b: &Block, p: u32) -> Block {
    let k = a.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..k).fold(LaurentPoly::zero(p), |acc, l| acc.add(&a[i][l].mul(&b[l][j]))))
                .collect()
        })
        .collect()
}

fn wada_from_fox(fox: &FoxMatrix, rep: &Representation) -> Result<PolyMatrix> {
    let (p, k) = (rep.p(), rep.dim());
    let mut m = PolyMatrix::zeros(p, fox.derivs.len() * k, fox.gens * k);
    for (i, row) in fox.derivs.iter().enumerate() {
        let mut null = vec![vec![LaurentPoly::zero(p); k]; k];
        for (j, d) in row.iter().enumerate() {
            let block = phi(d, rep)?;
            let prod = block_mul(&block, &phi_generator_minus_one(j, rep), p);
            for a in 0..k {
                for b in 0..k {
                    null[a][b] = null[a][b].add(&prod[a][b]);
                    m.set(i * k + a, j * k + b, block[a][b].clone());
                }
            }
        }
        // fundamental identity: sum_j Phi(dr/dx_j) Phi(x_j - 1) = Phi(r - 1) = 0
        if null.iter().flatten().any(|x| !x.is_zero()) {
            return Err(Error::InvalidRepresentation(format!("Fox identity fails on relator {i}")));
        }
    }
    Ok(m)
}

/// Block matrix `Phi(dr_i/dx_j)`, checked against the fundamental identity.
pub fn wada_matrix(pres: &Presentation, rep: &Representation) -> Result<PolyMatrix> {
    rep.validate(pres)?;
    wada_from_fox(&FoxMatrix::new(pres), rep)
}

/// Normalized numerator and denominator of the Wada invariant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TwistedAlexander {
    pub p: u32,
    pub k: usize,
    #[serde(serialize_with = "as_text")]
    pub numerator: LaurentPoly,
    #[serde(serialize_with = "as_text")]
    pub denominator: LaurentPoly,
    /// generator whose column block was deleted
    pub column: usize,
}

fn as_text<S: serde::Serializer>(x: &LaurentPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl TwistedAlexander {
    /// `p=<p> k=<k> num=<poly> den=<poly>`
    pub fn line(&self) -> String {
        format!("p={} k={} num={} den={}", self.p, self.k, self.numerator, self.denominator)
    }
}

impl fmt::Display for TwistedAlexander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

fn invariant_at(wada: &PolyMatrix, rep: &Representation, gens: usize, j: usize) -> Option<TwistedAlexander> {
    let (p, k) = (rep.p(), rep.dim());
    let den_block = phi_generator_minus_one(j, rep);
    let den = poly_det(&PolyMatrix::from_rows(p, den_block));
    if den.is_zero() {
        return None;
    }
    let rows: Vec<usize> = (0..wada.rows()).collect();
    let cols: Vec<usize> = (0..gens * k).filter(|c| c / k != j).collect();
    let num = maximal_minor_gcd(&wada.select(&rows, &cols));
    Some(TwistedAlexander { p, k, numerator: num.normalize(), denominator: den.normalize(), column: j })
}

fn from_wada(wada: &PolyMatrix, rep: &Representation, gens: usize) -> Result<TwistedAlexander> {
    (0..gens).find_map(|j| invariant_at(wada, rep, gens, j)).ok_or(Error::InvariantUndefined)
}

/// Uses the first generator `x_j` with `det Phi(x_j - 1) != 0`.
pub fn twisted_alexander(pres: &Presentation, rep: &Representation) -> Result<TwistedAlexander> {
    let wada = wada_matrix(pres, rep)?;
    from_wada(&wada, rep, pres.generator_count())
}

/// The invariant computed with column block `j` deleted, if defined there.
pub fn twisted_alexander_at(pres: &Presentation, rep: &Representation, j: usize) -> Result<Option<TwistedAlexander>> {
    let wada = wada_matrix(pres, rep)?;
    Ok(invariant_at(&wada, rep, pres.generator_count(), j))
}

/// Invariants of one group of homs, as a sorted multiset of lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bucket {
    pub name: String,
    pub count: usize,
    pub undefined: usize,
    pub lines: Vec<String>,
    /// SHA-256 of the sorted lines joined by newlines, hex encoded
    pub digest: String,
}

impl Bucket {
    fn new(name: &str, lines: Vec<String>) -> Self {
        let mut lines = lines;
        lines.sort();
        let undefined = lines.iter().filter(|l| l.ends_with("undefined")).count();
        let digest = hex::encode(Sha256::digest(lines.join("\n").as_bytes()));
        Bucket { name: name.into(), count: lines.len(), undefined, lines, digest }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TalexSweep {
    pub target: String,
    pub homs: usize,
    /// all homs, homs with nonabelian image, one hom per conjugacy class
    pub buckets: Vec<Bucket>,
}

impl TalexSweep {
    pub fn bucket(&self, name: &str) -> Option<&Bucket> {
        self.buckets.iter().find(|b| b.name == name)
    }
}

pub const BUCKET_ALL: &str = "all";
pub const BUCKET_NONABELIAN: &str = "nonabelian";
pub const BUCKET_CLASSES: &str = "classes";

fn nonabelian(h: &Homomorphism, group: &TableGroup) -> bool {
    let xs = &h.images;
    xs.iter().enumerate().any(|(i, &x)| xs[i + 1..].iter().any(|&y| group.mul_idx(x, y) != group.mul_idx(y, x)))
}

/// Twisted invariants of every hom `pres -> group`, each composed with a
/// faithful element-to-matrix table, bucketed three ways.
pub fn talex_sweep(pres: &Presentation, group: &TableGroup, dictionary: &[FpMatrix], shards: usize) -> Result<TalexSweep> {
    let alpha = abelianization_degrees(pres)?;
    let fox = FoxMatrix::new(pres);
    let first = dictionary.first().ok_or_else(|| Error::InvalidRepresentation("empty dictionary".into()))?;
    let (p, k) = (first.p(), first.dim());
    let homs = enumerate_homs_sharded(pres, group, shards.max(1))?;
    let lines: Vec<String> = homs
        .par_iter()
        .map(|h| {
            let rep = Representation::from_hom(pres, &h.images, dictionary, alpha.clone())?;
            let wada = wada_from_fox(&fox, &rep)?;
            match from_wada(&wada, &rep, pres.generator_count()) {
                Ok(inv) => Ok(inv.line()),
                Err(Error::InvariantUndefined) => Ok(format!("p={p} k={k} undefined")),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    let pick = |keep: &dyn Fn(usize) -> bool| -> Vec<String> {
        lines.iter().enumerate().filter(|&(i, _)| keep(i)).map(|(_, l)| l.clone()).collect()
    };
    let reps: std::collections::HashSet<usize> = orbit_representatives(&homs, group)?.into_iter().collect();
    let buckets = vec![
        Bucket::new(BUCKET_ALL, lines.clone()),
        Bucket::new(BUCKET_NONABELIAN, pick(&|i| nonabelian(&homs[i], group))),
        Bucket::new(BUCKET_CLASSES, pick(&|i| reps.contains(&i))),
    ];
    Ok(TalexSweep { target: group.name_str().to_string(), homs: homs.len(), buckets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroups::{FiniteGroup, GroupSpec, Sl2};
    use crate::homsearch::enumerate_homs;
    use crate::presentation::{granny_knot_gn, square_knot_gn, trefoil_right_reduced};
    use crate::talex::rep::sl2_natural;

    fn lp(p: u32, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(p, 0, c)
    }

    #[test]
    fn trefoil_classical() {
        let pres = trefoil_right_reduced(1);
        let rep = Representation::trivial(&pres, 5).unwrap();
        let w = wada_matrix(&pres, &rep).unwrap();
        assert_eq!((w.rows(), w.cols()), (2, 2));
        // hand Fox matrix of aba b^-1 a^-1 b^-1: d/da = 1 - t + t^2
        assert_eq!(*w.get(0, 0), lp(5, &[1, -1, 1]).shift(0));
        let inv = twisted_alexander(&pres, &rep).unwrap();
        assert_eq!(inv.numerator, lp(5, &[1, 4, 1]));
        assert_eq!(inv.denominator, lp(5, &[4, 1]).normalize());
        assert_eq!(inv.line(), "p=5 k=1 num=1 + 4*t + 1*t^2 den=1 + 4*t");
    }

    #[test]
    fn free_group_rank_one() {
        let pres = Presentation::free(1);
        let rep = Representation::trivial(&pres, 3).unwrap();
        let inv = twisted_alexander(&pres, &rep).unwrap();
        assert_eq!(inv.numerator, LaurentPoly::one(3));
        assert_eq!(inv.denominator, lp(3, &[-1, 1]).normalize());
    }

    /// Classical Alexander polynomials of SK and GK at n = 1: the square of
    /// the trefoil polynomial, over F_5 and F_7.
    #[test]
    fn trivial_rep_reduces_to_classical() {
        for p in [5, 7] {
            let tref = lp(p, &[1, -1, 1]);
            for pres in [square_knot_gn(1), granny_knot_gn(1)] {
                let rep = Representation::trivial(&pres, p).unwrap();
                let inv = twisted_alexander(&pres, &rep).unwrap();
                assert_eq!(inv.numerator, tref.mul(&tref).normalize());
                assert_eq!(inv.denominator, lp(p, &[-1, 1]).normalize());
            }
        }
    }

    #[test]
    fn wada_dimensions() {
        let dict = crate::talex::psl27_to_sl32().unwrap();
        let g = GroupSpec::Psl2(7).build().unwrap();
        let pres = square_knot_gn(2);
        let h = enumerate_homs(&pres, &g).unwrap().into_iter().find(|h| nonabelian(h, &g)).unwrap();
        let rep = Representation::from_hom(&pres, &h.images, &dict, vec![1, 1, 1]).unwrap();
        let w = wada_matrix(&pres, &rep).unwrap();
        assert_eq!((w.rows(), w.cols()), (9, 9));
    }

    /// `num_j den_j' = num_j' den_j` up to units when two columns are usable.
    #[test]
    fn column_choice_independence() {
        let pres = trefoil_right_reduced(1);
        let dict = sl2_natural(5).unwrap();
        let g = crate::fingroups::TableGroup::from_group(&Sl2::new(5).unwrap()).unwrap();
        let mut compared = 0;
        for h in enumerate_homs(&pres, &g).unwrap() {
            let rep = Representation::from_hom(&pres, &h.images, &dict, vec![1, 1]).unwrap();
            let (Some(a), Some(b)) =
                (twisted_alexander_at(&pres, &rep, 0).unwrap(), twisted_alexander_at(&pres, &rep, 1).unwrap())
            else {
                continue;
            };
            let lhs = a.numerator.mul(&b.denominator).normalize();
            let rhs = b.numerator.mul(&a.denominator).normalize();
            assert_eq!(lhs, rhs, "{h:?}");
            compared += 1;
        }
        assert!(compared > 50, "{compared}");
        assert_eq!(g.order(), 120);
    }

    #[test]
    fn undefined_when_every_generator_fixes_a_vector() {
        let pres = trefoil_right_reduced(1);
        let rep = Representation::new(5, 1, vec![FpMatrix::identity(5, 1); 2], vec![0, 0]).unwrap();
        assert!(matches!(twisted_alexander(&pres, &rep), Err(Error::InvariantUndefined)));
    }

    #[test]
    fn sweep_buckets_on_small_target() {
        let g = GroupSpec::Sl2(3).build().unwrap();
        let dict = sl2_natural(3).unwrap();
        let sk = talex_sweep(&square_knot_gn(2), &g, &dict, 3).unwrap();
        let gk = talex_sweep(&granny_knot_gn(2), &g, &dict, 1).unwrap();
        assert_eq!(sk.homs, sk.bucket(BUCKET_ALL).unwrap().count);
        assert!(sk.bucket(BUCKET_NONABELIAN).unwrap().count <= sk.homs);
        for name in [BUCKET_ALL, BUCKET_NONABELIAN, BUCKET_CLASSES] {
            assert_eq!(sk.bucket(name).unwrap().lines, gk.bucket(name).unwrap().lines, "{name}");
        }
    }
}
