use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::poly::inv_mod;
use crate::error::{Error, Result};
use crate::fingroups::{FiniteGroup, Mat2, Psl2, Sl2};
use crate::presentation::Presentation;
use crate::snf::abelianization_degrees;

/// Square matrix over F_p, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    p: u32,
    k: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn new(p: u32, k: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != k * k {
            return Err(Error::InvalidRepresentation(format!("{} entries for a {k}x{k} matrix", data.len())));
        }
        Ok(FpMatrix { p, k, data: data.into_iter().map(|x| x % p).collect() })
    }

    pub fn from_rows(p: u32, rows: &[&[u32]]) -> Result<Self> {
        Self::new(p, rows.len(), rows.iter().flat_map(|r| r.iter().copied()).collect())
    }

    pub fn identity(p: u32, k: usize) -> Self {
        let mut data = vec![0; k * k];
        (0..k).for_each(|i| data[i * k + i] = 1 % p);
        FpMatrix { p, k, data }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.k + j]
    }

    pub fn mul(&self, o: &FpMatrix) -> FpMatrix {
        let (k, p) = (self.k, self.p as u64);
        let mut data = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                let s: u64 = (0..k).map(|l| self.get(i, l) as u64 * o.get(l, j) as u64).sum();
                data[i * k + j] = (s % p) as u32;
            }
        }
        FpMatrix { p: self.p, k, data }
    }

    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<FpMatrix> {
        let (k, p) = (self.k, self.p);
        let mut a: Vec<Vec<u32>> = (0..k).map(|i| self.data[i * k..(i + 1) * k].to_vec()).collect();
        let mut b: Vec<Vec<u32>> = (0..k).map(|i| FpMatrix::identity(p, k).data[i * k..(i + 1) * k].to_vec()).collect();
        for col in 0..k {
            let piv = (col..k).find(|&r| a[r][col] != 0)?;
            a.swap(col, piv);
            b.swap(col, piv);
            let inv = inv_mod(a[col][col], p) as u64;
            for j in 0..k {
                a[col][j] = (a[col][j] as u64 * inv % p as u64) as u32;
                b[col][j] = (b[col][j] as u64 * inv % p as u64) as u32;
            }
            for r in 0..k {
                if r == col || a[r][col] == 0 {
                    continue;
                }
                let f = a[r][col] as u64;
                for j in 0..k {
                    a[r][j] = ((a[r][j] as u64 + (p as u64 - f) * a[col][j] as u64) % p as u64) as u32;
                    b[r][j] = ((b[r][j] as u64 + (p as u64 - f) * b[col][j] as u64) % p as u64) as u32;
                }
            }
        }
        Some(FpMatrix { p, k, data: b.into_iter().flatten().collect() })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.k)
            .map(|i| {
                let r: Vec<String> = (0..self.k).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        write!(f, "[{}] mod {}", rows.join(","), self.p)
    }
}

/// GL(k, p). Enumerable only for tiny k and p.
#[derive(Clone, Copy, Debug)]
pub struct GeneralLinear {
    pub p: u32,
    pub k: usize,
}

impl FiniteGroup for GeneralLinear {
    type Elem = FpMatrix;

    fn name(&self) -> String {
        format!("GL({},{})", self.k, self.p)
    }

    fn order(&self) -> u128 {
        let q = self.p as u128;
        let pk = q.checked_pow(self.k as u32).unwrap_or(u128::MAX);
        (0..self.k as u32).try_fold(1u128, |acc, i| acc.checked_mul(pk - q.pow(i))).unwrap_or(u128::MAX)
    }

    fn identity(&self) -> FpMatrix {
        FpMatrix::identity(self.p, self.k)
    }

    fn mul(&self, x: &FpMatrix, y: &FpMatrix) -> FpMatrix {
        x.mul(y)
    }

    fn inv(&self, x: &FpMatrix) -> FpMatrix {
        x.inverse().expect("group elements are invertible")
    }

    fn format_elem(&self, x: &FpMatrix) -> String {
        x.to_string()
    }

    fn enumerate(&self) -> Vec<FpMatrix> {
        let cells = self.k * self.k;
        let total = (self.p as usize).pow(cells as u32);
        (0..total)
            .map(|mut code| {
                let data = (0..cells)
                    .map(|_| {
                        let x = (code % self.p as usize) as u32;
                        code /= self.p as usize;
                        x
                    })
                    .collect::<Vec<_>>();
                FpMatrix { p: self.p, k: self.k, data: data.into_iter().rev().collect() }
            })
            .filter(FpMatrix::is_invertible)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }
}

/// A representation of a presented group into `GL(k, p) x Z`: a matrix and
/// a t-degree per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    p: u32,
    k: usize,
    images: Vec<FpMatrix>,
    alpha: Vec<i64>,
}

impl Representation {
    pub fn new(p: u32, k: usize, images: Vec<FpMatrix>, alpha: Vec<i64>) -> Result<Self> {
        if !crate::fingroups::is_prime(p) {
            return Err(Error::InvalidRepresentation(format!("{p} is not prime")));
        }
        if images.len() != alpha.len() {
            return Err(Error::InvalidRepresentation("one matrix and one degree per generator".into()));
        }
        for (i, m) in images.iter().enumerate() {
            if m.p() != p || m.dim() != k {
                return Err(Error::InvalidRepresentation(format!("image {i} is not a {k}x{k} matrix mod {p}")));
            }
            if !m.is_invertible() {
                return Err(Error::InvalidRepresentation(format!("image {i} is singular")));
            }
        }
        Ok(Representation { p, k, images, alpha })
    }

    /// Every generator to the 1x1 identity, degrees from the abelianization.
    pub fn trivial(pres: &Presentation, p: u32) -> Result<Self> {
        let alpha = abelianization_degrees(pres)?;
        Self::new(p, 1, vec![FpMatrix::identity(p, 1); alpha.len()], alpha)
    }

    /// Composes a hom (element indices) with an element-to-matrix table.
    pub fn from_hom(pres: &Presentation, images: &[u32], dictionary: &[FpMatrix], alpha: Vec<i64>) -> Result<Self> {
        let first = dictionary.first().ok_or_else(|| Error::InvalidRepresentation("empty dictionary".into()))?;
        let (p, k) = (first.p(), first.dim());
        let mats = images
            .iter()
            .map(|&x| {
                dictionary
                    .get(x as usize)
                    .cloned()
                    .ok_or_else(|| Error::InvalidRepresentation(format!("element {x} missing from dictionary")))
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = Self::new(p, k, mats, alpha)?;
        rep.validate(pres)?;
        Ok(rep)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn image(&self, g: usize) -> &FpMatrix {
        &self.images[g]
    }

    pub fn images(&self) -> &[FpMatrix] {
        &self.images
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn group(&self) -> GeneralLinear {
        GeneralLinear { p: self.p, k: self.k }
    }

    /// Every relator must map to the identity matrix and to degree 0.
    pub fn validate(&self, pres: &Presentation) -> Result<()> {
        if self.images.len() != pres.generator_count() {
            return Err(Error::InvalidRepresentation(format!(
                "{} images for {} generators",
                self.images.len(),
                pres.generator_count()
            )));
        }
        let gl = self.group();
        for (i, r) in pres.relators().iter().enumerate() {
            let deg: i64 = r.iter().map(|s| self.alpha[s.gen] * s.exp).sum();
            if deg != 0 || r.evaluate(&self.images, &gl)? != gl.identity() {
                return Err(Error::InvalidRepresentation(format!("relator {i} is not respected")));
            }
        }
        Ok(())
    }
}

/// Natural 2-dimensional representation of SL(2, p), indexed like the
/// canonical element order of [`Sl2`].
pub fn sl2_natural(p: u32) -> Result<Vec<FpMatrix>> {
    let g = Sl2::new(p)?;
    g.elements()?.iter().map(|m| FpMatrix::new(p, 2, m.entries().to_vec())).collect()
}

/// Images of the generators `x = [[0,1],[6,0]]`, `y = [[0,1],[6,6]]` of
/// PSL(2, 7) in SL(3, 2).
const PSL27_X: [u32; 9] = [0, 0, 1, 0, 1, 0, 1, 0, 0];
const PSL27_Y: [u32; 9] = [0, 1, 0, 1, 0, 1, 1, 1, 0];

/// The isomorphism PSL(2, 7) -> SL(3, 2), as a table indexed like the
/// canonical element order of [`Psl2`]. Built from generator images and
/// checked to be a bijective homomorphism.
pub fn psl27_to_sl32() -> Result<Vec<FpMatrix>> {
    let g = Psl2::new(7)?;
    let elements = g.elements()?;
    let index: HashMap<Mat2, usize> = elements.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let gens = [
        (g.canonical(&Mat2::new(0, 1, 6, 0)), FpMatrix::new(2, 3, PSL27_X.to_vec())?),
        (g.canonical(&Mat2::new(0, 1, 6, 6)), FpMatrix::new(2, 3, PSL27_Y.to_vec())?),
    ];
    let mut table: Vec<Option<FpMatrix>> = vec![None; elements.len()];
    let mut queue = VecDeque::from([(g.identity(), FpMatrix::identity(2, 3))]);
    table[index[&g.identity()]] = Some(FpMatrix::identity(2, 3));
    while let Some((x, mx)) = queue.pop_front() {
        for (s, ms) in &gens {
            let y = g.mul(&x, s);
            let slot = &mut table[index[&y]];
            if slot.is_none() {
                let my = mx.mul(ms);
                *slot = Some(my.clone());
                queue.push_back((y, my));
            }
        }
    }
    let table: Vec<FpMatrix> = table
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidRepresentation("dictionary generators do not generate PSL(2,7)".into()))?;
    let distinct: std::collections::HashSet<&FpMatrix> = table.iter().collect();
    if distinct.len() != table.len() || table.iter().any(|m| !m.is_invertible()) {
        return Err(Error::InvalidRepresentation("dictionary is not injective".into()));
    }
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            if table[index[&g.mul(x, y)]] != table[i].mul(&table[j]) {
                return Err(Error::InvalidRepresentation("dictionary is not a homomorphism".into()));
            }
        }
    }
    Ok(table)
}
