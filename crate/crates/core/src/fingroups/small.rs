use super::FiniteGroup;
use crate::error::{Error, Result};

/// Z/m under addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclic {
    m: u32,
}

impl Cyclic {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        Ok(Cyclic { m })
    }
}

impl FiniteGroup for Cyclic {
    type Elem = u32;

    fn name(&self) -> String {
        format!("Z{}", self.m)
    }

    fn order(&self) -> u128 {
        self.m as u128
    }

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, x: &u32, y: &u32) -> u32 {
        ((*x as u64 + *y as u64) % self.m as u64) as u32
    }

    fn inv(&self, x: &u32) -> u32 {
        (self.m - x) % self.m
    }

    fn format_elem(&self, x: &u32) -> String {
        x.to_string()
    }

    fn enumerate(&self) -> Vec<u32> {
        (0..self.m).collect()
    }
}

/// `r^rot s^flip` in the dihedral group of order 2m, with `s r s = r^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElem {
    pub flip: bool,
    pub rot: u32,
}

/// Symmetries of the regular m-gon, order 2m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dihedral {
    m: u32,
}

impl Dihedral {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidGroup("dihedral group D0".into()));
        }
        Ok(Dihedral { m })
    }
}

impl FiniteGroup for Dihedral {
    type Elem = DihedralElem;

    fn name(&self) -> String {
        format!("D{}", self.m)
    }

    fn order(&self) -> u128 {
        2 * self.m as u128
    }

    fn identity(&self) -> DihedralElem {
        DihedralElem { flip: false, rot: 0 }
    }

    fn mul(&self, x: &DihedralElem, y: &DihedralElem) -> DihedralElem {
        let m = self.m;
        let moved = if x.flip { (m - y.rot) % m } else { y.rot };
        DihedralElem { flip: x.flip ^ y.flip, rot: (x.rot + moved) % m }
    }

    fn inv(&self, x: &DihedralElem) -> DihedralElem {
        if x.flip {
            *x
        } else {
            DihedralElem { flip: false, rot: (self.m - x.rot) % self.m }
        }
    }

    fn format_elem(&self, x: &DihedralElem) -> String {
        match (x.rot, x.flip) {
            (0, false) => "1".into(),
            (0, true) => "s".into(),
            (k, false) => format!("r^{k}"),
            (k, true) => format!("r^{k} s"),
        }
    }

    fn enumerate(&self) -> Vec<DihedralElem> {
        [false, true]
            .into_iter()
            .flat_map(|flip| (0..self.m).map(move |rot| DihedralElem { flip, rot }))
            .collect()
    }
}
