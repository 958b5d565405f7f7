use std::collections::HashMap;

use super::{FiniteGroup, ENUMERATION_BOUND};
use crate::error::{Error, Result};

/// A finite group given by its multiplication table. Elements are the
/// indices `0..order`, numbered in the canonical order of the group the
/// table was built from. Hom search runs on this form.
#[derive(Clone, Debug)]
pub struct TableGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<u16>,
    inverse: Vec<u32>,
    identity: u32,
    orders: Vec<u32>,
}

impl TableGroup {
    /// Tabulates any enumerable group.
    pub fn from_group<G: FiniteGroup>(group: &G) -> Result<Self> {
        let elements = group.elements()?;
        let index: HashMap<&G::Elem, u32> = elements.iter().enumerate().map(|(i, x)| (x, i as u32)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for x in &elements {
            for y in &elements {
                table.push(index[&group.mul(x, y)] as u16);
            }
        }
        let labels = elements.iter().map(|x| group.format_elem(x)).collect();
        let identity = index[&group.identity()];
        Ok(TableGroup::assemble(group.name(), labels, table, identity))
    }

    /// Validates and wraps a raw Cayley table (`rows[i][j]` = index of `i*j`).
    pub fn from_cayley_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let bad = |msg: String| Error::InvalidCayleyTable(msg);
        let n = rows.len();
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        if n as u128 > ENUMERATION_BOUND {
            return Err(Error::Capability { name: name.into(), order: n as u128, bound: ENUMERATION_BOUND });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(bad(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n {
                    return Err(bad(format!("entry {x} out of range in row {i}")));
                }
                if seen[x] {
                    return Err(bad(format!("row {i} is not a bijection")));
                }
                seen[x] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in rows {
                if seen[row[j]] {
                    return Err(bad(format!("column {j} is not a bijection")));
                }
                seen[row[j]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| bad("no identity element".into()))?;
        for x in 0..n {
            for y in 0..n {
                let xy = rows[x][y];
                for z in 0..n {
                    if rows[xy][z] != rows[x][rows[y][z]] {
                        return Err(bad(format!("not associative at ({x},{y},{z})")));
                    }
                }
            }
        }
        let table = rows.iter().flatten().map(|&x| x as u16).collect();
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Ok(TableGroup::assemble(name.into(), labels, table, identity as u32))
    }

    fn assemble(name: String, labels: Vec<String>, table: Vec<u16>, identity: u32) -> Self {
        let n = labels.len();
        let mut inverse = vec![0u32; n];
        for x in 0..n {
            let row = &table[x * n..(x + 1) * n];
            inverse[x] = row.iter().position(|&v| v as u32 == identity).expect("rows are bijections") as u32;
        }
        let mut orders = vec![0u32; n];
        for x in 0..n {
            let mut y = x as u32;
            let mut k = 1;
            while y != identity {
                y = table[y as usize * n + x] as u32;
                k += 1;
            }
            orders[x] = k;
        }
        TableGroup { name, labels, table, inverse, identity, orders }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name_str(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn mul_idx(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.labels.len() + y as usize] as u32
    }

    #[inline]
    pub fn inv_idx(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }

    pub fn identity_idx(&self) -> u32 {
        self.identity
    }

    pub fn element_order_idx(&self, x: u32) -> u32 {
        self.orders[x as usize]
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.orders.iter().fold(1u64, |acc, &o| acc / gcd(acc, o as u64) * o as u64)
    }

    pub fn label(&self, x: u32) -> &str {
        &self.labels[x as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<u32> {
        let compact: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels
            .iter()
            .position(|l| l.chars().filter(|c| !c.is_whitespace()).eq(compact.chars()))
            .map(|i| i as u32)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.size() as u32;
        (0..n).all(|x| (x + 1..n).all(|y| self.mul_idx(x, y) == self.mul_idx(y, x)))
    }

    /// A small generating set, chosen greedily in canonical order.
    pub fn generating_set(&self) -> Vec<u32> {
        let n = self.size();
        let mut in_subgroup = vec![false; n];
        in_subgroup[self.identity as usize] = true;
        let mut members = vec![self.identity];
        let mut gens = Vec::new();
        for candidate in 0..n as u32 {
            if in_subgroup[candidate as usize] {
                continue;
            }
            gens.push(candidate);
            // close the subgroup under right multiplication by generators
            let mut frontier = members.clone();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = self.mul_idx(x, g);
                    if !in_subgroup[y as usize] {
                        in_subgroup[y as usize] = true;
                        members.push(y);
                        frontier.push(y);
                    }
                }
            }
            if members.len() == n {
                break;
            }
        }
        gens
    }

    /// Direct product with elements ordered lexicographically by pairs.
    pub fn direct_product(&self, other: &TableGroup) -> Result<TableGroup> {
        let (n, m) = (self.size(), other.size());
        let order = (n * m) as u128;
        let name = format!("{}x{}", self.name, other.name);
        if order > ENUMERATION_BOUND {
            return Err(Error::Capability { name, order, bound: ENUMERATION_BOUND });
        }
        let mut table = Vec::with_capacity(n * m * n * m);
        for x1 in 0..n as u32 {
            for x2 in 0..m as u32 {
                for y1 in 0..n as u32 {
                    for y2 in 0..m as u32 {
                        let v = self.mul_idx(x1, y1) as usize * m + other.mul_idx(x2, y2) as usize;
                        table.push(v as u16);
                    }
                }
            }
        }
        let labels = (0..n)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|(i, j)| format!("({}, {})", self.labels[i], other.labels[j]))
            .collect();
        let identity = self.identity * m as u32 + other.identity;
        Ok(TableGroup::assemble(name, labels, table, identity))
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|i| self.table[i * n..(i + 1) * n].iter().map(|&x| x as usize).collect()).collect()
    }
}

impl FiniteGroup for TableGroup {
    type Elem = u32;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn order(&self) -> u128 {
        self.labels.len() as u128
    }

    fn identity(&self) -> u32 {
        self.identity
    }

    fn mul(&self, x: &u32, y: &u32) -> u32 {
        self.mul_idx(*x, *y)
    }

    fn inv(&self, x: &u32) -> u32 {
        self.inv_idx(*x)
    }

    fn format_elem(&self, x: &u32) -> String {
        self.labels[*x as usize].clone()
    }

    fn enumerate(&self) -> Vec<u32> {
        (0..self.labels.len() as u32).collect()
    }

    fn pow(&self, x: &u32, k: i64) -> u32 {
        let order = self.orders[*x as usize] as i64;
        let k = k.rem_euclid(order);
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul_idx(acc, *x);
        }
        acc
    }

    fn element_order(&self, x: &u32) -> u64 {
        self.orders[*x as usize] as u64
    }
}

/// Cayley table file: first line is the order N, then N lines of N
/// 0-based indices separated by whitespace. `#` starts a comment.
pub fn parse_cayley_table(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty Cayley table file".into()))?;
    let n: usize = header.parse().map_err(|_| Error::Parse(format!("bad order line {header:?}")))?;
    let rows: Vec<Vec<usize>> = lines
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad table entry {t:?}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    if rows.len() != n {
        return Err(Error::Parse(format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(rows)
}

pub fn format_cayley_table(group: &TableGroup) -> String {
    let mut out = format!("{}\n", group.size());
    for row in group.cayley_rows() {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroups::{Cyclic, Symmetric};

    #[test]
    fn cayley_round_trip_is_identity_indexing() {
        let s3 = TableGroup::from_group(&Symmetric::new(3)).unwrap();
        let text = format_cayley_table(&s3);
        let rows = parse_cayley_table(&text).unwrap();
        let back = TableGroup::from_cayley_table("S3", &rows).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(back.mul_idx(x, y), s3.mul_idx(x, y));
            }
            assert_eq!(back.inv_idx(x), s3.inv_idx(x));
        }
        assert_eq!(back.identity_idx(), s3.identity_idx());
    }

    #[test]
    fn invalid_tables() {
        // not a Latin square
        assert!(TableGroup::from_cayley_table("x", &[vec![0, 1], vec![0, 1]]).is_err());
        // wrong shape
        assert!(TableGroup::from_cayley_table("x", &[vec![0, 1], vec![1]]).is_err());
        // out of range
        assert!(TableGroup::from_cayley_table("x", &[vec![0, 2], vec![1, 0]]).is_err());
        // Latin square with identity 0 that is not associative (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = TableGroup::from_cayley_table("loop", &loop5).unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
        // Latin square without identity
        let no_id = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert!(TableGroup::from_cayley_table("x", &no_id).unwrap_err().to_string().contains("identity"));
        assert!(parse_cayley_table("2\n0 1\n").is_err());
    }

    #[test]
    fn products_and_generators() {
        let z2 = TableGroup::from_group(&Cyclic::new(2).unwrap()).unwrap();
        let z4 = TableGroup::from_group(&Cyclic::new(4).unwrap()).unwrap();
        let p = z2.direct_product(&z4).unwrap();
        assert_eq!(p.size(), 8);
        assert!(p.is_abelian());
        assert_eq!(p.exponent(), 4);
        assert_eq!(p.generating_set().len(), 2);
        let s4 = TableGroup::from_group(&Symmetric::new(4)).unwrap();
        assert!(!s4.is_abelian());
        assert!(s4.generating_set().len() <= 3);
        assert_eq!(s4.exponent(), 12);
    }

    #[test]
    fn labels_resolve() {
        let s3 = TableGroup::from_group(&Symmetric::new(3)).unwrap();
        let t = s3.find_label("(1, 2)").unwrap();
        assert_eq!(s3.label(t), "(1,2)");
        assert_eq!(s3.element_order_idx(t), 2);
    }
}
