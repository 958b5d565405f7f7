use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matrix::is_prime;
use super::{parse_cayley_table, Alternating, Cyclic, Dihedral, FiniteGroup, Psl2, Sl2, Symmetric, TableGroup};
use crate::error::{Error, Result};

/// Textual name of a target group: `S4`, `A5`, `Z3`, `D6` (order 12),
/// `SL2(5)`, `PSL2(7)`, products `Z2xZ4`, or `cayley:<path>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(u32),
    Dihedral(u32),
    Sl2(u32),
    Psl2(u32),
    Product(Vec<GroupSpec>),
    Cayley(PathBuf),
}

impl GroupSpec {
    /// Group order, computed without building the group. `None` for
    /// Cayley files, whose order is only known after reading them.
    pub fn order(&self) -> Option<u128> {
        Some(match self {
            GroupSpec::Symmetric(m) => Symmetric::new(*m).order(),
            GroupSpec::Alternating(m) => Alternating::new(*m).order(),
            GroupSpec::Cyclic(m) => *m as u128,
            GroupSpec::Dihedral(m) => 2 * *m as u128,
            GroupSpec::Sl2(p) => Sl2::new(*p).ok()?.order(),
            GroupSpec::Psl2(p) => Psl2::new(*p).ok()?.order(),
            GroupSpec::Product(parts) => {
                let mut acc = 1u128;
                for part in parts {
                    acc = acc.saturating_mul(part.order()?);
                }
                acc
            }
            GroupSpec::Cayley(_) => return None,
        })
    }

    pub fn build(&self) -> Result<TableGroup> {
        let name = self.to_string();
        let group = match self {
            GroupSpec::Symmetric(m) => TableGroup::from_group(&Symmetric::new(*m))?,
            GroupSpec::Alternating(m) => TableGroup::from_group(&Alternating::new(*m))?,
            GroupSpec::Cyclic(m) => TableGroup::from_group(&Cyclic::new(*m)?)?,
            GroupSpec::Dihedral(m) => TableGroup::from_group(&Dihedral::new(*m)?)?,
            GroupSpec::Sl2(p) => TableGroup::from_group(&Sl2::new(*p)?)?,
            GroupSpec::Psl2(p) => TableGroup::from_group(&Psl2::new(*p)?)?,
            GroupSpec::Product(parts) => {
                if let Some(order) = self.order() {
                    if order > super::ENUMERATION_BOUND {
                        return Err(Error::Capability { name, order, bound: super::ENUMERATION_BOUND });
                    }
                }
                let mut iter = parts.iter();
                let first = iter.next().ok_or_else(|| Error::InvalidGroup("empty product".into()))?.build()?;
                iter.try_fold(first, |acc, part| acc.direct_product(&part.build()?))?
            }
            GroupSpec::Cayley(path) => {
                let text = std::fs::read_to_string(path)?;
                TableGroup::from_cayley_table(name.clone(), &parse_cayley_table(&text)?)?
            }
        };
        Ok(group.with_name(name))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(m) => write!(f, "S{m}"),
            GroupSpec::Alternating(m) => write!(f, "A{m}"),
            GroupSpec::Cyclic(m) => write!(f, "Z{m}"),
            GroupSpec::Dihedral(m) => write!(f, "D{m}"),
            GroupSpec::Sl2(p) => write!(f, "SL2({p})"),
            GroupSpec::Psl2(p) => write!(f, "PSL2({p})"),
            GroupSpec::Product(parts) => {
                let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", names.join("x"))
            }
            GroupSpec::Cayley(path) => write!(f, "cayley:{}", path.display()),
        }
    }
}

fn parse_atom(text: &str) -> Result<GroupSpec> {
    let bad = || Error::InvalidGroup(format!("unrecognized group {text:?}"));
    let num = |s: &str| s.parse::<u32>().map_err(|_| bad());
    let prime = |s: &str| -> Result<u32> {
        let p = num(s)?;
        if !is_prime(p) {
            return Err(Error::InvalidGroup(format!("{text}: {p} is not prime")));
        }
        Ok(p)
    };
    let upper = text.to_ascii_uppercase();
    let arg = |prefix: &str| -> Option<String> {
        upper
            .strip_prefix(prefix)
            .and_then(|s| s.strip_prefix('('))
            .and_then(|s| s.strip_suffix(')'))
            .map(|s| s.trim_start_matches("2,").to_string())
    };
    if let Some(p) = arg("PSL2").or_else(|| arg("PSL")) {
        return Ok(GroupSpec::Psl2(prime(&p)?));
    }
    if let Some(p) = arg("SL2").or_else(|| arg("SL")) {
        return Ok(GroupSpec::Sl2(prime(&p)?));
    }
    let (head, rest) = upper.split_at(1.min(upper.len()));
    let spec = match head {
        "S" => GroupSpec::Symmetric(num(rest)? as usize),
        "A" => GroupSpec::Alternating(num(rest)? as usize),
        "Z" | "C" => GroupSpec::Cyclic(num(rest)?),
        "D" => GroupSpec::Dihedral(num(rest)?),
        _ => return Err(bad()),
    };
    match &spec {
        GroupSpec::Cyclic(0) | GroupSpec::Dihedral(0) | GroupSpec::Symmetric(0) | GroupSpec::Alternating(0) => {
            Err(bad())
        }
        _ => Ok(spec),
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(path) = text.strip_prefix("cayley:") {
            return Ok(GroupSpec::Cayley(PathBuf::from(path)));
        }
        let parts: Vec<&str> = text.split(['x', 'X']).collect();
        if parts.len() > 1 {
            return Ok(GroupSpec::Product(parts.into_iter().map(parse_atom).collect::<Result<_>>()?));
        }
        parse_atom(text)
    }
}

impl TryFrom<String> for GroupSpec {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<GroupSpec> for String {
    fn from(spec: GroupSpec) -> String {
        spec.to_string()
    }
}

/// Target groups used by the default sweep: symmetric S3..S6, A4..A6,
/// dihedral D4..D8, SL(2,3), SL(2,5), PSL(2,7) and a few abelian groups.
pub fn standard_suite() -> Vec<GroupSpec> {
    let names = [
        "Z2", "Z3", "Z4", "Z5", "Z2xZ2", "Z2xZ4", "Z3xZ3", "S3", "S4", "S5", "S6", "A4", "A5", "A6", "D4", "D5", "D6",
        "D7", "D8", "SL2(3)", "SL2(5)", "PSL2(7)",
    ];
    names.iter().map(|n| n.parse().expect("suite names parse")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for name in ["S3", "A5", "Z4", "D6", "SL2(3)", "PSL2(7)", "Z2xZ4"] {
            let spec: GroupSpec = name.parse().unwrap();
            assert_eq!(spec.to_string(), name);
        }
        assert_eq!("psl(2,7)".parse::<GroupSpec>().unwrap(), GroupSpec::Psl2(7));
        assert_eq!("C5".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(5));
        assert!("SL2(4)".parse::<GroupSpec>().is_err());
        assert!("Q8".parse::<GroupSpec>().is_err());
        assert!("Z0".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn orders_match_built_groups() {
        for spec in standard_suite() {
            let built = spec.build().unwrap();
            assert_eq!(Some(built.order()), spec.order(), "{spec}");
            assert_eq!(built.name(), spec.to_string());
        }
    }

    #[test]
    fn oversized_targets_are_capability_errors() {
        let s24: GroupSpec = "S24".parse().unwrap();
        assert!(s24.build().unwrap_err().is_capability());
        let big: GroupSpec = "S5xS5".parse().unwrap();
        assert!(big.build().unwrap_err().is_capability());
    }
}
