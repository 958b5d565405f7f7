use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingroups::GroupSpec;
use crate::presentation::{knot_gn, trefoil_left_reduced, trefoil_right_reduced, Knot, Presentation};

/// Knots a sweep can be run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KnotFamily {
    #[serde(rename = "trefoil_r")]
    TrefoilRight,
    #[serde(rename = "trefoil_l")]
    TrefoilLeft,
    #[serde(rename = "SK")]
    Square,
    #[serde(rename = "GK")]
    Granny,
}

impl KnotFamily {
    pub const ALL: [KnotFamily; 4] =
        [KnotFamily::TrefoilRight, KnotFamily::TrefoilLeft, KnotFamily::Square, KnotFamily::Granny];

    pub fn presentation(self, n: u32) -> Presentation {
        match self {
            KnotFamily::TrefoilRight => trefoil_right_reduced(n),
            KnotFamily::TrefoilLeft => trefoil_left_reduced(n),
            KnotFamily::Square => knot_gn(Knot::Square, n),
            KnotFamily::Granny => knot_gn(Knot::Granny, n),
        }
    }

    /// The connected sum, for tasks defined only on SK and GK.
    pub fn knot(self) -> Option<Knot> {
        match self {
            KnotFamily::Square => Some(Knot::Square),
            KnotFamily::Granny => Some(Knot::Granny),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            KnotFamily::TrefoilRight => "trefoil_r",
            KnotFamily::TrefoilLeft => "trefoil_l",
            KnotFamily::Square => "SK",
            KnotFamily::Granny => "GK",
        }
    }
}

impl fmt::Display for KnotFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KnotFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "trefoil_r" | "trefoil" | "right_trefoil" => Ok(KnotFamily::TrefoilRight),
            "trefoil_l" | "left_trefoil" => Ok(KnotFamily::TrefoilLeft),
            "sk" | "square" => Ok(KnotFamily::Square),
            "gk" | "granny" => Ok(KnotFamily::Granny),
            _ => Err(Error::Parse(format!("unknown knot {s:?} (expected trefoil_r, trefoil_l, sk or gk)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Count,
    Classes,
    PropertyT,
    Structured,
    Talex,
}

impl Task {
    pub fn as_str(self) -> &'static str {
        match self {
            Task::Count => "count",
            Task::Classes => "classes",
            Task::PropertyT => "property_t",
            Task::Structured => "structured",
            Task::Talex => "talex",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn one() -> usize {
    1
}

/// A declarative sweep: every combination of knot, n, target and task.
///
/// ```toml
/// knots = ["SK", "GK"]
/// n_values = [1, 2, 3]
/// targets = ["S3", "PSL2(7)"]
/// tasks = ["count", "classes"]
/// shards = 4
/// output = "results.jsonl"
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub knots: Vec<KnotFamily>,
    pub n_values: Vec<u32>,
    pub targets: Vec<GroupSpec>,
    pub tasks: Vec<Task>,
    #[serde(default = "one")]
    pub shards: usize,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.to_string()));
        if self.knots.is_empty() {
            return bad("no knots");
        }
        if self.n_values.is_empty() || self.n_values.contains(&0) {
            return bad("n_values must be a nonempty list of positive integers");
        }
        if self.targets.is_empty() {
            return bad("no targets");
        }
        if self.tasks.is_empty() {
            return bad("no tasks");
        }
        if self.shards == 0 {
            return bad("shards must be at least 1");
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let cfg: SweepConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads a config file. Relative `output` and `cayley:` paths are taken
    /// relative to the file.
    pub fn load(path: &Path) -> Result<Self> {
        let mut cfg = Self::parse(&std::fs::read_to_string(path)?)?;
        let base = path.parent().unwrap_or(Path::new("."));
        if let Some(out) = &cfg.output {
            if out.is_relative() {
                cfg.output = Some(base.join(out));
            }
        }
        for t in &mut cfg.targets {
            if let GroupSpec::Cayley(p) = t {
                if p.is_relative() {
                    *p = base.join(&*p);
                }
            }
        }
        Ok(cfg)
    }

    pub fn cell_count(&self) -> usize {
        self.knots.len() * self.n_values.len() * self.targets.len() * self.tasks.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_config() {
        let cfg = SweepConfig::parse(
            r#"
            knots = ["SK", "GK"]
            n_values = [1, 2]
            targets = ["S3", "S4"]
            tasks = ["count"]
            "#,
        )
        .unwrap();
        assert_eq!(cfg.cell_count(), 8);
        assert_eq!(cfg.shards, 1);
        assert_eq!(cfg.targets[1], GroupSpec::Symmetric(4));
        assert!(SweepConfig::parse("knots = []\nn_values = [1]\ntargets = [\"S3\"]\ntasks = [\"count\"]").is_err());
        assert!(SweepConfig::parse("knots = [\"SK\"]\nn_values = [0]\ntargets = [\"S3\"]\ntasks = [\"count\"]").is_err());
        assert!(SweepConfig::parse("knots = [\"XK\"]\nn_values = [1]\ntargets = [\"S3\"]\ntasks = [\"count\"]").is_err());
        assert!(SweepConfig::parse("knots = [\"SK\"]\nn_values = [1]\ntargets = [\"Q8\"]\ntasks = [\"count\"]").is_err());
    }

    #[test]
    fn knot_names() {
        for k in KnotFamily::ALL {
            assert_eq!(k.as_str().parse::<KnotFamily>().unwrap(), k);
        }
        assert_eq!("sk".parse::<KnotFamily>().unwrap(), KnotFamily::Square);
    }
}
