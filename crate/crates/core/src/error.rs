use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("word references generator {gen} but the generator table has {len} entries")]
    GeneratorOutOfRange { gen: usize, len: usize },

    #[error("substitution for generator {0} mentions that generator")]
    CyclicSubstitution(usize),

    #[error("generator {index} has no image (only {len} images supplied)")]
    MissingImage { index: usize, len: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid knot diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),

    #[error("invalid group parameter: {0}")]
    InvalidGroup(String),

    #[error("group {name} of order {order} exceeds the enumeration bound {bound}")]
    Capability { name: String, order: u128, bound: u128 },

    #[error("shard {shard_id} is out of range for {shards} shards")]
    InvalidShard { shards: usize, shard_id: usize },

    #[error("homomorphisms into different target groups cannot be mixed ({0} vs {1})")]
    MixedTargets(String, String),

    #[error("abelianization is not infinite cyclic (invariant factors {0:?})")]
    NotInfiniteCyclic(Vec<u64>),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("twisted invariant undefined for this representation: det(x_j - 1) vanishes for every generator")]
    InvariantUndefined,

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Capability errors mark work that is out of reach by construction
    /// rather than a failure of the inputs.
    pub fn is_capability(&self) -> bool {
        matches!(self, Error::Capability { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
