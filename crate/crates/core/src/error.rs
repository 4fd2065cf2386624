use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NonSymmetric,

    #[error("dimension mismatch: {op} on {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("partition sizes differ: |{0}| != |{1}|")]
    SizeMismatch(usize, usize),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("dimension cap exceeded: {what} = {value} > {cap}")]
    DimensionCap {
        what: String,
        value: u128,
        cap: u128,
    },

    #[error("not a character: multiplicity of {partition} is {value}")]
    NotACharacter { partition: String, value: String },

    #[error("partition {partition} has more than {n} rows")]
    TooManyRows { partition: String, n: usize },

    #[error("{0} has an odd part")]
    OddParts(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
}
