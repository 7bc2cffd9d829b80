use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grafting needs at least two children, got {0}")]
    TooFewChildren(usize),

    #[error("leaf index {index} out of range 1..={max}")]
    LeafIndex { index: usize, max: usize },

    #[error("face index {index} out of range 1..={max}")]
    FaceIndex { index: usize, max: usize },

    #[error("the unit tree is not an algebra element for {0}")]
    UnitArgument(&'static str),

    #[error("a marked word needs at least one mark")]
    EmptyMarks,

    #[error("mark {mark} does not fit in a word of length {len}")]
    MarkOutOfRange { mark: usize, len: usize },

    #[error("malformed relation pattern: {0}")]
    MalformedRelation(String),

    #[error("series composition needs a zero constant term")]
    NonzeroConstantTerm,

    #[error("constant term {0} is not invertible over the integers")]
    NotInvertible(String),

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
