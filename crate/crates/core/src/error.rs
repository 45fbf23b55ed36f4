use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sum or difference of scalars is not expressible as a single scalar
    /// (distinct generic tags, or a generic entry shifted by a non-integer).
    #[error("scalar combination is not expressible as a single scalar: {0}")]
    MixedGenericTags(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("rank too small: {0}")]
    RankTooSmall(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid Borel descriptor: {0}")]
    InvalidBorel(String),
    #[error("order query is undecidable for an opaque dense block: {0}")]
    UndecidableOrder(String),
    #[error("monomial lies outside the module basis")]
    NotInBasis,
    #[error("roots do not commute: {0}")]
    NotCommuting(String),
    #[error("descriptors live over incomparable Cartan subalgebras")]
    IncomparableCartan,
    #[error("module is not integrable")]
    NotIntegrable,
    #[error("not supported for this descriptor: {0}")]
    NotSupported(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
