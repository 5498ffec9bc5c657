use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error: the inputs
/// were well formed but violate a structural requirement.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("restriction to the empty set")]
    EmptyRestriction,
    #[error("vertex set {0} is not a subset of the carrier")]
    NotSubset(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("hypergraph on {0} is not connected")]
    Disconnected(String),
    #[error("invalid construct: {0}")]
    InvalidConstruct(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("linear constructs over different carriers: {0} and {1}")]
    MixedHypergraphs(String, String),
    #[error("overlapping carriers in graft: {0}")]
    Overlap(String),
    #[error("no member of universe {universe} on carrier {carrier}")]
    NotInUniverse { universe: String, carrier: String },
    #[error("participants do not partition the whole: {0}")]
    NotPartition(String),
    #[error("team is not strict: {0}")]
    NotStrict(String),
    #[error("team is not semi-strict: {0}")]
    NotSemiStrict(String),
    #[error("participants are not in ascending block order: {0}")]
    NotOrdered(String),
    #[error("grafted team does not match participant: {0}")]
    Mismatch(String),
    #[error("expected {expected} participants, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("linear construct at position {0} has no common root")]
    UnrootedAtB(usize),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("invalid word: {0}")]
    BadWord(String),
    #[error("carrier is not an integer interval: {0}")]
    NotInterval(String),
    #[error("unknown universe tag: {0}")]
    UnknownUniverse(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyRestriction => "EmptyRestriction",
            Error::NotSubset(_) => "NotSubset",
            Error::InvalidHypergraph(_) => "InvalidHypergraph",
            Error::Disconnected(_) => "Disconnected",
            Error::InvalidConstruct(_) => "InvalidConstruct",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::MixedHypergraphs(..) => "MixedHypergraphs",
            Error::Overlap(_) => "OverlapError",
            Error::NotInUniverse { .. } => "NotInUniverse",
            Error::NotPartition(_) => "NotPartition",
            Error::NotStrict(_) => "NotStrict",
            Error::NotSemiStrict(_) => "NotSemiStrict",
            Error::NotOrdered(_) => "NotOrdered",
            Error::Mismatch(_) => "Mismatch",
            Error::Arity { .. } => "Arity",
            Error::UnrootedAtB(_) => "UnrootedAtB",
            Error::TooLarge(_) => "TooLarge",
            Error::BadWord(_) => "BadWord",
            Error::NotInterval(_) => "NotInterval",
            Error::UnknownUniverse(_) => "UnknownUniverse",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
