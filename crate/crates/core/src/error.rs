use thiserror::Error;

/// Everything that can go wrong while building algebras, modules or running checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ideal is not admissible: path space did not stabilise below length {cap}")]
    NonAdmissibleIdeal { cap: usize },
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("bad field: {0} is not a prime below 65536")]
    BadField(u64),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("vertex {vertex} out of range 1..={count}")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("modules or elements live over different algebras")]
    AlgebraMismatch,
    #[error("element does not belong to the module")]
    ElementMismatch,
    #[error("cogenerating module is not injective")]
    NotInjective,
    #[error("algebra is not Iwanaga-Gorenstein (or undecided within cap {cap})")]
    NotGorenstein { cap: usize },
    #[error("undecided at resolution cap {cap}: {what}")]
    UndecidedAtCap { cap: usize, what: String },
    #[error("algebra is not {n}-minimal Auslander-Gorenstein")]
    NotHigherAG { n: usize },
    #[error("module {0} is not closed")]
    NotClosed(String),
    #[error("resolution cap {cap} too small for the requested degree")]
    CapExceeded { cap: usize },
    #[error("enumeration too large: total dimension {dim} exceeds bound {bound}")]
    TooLarge { dim: usize, bound: usize },
    #[error("exhaustive enumeration needs a finite field")]
    NotFiniteField,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
