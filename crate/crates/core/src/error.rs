use thiserror::Error;

/// Errors raised by the library. Validation failures that are naturally
/// report-valued (quandle axioms, module axioms, diagram well-formedness) are
/// returned as reports instead and only surface here when a constructor
/// refuses invalid input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),

    #[error("matrix has {rows}x{cols} shape but {len} entries")]
    MatrixShape {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("brute-force search space {modulus}^{cols} exceeds the bound {bound}")]
    SearchSpaceTooLarge {
        modulus: u64,
        cols: usize,
        bound: u64,
    },

    #[error("kernel size does not fit in 64 bits")]
    WeightOverflow,

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("not a quandle: {0}")]
    NotAQuandle(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("{t} is not a unit modulo {n}")]
    NotAUnit { t: u64, n: u64 },

    #[error("malformed map: {0}")]
    MalformedMap(String),

    #[error("map {0} is not a quandle endomorphism")]
    NotAnEndomorphism(String),

    #[error("quandle order {order} exceeds the enumeration bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid PD code: {0}")]
    InvalidPd(String),

    #[error("unknown link {name:?}; available: {available}")]
    UnknownLink { name: String, available: String },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid quandle module: {0}")]
    InvalidModule(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("quiver has vertices without weights")]
    MissingWeights,

    #[error("quiver mixes cardinality and rank weights")]
    MixedWeights,

    #[error("{link}: {source}")]
    InLink {
        link: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
