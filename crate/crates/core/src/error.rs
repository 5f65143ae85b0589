use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// `NonExactDivision` deserves a note: several computations divide by a
/// quantity that is known to divide the dividend exactly. When that division
/// fails the result is wrong, not merely imprecise, so callers propagate it
/// instead of falling back to fractions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: {0}")]
    NonExactDivision(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the variable is not invertible modulo {0}")]
    NonInvertibleVariable(String),
    #[error("polynomial is not a Laurent polynomial in q: {0}")]
    NotInQ(String),
    #[error("requested depth {requested} exceeds available depth {available}")]
    DepthExceeded { requested: usize, available: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("interface mismatch at slice {slice}: {message}")]
    InterfaceMismatch { slice: usize, message: String },
    #[error("diagram is not closed: {0}")]
    OpenDiagram(String),
    #[error("expected {expected} colors, got {got}")]
    ColorCountMismatch { expected: usize, got: usize },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("presentation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("diagram is not a knot: {0}")]
    NotAKnot(String),
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),
    #[error("value does not lie in the subfield generated by q: {0}")]
    NotInQSubring(String),
    #[error("arguments are not coprime: {0}")]
    NotCoprime(String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("encoding error: {0}")]
    Encoding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
