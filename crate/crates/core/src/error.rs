use thiserror::Error;

/// Every failure the library can report.
///
/// Variants documented as "internal defect" can only fire when a mathematical
/// guarantee is violated, i.e. a bug or a violated precondition upstream.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch")]
    FieldMismatch,
    #[error("subspace is not contained in the outer subspace")]
    NotContained,
    #[error("cannot parse scalar {text:?}: {reason}")]
    ScalarParse { text: String, reason: String },

    #[error("not associative at basis triple ({i}, {j}, {k}): (e_i e_j) e_k = {left} but e_i (e_j e_k) = {right}")]
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
        left: String,
        right: String,
    },
    #[error("subspace is not a {0} ideal")]
    NotAnIdeal(&'static str),
    #[error("subspace is not closed under multiplication")]
    NotSubalgebra,
    #[error("ideal is not two-sided")]
    NotTwoSided,

    #[error("trace criterion is unsound in characteristic {p} for a regular representation of dimension {dim}")]
    UnsupportedCharacteristic { p: u64, dim: usize },
    #[error("radical certification failed: {0}")]
    CertificationFailure(String),

    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("linear system has no solution: {0}")]
    NoSolution(&'static str),
    #[error("bad lifting seed: {0}")]
    BadSeed(&'static str),
    #[error("J x != J for the given subspace")]
    NotStable,
    #[error("right multiplication by the seed is singular on J")]
    SingularPhi,
    #[error("postcondition failed: {0}")]
    PostconditionFailed(&'static str),
    #[error("idempotent iteration did not stabilize within {0} steps")]
    NonTermination(usize),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element of the complement does not project onto the target idempotent")]
    ProjectionMismatch,
    #[error("ideal does not square to zero")]
    NotSquareZero,

    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("no conjugating element 1 + r found")]
    NoWitness,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid file: {0}")]
    Format(String),

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps an error with the name of the stage it came from.
    pub fn at(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |source| Error::Stage {
            stage,
            source: Box::new(source),
        }
    }

    /// The innermost error, with all stage labels stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
