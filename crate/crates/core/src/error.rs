use thiserror::Error;

/// Broad failure classes, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Precondition,
    Budget,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("no facets given (use an explicit empty face for the complex {{∅}})")]
    EmptyInput,
    #[error("at most {max} vertices are supported, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("complex is not flag")]
    NotFlag,
    #[error("complex does not satisfy (S2)")]
    NotS2,
    #[error("complex is not Cohen-Macaulay in characteristic {0}")]
    NotCM(u32),
    #[error("dimension parameter d = {0} must be odd and at least 3")]
    EvenDimension(usize),
    #[error("not a face of the complex")]
    NotAFace,
    #[error("the void complex has no homology")]
    VoidComplex,
    #[error("the complex is a full simplex")]
    IsSimplex,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid characteristic {0}: expected 0 or a prime below 2^31")]
    InvalidField(u64),
    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
    #[error("degree cap {0} exceeded")]
    CapExceeded(u32),
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("generators are not squarefree")]
    NotSquarefree,
    #[error("generators live in more than one degree")]
    MixedGenerators,
    #[error("module generators must be blue monomials")]
    NotBlueGenerators,
    #[error("multidegree sweep too large: about {estimate} multidegrees")]
    SweepTooLarge { estimate: u128 },
    #[error("h-vector is not palindromic")]
    NotPalindromic,
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index out of range: {0}")]
    OutOfRange(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            UnknownVertex(_) | EmptyInput | TooManyVertices { .. } | DuplicateVertex(_) | Parse(_)
            | UnsupportedFormat(_) | InvalidField(_) | BadParams(_) => ErrorClass::Input,
            CapExceeded(_) | BudgetExceeded { .. } | SweepTooLarge { .. } => ErrorClass::Budget,
            _ => ErrorClass::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
