//! Error type shared across the library.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("polynomial is not homogeneous: found degrees {0} and {1}")]
    Inhomogeneous(u32, u32),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("not divisible: remainder has leading term {witness}")]
    NotDivisible { witness: String },

    #[error("quotient entry ({i},{j}) is not linear (degree {degree})")]
    NonlinearQuotient { i: usize, j: usize, degree: u32 },

    #[error("matrix size {0} is not even")]
    OddSize(usize),

    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("index ({i},{j}) out of range for size {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("matchings oracle limited to size {limit}, got {got}")]
    SizeLimit { limit: usize, got: usize },

    #[error("pfaffian is not a scalar multiple of the target curve")]
    NotARepresentation,

    #[error("pfaffian of the pencil is identically zero")]
    DegenerateRep,

    #[error("sample ({0}) does not lie on the curve")]
    SampleNotOnCurve(String),

    #[error("(s,l) = ({s},{l}) does not satisfy l^2 = s^3 + alpha*s + beta")]
    PointNotOnCurve { s: String, l: String },

    #[error("field {0} unsupported here: {1}")]
    UnsupportedField(String, String),

    #[error("coefficient equation for {target} is not unit-linear in it")]
    EliminationFailed { target: String },

    #[error("expected {expected} residual equations, derived {got}")]
    WrongCount { expected: usize, got: usize },

    #[error("group element needs p != 0 and a != e")]
    InvalidGroupElement,

    #[error("missing parameter c{i}{j}")]
    MissingParameter { i: usize, j: usize },

    #[error("parameter c{i}{j} is not free in this mode")]
    UnexpectedParameter { i: usize, j: usize },

    #[error("operation needs {0} parameters")]
    WrongMode(String),

    #[error("all {0} samples have a rank-deficient Jacobian")]
    DegenerateSamples(usize),

    #[error("no solution found within budget ({attempts} evaluations spent)")]
    NoSolutionFound { attempts: u64 },

    #[error("prime {0} exceeds the exhaustive-scan budget")]
    PrimeTooLarge(u64),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
