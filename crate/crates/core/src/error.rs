use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Element ids in error payloads are 1-based, matching the external formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not an integer: {0:?}")]
    NotAnInteger(String),
    #[error("ascent sequence must start with 0")]
    FirstEntryNonzero,
    #[error("ascent bound violated at index {0}")]
    AscentBoundViolated(usize),
    #[error("empty input")]
    EmptyInput,
    #[error("relation is not a strict partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not an interval order: 2+2 on {a}<{b}, {c}<{d}")]
    NotAnIntervalOrder { a: usize, b: usize, c: usize, d: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("family has {found} intervals, expected {expected}")]
    IndexMismatch { expected: usize, found: usize },
    #[error("peel/pith graph has a cycle through element {0}")]
    PPCycleDetected(usize),
    #[error("coloring is not sorted: inversion ({inner}, {outer})")]
    NotSorted { inner: usize, outer: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("slack structure violated between {first} and {second}")]
    StructureViolation { first: String, second: String },
    #[error("equal-length normalization failed (internal error)")]
    InfeasibleNormalization,
    #[error("key inequality violated: max TS {max_ts} >= min ST {min_st}")]
    KeyInequalityViolated { max_ts: Rational, min_st: Rational },
    #[error("depth {0} exceeds 2")]
    DepthExceeded(usize),
    #[error("height {0} exceeds 3")]
    HeightExceeded(usize),
    #[error("no extremal interval [0,{0}] in canonical representation (internal error)")]
    MissingExtremalAtLine(usize),
    #[error("instance too large: n={n}, k={k} (pass allow_large to override)")]
    TooLarge { n: usize, k: usize },
    #[error("malformed linear system: {0}")]
    MalformedSystem(String),
    #[error("order is outside the conjecture's scope: {0}")]
    NotApplicable(String),
    #[error("unsupported render target: {0}")]
    UnsupportedTarget(String),
    #[error("invalid rational: {0:?}")]
    InvalidRational(String),
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("construction produced an invalid representation: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI error JSON and FFI messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAnInteger(_) => "NotAnInteger",
            Error::FirstEntryNonzero => "FirstEntryNonzero",
            Error::AscentBoundViolated(_) => "AscentBoundViolated",
            Error::EmptyInput => "EmptyInput",
            Error::NotAPartialOrder(_) => "NotAPartialOrder",
            Error::NotAnIntervalOrder { .. } => "NotAnIntervalOrder",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::IndexMismatch { .. } => "IndexMismatch",
            Error::PPCycleDetected(_) => "PPCycleDetected",
            Error::NotSorted { .. } => "NotSorted",
            Error::InvalidColoring(_) => "InvalidColoring",
            Error::StructureViolation { .. } => "StructureViolation",
            Error::InfeasibleNormalization => "InfeasibleNormalization",
            Error::KeyInequalityViolated { .. } => "KeyInequalityViolated",
            Error::DepthExceeded(_) => "DepthExceeded",
            Error::HeightExceeded(_) => "HeightExceeded",
            Error::MissingExtremalAtLine(_) => "MissingExtremalAtLine",
            Error::TooLarge { .. } => "TooLarge",
            Error::MalformedSystem(_) => "MalformedSystem",
            Error::NotApplicable(_) => "NotApplicable",
            Error::UnsupportedTarget(_) => "UnsupportedTarget",
            Error::InvalidRational(_) => "InvalidRational",
            Error::Parse(_) => "Parse",
            Error::Internal(_) => "Internal",
        }
    }
}
