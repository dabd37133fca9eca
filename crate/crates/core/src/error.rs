use thiserror::Error;

use crate::arith::Scalar;
use crate::flag::MultiIndex;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("singular matrix: no pivot at elimination stage {stage}")]
    Singular { stage: usize },

    #[error("flag representative is not unimodular (det = {det})")]
    NotUnimodular { det: Scalar },

    #[error("flag representative is singular")]
    SingularFlag,

    #[error("multi-index {index:?} is not admissible for n = {n}, m = {m}")]
    InadmissibleIndex { index: Vec<usize>, n: usize, m: usize },

    #[error("configuration is not regular: delta at {index} vanishes")]
    Degenerate { index: MultiIndex },

    #[error("configuration is not positive: delta at {index} equals {value}")]
    NotPositive { index: MultiIndex, value: Scalar },

    #[error("no decoration sign pattern makes every delta positive (witness {witness})")]
    SignNormalization { witness: MultiIndex },

    #[error("expected a configuration of {expected} flags, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("face index {0} out of range 1..=3")]
    FaceIndex(usize),

    #[error("no calibrated orthogonal-flag convention for m = {m}")]
    Uncalibrated { m: usize },

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("({0}, {1}) is not a diagonal of the triangulation")]
    NotADiagonal(usize, usize),

    #[error("invalid chart point: {0}")]
    InvalidChart(String),

    #[error("invalid interval [{p}..{q}] for n = {n}")]
    InvalidInterval { p: usize, q: usize, n: usize },

    #[error("edge data disagree across the gluing edge at {index}")]
    GlueMismatch { index: MultiIndex },

    #[error("zero denominator in exchange relation")]
    ZeroDenominator,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
