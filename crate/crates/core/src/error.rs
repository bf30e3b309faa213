use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing: part {0} follows a smaller part")]
    NotWeaklyDecreasing(usize),

    #[error("inner partition not contained in outer at row {row} ({inner} > {outer})")]
    NotContained {
        row: usize,
        inner: usize,
        outer: usize,
    },

    #[error("half-integer stretch of odd part {0}")]
    HalfIntStretchOddPart(usize),

    #[error("half-integer must be at least 1/2")]
    HalfIntZero,

    #[error("oracle bound: n*s = {actual} exceeds brute-force limit {limit}")]
    OracleBound { actual: usize, limit: usize },

    #[error("not a violation: reading word already satisfies the ballot condition")]
    NotAViolation,

    #[error("swap precondition failed: {0}")]
    SwapPrecondition(String),

    #[error("bottom row is not a full row of 2s")]
    BottomRowNotTwos,

    #[error("size mismatch: |outer| - |inner| = {shape} but |content| = {content}")]
    SizeMismatch { shape: usize, content: usize },

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(i64),

    #[error("extrapolation mismatch at N = {n}: polynomial predicts {predicted}, enumeration gives {actual}")]
    ExtrapolationMismatch {
        n: i64,
        predicted: String,
        actual: String,
    },

    #[error("outside theorem domain: n = {n} even with half-odd s = {s}")]
    OutsideTheoremDomain { n: usize, s: String },

    #[error("parse error: {0}")]
    Parse(String),
}
