use crate::rational::Rational;
use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("custom sample list has {got} values, grid needs {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("shift {shift} does not land on the grid (step {step})")]
    IncommensurateShift { shift: Rational, step: Rational },

    #[error("signals live on different grids")]
    GridMismatch,

    #[error("sample count {0} is odd; a halving split needs an even grid")]
    OddSampleCount(usize),

    #[error("sample count {n} is not divisible by 2^{levels}")]
    GridNotDivisible { n: usize, levels: u32 },

    #[error("{d} does not divide {p}")]
    NotADivisor { d: u64, p: u64 },

    #[error("quotient {m} is even; the alternating fold needs an odd quotient")]
    EvenQuotient { m: u64 },

    #[error("grid period {0} is not a positive integer")]
    IntegerGridRequired(Rational),

    #[error(
        "operator is singular at DFT bins {bins:?} (min |eigenvalue| {min_abs:.3e} < {tol:.3e})"
    )]
    SingularOperator {
        bins: Vec<usize>,
        min_abs: f64,
        tol: f64,
    },

    #[error("inverse transform left an imaginary residue of {0:.3e}, above 1e-10")]
    NumericInconsistency(f64),

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
