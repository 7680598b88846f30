use thiserror::Error;

use crate::ratpoly::Rational;

/// Errors raised by the spectral library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by (x - {point}): remainder {remainder}")]
    NotDivisible {
        point: Box<Rational>,
        remainder: Box<Rational>,
    },

    #[error("ambient dimension N = {0} is invalid (need N >= 2)")]
    InvalidDimension(u32),

    #[error("singular Gram matrix for {points} points, {variant} pairings, N = {n}")]
    SingularGram {
        points: usize,
        variant: &'static str,
        n: u32,
    },

    #[error("singular Hankel matrix: moment functional degenerates at degree {degree}")]
    SingularHankel { degree: usize },

    #[error("word length {len} exceeds the {model} cap of {cap}")]
    LengthCap {
        len: usize,
        cap: usize,
        model: &'static str,
    },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("atom at the normalization point {0}; fold its weight into the drift b")]
    AtomAtNormalization(Rational),

    #[error("drift b must be nonnegative, got {0}")]
    NegativeDrift(Rational),

    #[error("degenerate generator: lambda_{s} = {lambda} is not strictly negative")]
    DegenerateGenerator { s: usize, lambda: Rational },

    #[error("spectral dimension needs a positive drift b")]
    NoDrift,

    #[error("exact order {exact} and regression {regressed} disagree beyond {tolerance}")]
    RegressionMismatch {
        exact: f64,
        regressed: f64,
        tolerance: f64,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
