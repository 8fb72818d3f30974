use thiserror::Error;

/// Errors raised by shape parsing and the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid integer token {0:?}")]
    BadToken(String),
    #[error("parts must be positive, got {0}")]
    NonPositivePart(i64),
    #[error("parts not distinct or not decreasing: {0:?}")]
    NotStrict(Vec<usize>),
    #[error("parts not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("part {0} is not odd")]
    EvenPart(usize),
    #[error("inner shape {inner:?} is not contained in {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },
    #[error("bar size must be a positive odd integer, got {0}")]
    BadBarSize(usize),
    #[error("no {size}-bar at row {row} of {shape:?}")]
    NoSuchBar { shape: Vec<usize>, row: usize, size: usize },
    #[error("size mismatch: shape has {shape} squares, type has {parts}")]
    SizeMismatch { shape: usize, parts: usize },
    #[error("zero polynomial has no lowest degree")]
    ZeroPolynomial,
    #[error("no available row can hold an inner part of size {0}")]
    NoEligibleRow(usize),
    #[error("shape too large for brute force: |outer| = {size} exceeds bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("invalid exchange: {0}")]
    BadExchange(String),
    #[error("malformed polynomial: {0}")]
    BadPolynomial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
