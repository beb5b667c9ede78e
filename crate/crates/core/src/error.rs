use thiserror::Error;

use crate::lattice::Surface;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("surface mismatch: {0} vs {1}")]
    SurfaceMismatch(Surface, Surface),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    /// A value that must be divisible by two was odd. Signals a bug in the
    /// lattice bookkeeping, never bad user input.
    #[error("half-integer violation: {0} is odd")]
    HalfInteger(i128),

    #[error("operation requires {expected}, got {got}")]
    WrongSurface { expected: Surface, got: Surface },

    #[error("collection length {0} out of range 1..=4")]
    CollectionLength(usize),

    #[error("class {index} is not exceptional: chi(e,e) = {value}")]
    NotExceptional { index: usize, value: i64 },

    #[error("semiorthogonality fails: chi(e{j}, e{i}) = {value}, expected 0")]
    NotSemiorthogonal { i: usize, j: usize, value: i64 },

    #[error("mutation index {index} out of range for a collection of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid group letter: {0}")]
    InvalidLetter(String),

    #[error("invalid twist generator: {0}")]
    InvalidGenerator(String),

    #[error("rank {0} is not positive")]
    NonPositiveRank(i64),

    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i128),

    #[error("collection is not full")]
    NotFull,

    #[error("no reducing word found within depth {depth} ({expanded} nodes expanded)")]
    NotFound { depth: usize, expanded: usize },

    #[error("unknown verify suite: {0}")]
    UnknownSuite(String),

    #[error("{suite}: case {case} aborted: {reason}")]
    Aborted { suite: String, case: String, reason: String },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

/// Checked helpers. Every lattice computation goes through these so an
/// overflow surfaces as [`Error::Overflow`] instead of wrapping.
pub(crate) mod checked {
    use super::{Error, Result};

    #[inline]
    pub fn add(a: i64, b: i64) -> Result<i64> {
        a.checked_add(b).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn sub(a: i64, b: i64) -> Result<i64> {
        a.checked_sub(b).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn mul(a: i64, b: i64) -> Result<i64> {
        a.checked_mul(b).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn neg(a: i64) -> Result<i64> {
        a.checked_neg().ok_or(Error::Overflow)
    }

    #[inline]
    pub fn add128(a: i128, b: i128) -> Result<i128> {
        a.checked_add(b).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn mul128(a: i128, b: i128) -> Result<i128> {
        a.checked_mul(b).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn narrow(a: i128) -> Result<i64> {
        i64::try_from(a).map_err(|_| Error::Overflow)
    }

    /// Exact division by two.
    #[inline]
    pub fn halve(a: i128) -> Result<i128> {
        if a % 2 != 0 {
            return Err(Error::HalfInteger(a));
        }
        Ok(a / 2)
    }
}
