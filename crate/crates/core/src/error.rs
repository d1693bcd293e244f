//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: bounds must be finite and ordered")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("division by an interval containing zero: [{lo}, {hi}]")]
    DivisionByZero { lo: f64, hi: f64 },

    #[error("square root of an interval extending below zero: [{lo}, {hi}]")]
    NegativeSqrt { lo: f64, hi: f64 },

    #[error("arcsine argument [{lo}, {hi}] is not contained in [-1, 1]")]
    AsinDomain { lo: f64, hi: f64 },

    #[error("argument {x} lies outside [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },

    #[error("family parameters must be positive and finite: a = {a}, b = {b}")]
    InvalidParams { a: f64, b: f64 },

    #[error(
        "critical point undefined for b = {b}: the radicand b(b-1)(b+1)(2-b) \
         is negative outside the admissible range b in [1, 2]"
    )]
    CriticalPointDomain { b: f64 },

    #[error("the distance derivative formula is singular at x = 1")]
    DerivativeSingularity,

    #[error("tangency reduction is anchored at 0 only, got anchor {anchor}")]
    UnsupportedAnchor { anchor: f64 },

    #[error("invalid claim: {0}")]
    InvalidClaim(String),

    #[error("invalid verifier configuration: {0}")]
    InvalidConfig(String),

    #[error("tolerance {tol} is below the supported minimum {min}")]
    InvalidTolerance { tol: f64, min: f64 },

    #[error("search bracket [{lo}, {hi}] does not straddle the predicate boundary")]
    InvalidBracket { lo: f64, hi: f64 },

    #[error("verifier returned UNDECIDED while deciding the predicate at b = {b}")]
    Undecided { b: f64 },

    #[error("certificate replay rejected: {0}")]
    ReplayRejected(String),
}
