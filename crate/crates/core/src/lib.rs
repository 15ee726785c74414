//! Lie bialgebra structures of gl(2): classification, Poisson–Lie brackets,
//! oscillator contractions, quantum R-matrices and deformed spin chains.
//!
//! The classical layer (`symbolics`, `liealg`, `bialgebra`, `poissonlie`,
//! `contraction`) works over exact rational arithmetic: every identity there
//! is polynomial and is verified exactly. The quantum layer (`quantumalg`,
//! `spinchain`) is numerical: representations, coproducts, R-matrices and
//! chain Hamiltonians are dense complex matrices checked against residual
//! tolerances.

pub mod bialgebra;
pub mod contraction;
pub mod liealg;
pub mod poissonlie;
pub mod quantumalg;
pub mod spinchain;
pub mod symbolics;

use thiserror::Error;

/// Errors surfaced by any layer of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown basis label `{0}`")]
    UnknownBasisLabel(String),
    #[error("unknown parameter symbol `{0}`")]
    UnknownSymbol(String),
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
    #[error("tensor degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("degree-0 tensors are not supported")]
    ZeroDegree,
    #[error("evaluation hit a zero denominator (symbol `{0}` with negative exponent)")]
    ZeroDenominator(String),
    #[error("exact division impossible: {0}")]
    InexactDivision(String),
    #[error("basis change is not invertible: {0}")]
    SingularBasisChange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no finite contraction exponents achieve convergence for {0}")]
    NoConvergence(String),
    #[error("matrix dimension {0} exceeds the dense cap {1}")]
    DimensionCap(usize, usize),
    #[error("singular matrix in {0}")]
    Singular(&'static str),
    #[error("coproduct expression not evaluable: {0}")]
    NotEvaluable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
