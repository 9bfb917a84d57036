//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point t = {0}")]
    PoleAtEvaluationPoint(String),
    #[error("cannot evaluate at z = 0: negative powers of t present")]
    ZeroEvaluationPoint,
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("span boundary mismatch: target of first factor is {found}, source of second is {expected}")]
    BoundaryMismatch { found: String, expected: String },
    #[error("tangle orientation mismatch at {at}: {detail}")]
    OrientationMismatch { at: String, detail: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid fraction {p}/{q}: {reason}")]
    InvalidFraction { p: i64, q: i64, reason: String },
    #[error("b({p},{q}) is a two-component link, not a knot")]
    NotAKnot { p: i64, q: i64 },
    #[error("pretzel {0:?} is not a knot")]
    NotAPretzelKnot(Vec<i64>),
    #[error("negative power {0} of a tangle expression is not defined")]
    NegativePower(i64),
    #[error("zeroth power requires equal source and target signatures, found {0} -> {1}")]
    UnstackablePower(String, String),
    #[error("layer word does not present a 2-bridge closure: {0}")]
    NotTwoBridgeLayer(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("result is not a Laurent polynomial: denominator {0}")]
    NotLaurent(String),
    #[error("root finding did not converge after {iterations} iterations (max residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("span at t = -1 is not a rational tangle plane: {0}")]
    NotRationalShape(String),
    #[error("plane through the all-ones vector is degenerate (vector proportional to it)")]
    DegeneratePlane,
    #[error("coloring is trivial: all four boundary colors equal")]
    TrivialColoring,
    #[error("coloring does not propagate: {0}")]
    ColoringUnderdetermined(String),
    #[error("seed colors are incompatible with the diagram: {0}")]
    ColoringInconsistent(String),
    #[error("slope composition with an infinite slope is undefined")]
    InfiniteSlope,
    #[error("expression is not a 2-tangle: boundary is {src} -> {tgt}")]
    NotA2Tangle { src: usize, tgt: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
