//! Exact arithmetic for a span-valued tangle invariant over the field of
//! rational functions Q(t).
//!
//! The pipeline: oriented tangle expressions ([`tangle::TangleExpr`]) are
//! evaluated by a monoidal functor ([`functor`]) into spans of linear maps
//! with entries in Q(t) ([`span::Span`]).  Closing a 4-strand presentation
//! of a 2-bridge knot, or the band decomposition of a pretzel knot, exposes
//! the Alexander polynomial three independent ways ([`alexander`]): as a
//! kernel presentation of the closed span, as a continuant of a tridiagonal
//! matrix, and (for pretzels) as a closed product formula.  Numerical root
//! location for the resulting polynomials lives in [`roots`]; the t = -1
//! specialization, which classifies rational tangles by their fraction,
//! lives in [`minus1`].
//!
//! Linear algebra is generic over a field-like scalar; the concrete types
//! used throughout are re-exported at the crate root (`BigRat`, `Qt`,
//! `MatrixQt`, `SpanQt`).

pub mod alexander;
pub mod error;
pub mod functor;
pub mod laurent;
pub mod matrix;
pub mod minus1;
pub mod ratfunc;
pub mod roots;
pub mod span;
pub mod tangle;

pub use error::Error;

/// Arbitrary-precision rational scalar.
pub type BigRat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type BigInt = num_bigint::BigInt;
/// The working field Q(t).
pub type Qt = ratfunc::RatFunc;
/// Matrices over Q(t).
pub type MatrixQt = matrix::Matrix<Qt>;
/// Spans of linear maps over Q(t).
pub type SpanQt = span::Span<Qt>;
/// Matrices over Q, used by the t = -1 specialization.
pub type MatrixQ = matrix::Matrix<BigRat>;
/// Spans over Q.
pub type SpanQ = span::Span<BigRat>;
