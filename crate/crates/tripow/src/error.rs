//! Error type shared by all exact-arithmetic operations.

use thiserror::Error;

/// Errors raised by series, matrix and polynomial operations.
///
/// Everything here is a contract violation detected before any arithmetic
/// is done; no operation ever returns a partially-computed value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Binary series operation on operands with different truncation orders.
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Multiplicative inverse of a series with zero constant term.
    #[error("series has zero constant term and no multiplicative inverse")]
    NotInvertible,

    /// Composition g(f) where the inner series f does not vanish at 0.
    #[error("inner series of a composition must have zero constant term")]
    CompositionDomain,

    /// Coefficient index past the truncation order.
    #[error("coefficient index {index} exceeds truncation order {order}")]
    TruncationExceeded { index: usize, order: usize },

    /// Compositional inverse of a series without one (needs f(0)=0, f'(0)!=0).
    #[error("series is not invertible under composition (requires f(0)=0 and f'(0)!=0)")]
    NotCompInvertible,

    /// The functional-equation solver requires h(0) != 0.
    #[error("h(0) = 0: the equation w = t*h(w) degenerates")]
    DegenerateH,

    /// Scalar-exponent power of a series whose constant term is not 1.
    #[error("scalar-exponent power requires constant term exactly 1")]
    NonUnitBase,

    /// Fractional power whose base constant term is not 1; the result would
    /// leave the coefficient field.
    #[error("fractional power of a series with constant term != 1 is not exact")]
    FractionalPower,

    /// Violated hypothesis of a construction (matrix spec, Bell domain, ...).
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    /// A conjugation weight equal to zero.
    #[error("weights must all be nonzero (a_{0} = 0)")]
    InvalidWeights(usize),

    /// Triangular inversion with a zero on the diagonal.
    #[error("matrix is singular: zero diagonal entry at ({0},{0})")]
    SingularMatrix(usize),

    /// Out-of-range combinatorial index, e.g. S(n,j) with j > n.
    #[error("index out of range: {0}")]
    IndexError(String),

    /// Preset parameters outside the preset's domain.
    #[error("invalid preset: {0}")]
    InvalidPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
