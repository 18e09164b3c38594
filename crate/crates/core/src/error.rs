//! Crate-wide error type. All fallible operations return `Result<T, Error>`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different rings (variables, coefficient field or term order differ).
    RingMismatch { expected: String, found: String },
    /// Monomials of different arity were compared or combined.
    ArityMismatch { left: usize, right: usize },
    /// An exponent or degree left the representable range.
    ExponentOverflow,
    /// A Groebner computation hit its degree cap; the offending S-polynomial degree is reported.
    DegreeCap { degree: u32 },
    /// An operation that needs a full basis was fed a truncated one.
    TruncatedBasis { op: &'static str, degree: u32 },
    /// Division by the zero polynomial or colon by a zero ideal.
    ZeroDivisor,
    /// A containment V ⊇ W required by a length computation does not hold.
    NotContained { detail: String },
    /// The requested length is infinite.
    InfiniteLength { detail: String },
    /// Ideals from different ambients were mixed.
    AmbientMismatch,
    /// `gcd(generators) != 1`, so there is no numerical semigroup.
    NotNumericalSemigroup,
    /// The candidate ideal is not a reduction within the search bound.
    NotAReduction { bound: u32, failing: u32 },
    /// The ambient semigroup is not symmetric where a Gorenstein ambient is required.
    NotSymmetric,
    /// A table did not stabilize within its window.
    NoStabilization { detail: String },
    /// A verifier hypothesis failed in a way that prevents the computation.
    HypothesisFailed { detail: String },
    /// Task file problems, with a 1-based line number.
    Parse { line: usize, msg: String },
    /// Input outside the supported class (e.g. non-monomial data for a local ring).
    Unsupported { detail: String },
    /// Two routes that must agree disagreed; this signals an engine bug, never bad input.
    Internal { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch { expected, found } => {
                write!(f, "ring mismatch: expected {expected}, found {found}")
            }
            Error::ArityMismatch { left, right } => {
                write!(f, "arity mismatch: {left} vs {right}")
            }
            Error::ExponentOverflow => write!(f, "exponent overflow"),
            Error::DegreeCap { degree } => {
                write!(f, "degree cap exceeded at S-polynomial degree {degree}")
            }
            Error::TruncatedBasis { op, degree } => {
                write!(f, "{op} needs a full basis, but it was truncated at degree {degree}")
            }
            Error::ZeroDivisor => write!(f, "division by zero polynomial or zero ideal"),
            Error::NotContained { detail } => write!(f, "containment failure: {detail}"),
            Error::InfiniteLength { detail } => write!(f, "infinite length: {detail}"),
            Error::AmbientMismatch => write!(f, "ideals from different ambient rings"),
            Error::NotNumericalSemigroup => {
                write!(f, "generators have gcd != 1: not a numerical semigroup")
            }
            Error::NotAReduction { bound, failing } => {
                write!(f, "not a reduction within bound {bound} (fails at power {failing})")
            }
            Error::NotSymmetric => write!(f, "semigroup is not symmetric (ambient not Gorenstein)"),
            Error::NoStabilization { detail } => write!(f, "no stabilization: {detail}"),
            Error::HypothesisFailed { detail } => write!(f, "hypothesis failed: {detail}"),
            Error::Parse { line, msg } => write!(f, "line {line}: {msg}"),
            Error::Unsupported { detail } => write!(f, "unsupported input: {detail}"),
            Error::Internal { detail } => write!(f, "internal cross-check failure: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
