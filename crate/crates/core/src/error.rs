use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic operations of this crate.
///
/// Failed axiom or lemma checks are never errors; they are reported as
/// entries of a [`Report`](crate::report::Report).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The element has no inverse (for truncated polynomials: the constant
    /// term is not a unit of the base ring).
    NotAUnit,
    /// No decision procedure exists for the requested predicate on this ring.
    Undecidable(&'static str),
    /// Shapes of matrices or vectors do not fit together.
    DimensionMismatch { expected: usize, found: usize },
    /// Index out of range or a diagonal generator parameter outside its
    /// admissible set.
    BadParameter(String),
    /// A relative generator's core parameter is not in the ideal.
    ParameterNotInIdeal,
    /// A stated hypothesis of an operation does not hold.
    PreconditionFailed(String),
    /// A block has no (verified) two-sided inverse.
    NotInvertible,
    /// The block is not (Λ- or Λ̄-) Hermitian.
    NotHermitian,
    /// The matrix is not Λ-quadratic in the required shape.
    NotQuadratic(String),
    /// A word factor has the wrong kind for the requested operation.
    MalformedWord(String),
    /// A double-ring pair `(a, b)` with `a - b` outside the ideal.
    ConstraintViolated,
    /// The matrix is not congruent to the identity modulo the ideal.
    NotCongruent,
    /// Condition number `k` of the nil-group normal form is violated.
    ConditionViolated(u8),
    /// No nilpotency exponent was found below the search bound.
    NotNilpotent { bound: usize },
    /// The integer `k` is not invertible in the ring.
    KNotInvertible,
    /// The torsion hypothesis `u^(k^r) = 1` fails.
    HypothesisFailed(String),
    /// A graded operand is not homogeneous of the required degree.
    DegreeError(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAUnit => write!(f, "element is not a unit"),
            Error::Undecidable(what) => write!(f, "no decision procedure for {what}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            Error::ParameterNotInIdeal => write!(f, "parameter is not in the ideal"),
            Error::PreconditionFailed(msg) => write!(f, "precondition failed: {msg}"),
            Error::NotInvertible => write!(f, "matrix is not invertible"),
            Error::NotHermitian => write!(f, "matrix is not Hermitian"),
            Error::NotQuadratic(msg) => write!(f, "not Λ-quadratic: {msg}"),
            Error::MalformedWord(msg) => write!(f, "malformed word: {msg}"),
            Error::ConstraintViolated => write!(f, "pair violates the double-ring constraint"),
            Error::NotCongruent => write!(f, "matrix is not congruent to the identity"),
            Error::ConditionViolated(k) => write!(f, "condition ({k}) violated"),
            Error::NotNilpotent { bound } => write!(f, "no nilpotency exponent up to {bound}"),
            Error::KNotInvertible => write!(f, "k is not invertible in the ring"),
            Error::HypothesisFailed(msg) => write!(f, "hypothesis failed: {msg}"),
            Error::DegreeError(msg) => write!(f, "degree error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
