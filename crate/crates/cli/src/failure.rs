use std::fmt;

use formk1_core::Error;
use serde_json::{json, Value};

/// Exit code for a check that ran and came out false.
pub const EXIT_FAILED: i32 = 1;
/// Exit code for input that could not be parsed or does not fit the operation.
pub const EXIT_MALFORMED: i32 = 2;

/// Anything that stops a command, with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub code: i32,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            kind: "ParseError".into(),
            message: message.into(),
            code: EXIT_MALFORMED,
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Failure {
            kind: "IoError".into(),
            message: message.into(),
            code: EXIT_MALFORMED,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            kind: "UsageError".into(),
            message: message.into(),
            code: EXIT_MALFORMED,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind, "message": self.message } })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (kind, code) = match &e {
            Error::Undecidable(_) => ("Undecidable", EXIT_MALFORMED),
            Error::DimensionMismatch { .. } => ("DimensionMismatch", EXIT_MALFORMED),
            Error::BadParameter(_) => ("BadParameter", EXIT_MALFORMED),
            Error::ParameterNotInIdeal => ("ParameterNotInIdeal", EXIT_MALFORMED),
            Error::MalformedWord(_) => ("MalformedWord", EXIT_MALFORMED),
            Error::ConstraintViolated => ("ConstraintViolated", EXIT_MALFORMED),
            Error::DegreeError(_) => ("DegreeError", EXIT_MALFORMED),
            Error::NotAUnit => ("NotAUnit", EXIT_FAILED),
            Error::PreconditionFailed(_) => ("PreconditionFailed", EXIT_FAILED),
            Error::NotInvertible => ("NotInvertible", EXIT_FAILED),
            Error::NotHermitian => ("NotHermitian", EXIT_FAILED),
            Error::NotQuadratic(_) => ("NotQuadratic", EXIT_FAILED),
            Error::NotCongruent => ("NotCongruent", EXIT_FAILED),
            Error::ConditionViolated(_) => ("ConditionViolated", EXIT_FAILED),
            Error::NotNilpotent { .. } => ("NotNilpotent", EXIT_FAILED),
            Error::KNotInvertible => ("KNotInvertible", EXIT_FAILED),
            Error::HypothesisFailed(_) => ("HypothesisFailed", EXIT_FAILED),
        };
        Failure {
            kind: kind.into(),
            message: e.to_string(),
            code,
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;
