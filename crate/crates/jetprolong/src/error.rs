use std::fmt;

/// Errors produced by the symbolic engines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JetError {
    /// An index fell outside the bounds fixed by the dimension context.
    IndexOutOfRange {
        what: &'static str,
        index: u32,
        bound: u32,
    },
    /// Two operands were built over different dimension contexts.
    DimsMismatch { left: (u32, u32), right: (u32, u32) },
    /// A product would multiply two derivative symbols together; every
    /// formula is linear in the symbols, so this is always a bug upstream.
    LinearityViolation,
    /// A parameter outside its admissible range (for instance κ = 0).
    Domain(String),
    /// Lookup of an entry that is not present in a prolongation table.
    MissingEntry(String),
    /// A structural verification failed, e.g. an engine disagreement or a
    /// coefficient shape that does not match the expected pattern.
    Verification(String),
    /// Malformed serialized input.
    Parse(String),
}

impl fmt::Display for JetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JetError::IndexOutOfRange { what, index, bound } => {
                write!(f, "{what} index {index} out of range 1..={bound}")
            }
            JetError::DimsMismatch { left, right } => write!(
                f,
                "dimension mismatch: ({}, {}) vs ({}, {})",
                left.0, left.1, right.0, right.1
            ),
            JetError::LinearityViolation => {
                write!(f, "product of two derivative symbols is not allowed")
            }
            JetError::Domain(msg) => write!(f, "domain error: {msg}"),
            JetError::MissingEntry(msg) => write!(f, "missing entry: {msg}"),
            JetError::Verification(msg) => write!(f, "verification failure: {msg}"),
            JetError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for JetError {}
