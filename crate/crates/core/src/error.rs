use thiserror::Error;

use crate::ideal::PrimeSupport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// The unit ideal defines the zero module, for which depth, dimension and
    /// associated primes are undefined.
    #[error("the unit ideal defines the zero module")]
    UnitIdeal,

    #[error("squarefree ideal required (polarize first)")]
    SquarefreeRequired,

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("variable {var} is a zerodivisor: it lies in the associated prime {witness}")]
    ZeroDivisor { var: String, witness: String },

    #[error("{what} exceeds the cap ({size} > {cap})")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },

    #[error("index {index} out of range {lo}..={hi}")]
    OutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("empty direct sum")]
    EmptySum,

    /// An internal cross-check between two independent routes failed.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Malformed(_) => 2,
            Error::CapExceeded { .. } => 3,
            Error::Consistency(_) => 1,
            _ => 4,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "malformed-input",
            Error::RingMismatch(_) => "ring-mismatch",
            Error::UnitIdeal => "undefined-module",
            Error::SquarefreeRequired => "squarefree-required",
            Error::NotAFace(_) => "not-in-support",
            Error::ZeroDivisor { .. } => "regularity-violation",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::OutOfRange { .. } => "out-of-range",
            Error::EmptySum => "empty-sum",
            Error::Consistency(_) => "consistency",
        }
    }

    pub(crate) fn zero_divisor(var: &str, witness: &PrimeSupport, names: &[String]) -> Self {
        Error::ZeroDivisor { var: var.to_string(), witness: witness.display(names) }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
