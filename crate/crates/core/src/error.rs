use thiserror::Error;

use crate::ring::LocalRing;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the kernel and the CLI can report.
///
/// The variant names double as the one-word diagnostics printed by the CLI,
/// and each variant maps to exactly one process exit code (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("RingMismatch: {left} vs {right}")]
    RingMismatch { left: LocalRing, right: LocalRing },

    #[error("NotUnit: {0} lies in the maximal ideal")]
    NotUnit(String),

    #[error("NotNormal: no unit coefficient among a_0..a_{last}")]
    NotNormal { last: usize },

    #[error("IdealMembership: {0} is not in I")]
    IdealMembership(String),

    #[error("PrecisionTooLow: {0}")]
    PrecisionTooLow(String),

    #[error("InvalidRing: {0}")]
    InvalidRing(String),

    #[error("ParseError: {0}")]
    Parse(String),

    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),

    /// A postcondition the theory guarantees did not hold.
    #[error("InternalInvariant: {0}")]
    Internal(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotNormal { .. } => 2,
            Error::NotUnit(_) => 3,
            Error::PrecisionTooLow(_) => 4,
            Error::RingMismatch { .. }
            | Error::IdealMembership(_)
            | Error::InvalidRing(_)
            | Error::Parse(_)
            | Error::InvalidArgument(_) => 5,
            Error::Internal(_) => 1,
        }
    }

    pub(crate) fn check_same_ring(left: &LocalRing, right: &LocalRing) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: *left, right: *right })
        }
    }
}
