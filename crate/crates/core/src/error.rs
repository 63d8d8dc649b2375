use core::fmt;

/// Errors reported by the monitoring and simulation primitives.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A confidence level fell outside `[0, 1]`.
    EpsilonOutOfRange(f64),
    /// A desired confidence level `K` fell outside `[0, 1]`.
    KThresholdOutOfRange(f64),
    /// A human correction was reported for an iteration that never produced
    /// an autonomous prediction.
    CorrectionWithoutPrediction,
    /// An event arrived out of order; indices must increase by one from zero.
    NonContiguousIndex { expected: usize, found: usize },
    /// An event claims to have completed autonomously *and* with human help.
    InconsistentEvent { index: usize },
    /// A configuration value violates its documented range.
    InvalidConfig(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EpsilonOutOfRange(v) => {
                write!(f, "confidence level {v} is outside [0, 1]")
            }
            Error::KThresholdOutOfRange(v) => {
                write!(f, "desired confidence level {v} is outside [0, 1]")
            }
            Error::CorrectionWithoutPrediction => {
                write!(f, "a learning iteration cannot carry a false-positive correction")
            }
            Error::NonContiguousIndex { expected, found } => {
                write!(f, "expected iteration index {expected}, found {found}")
            }
            Error::InconsistentEvent { index } => {
                write!(
                    f,
                    "iteration {index} is marked operating but also human-intervened"
                )
            }
            Error::InvalidConfig(what) => write!(f, "invalid configuration: {what}"),
        }
    }
}

impl core::error::Error for Error {}
