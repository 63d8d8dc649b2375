//! Iteration events and the learning/operating decision rules.
//!
//! Each classification attempt produces one [`IterationEvent`]. The mode of
//! an iteration is decided in two stages: [`decide_mode`] compares the
//! model's confidence against the desired confidence level `K`, and
//! [`finalize_event`] resolves the pending outcome once the human has had a
//! chance to correct a false positive.

use crate::error::Error;

/// Final mode of a completed iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Mode {
    /// The human classified the object; the model learned from the label.
    Learning,
    /// The system completed the classification autonomously.
    Operating,
}

/// Provisional mode before the human has had a chance to intervene.
///
/// `OperatingPending` becomes `Operating` only if no false-positive
/// correction arrives while the action completes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PendingMode {
    Learning,
    OperatingPending,
}

/// One classification attempt, as consumed by the monitor.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IterationEvent {
    /// Ordinal iteration number, 0-based and contiguous within a stream.
    pub index: usize,
    /// Confidence level of the prediction, in `[0, 1]`.
    pub epsilon: f64,
    /// Final mode after any human correction.
    pub mode: Mode,
    /// True when the human classified the object, either because the
    /// confidence was below `K` or because a false positive was corrected.
    pub human_intervened: bool,
    /// True when the external disruption cause was removed at this iteration.
    #[cfg_attr(feature = "serde", serde(default))]
    pub fix_event: bool,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Learning => "learning",
            Mode::Operating => "operating",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "learning" => Some(Mode::Learning),
            "operating" => Some(Mode::Operating),
            _ => None,
        }
    }
}

impl core::fmt::Display for Mode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl IterationEvent {
    /// Whether this iteration completed autonomously (contribution bit 1).
    pub fn is_autonomous(&self) -> bool {
        self.mode == Mode::Operating
    }

    /// Checks the per-event invariants: epsilon range and mode consistency.
    ///
    /// An operating iteration cannot carry a human intervention; a corrected
    /// false positive is recorded as `Learning`.
    pub fn validate(&self) -> Result<(), Error> {
        if !(0.0..=1.0).contains(&self.epsilon) {
            return Err(Error::EpsilonOutOfRange(self.epsilon));
        }
        if self.mode == Mode::Operating && self.human_intervened {
            return Err(Error::InconsistentEvent { index: self.index });
        }
        Ok(())
    }
}

/// Resolved mode, intervention flag and contribution bit of an iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinalizedIteration {
    pub mode: Mode,
    pub human_intervened: bool,
    /// Contribution to the autonomy window: `true` enqueues a one.
    pub autonomous: bool,
}

/// Compares the prediction confidence against the desired level `K`.
///
/// Returns `Learning` iff `epsilon < k_threshold` (strict); otherwise the
/// iteration is `OperatingPending`, since the human may still correct a
/// false positive before it finalizes.
pub fn decide_mode(epsilon: f64, k_threshold: f64) -> Result<PendingMode, Error> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    if !(0.0..=1.0).contains(&k_threshold) {
        return Err(Error::KThresholdOutOfRange(k_threshold));
    }
    if epsilon < k_threshold {
        Ok(PendingMode::Learning)
    } else {
        Ok(PendingMode::OperatingPending)
    }
}

/// Resolves a pending mode once the iteration has completed.
///
/// A learning iteration enqueues a zero. A pending operation enqueues a one
/// only when it finishes without correction; a corrected false positive is
/// recorded as a learning iteration and enqueues a zero.
pub fn finalize_event(
    pending: PendingMode,
    human_corrected: bool,
) -> Result<FinalizedIteration, Error> {
    match (pending, human_corrected) {
        (PendingMode::Learning, true) => Err(Error::CorrectionWithoutPrediction),
        (PendingMode::Learning, false) => Ok(FinalizedIteration {
            mode: Mode::Learning,
            human_intervened: true,
            autonomous: false,
        }),
        (PendingMode::OperatingPending, true) => Ok(FinalizedIteration {
            mode: Mode::Learning,
            human_intervened: true,
            autonomous: false,
        }),
        (PendingMode::OperatingPending, false) => Ok(FinalizedIteration {
            mode: Mode::Operating,
            human_intervened: false,
            autonomous: true,
        }),
    }
}
