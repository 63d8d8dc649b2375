use crate::error::Error;

/// Condition that starts a disruptive state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum DegradationTrigger {
    /// Degradation begins when the autonomy ratio drops to exactly zero.
    #[default]
    ExactZero,
    /// Degradation begins when the autonomy ratio drops below the reference
    /// level: the running steady-state minimum during the first steady state,
    /// or the frozen ACR threshold afterwards. Useful when real degradations
    /// never reach exactly zero.
    BelowThreshold,
}

/// How a point is compared against the ACR threshold when confirming
/// recovery (and, symmetrically, when counting points under the threshold).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum RecoveryComparison {
    #[default]
    GreaterOrEqual,
    StrictlyGreater,
}

impl RecoveryComparison {
    /// Whether an ACR value counts as acceptable performance.
    pub fn qualifies(self, acr: f64, threshold: f64) -> bool {
        match self {
            RecoveryComparison::GreaterOrEqual => acr >= threshold,
            RecoveryComparison::StrictlyGreater => acr > threshold,
        }
    }
}

/// Parameters of the resilience monitor.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct MonitorConfig {
    /// Number of iterations per time frame.
    pub window_size: usize,
    /// Desired confidence level `K`; below it the human performs the task.
    pub k_threshold: f64,
    pub degradation_trigger: DegradationTrigger,
    pub recovery_comparison: RecoveryComparison,
}

impl Default for MonitorConfig {
    fn default() -> Self {
        MonitorConfig {
            window_size: 5,
            k_threshold: 0.40,
            degradation_trigger: DegradationTrigger::default(),
            recovery_comparison: RecoveryComparison::default(),
        }
    }
}

impl MonitorConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.window_size == 0 {
            return Err(Error::InvalidConfig("window_size must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.k_threshold) {
            return Err(Error::KThresholdOutOfRange(self.k_threshold));
        }
        Ok(())
    }
}
