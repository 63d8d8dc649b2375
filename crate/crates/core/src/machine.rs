//! Phase tracking over the ACR series, with retrospective recovery
//! confirmation.
//!
//! The machine labels every iteration with a [`Phase`]. Recovery cannot be
//! decided online: a disruptive state ends only once the ratio has stayed at
//! an acceptable level for as many iterations as the first steady state
//! lasted (the state-length rule). When that happens the recovered phase is
//! back-dated to the iteration right after the last point under the ACR
//! threshold, and the provisional labels of the back-dated span are
//! rewritten. Consumers that need online labels should read the provisional
//! phase together with the `confirmed` flag of each step.

use alloc::vec::Vec;

use crate::config::{DegradationTrigger, MonitorConfig};
use crate::event::IterationEvent;
use crate::phase::Phase;
use crate::window::AcrPoint;

/// Label assigned to one iteration, plus whether it can still be rewritten.
///
/// A disruptive label at or above the threshold is provisional: it becomes
/// part of the recovered span if the current qualifying run completes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepOutcome {
    pub phase: Phase,
    pub confirmed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnomalyKind {
    /// A fix event arrived before the first recovery was confirmed.
    FixBeforeRecovery,
}

/// An observation that does not fit the admissible phase chain. Recorded as
/// an annotation, never as a transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anomaly {
    pub index: usize,
    pub kind: AnomalyKind,
}

/// Tracks the performance phase of one event stream.
#[derive(Debug, Clone)]
pub struct ResilienceStateMachine {
    config: MonitorConfig,
    phase: Phase,
    steady_start: Option<usize>,
    steady_min: f64,
    acr_threshold: Option<f64>,
    steady_length: Option<usize>,
    last_below: Option<usize>,
    fix_seen: bool,
    history: Vec<Phase>,
    anomalies: Vec<Anomaly>,
}

impl ResilienceStateMachine {
    pub fn new(config: MonitorConfig) -> Self {
        ResilienceStateMachine {
            config,
            phase: Phase::InitialLearning,
            steady_start: None,
            steady_min: 1.0,
            acr_threshold: None,
            steady_length: None,
            last_below: None,
            fix_seen: false,
            history: Vec::new(),
            anomalies: Vec::new(),
        }
    }

    pub fn config(&self) -> &MonitorConfig {
        &self.config
    }

    pub fn current_phase(&self) -> Phase {
        self.phase
    }

    /// Minimum ACR observed during the first steady state; fixed once that
    /// state ends and immutable afterwards.
    pub fn acr_threshold(&self) -> Option<f64> {
        self.acr_threshold
    }

    /// Length of the first steady state, fixed once that state ends. This is
    /// the number of consecutive qualifying iterations needed to confirm a
    /// recovery.
    pub fn steady_length(&self) -> Option<usize> {
        self.steady_length
    }

    /// One label per consumed iteration, with back-dated spans already
    /// rewritten.
    pub fn phase_history(&self) -> &[Phase] {
        &self.history
    }

    pub fn anomalies(&self) -> &[Anomaly] {
        &self.anomalies
    }

    /// Consumes the next ACR point and labels its iteration.
    ///
    /// Points must be fed in index order; the monitor enforces this before
    /// calling in.
    pub fn step(&mut self, point: AcrPoint, event: &IterationEvent) -> StepOutcome {
        debug_assert_eq!(point.index, self.history.len(), "points must be consecutive");
        let index = point.index;
        let acr = point.acr;

        if event.fix_event {
            if self.phase >= Phase::Recovered {
                self.fix_seen = true;
            } else {
                self.anomalies.push(Anomaly {
                    index,
                    kind: AnomalyKind::FixBeforeRecovery,
                });
            }
        }

        match self.phase {
            Phase::InitialLearning => {
                if acr == 1.0 {
                    self.phase = Phase::FirstSteady;
                    self.steady_start = Some(index);
                    self.steady_min = 1.0;
                }
            }
            Phase::FirstSteady => {
                if self.trigger_fires(acr, self.steady_min) {
                    self.acr_threshold = Some(self.steady_min);
                    self.steady_length =
                        Some(index - self.steady_start.expect("steady state has a start"));
                    self.phase = Phase::FirstDisruptive;
                    self.last_below = Some(index);
                } else if acr < self.steady_min {
                    self.steady_min = acr;
                }
            }
            Phase::FirstDisruptive => self.disruptive_step(index, acr, Phase::Recovered),
            Phase::Recovered => {
                let threshold = self.acr_threshold.expect("threshold fixed before recovery");
                if self.fix_seen && self.trigger_fires(acr, threshold) {
                    self.phase = Phase::SecondDisruptive;
                    self.last_below = Some(index);
                }
            }
            Phase::SecondDisruptive => self.disruptive_step(index, acr, Phase::SecondSteady),
            Phase::SecondSteady => {}
        }

        self.history.push(self.phase);
        StepOutcome {
            phase: self.phase,
            confirmed: self.label_is_final(acr),
        }
    }

    fn trigger_fires(&self, acr: f64, reference: f64) -> bool {
        match self.config.degradation_trigger {
            DegradationTrigger::ExactZero => acr == 0.0,
            DegradationTrigger::BelowThreshold => acr < reference,
        }
    }

    fn disruptive_step(&mut self, index: usize, acr: f64, next: Phase) {
        let threshold = self.acr_threshold.expect("threshold fixed at disruption");
        let qualifies = self.config.recovery_comparison.qualifies(acr, threshold);
        if !qualifies {
            self.last_below = Some(index);
            return;
        }
        let last_below = self.last_below.expect("disruption entry is under threshold");
        let run = index - last_below;
        if run == self.steady_length.expect("state length fixed at disruption") {
            // Back-date the recovery to the point right after the last one
            // under the threshold; everything already labelled disruptive in
            // that span is rewritten.
            for label in &mut self.history[last_below + 1..] {
                *label = next;
            }
            self.phase = next;
        }
    }

    fn label_is_final(&self, acr: f64) -> bool {
        match self.phase {
            Phase::FirstDisruptive | Phase::SecondDisruptive => {
                let threshold = self.acr_threshold.expect("threshold fixed at disruption");
                !self.config.recovery_comparison.qualifies(acr, threshold)
            }
            _ => true,
        }
    }
}
