//! Event-stream orchestration: window, state machine and bookkeeping.

use alloc::vec::Vec;

use crate::config::MonitorConfig;
use crate::error::Error;
use crate::event::IterationEvent;
use crate::machine::{Anomaly, ResilienceStateMachine};
use crate::phase::Phase;
use crate::report::{compute_report, ResilienceReport};
use crate::window::{AcrPoint, AcrWindow};

/// Result of consuming one event.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    pub point: AcrPoint,
    /// Provisional phase label; see `confirmed`.
    pub phase: Phase,
    /// False while the label may still be rewritten by a back-dated recovery.
    pub confirmed: bool,
}

/// Consumes a stream of iteration events, maintains the ACR window, labels
/// each iteration with a phase and computes the resilience report.
///
/// One monitor per stream. A monitor is single-writer but can be moved
/// across threads; independent streams share no state.
#[derive(Debug, Clone)]
pub struct ResilienceMonitor {
    window: AcrWindow,
    machine: ResilienceStateMachine,
    events: Vec<IterationEvent>,
    acr_series: Vec<f64>,
}

impl ResilienceMonitor {
    pub fn new(config: MonitorConfig) -> Result<Self, Error> {
        config.validate()?;
        Ok(ResilienceMonitor {
            window: AcrWindow::new(config.window_size),
            machine: ResilienceStateMachine::new(config),
            events: Vec::new(),
            acr_series: Vec::new(),
        })
    }

    pub fn config(&self) -> &MonitorConfig {
        self.machine.config()
    }

    /// Number of events consumed so far.
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Validates and consumes the next event.
    ///
    /// Events must arrive with indices increasing by one from zero.
    pub fn observe(&mut self, event: IterationEvent) -> Result<Observation, Error> {
        let expected = self.events.len();
        if event.index != expected {
            return Err(Error::NonContiguousIndex {
                expected,
                found: event.index,
            });
        }
        event.validate()?;

        let acr = self.window.push(event.is_autonomous());
        let point = AcrPoint {
            index: event.index,
            acr,
        };
        let outcome = self.machine.step(point, &event);
        self.events.push(event);
        self.acr_series.push(acr);
        Ok(Observation {
            point,
            phase: outcome.phase,
            confirmed: outcome.confirmed,
        })
    }

    pub fn events(&self) -> &[IterationEvent] {
        &self.events
    }

    pub fn acr_series(&self) -> &[f64] {
        &self.acr_series
    }

    /// Final labels, with back-dated recoveries already applied.
    pub fn phase_history(&self) -> &[Phase] {
        self.machine.phase_history()
    }

    pub fn anomalies(&self) -> &[Anomaly] {
        self.machine.anomalies()
    }

    pub fn acr_threshold(&self) -> Option<f64> {
        self.machine.acr_threshold()
    }

    pub fn steady_length(&self) -> Option<usize> {
        self.machine.steady_length()
    }

    /// Resilience measures over everything consumed so far.
    pub fn report(&self) -> ResilienceReport {
        compute_report(
            self.machine.phase_history(),
            &self.acr_series,
            &self.events,
            self.machine.acr_threshold(),
            self.config().recovery_comparison,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::event::Mode;

    fn event(index: usize, autonomous: bool) -> IterationEvent {
        IterationEvent {
            index,
            epsilon: if autonomous { 0.9 } else { 0.1 },
            mode: if autonomous { Mode::Operating } else { Mode::Learning },
            human_intervened: !autonomous,
            fix_event: false,
        }
    }

    #[test]
    fn rejects_out_of_order_events() {
        let mut monitor = ResilienceMonitor::new(MonitorConfig::default()).unwrap();
        monitor.observe(event(0, false)).unwrap();
        let err = monitor.observe(event(2, false)).unwrap_err();
        assert_eq!(
            err,
            Error::NonContiguousIndex {
                expected: 1,
                found: 2
            }
        );
    }

    #[test]
    fn rejects_out_of_range_epsilon() {
        let mut monitor = ResilienceMonitor::new(MonitorConfig::default()).unwrap();
        let mut bad = event(0, false);
        bad.epsilon = 1.5;
        assert_eq!(
            monitor.observe(bad).unwrap_err(),
            Error::EpsilonOutOfRange(1.5)
        );
    }

    #[test]
    fn tracks_the_acr_series() {
        let mut monitor = ResilienceMonitor::new(MonitorConfig::default()).unwrap();
        for (i, autonomous) in [false, true, true, true, true, true].into_iter().enumerate() {
            monitor.observe(event(i, autonomous)).unwrap();
        }
        assert_eq!(monitor.acr_series(), &[0.0, 0.2, 0.4, 0.6, 0.8, 1.0]);
        assert_eq!(monitor.phase_history()[5], Phase::FirstSteady);
    }
}
