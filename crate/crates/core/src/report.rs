//! Resilience measures computed over a finished (or truncated) run.

use alloc::vec::Vec;

use crate::config::RecoveryComparison;
use crate::event::IterationEvent;
use crate::phase::Phase;

/// Iteration count per phase. Phases the run never reached count zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StateLengths {
    pub initial_learning: usize,
    pub first_steady: usize,
    pub first_disruptive: usize,
    pub recovered: usize,
    pub second_disruptive: usize,
    pub second_steady: usize,
}

impl StateLengths {
    pub fn tally(phases: &[Phase]) -> Self {
        let mut lengths = StateLengths::default();
        for &phase in phases {
            *lengths.of_mut(phase) += 1;
        }
        lengths
    }

    pub fn of(&self, phase: Phase) -> usize {
        match phase {
            Phase::InitialLearning => self.initial_learning,
            Phase::FirstSteady => self.first_steady,
            Phase::FirstDisruptive => self.first_disruptive,
            Phase::Recovered => self.recovered,
            Phase::SecondDisruptive => self.second_disruptive,
            Phase::SecondSteady => self.second_steady,
        }
    }

    fn of_mut(&mut self, phase: Phase) -> &mut usize {
        match phase {
            Phase::InitialLearning => &mut self.initial_learning,
            Phase::FirstSteady => &mut self.first_steady,
            Phase::FirstDisruptive => &mut self.first_disruptive,
            Phase::Recovered => &mut self.recovered,
            Phase::SecondDisruptive => &mut self.second_disruptive,
            Phase::SecondSteady => &mut self.second_steady,
        }
    }
}

/// Threshold accounting over one disruptive episode.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EpisodeMeasures {
    /// ACR points under the threshold within the episode span.
    pub put: usize,
    /// ACR points at an acceptable level within the episode span.
    pub pat: usize,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub put_ratio: Option<f64>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub pat_ratio: Option<f64>,
    /// Human interventions divided by iterations over the episode span.
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub hi_average: Option<f64>,
    pub recovered: bool,
}

/// Resilience measures of a monitored run.
///
/// The first episode (disruptive plus recovered span) is reported through
/// the top-level fields; a second episode, when entered, is reported
/// separately. Measures that depend on the ACR threshold are absent until a
/// first steady state exists.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResilienceReport {
    /// False when the stream ended before reaching a first steady state; the
    /// threshold-dependent measures are omitted in that case.
    pub complete: bool,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub acr_threshold: Option<f64>,
    pub state_lengths: StateLengths,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub put: Option<usize>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub pat: Option<usize>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub put_ratio: Option<f64>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub pat_ratio: Option<f64>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub hi_average: Option<f64>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub recovered: Option<bool>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub second_episode: Option<EpisodeMeasures>,
}

fn episode_measures(
    span: &[usize],
    acr: &[f64],
    events: &[IterationEvent],
    threshold: f64,
    comparison: RecoveryComparison,
    recovered: bool,
) -> EpisodeMeasures {
    let put = span
        .iter()
        .filter(|&&i| !comparison.qualifies(acr[i], threshold))
        .count();
    let pat = span.len() - put;
    let interventions = span.iter().filter(|&&i| events[i].human_intervened).count();
    let total = span.len();
    let (put_ratio, pat_ratio, hi_average) = if total > 0 {
        (
            Some(put as f64 / total as f64),
            Some(pat as f64 / total as f64),
            Some(interventions as f64 / total as f64),
        )
    } else {
        (None, None, None)
    };
    EpisodeMeasures {
        put,
        pat,
        put_ratio,
        pat_ratio,
        hi_average,
        recovered,
    }
}

/// Computes the resilience report from a labelled run.
///
/// `phases`, `acr` and `events` run parallel, one entry per iteration.
/// `acr_threshold` is the value frozen at the end of the first steady state,
/// absent if that state never ended.
pub fn compute_report(
    phases: &[Phase],
    acr: &[f64],
    events: &[IterationEvent],
    acr_threshold: Option<f64>,
    comparison: RecoveryComparison,
) -> ResilienceReport {
    assert_eq!(phases.len(), acr.len());
    assert_eq!(phases.len(), events.len());

    let state_lengths = StateLengths::tally(phases);
    let complete = state_lengths.first_steady > 0;

    let span_of = |members: &[Phase]| -> Vec<usize> {
        phases
            .iter()
            .enumerate()
            .filter(|(_, p)| members.contains(p))
            .map(|(i, _)| i)
            .collect()
    };

    let mut report = ResilienceReport {
        complete,
        acr_threshold,
        state_lengths,
        put: None,
        pat: None,
        put_ratio: None,
        pat_ratio: None,
        hi_average: None,
        recovered: None,
        second_episode: None,
    };
    if !complete {
        return report;
    }

    let first_span = span_of(&[Phase::FirstDisruptive, Phase::Recovered]);
    if first_span.is_empty() {
        report.put = Some(0);
        report.pat = Some(0);
    } else {
        let threshold = acr_threshold.expect("a disruptive span fixes the threshold");
        let first = episode_measures(
            &first_span,
            acr,
            events,
            threshold,
            comparison,
            state_lengths.recovered > 0,
        );
        report.put = Some(first.put);
        report.pat = Some(first.pat);
        report.put_ratio = first.put_ratio;
        report.pat_ratio = first.pat_ratio;
        report.hi_average = first.hi_average;
        report.recovered = Some(first.recovered);
    }

    let second_span = span_of(&[Phase::SecondDisruptive, Phase::SecondSteady]);
    if !second_span.is_empty() {
        let threshold = acr_threshold.expect("a disruptive span fixes the threshold");
        report.second_episode = Some(episode_measures(
            &second_span,
            acr,
            events,
            threshold,
            comparison,
            state_lengths.second_steady > 0,
        ));
    }

    report
}
