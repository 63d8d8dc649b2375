//! Property tests over the full monitor pipeline: random event streams in,
//! invariants out.

use cais_resilience_core::{
    DegradationTrigger, IterationEvent, Mode, MonitorConfig, Phase, RecoveryComparison,
    ResilienceMonitor,
};
use proptest::prelude::*;

fn event(index: usize, autonomous: bool, fix_event: bool) -> IterationEvent {
    IterationEvent {
        index,
        epsilon: if autonomous { 0.9 } else { 0.1 },
        mode: if autonomous {
            Mode::Operating
        } else {
            Mode::Learning
        },
        human_intervened: !autonomous,
        fix_event,
    }
}

fn run_stream(bits: &[bool], fix_at: Option<usize>, config: MonitorConfig) -> ResilienceMonitor {
    let mut monitor = ResilienceMonitor::new(config).unwrap();
    for (i, &autonomous) in bits.iter().enumerate() {
        monitor
            .observe(event(i, autonomous, fix_at == Some(i)))
            .unwrap();
    }
    monitor
}

fn stream_strategy() -> impl Strategy<Value = (Vec<bool>, Option<usize>, MonitorConfig)> {
    (
        prop::collection::vec(prop::bool::weighted(0.7), 1..600),
        prop::option::of(0usize..600),
        (1usize..8),
        prop::bool::ANY,
        prop::bool::ANY,
    )
        .prop_map(|(bits, fix_at, window_size, below, strict)| {
            let config = MonitorConfig {
                window_size,
                k_threshold: 0.4,
                degradation_trigger: if below {
                    DegradationTrigger::BelowThreshold
                } else {
                    DegradationTrigger::ExactZero
                },
                recovery_comparison: if strict {
                    RecoveryComparison::StrictlyGreater
                } else {
                    RecoveryComparison::GreaterOrEqual
                },
            };
            (bits, fix_at, config)
        })
}

proptest! {
    #[test]
    fn phase_history_is_monotone((bits, fix_at, config) in stream_strategy()) {
        let monitor = run_stream(&bits, fix_at, config);
        let history = monitor.phase_history();
        prop_assert_eq!(history.len(), bits.len());
        prop_assert!(history.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn threshold_is_the_exact_steady_minimum((bits, fix_at, config) in stream_strategy()) {
        let monitor = run_stream(&bits, fix_at, config);
        if let Some(threshold) = monitor.acr_threshold() {
            let steady_min = monitor
                .phase_history()
                .iter()
                .zip(monitor.acr_series())
                .filter(|(p, _)| **p == Phase::FirstSteady)
                .map(|(_, &acr)| acr)
                .fold(f64::INFINITY, f64::min);
            prop_assert_eq!(threshold, steady_min);
        }
    }

    #[test]
    fn steady_length_matches_the_first_steady_span((bits, fix_at, config) in stream_strategy()) {
        let monitor = run_stream(&bits, fix_at, config);
        if let Some(steady_length) = monitor.steady_length() {
            let labelled = monitor
                .phase_history()
                .iter()
                .filter(|p| **p == Phase::FirstSteady)
                .count();
            prop_assert_eq!(steady_length, labelled);
        }
    }

    #[test]
    fn put_pat_account_for_the_whole_span((bits, fix_at, config) in stream_strategy()) {
        let monitor = run_stream(&bits, fix_at, config);
        let report = monitor.report();
        let lengths = &report.state_lengths;
        if let (Some(put), Some(pat)) = (report.put, report.pat) {
            prop_assert_eq!(put + pat, lengths.first_disruptive + lengths.recovered);
        }
        if let Some(second) = &report.second_episode {
            prop_assert_eq!(
                second.put + second.pat,
                lengths.second_disruptive + lengths.second_steady
            );
        }
        let total: usize = Phase::ALL.iter().map(|&p| lengths.of(p)).sum();
        prop_assert_eq!(total, bits.len());
    }

    #[test]
    fn ratios_are_normalized((bits, fix_at, config) in stream_strategy()) {
        let report = run_stream(&bits, fix_at, config).report();
        if let (Some(put_ratio), Some(pat_ratio)) = (report.put_ratio, report.pat_ratio) {
            prop_assert!((put_ratio + pat_ratio - 1.0).abs() < 1e-12);
        }
        if let Some(hi) = report.hi_average {
            prop_assert!((0.0..=1.0).contains(&hi));
        }
    }

    #[test]
    fn identical_streams_give_identical_reports((bits, fix_at, config) in stream_strategy()) {
        let a = run_stream(&bits, fix_at, config).report();
        let b = run_stream(&bits, fix_at, config).report();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn second_episode_never_opens_without_a_fix((bits, _, config) in stream_strategy()) {
        let monitor = run_stream(&bits, None, config);
        prop_assert_eq!(monitor.report().second_episode, None);
        prop_assert!(monitor
            .phase_history()
            .iter()
            .all(|p| *p <= Phase::Recovered));
    }
}
