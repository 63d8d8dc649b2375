//! Resilience monitoring for collaborative AI systems that learn online
//! from human feedback.
//!
//! A system that learns at run time completes each task either autonomously
//! or with the human in the loop. The fraction of autonomous completions
//! within a sliding time frame — the Autonomous Classification Ratio (ACR)
//! — is a direct performance signal: it climbs as the model learns, drops
//! when a disruptive event degrades the sensors, and climbs again as the
//! model relearns. This crate turns a stream of iteration events into that
//! signal, labels every iteration with a performance phase, and computes
//! the resilience measures of the run (ACR threshold, state lengths,
//! points under/above the threshold, human-interaction average).
//!
//! The [`sim`] module provides a deterministic scenario generator — an
//! online color classifier with a human oracle and a lights-off/lights-on
//! disruption — that exercises the full phase cycle end to end.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature for embedded use.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod config;
pub mod error;
pub mod event;
pub mod machine;
pub mod monitor;
pub mod phase;
pub mod report;
pub mod sim;
pub mod window;

pub use config::{DegradationTrigger, MonitorConfig, RecoveryComparison};
pub use error::Error;
pub use event::{
    decide_mode, finalize_event, FinalizedIteration, IterationEvent, Mode, PendingMode,
};
pub use machine::{Anomaly, AnomalyKind, ResilienceStateMachine, StepOutcome};
pub use monitor::{Observation, ResilienceMonitor};
pub use phase::Phase;
pub use report::{compute_report, EpisodeMeasures, ResilienceReport, StateLengths};
pub use window::{AcrPoint, AcrWindow};
