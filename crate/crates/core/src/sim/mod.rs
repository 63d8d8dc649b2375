//! Deterministic scenario simulator: an online color classifier with a
//! human oracle, a lights-off disruption and a lights-on fix event.
//!
//! The simulator produces the event stream a real deployment would log, so
//! the monitor sees no difference between synthetic and recorded runs.

mod classifier;
mod scenario;
mod sensor;

pub use classifier::{IncrementalClassifier, Prediction};
pub use scenario::{run_scenario, ScenarioConfig, ScenarioRun, TimelineEntry};
pub use sensor::{next_object, ObjectClass, ObjectSample};
