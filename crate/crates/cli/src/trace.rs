//! Line-delimited event traces: one JSON object per line.
//!
//! This is the lossless interchange format between the simulator, external
//! systems and the monitor. Lines parse independently; parsing fails fast on
//! the first bad line with its 1-based line number.

use std::io::{BufRead, Write};

use cais_resilience_core::{IterationEvent, Mode};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: expected index {expected}, found {found}")]
    NonContiguousIndex {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: epsilon {value} is outside [0, 1]")]
    OutOfRangeEpsilon { line: usize, value: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One trace record. Unknown fields are rejected so typos do not pass
/// silently; `fix_event` may be omitted and defaults to false.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TraceLine {
    index: usize,
    epsilon: f64,
    mode: Mode,
    human_intervened: bool,
    #[serde(default)]
    fix_event: bool,
}

impl From<&IterationEvent> for TraceLine {
    fn from(event: &IterationEvent) -> Self {
        TraceLine {
            index: event.index,
            epsilon: event.epsilon,
            mode: event.mode,
            human_intervened: event.human_intervened,
            fix_event: event.fix_event,
        }
    }
}

/// Parses a trace, validating every record.
///
/// Blank lines are ignored. Values are never altered: the parse is lossless
/// for all fields.
pub fn read_trace<R: BufRead>(reader: R) -> Result<Vec<IterationEvent>, TraceError> {
    let mut events = Vec::new();
    for (number, line) in reader.lines().enumerate() {
        let line_no = number + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: TraceLine =
            serde_json::from_str(&line).map_err(|e| TraceError::Malformed {
                line: line_no,
                message: e.to_string(),
            })?;
        if record.index != events.len() {
            return Err(TraceError::NonContiguousIndex {
                line: line_no,
                expected: events.len(),
                found: record.index,
            });
        }
        if !(0.0..=1.0).contains(&record.epsilon) {
            return Err(TraceError::OutOfRangeEpsilon {
                line: line_no,
                value: record.epsilon,
            });
        }
        if record.mode == Mode::Operating && record.human_intervened {
            return Err(TraceError::Malformed {
                line: line_no,
                message: "an operating iteration cannot be human-intervened".into(),
            });
        }
        events.push(IterationEvent {
            index: record.index,
            epsilon: record.epsilon,
            mode: record.mode,
            human_intervened: record.human_intervened,
            fix_event: record.fix_event,
        });
    }
    Ok(events)
}

/// Writes a trace with one record per line. All fields are emitted,
/// including `fix_event`, so the output layout is byte-stable.
pub fn write_trace<W: Write>(mut writer: W, events: &[IterationEvent]) -> std::io::Result<()> {
    for event in events {
        let line = serde_json::to_string(&TraceLine::from(event))
            .expect("trace lines always serialize");
        writeln!(writer, "{line}")?;
    }
    Ok(())
}
