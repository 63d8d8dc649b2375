//! Timeline CSV: one row per iteration with its ACR value and phase label.
//!
//! Column order is fixed: `index,epsilon,mode,human_intervened,acr,phase`.
//! Epsilon round-trips exactly (shortest representation); ACR is written
//! with six decimal places for readability and re-derived on read. The CSV
//! does not carry the fix-event flag; the line-delimited trace is the
//! lossless format.

use std::io::{BufRead, Write};

use cais_resilience_core::sim::TimelineEntry;
use cais_resilience_core::{AcrWindow, IterationEvent, Mode, Phase};
use thiserror::Error;

pub const TIMELINE_HEADER: &str = "index,epsilon,mode,human_intervened,acr,phase";

#[derive(Debug, Error)]
pub enum TimelineError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: recorded ACR {recorded} does not match the derived value {derived}")]
    AcrMismatch {
        line: usize,
        recorded: String,
        derived: String,
    },
    #[error("missing or wrong header; expected `{TIMELINE_HEADER}`")]
    BadHeader,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn write_timeline<W: Write>(mut writer: W, timeline: &[TimelineEntry]) -> std::io::Result<()> {
    writeln!(writer, "{TIMELINE_HEADER}")?;
    for entry in timeline {
        writeln!(
            writer,
            "{},{},{},{},{:.6},{}",
            entry.event.index,
            entry.event.epsilon,
            entry.event.mode,
            entry.event.human_intervened,
            entry.acr,
            entry.phase
        )?;
    }
    Ok(())
}

/// Reads a timeline back, re-deriving the ACR column from the mode bits and
/// failing when it disagrees with what was recorded.
///
/// The returned events carry `fix_event = false`: the flag is not part of
/// this format.
pub fn read_timeline<R: BufRead>(
    reader: R,
    window_size: usize,
) -> Result<Vec<TimelineEntry>, TimelineError> {
    let mut lines = reader.lines();
    match lines.next() {
        Some(header) if header? == TIMELINE_HEADER => {}
        _ => return Err(TimelineError::BadHeader),
    }

    let malformed = |line: usize, message: &str| TimelineError::Malformed {
        line,
        message: message.into(),
    };

    let mut window = AcrWindow::new(window_size);
    let mut timeline = Vec::new();
    for (number, line) in lines.enumerate() {
        let line_no = number + 2;
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(malformed(line_no, "expected 6 comma-separated fields"));
        }
        let index: usize = fields[0]
            .parse()
            .map_err(|_| malformed(line_no, "bad index"))?;
        if index != timeline.len() {
            return Err(malformed(line_no, "indices must be contiguous from 0"));
        }
        let epsilon: f64 = fields[1]
            .parse()
            .map_err(|_| malformed(line_no, "bad epsilon"))?;
        let mode = Mode::parse(fields[2]).ok_or_else(|| malformed(line_no, "bad mode"))?;
        let human_intervened: bool = fields[3]
            .parse()
            .map_err(|_| malformed(line_no, "bad human_intervened flag"))?;
        let phase = Phase::parse(fields[5]).ok_or_else(|| malformed(line_no, "bad phase"))?;

        let derived = window.push(mode == Mode::Operating);
        let derived_text = format!("{derived:.6}");
        if fields[4] != derived_text {
            return Err(TimelineError::AcrMismatch {
                line: line_no,
                recorded: fields[4].into(),
                derived: derived_text,
            });
        }

        timeline.push(TimelineEntry {
            event: IterationEvent {
                index,
                epsilon,
                mode,
                human_intervened,
                fix_event: false,
            },
            acr: derived,
            phase,
        });
    }
    Ok(timeline)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(index: usize, autonomous: bool, acr: f64, phase: Phase) -> TimelineEntry {
        TimelineEntry {
            event: IterationEvent {
                index,
                epsilon: if autonomous { 0.9 } else { 1.0 / 3.0 },
                mode: if autonomous {
                    Mode::Operating
                } else {
                    Mode::Learning
                },
                human_intervened: !autonomous,
                fix_event: false,
            },
            acr,
            phase,
        }
    }

    #[test]
    fn empty_run_writes_a_header_only_file() {
        let mut buffer = Vec::new();
        write_timeline(&mut buffer, &[]).unwrap();
        assert_eq!(String::from_utf8(buffer).unwrap(), format!("{TIMELINE_HEADER}\n"));
    }

    #[test]
    fn acr_uses_six_decimal_places() {
        let mut buffer = Vec::new();
        write_timeline(
            &mut buffer,
            &[entry(0, false, 0.4, Phase::InitialLearning)],
        )
        .unwrap();
        let text = String::from_utf8(buffer).unwrap();
        assert!(text.contains(",0.400000,"), "{text}");
    }

    #[test]
    fn read_rejects_a_wrong_header() {
        let err = read_timeline("nope\n".as_bytes(), 5).unwrap_err();
        assert!(matches!(err, TimelineError::BadHeader));
    }

    #[test]
    fn read_verifies_the_recorded_acr() {
        // ACR column claims 0.4 but one autonomous bit in a window of 5
        // derives 0.2.
        let text = format!("{TIMELINE_HEADER}\n0,0.9,operating,false,0.400000,initial_learning\n");
        let err = read_timeline(text.as_bytes(), 5).unwrap_err();
        assert!(matches!(err, TimelineError::AcrMismatch { line: 2, .. }));
    }

    #[test]
    fn round_trips_events_exactly() {
        let entries = vec![
            entry(0, false, 0.0, Phase::InitialLearning),
            entry(1, true, 0.2, Phase::InitialLearning),
            entry(2, true, 0.4, Phase::InitialLearning),
        ];
        let mut buffer = Vec::new();
        write_timeline(&mut buffer, &entries).unwrap();
        let parsed = read_timeline(buffer.as_slice(), 5).unwrap();
        assert_eq!(parsed, entries);
    }
}
