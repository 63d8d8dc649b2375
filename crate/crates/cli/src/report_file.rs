//! Report JSON serialization and the human-readable measures table.

use cais_resilience_core::{Phase, ResilienceReport};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportFileError {
    #[error("invalid report file: {0}")]
    Invalid(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Serializes the report with fixed key order and full number precision.
/// Absent measures are omitted rather than written as null.
pub fn report_to_json(report: &ResilienceReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports always serialize");
    text.push('\n');
    text
}

pub fn report_from_json(text: &str) -> Result<ResilienceReport, ReportFileError> {
    Ok(serde_json::from_str(text)?)
}

fn ratio(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.2}"),
        None => "n/a".into(),
    }
}

fn count(value: Option<usize>) -> String {
    match value {
        Some(v) => v.to_string(),
        None => "n/a".into(),
    }
}

fn yes_no(value: Option<bool>) -> String {
    match value {
        Some(true) => "yes".into(),
        Some(false) => "no".into(),
        None => "n/a".into(),
    }
}

/// Renders the measures as an aligned two-column table.
pub fn render_table(report: &ResilienceReport) -> String {
    let mut rows: Vec<(String, String)> = Vec::new();
    rows.push(("complete".into(), yes_no(Some(report.complete))));
    rows.push((
        "acr_threshold".into(),
        match report.acr_threshold {
            Some(t) => format!("{t:.2}"),
            None => "n/a".into(),
        },
    ));
    for phase in Phase::ALL {
        rows.push((
            format!("length[{phase}]"),
            report.state_lengths.of(phase).to_string(),
        ));
    }
    rows.push(("put".into(), count(report.put)));
    rows.push(("pat".into(), count(report.pat)));
    rows.push(("put_ratio".into(), ratio(report.put_ratio)));
    rows.push(("pat_ratio".into(), ratio(report.pat_ratio)));
    rows.push(("hi_average".into(), ratio(report.hi_average)));
    rows.push(("recovered".into(), yes_no(report.recovered)));
    match &report.second_episode {
        Some(second) => {
            rows.push(("second.put".into(), second.put.to_string()));
            rows.push(("second.pat".into(), second.pat.to_string()));
            rows.push(("second.put_ratio".into(), ratio(second.put_ratio)));
            rows.push(("second.pat_ratio".into(), ratio(second.pat_ratio)));
            rows.push(("second.hi_average".into(), ratio(second.hi_average)));
            rows.push(("second.recovered".into(), yes_no(Some(second.recovered))));
        }
        None => rows.push(("second episode".into(), "n/a".into())),
    }

    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (key, value) in rows {
        out.push_str(&format!("{key:width$}  {value}\n"));
    }
    out
}
