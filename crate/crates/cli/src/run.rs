//! End-to-end command implementations shared by the binary and the tests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use cais_resilience_core::sim::{run_scenario, ScenarioConfig, TimelineEntry};
use cais_resilience_core::{
    Anomaly, IterationEvent, MonitorConfig, Phase, ResilienceMonitor, ResilienceReport,
};
use thiserror::Error;

use crate::plot::render_plot;
use crate::report_file::report_to_json;
use crate::timeline::write_timeline;
use crate::trace::write_trace;

pub const TIMELINE_FILE: &str = "timeline.csv";
pub const REPORT_FILE: &str = "report.json";
pub const PLOT_FILE: &str = "plot.svg";
pub const TRACE_FILE: &str = "trace.jsonl";

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Invalid(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// What a command produced, for the one-line console summary.
pub struct RunSummary {
    pub phases: Vec<(Phase, usize)>,
    pub report: ResilienceReport,
    pub anomalies: Vec<Anomaly>,
    pub files: Vec<PathBuf>,
}

impl RunSummary {
    /// `phases: initial_learning(7) -> first_steady(36) -> ... | recovered: yes/yes`
    pub fn one_line(&self) -> String {
        let phases = if self.phases.is_empty() {
            "none".to_string()
        } else {
            self.phases
                .iter()
                .map(|(phase, len)| format!("{phase}({len})"))
                .collect::<Vec<_>>()
                .join(" -> ")
        };
        let recovered = |r: Option<bool>| match r {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        format!(
            "phases: {phases} | recovered: {}/{}",
            recovered(self.report.recovered),
            recovered(self.report.second_episode.as_ref().map(|s| s.recovered)),
        )
    }
}

fn phase_runs(timeline: &[TimelineEntry]) -> Vec<(Phase, usize)> {
    let mut runs: Vec<(Phase, usize)> = Vec::new();
    for entry in timeline {
        match runs.last_mut() {
            Some((phase, len)) if *phase == entry.phase => *len += 1,
            _ => runs.push((entry.phase, 1)),
        }
    }
    runs
}

fn write_file(dir: &Path, name: &str, bytes: &[u8]) -> Result<PathBuf, RunError> {
    let path = dir.join(name);
    let write = |path: &Path| -> std::io::Result<()> {
        let mut file = fs::File::create(path)?;
        file.write_all(bytes)?;
        file.flush()
    };
    write(&path).map_err(|source| RunError::Write {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

fn write_outputs(
    out_dir: &Path,
    timeline: &[TimelineEntry],
    report: &ResilienceReport,
    threshold: Option<f64>,
    trace: bool,
) -> Result<Vec<PathBuf>, RunError> {
    fs::create_dir_all(out_dir).map_err(|source| RunError::Write {
        path: out_dir.to_path_buf(),
        source,
    })?;

    let mut files = Vec::new();

    let mut csv = Vec::new();
    write_timeline(&mut csv, timeline).expect("in-memory write cannot fail");
    files.push(write_file(out_dir, TIMELINE_FILE, &csv)?);

    files.push(write_file(out_dir, REPORT_FILE, report_to_json(report).as_bytes())?);

    if !timeline.is_empty() {
        let acr: Vec<f64> = timeline.iter().map(|e| e.acr).collect();
        let phases: Vec<Phase> = timeline.iter().map(|e| e.phase).collect();
        let svg = render_plot(&acr, &phases, threshold).expect("non-empty series");
        files.push(write_file(out_dir, PLOT_FILE, svg.as_bytes())?);
    }

    if trace {
        let events: Vec<IterationEvent> = timeline.iter().map(|e| e.event).collect();
        let mut jsonl = Vec::new();
        write_trace(&mut jsonl, &events).expect("in-memory write cannot fail");
        files.push(write_file(out_dir, TRACE_FILE, &jsonl)?);
    }

    Ok(files)
}

/// Runs the simulator and writes timeline, report, plot and the exported
/// event trace into `out_dir`.
pub fn simulate_to_dir(config: &ScenarioConfig, out_dir: &Path) -> Result<RunSummary, RunError> {
    let run = run_scenario(config).map_err(|e| RunError::Invalid(e.to_string()))?;
    let files = write_outputs(
        out_dir,
        &run.timeline,
        &run.report,
        run.report.acr_threshold,
        true,
    )?;
    Ok(RunSummary {
        phases: phase_runs(&run.timeline),
        report: run.report,
        anomalies: run.anomalies,
        files,
    })
}

/// Feeds pre-recorded events through the monitor and writes timeline,
/// report and plot into `out_dir`. The ACR series and phase labels are
/// always recomputed here; files never carry authority over the monitor.
pub fn monitor_to_dir(
    events: &[IterationEvent],
    config: MonitorConfig,
    out_dir: &Path,
) -> Result<RunSummary, RunError> {
    let mut monitor =
        ResilienceMonitor::new(config).map_err(|e| RunError::Invalid(e.to_string()))?;
    for event in events {
        monitor
            .observe(*event)
            .map_err(|e| RunError::Invalid(e.to_string()))?;
    }
    let report = monitor.report();
    let timeline: Vec<TimelineEntry> = monitor
        .events()
        .iter()
        .zip(monitor.acr_series())
        .zip(monitor.phase_history())
        .map(|((&event, &acr), &phase)| TimelineEntry { event, acr, phase })
        .collect();
    let files = write_outputs(out_dir, &timeline, &report, report.acr_threshold, false)?;
    Ok(RunSummary {
        phases: phase_runs(&timeline),
        report,
        anomalies: monitor.anomalies().to_vec(),
        files,
    })
}
