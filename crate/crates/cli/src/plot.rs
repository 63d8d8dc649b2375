//! Deterministic SVG rendering of a monitored run: the ACR curve over the
//! iteration axis, the ACR threshold line and one shaded band per phase.
//!
//! The output is a pure function of its inputs (no timestamps, no
//! environment data), so identical runs produce byte-identical files.

use std::fmt::Write as _;

use cais_resilience_core::Phase;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlotError {
    #[error("cannot plot an empty series")]
    EmptySeries,
    #[error("series and phase history lengths differ")]
    LengthMismatch,
}

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 400.0;
const MARGIN_LEFT: f64 = 56.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 24.0;
const MARGIN_BOTTOM: f64 = 48.0;

const PLOT_WIDTH: f64 = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
const PLOT_HEIGHT: f64 = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;

fn band_fill(phase: Phase) -> &'static str {
    match phase {
        Phase::InitialLearning => "#e8eaf6",
        Phase::FirstSteady => "#e0f2e0",
        Phase::FirstDisruptive => "#fde0dc",
        Phase::Recovered => "#fff3cd",
        Phase::SecondDisruptive => "#f8c9c4",
        Phase::SecondSteady => "#cfe8cf",
    }
}

/// Renders a standalone SVG document.
///
/// `threshold` draws a dashed horizontal line when present. The phase
/// history must be as long as the ACR series; bands cover contiguous runs
/// of equal labels.
pub fn render_plot(
    acr: &[f64],
    phases: &[Phase],
    threshold: Option<f64>,
) -> Result<String, PlotError> {
    if acr.is_empty() {
        return Err(PlotError::EmptySeries);
    }
    if acr.len() != phases.len() {
        return Err(PlotError::LengthMismatch);
    }

    let n = acr.len();
    let x = |i: usize| -> f64 {
        if n == 1 {
            MARGIN_LEFT + PLOT_WIDTH / 2.0
        } else {
            MARGIN_LEFT + PLOT_WIDTH * i as f64 / (n - 1) as f64
        }
    };
    let y = |v: f64| -> f64 { MARGIN_TOP + PLOT_HEIGHT * (1.0 - v) };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"#
    );

    // Phase bands over contiguous label runs, each with a small caption.
    let mut start = 0;
    for i in 1..=n {
        if i == n || phases[i] != phases[start] {
            let phase = phases[start];
            let left = if start == 0 {
                MARGIN_LEFT
            } else {
                x(start) - PLOT_WIDTH / (2 * (n - 1).max(1)) as f64
            };
            let right = if i == n {
                MARGIN_LEFT + PLOT_WIDTH
            } else {
                x(i - 1) + PLOT_WIDTH / (2 * (n - 1).max(1)) as f64
            };
            let _ = writeln!(
                svg,
                r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
                left,
                MARGIN_TOP,
                right - left,
                PLOT_HEIGHT,
                band_fill(phase)
            );
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="10" fill="#555555">{}</text>"#,
                left + 3.0,
                MARGIN_TOP + 11.0,
                phase
            );
            start = i;
        }
    }

    // Axes and value-axis ticks.
    let _ = writeln!(
        svg,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#333333" stroke-width="1"/>"#,
        MARGIN_LEFT,
        MARGIN_TOP,
        MARGIN_LEFT,
        MARGIN_TOP + PLOT_HEIGHT
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#333333" stroke-width="1"/>"#,
        MARGIN_LEFT,
        MARGIN_TOP + PLOT_HEIGHT,
        MARGIN_LEFT + PLOT_WIDTH,
        MARGIN_TOP + PLOT_HEIGHT
    );
    for tick in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let ty = y(tick);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{:.2}" y2="{ty:.2}" stroke="#333333" stroke-width="1"/>"#,
            MARGIN_LEFT - 4.0,
            MARGIN_LEFT
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11" fill="#333333" text-anchor="end">{tick:.2}</text>"#,
            MARGIN_LEFT - 8.0,
            ty + 4.0
        );
    }
    for &i in [0, n / 4, n / 2, 3 * n / 4, n - 1].iter() {
        let tx = x(i);
        let _ = writeln!(
            svg,
            r#"<line x1="{tx:.2}" y1="{:.2}" x2="{tx:.2}" y2="{:.2}" stroke="#333333" stroke-width="1"/>"#,
            MARGIN_TOP + PLOT_HEIGHT,
            MARGIN_TOP + PLOT_HEIGHT + 4.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{tx:.2}" y="{:.2}" font-family="monospace" font-size="11" fill="#333333" text-anchor="middle">{i}</text>"#,
            MARGIN_TOP + PLOT_HEIGHT + 18.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11" fill="#333333" text-anchor="middle">iteration</text>"#,
        MARGIN_LEFT + PLOT_WIDTH / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="14" y="{:.2}" font-family="monospace" font-size="11" fill="#333333" transform="rotate(-90 14 {:.2})" text-anchor="middle">ACR</text>"#,
        MARGIN_TOP + PLOT_HEIGHT / 2.0,
        MARGIN_TOP + PLOT_HEIGHT / 2.0
    );

    // Threshold line.
    if let Some(t) = threshold {
        let ty = y(t);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{:.2}" y2="{ty:.2}" stroke="#c62828" stroke-width="1" stroke-dasharray="6 3"/>"#,
            MARGIN_LEFT,
            MARGIN_LEFT + PLOT_WIDTH
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="10" fill="#c62828" text-anchor="end">threshold {t:.2}</text>"#,
            MARGIN_LEFT + PLOT_WIDTH - 4.0,
            ty - 4.0
        );
    }

    // The ACR polyline.
    let mut points = String::new();
    for (i, &v) in acr.iter().enumerate() {
        if i > 0 {
            points.push(' ');
        }
        let _ = write!(points, "{:.2},{:.2}", x(i), y(v));
    }
    let _ = writeln!(
        svg,
        r#"<polyline points="{points}" fill="none" stroke="#1a56a0" stroke-width="1.5"/>"#
    );

    svg.push_str("</svg>\n");
    Ok(svg)
}
