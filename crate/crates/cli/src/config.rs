//! TOML configuration file with `[scenario]` and `[monitor]` sections.
//!
//! Every key is optional; absent keys take the built-in defaults. Values
//! from the file are in turn overridden by command-line flags.

use std::path::Path;

use cais_resilience_core::sim::ScenarioConfig;
use cais_resilience_core::{DegradationTrigger, MonitorConfig, RecoveryComparison};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse config file: {0}")]
    Parse(#[from] toml::de::Error),
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioSection {
    pub num_iterations: Option<usize>,
    pub class_means: Option<[[f64; 3]; 3]>,
    pub sensor_noise_sigma: Option<f64>,
    pub lights_off_gain: Option<f64>,
    pub dark_albedos: Option<[f64; 3]>,
    pub disrupt_at: Option<usize>,
    pub fix_at: Option<usize>,
    pub softmax_temperature: Option<f64>,
    pub ema_rate: Option<f64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MonitorSection {
    pub window_size: Option<usize>,
    pub k_threshold: Option<f64>,
    pub degradation_trigger: Option<DegradationTrigger>,
    pub recovery_comparison: Option<RecoveryComparison>,
}

impl MonitorSection {
    pub fn apply(self, base: MonitorConfig) -> MonitorConfig {
        MonitorConfig {
            window_size: self.window_size.unwrap_or(base.window_size),
            k_threshold: self.k_threshold.unwrap_or(base.k_threshold),
            degradation_trigger: self.degradation_trigger.unwrap_or(base.degradation_trigger),
            recovery_comparison: self
                .recovery_comparison
                .unwrap_or(base.recovery_comparison),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AppConfig {
    pub scenario: ScenarioSection,
    pub monitor: MonitorSection,
}

impl AppConfig {
    pub fn load(path: &Path) -> Result<AppConfig, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        Ok(toml::from_str(&text)?)
    }

    /// Builds the scenario configuration: defaults, overridden by the file.
    /// The monitor section applies on top of the simulator's monitor
    /// defaults.
    pub fn scenario_config(&self) -> ScenarioConfig {
        let base = ScenarioConfig::default();
        let s = &self.scenario;
        ScenarioConfig {
            num_iterations: s.num_iterations.unwrap_or(base.num_iterations),
            class_means: s.class_means.unwrap_or(base.class_means),
            sensor_noise_sigma: s.sensor_noise_sigma.unwrap_or(base.sensor_noise_sigma),
            lights_off_gain: s.lights_off_gain.unwrap_or(base.lights_off_gain),
            dark_albedos: s.dark_albedos.unwrap_or(base.dark_albedos),
            disrupt_at: s.disrupt_at.unwrap_or(base.disrupt_at),
            fix_at: s.fix_at.unwrap_or(base.fix_at),
            softmax_temperature: s.softmax_temperature.unwrap_or(base.softmax_temperature),
            ema_rate: s.ema_rate.unwrap_or(base.ema_rate),
            seed: s.seed.unwrap_or(base.seed),
            monitor: self.monitor.apply(base.monitor),
        }
    }

    /// Monitor configuration for external traces: library defaults,
    /// overridden by the file.
    pub fn monitor_config(&self) -> MonitorConfig {
        self.monitor.apply(MonitorConfig::default())
    }
}
