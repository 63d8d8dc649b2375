//! Synthetic color sensor: class cycling, lighting model and noise.

use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::scenario::ScenarioConfig;

/// The three object classes, presented in a fixed rotation so no class is
/// trained more than the others.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ObjectClass {
    Box1,
    Box2,
    Box3,
}

impl ObjectClass {
    pub const ALL: [ObjectClass; 3] = [ObjectClass::Box1, ObjectClass::Box2, ObjectClass::Box3];

    pub fn index(self) -> usize {
        match self {
            ObjectClass::Box1 => 0,
            ObjectClass::Box2 => 1,
            ObjectClass::Box3 => 2,
        }
    }

    pub fn from_index(i: usize) -> ObjectClass {
        ObjectClass::ALL[i % 3]
    }
}

/// One object as the sensor observes it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectSample {
    pub true_class: ObjectClass,
    /// RGB features, clipped channel-wise to `[0, 1]`.
    pub observed_features: [f64; 3],
}

/// Draws the object presented at `iteration`.
///
/// Classes cycle Box1, Box2, Box3. Under normal lighting the observed
/// features are the class color plus per-channel Gaussian noise. While the
/// lights are off (`disrupt_at <= iteration < fix_at`) the camera loses all
/// chroma: every class collapses to a residual gray level, the lights-off
/// gain times the class albedo, so classes remain distinguishable only by
/// brightness.
pub fn next_object<R: Rng + ?Sized>(
    iteration: usize,
    config: &ScenarioConfig,
    rng: &mut R,
) -> ObjectSample {
    let true_class = ObjectClass::from_index(iteration % 3);
    let dark = config.disrupt_at <= iteration && iteration < config.fix_at;
    let mean = if dark {
        let level = config.lights_off_gain * config.dark_albedos[true_class.index()];
        [level; 3]
    } else {
        config.class_means[true_class.index()]
    };

    let noise = Normal::new(0.0, config.sensor_noise_sigma)
        .expect("noise sigma validated as finite and non-negative");
    let mut observed_features = [0.0; 3];
    for c in 0..3 {
        observed_features[c] = (mean[c] + noise.sample(rng)).clamp(0.0, 1.0);
    }

    ObjectSample {
        true_class,
        observed_features,
    }
}
