//! Nearest-prototype classifier with a squared-distance softmax confidence.

use num_traits::Float;

use super::sensor::ObjectClass;

/// Number of object classes in the scenario.
pub const NUM_CLASSES: usize = 3;

/// Score assigned to a class that has never been observed. This is the
/// distance-zero ceiling of the similarity kernel, which keeps the
/// probability vector near uniform until every class has been seen.
const UNSEEN_SCORE: f64 = 1.0;

/// Outcome of scoring one feature vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prediction {
    pub class: ObjectClass,
    /// Confidence level: the highest probability among observed classes, or
    /// zero while the model has no knowledge at all.
    pub epsilon: f64,
    /// Normalized class probabilities; they sum to one.
    pub probabilities: [f64; NUM_CLASSES],
}

/// Online classifier that keeps one exponentially-averaged prototype per
/// class. A class without observations has no prototype.
#[derive(Debug, Clone, Default)]
pub struct IncrementalClassifier {
    prototypes: [Option<[f64; 3]>; NUM_CLASSES],
    counts: [u64; NUM_CLASSES],
}

fn squared_distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    let mut sum = 0.0;
    for c in 0..3 {
        let d = a[c] - b[c];
        sum += d * d;
    }
    sum
}

impl IncrementalClassifier {
    pub fn new() -> Self {
        IncrementalClassifier::default()
    }

    pub fn prototype(&self, class: ObjectClass) -> Option<[f64; 3]> {
        self.prototypes[class.index()]
    }

    pub fn count(&self, class: ObjectClass) -> u64 {
        self.counts[class.index()]
    }

    /// Scores a feature vector against all prototypes.
    ///
    /// Observed classes score `exp(-d^2 / temperature)`; unseen classes take
    /// the uninformative ceiling score. The prediction is the most probable
    /// *observed* class (ties broken by the lowest class index): the model
    /// cannot name a class it has never been shown. Before any class has
    /// been observed the confidence is zero and the prediction falls back to
    /// the first class.
    pub fn predict(&self, features: [f64; 3], temperature: f64) -> Prediction {
        let mut scores = [0.0; NUM_CLASSES];
        for (c, slot) in self.prototypes.iter().enumerate() {
            scores[c] = match slot {
                Some(prototype) => Float::exp(-squared_distance(features, *prototype) / temperature),
                None => UNSEEN_SCORE,
            };
        }
        let total: f64 = scores.iter().sum();
        let probabilities = scores.map(|s| s / total);

        let mut best: Option<(usize, f64)> = None;
        for (c, slot) in self.prototypes.iter().enumerate() {
            if slot.is_some() && best.is_none_or(|(_, p)| probabilities[c] > p) {
                best = Some((c, probabilities[c]));
            }
        }
        match best {
            Some((c, epsilon)) => Prediction {
                class: ObjectClass::from_index(c),
                epsilon,
                probabilities,
            },
            None => Prediction {
                class: ObjectClass::from_index(0),
                epsilon: 0.0,
                probabilities,
            },
        }
    }

    /// Absorbs one labelled example.
    ///
    /// The first example of a class becomes its prototype; later examples
    /// move the prototype by `ema_rate` toward the observed features.
    pub fn learn(&mut self, features: [f64; 3], label: ObjectClass, ema_rate: f64) {
        let c = label.index();
        self.prototypes[c] = Some(match self.prototypes[c] {
            None => features,
            Some(p) => {
                let mut updated = [0.0; 3];
                for i in 0..3 {
                    updated[i] = (1.0 - ema_rate) * p[i] + ema_rate * features[i];
                }
                updated
            }
        });
        self.counts[c] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TAU: f64 = 0.05;

    #[test]
    fn cold_start_is_uniform_with_zero_confidence() {
        let clf = IncrementalClassifier::new();
        let p = clf.predict([0.5, 0.5, 0.5], TAU);
        for prob in p.probabilities {
            assert!((prob - 1.0 / 3.0).abs() < 1e-12);
        }
        assert_eq!(p.epsilon, 0.0);
        assert_eq!(p.class, ObjectClass::Box1);
    }

    #[test]
    fn exact_match_against_two_unseen_classes() {
        let mut clf = IncrementalClassifier::new();
        let f = [0.8, 0.2, 0.2];
        clf.learn(f, ObjectClass::Box1, 0.2);
        let p = clf.predict(f, TAU);
        // exp(0) / (exp(0) + 1 + 1)
        assert!((p.epsilon - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(p.class, ObjectClass::Box1);
    }

    #[test]
    fn well_separated_prototypes_give_high_confidence() {
        let means = [[0.8, 0.2, 0.2], [0.2, 0.8, 0.2], [0.2, 0.2, 0.8]];
        let mut clf = IncrementalClassifier::new();
        for (i, &mean) in means.iter().enumerate() {
            clf.learn(mean, ObjectClass::from_index(i), 0.2);
        }
        let p = clf.predict(means[0], TAU);
        assert_eq!(p.class, ObjectClass::Box1);
        // Closed form: 1 / (1 + 2 exp(-0.72 / tau))
        let expected = 1.0 / (1.0 + 2.0 * (-0.72f64 / TAU).exp());
        assert!((p.epsilon - expected).abs() < 1e-12);
        assert!(p.epsilon > 0.99);
    }

    #[test]
    fn probabilities_always_normalize() {
        let mut clf = IncrementalClassifier::new();
        clf.learn([0.1, 0.9, 0.3], ObjectClass::Box2, 0.5);
        let p = clf.predict([0.7, 0.1, 0.4], TAU);
        let sum: f64 = p.probabilities.iter().sum();
        assert!((sum - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ema_step_by_hand() {
        let mut clf = IncrementalClassifier::new();
        clf.learn([0.8, 0.2, 0.2], ObjectClass::Box1, 0.2);
        clf.learn([0.2, 0.05, 0.05], ObjectClass::Box1, 0.2);
        let p = clf.prototype(ObjectClass::Box1).unwrap();
        assert!((p[0] - 0.68).abs() < 1e-12);
        assert!((p[1] - 0.17).abs() < 1e-12);
        assert!((p[2] - 0.17).abs() < 1e-12);
        assert_eq!(clf.count(ObjectClass::Box1), 2);
    }

    #[test]
    fn unit_rate_overwrites_the_prototype() {
        let mut clf = IncrementalClassifier::new();
        clf.learn([0.8, 0.2, 0.2], ObjectClass::Box3, 1.0);
        clf.learn([0.1, 0.2, 0.9], ObjectClass::Box3, 1.0);
        assert_eq!(clf.prototype(ObjectClass::Box3).unwrap(), [0.1, 0.2, 0.9]);
    }

    #[test]
    fn unseen_class_is_never_predicted() {
        let mut clf = IncrementalClassifier::new();
        clf.learn([0.8, 0.2, 0.2], ObjectClass::Box1, 0.2);
        clf.learn([0.2, 0.2, 0.8], ObjectClass::Box3, 0.2);
        // Box2 is unseen and carries the ceiling score, but the prediction
        // must name an observed class.
        let p = clf.predict([0.2, 0.8, 0.2], TAU);
        assert_ne!(p.class, ObjectClass::Box2);
    }
}
