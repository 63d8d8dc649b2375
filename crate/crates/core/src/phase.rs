use core::fmt;

/// Performance phases of a monitored run, in their admissible order.
///
/// A stream can only move forward through this sequence:
/// `InitialLearning → FirstSteady → FirstDisruptive → Recovered →
/// SecondDisruptive → SecondSteady`. The second disruptive state is entered
/// only at or after a fix event (the removal of the disruption cause).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Phase {
    InitialLearning,
    FirstSteady,
    FirstDisruptive,
    Recovered,
    SecondDisruptive,
    SecondSteady,
}

impl Phase {
    pub const ALL: [Phase; 6] = [
        Phase::InitialLearning,
        Phase::FirstSteady,
        Phase::FirstDisruptive,
        Phase::Recovered,
        Phase::SecondDisruptive,
        Phase::SecondSteady,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Phase::InitialLearning => "initial_learning",
            Phase::FirstSteady => "first_steady",
            Phase::FirstDisruptive => "first_disruptive",
            Phase::Recovered => "recovered",
            Phase::SecondDisruptive => "second_disruptive",
            Phase::SecondSteady => "second_steady",
        }
    }

    pub fn parse(s: &str) -> Option<Phase> {
        Phase::ALL.into_iter().find(|p| p.as_str() == s)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
