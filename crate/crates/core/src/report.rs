//! Outcome classification and selection of the values to show.

use crate::differ::{StateDiffResult, StateValue};

/// How a differencing run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// At least one unique relevant state value on either side.
    AugmentedDiff,
    /// Some program state is unique, but no state value is.
    InvisibleDiff,
    NoDiffDetected,
    MemoryFailure,
    TimeLimit,
}

impl Outcome {
    pub const ALL: [Outcome; 5] = [
        Outcome::AugmentedDiff,
        Outcome::InvisibleDiff,
        Outcome::NoDiffDetected,
        Outcome::MemoryFailure,
        Outcome::TimeLimit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::AugmentedDiff => "augmented-diff",
            Outcome::InvisibleDiff => "invisible-diff",
            Outcome::NoDiffDetected => "no-diff-detected",
            Outcome::MemoryFailure => "memory-failure",
            Outcome::TimeLimit => "time-limit",
        }
    }
}

impl core::fmt::Display for Outcome {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Resource exhaustion reported by the orchestrator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailureSignal {
    Memory,
    Timeout,
}

pub fn classify(result: &StateDiffResult, failure: Option<FailureSignal>) -> Outcome {
    match failure {
        Some(FailureSignal::Memory) => Outcome::MemoryFailure,
        Some(FailureSignal::Timeout) => Outcome::TimeLimit,
        None if !result.ousv.is_empty() || !result.pusv.is_empty() => Outcome::AugmentedDiff,
        None if !result.unique_original_states.is_empty() || !result.unique_patched_states.is_empty() => {
            Outcome::InvisibleDiff
        }
        None => Outcome::NoDiffDetected,
    }
}

/// The earliest captured unique value of each version.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FirstUnique {
    pub original: Option<StateValue>,
    /// Line in original coordinates, like every state value.
    pub patched: Option<StateValue>,
}

impl FirstUnique {
    pub fn is_empty(&self) -> bool {
        self.original.is_none() && self.patched.is_none()
    }
}

pub fn first_unique(result: &StateDiffResult) -> FirstUnique {
    FirstUnique {
        original: result.ousv.first().cloned(),
        patched: result.pusv.first().cloned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::ProgramState;
    use alloc::vec;

    fn some_state() -> ProgramState {
        ProgramState {
            file: "f".into(),
            line_number: 1,
            frames: vec![],
        }
    }

    #[test]
    fn classification_table() {
        let mut r = StateDiffResult::default();
        assert_eq!(classify(&r, None), Outcome::NoDiffDetected);
        r.unique_original_states.push(some_state());
        assert_eq!(classify(&r, None), Outcome::InvisibleDiff);
        r.ousv.push(StateValue::new(1, "x", "1"));
        assert_eq!(classify(&r, None), Outcome::AugmentedDiff);
        assert_eq!(classify(&r, Some(FailureSignal::Memory)), Outcome::MemoryFailure);
        assert_eq!(classify(&r, Some(FailureSignal::Timeout)), Outcome::TimeLimit);
    }

    #[test]
    fn first_values() {
        let mut r = StateDiffResult::default();
        assert!(first_unique(&r).is_empty());
        r.ousv = vec![StateValue::new(1135, "j", "27"), StateValue::new(1135, "i", "24")];
        r.pusv = vec![StateValue::new(9, "x", "2"), StateValue::new(9, "x", "3")];
        let f = first_unique(&r);
        assert_eq!(f.original, Some(StateValue::new(1135, "j", "27")));
        assert_eq!(f.patched, Some(StateValue::new(9, "x", "2")));
    }
}
