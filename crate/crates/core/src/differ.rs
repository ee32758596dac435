//! Program state differencing.
//!
//! Both traces are flattened into *state values*: `(line, path, value)`
//! triples, one per primitive leaf reachable from a variable that is read on
//! the breakpoint line. Patched lines are mapped to original coordinates
//! through the matched lines, so the two sides compare directly. A state
//! value present on one side only is a *unique relevant state value*.
//!
//! Separately, whole program states are compared through a stable hash to
//! find states unique to either side; hash matches are confirmed on the
//! canonical encoding, so collisions never hide a difference.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::diff::SourceFile;
use crate::error::DiffError;
use crate::hash::{canonical_state_bytes, fnv1a64};
use crate::lex::{Lexicon, RelevantVarsIndex};
use crate::matched::MatchedLines;
use crate::trace::{canonical_primitive, ExecutionTrace, Payload, ProgramState, RuntimeValue, ValueKind};

/// One primitive leaf observed at a line. `line` is always in original
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateValue {
    pub line: u32,
    /// Dot-joined access path from the root variable to the leaf.
    pub path: String,
    /// Canonical rendering of the leaf.
    pub value: String,
}

impl StateValue {
    pub fn new(line: u32, path: impl Into<String>, value: impl Into<String>) -> Self {
        StateValue {
            line,
            path: path.into(),
            value: value.into(),
        }
    }
}

impl core::fmt::Display for StateValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "<{},{},{}>", self.line, self.path, self.value)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct StateDiffResult {
    /// Unique relevant state values of the original trace, in execution order.
    pub ousv: Vec<StateValue>,
    /// Same for the patched trace (lines mapped to original coordinates).
    pub pusv: Vec<StateValue>,
    pub unique_original_states: Vec<ProgramState>,
    pub unique_patched_states: Vec<ProgramState>,
}

/// All state values reachable from `value` at `line`.
///
/// `prefix` is the path of the enclosing value including its trailing dot,
/// empty at the root. Truncated values contribute nothing.
pub fn extract_svs(line: u32, prefix: &str, value: &RuntimeValue) -> Vec<StateValue> {
    let mut out = Vec::new();
    let mut path = String::from(prefix);
    walk(line, &mut path, value, &mut out);
    out
}

fn walk(line: u32, path: &mut String, value: &RuntimeValue, out: &mut Vec<StateValue>) {
    let mark = path.len();
    path.push_str(&value.name);
    match &value.payload {
        Payload::Primitive(p) => out.push(StateValue::new(line, path.clone(), canonical_primitive(p))),
        Payload::Fields(children) | Payload::Elements(children) => {
            path.push('.');
            for child in children {
                walk(line, path, child, out);
            }
        }
        Payload::Truncated => {}
    }
    path.truncate(mark);
}

/// State values of `states` whose root variable is read on the state's line.
///
/// Values captured from a return statement count as read on that line. With
/// `line_map`, the states are taken as patched-version states: relevance is
/// judged on `src` at the patched line and the emitted lines are mapped to
/// original coordinates.
pub fn get_state_values(
    src: &SourceFile,
    states: &[ProgramState],
    line_map: Option<&MatchedLines>,
    lexicon: &Lexicon,
) -> Result<Vec<StateValue>, DiffError> {
    let index = RelevantVarsIndex::build(src, lexicon);
    let mut out = Vec::new();
    for state in states {
        let line = state.line_number;
        if line == 0 || line > src.len() {
            return Err(DiffError::LineOutOfRange { line, len: src.len() });
        }
        let emitted = match line_map {
            Some(map) => map.to_original(line).ok_or(DiffError::UnmappedLine { line })?,
            None => line,
        };
        let Some(frame) = state.top_frame() else { continue };
        for value in &frame.values {
            let relevant = if value.kind == ValueKind::Return {
                index.is_return_line(line)
            } else {
                index.contains(line, &value.name)
            };
            if relevant {
                out.extend(extract_svs(emitted, "", value));
            }
        }
    }
    Ok(out)
}

/// Elements of `left` absent from `right`, in `left` order, each reported
/// once.
pub fn get_unique_states(left: &[StateValue], right: &[StateValue]) -> Vec<StateValue> {
    let right: BTreeSet<&StateValue> = right.iter().collect();
    let mut seen = BTreeSet::new();
    left.iter()
        .filter(|sv| !right.contains(sv) && seen.insert(*sv))
        .cloned()
        .collect()
}

/// Program states unique to each trace, using FNV-1a as the hash.
pub fn diff_program_states(
    original: &ExecutionTrace,
    patched: &ExecutionTrace,
    line_map: &MatchedLines,
) -> Result<(Vec<ProgramState>, Vec<ProgramState>), DiffError> {
    diff_program_states_with(original, patched, line_map, fnv1a64)
}

struct Hashed {
    hash: u64,
    bytes: Vec<u8>,
}

/// Program states unique to each trace, under a caller-chosen hash.
///
/// Each state is encoded canonically (patched states relocated to their
/// original line first), hashed, and indexed by hash. A state whose hash is
/// absent on the other side is unique; a hash hit is confirmed against the
/// other side's states with that hash. Unique states are returned in trace
/// order, repeats reported once.
pub fn diff_program_states_with<H>(
    original: &ExecutionTrace,
    patched: &ExecutionTrace,
    line_map: &MatchedLines,
    hasher: H,
) -> Result<(Vec<ProgramState>, Vec<ProgramState>), DiffError>
where
    H: Fn(&[u8]) -> u64,
{
    let encode = |state: &ProgramState| {
        let bytes = canonical_state_bytes(state);
        Hashed {
            hash: hasher(&bytes),
            bytes,
        }
    };
    let left: Vec<Hashed> = original.states.iter().map(encode).collect();
    let right = patched
        .states
        .iter()
        .map(|s| {
            let line = line_map
                .to_original(s.line_number)
                .ok_or(DiffError::UnmappedLine { line: s.line_number })?;
            Ok(encode(&s.relocated(line)))
        })
        .collect::<Result<Vec<_>, DiffError>>()?;

    let left_unique = unique_side(&left, &right);
    let right_unique = unique_side(&right, &left);
    Ok((
        left_unique.into_iter().map(|i| original.states[i].clone()).collect(),
        right_unique.into_iter().map(|i| patched.states[i].clone()).collect(),
    ))
}

fn index_by_hash(side: &[Hashed]) -> BTreeMap<u64, Vec<usize>> {
    let mut index: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, h) in side.iter().enumerate() {
        index.entry(h.hash).or_default().push(i);
    }
    index
}

fn unique_side(side: &[Hashed], other: &[Hashed]) -> Vec<usize> {
    let other_index = index_by_hash(other);
    let own_index = index_by_hash(side);
    let mut out = Vec::new();
    for (i, h) in side.iter().enumerate() {
        let present = other_index
            .get(&h.hash)
            .is_some_and(|cands| cands.iter().any(|&j| other[j].bytes == h.bytes));
        if present {
            continue;
        }
        // Report each distinct state at its first occurrence only.
        let repeat = own_index[&h.hash]
            .iter()
            .take_while(|&&j| j < i)
            .any(|&j| side[j].bytes == h.bytes);
        if !repeat {
            out.push(i);
        }
    }
    out
}

/// Full differencing of two traces: unique relevant state values per side
/// plus unique program states.
pub fn run_state_differencing(
    original: &ExecutionTrace,
    patched: &ExecutionTrace,
    original_src: &SourceFile,
    patched_src: &SourceFile,
    matched: &MatchedLines,
    lexicon: &Lexicon,
) -> Result<StateDiffResult, DiffError> {
    let osv = get_state_values(original_src, &original.states, None, lexicon)?;
    let psv = get_state_values(patched_src, &patched.states, Some(matched), lexicon)?;
    let ousv = get_unique_states(&osv, &psv);
    let pusv = get_unique_states(&psv, &osv);
    let (unique_original_states, unique_patched_states) = diff_program_states(original, patched, matched)?;
    Ok(StateDiffResult {
        ousv,
        pusv,
        unique_original_states,
        unique_patched_states,
    })
}
