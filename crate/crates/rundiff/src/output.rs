//! The two textual outputs of a comparison.
//!
//! `runtime-diff.json` holds the outcome, the unique relevant state values
//! and the unique program states of both versions. `traces.json` holds both
//! full traces. Both use the trace wire style and are byte-deterministic.

use rundiff_core::{ExecutionTrace, Outcome, ProgramState, StateDiffResult, StateValue};

use crate::wire::{write_state, write_trace, JsonWriter};

pub const RUNTIME_DIFF_FILE: &str = "runtime-diff.json";
pub const TRACES_FILE: &str = "traces.json";
pub const HTML_FILE: &str = "augmented-diff.html";

/// Document listing everything unique to either version.
pub fn unique_document(result: &StateDiffResult, outcome: Option<Outcome>) -> String {
    let mut w = JsonWriter::default();
    w.begin_object();
    if let Some(outcome) = outcome {
        w.key("outcome");
        w.string_literal(outcome.as_str());
    }
    w.key("uniqueStateValues");
    w.begin_object();
    w.key("original");
    write_state_values(&mut w, &result.ousv);
    w.key("patched");
    write_state_values(&mut w, &result.pusv);
    w.end_object();
    w.key("uniqueProgramStates");
    w.begin_object();
    w.key("original");
    write_states(&mut w, &result.unique_original_states);
    w.key("patched");
    write_states(&mut w, &result.unique_patched_states);
    w.end_object();
    w.end_object();
    w.finish()
}

/// Document holding both traces under `original` and `patched`.
pub fn traces_document(original: &ExecutionTrace, patched: &ExecutionTrace) -> String {
    let mut w = JsonWriter::default();
    w.begin_object();
    w.key("original");
    write_trace(&mut w, original);
    w.key("patched");
    write_trace(&mut w, patched);
    w.end_object();
    w.finish()
}

/// Both textual outputs, in file order.
pub fn emit_textual_output(
    result: &StateDiffResult,
    outcome: Option<Outcome>,
    original: &ExecutionTrace,
    patched: &ExecutionTrace,
) -> (String, String) {
    (unique_document(result, outcome), traces_document(original, patched))
}

fn write_state_values(w: &mut JsonWriter, svs: &[StateValue]) {
    w.begin_array();
    for sv in svs {
        w.element();
        w.begin_object();
        w.key("line");
        w.uint(sv.line.into());
        w.key("path");
        w.string_literal(&sv.path);
        w.key("value");
        w.string_literal(&sv.value);
        w.end_object();
    }
    w.end_array();
}

fn write_states(w: &mut JsonWriter, states: &[ProgramState]) {
    w.begin_array();
    for s in states {
        w.element();
        write_state(w, s);
    }
    w.end_array();
}
