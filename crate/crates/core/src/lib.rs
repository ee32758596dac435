//! Core of the runtime-diff engine.
//!
//! Given two versions of a source file and the execution traces captured while
//! a covering test ran against each of them, this crate computes:
//!
//! - the line diff between the versions and the *matched lines* (unchanged
//!   lines inside a changed function) where breakpoints belong ([`diff`],
//!   [`scope`], [`matched`]);
//! - the state values that only occur in one of the two executions, and the
//!   program states unique to each side ([`differ`]);
//! - an outcome classification and an HTML augmented diff carrying the first
//!   unique value of each version ([`report`], [`render`]).
//!
//! The crate is `no_std` and only needs `alloc`. Reading files, parsing the
//! trace wire format and driving collectors live in the `rundiff` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod diff;
pub mod differ;
mod error;
pub mod hash;
pub mod lex;
pub mod matched;
pub mod render;
pub mod report;
pub mod scope;
pub mod trace;

pub use diff::{myers_diff, LineDiff, SourceFile};
pub use differ::{
    diff_program_states, extract_svs, get_state_values, get_unique_states, run_state_differencing, StateDiffResult,
    StateValue,
};
pub use error::{DiffError, ScopeError};
pub use lex::{relevant_vars, Lexicon, RelevantVarsIndex};
pub use matched::{matched_lines, MatchedLines};
pub use render::{annotation_text, render_augmented_diff, RenderError, RenderOptions, Side};
pub use report::{classify, first_unique, FailureSignal, FirstUnique, Outcome};
pub use scope::{detect_scopes, Scope, ScopeKind, ScopeStrategy};
pub use trace::{
    canonical_value_string, ExecutionTrace, Payload, Primitive, ProgramState, RuntimeValue, StackFrameContext,
    TraceMetadata, ValueKind, VersionTag,
};
