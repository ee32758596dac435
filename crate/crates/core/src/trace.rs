//! Execution trace data model.
//!
//! A trace is the ordered list of program states a collector captured at the
//! breakpoints while one covering test ran against one program version. The
//! JSON wire form lives in the `rundiff` crate; this module only holds the
//! in-memory model and its invariants.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::DiffError;

/// Name carried by values captured from a return statement.
pub const RETURN_NAME: &str = "<return>";

/// Type label of a null leaf. It tells a null reference apart from a value
/// whose content was cut off by the depth limit, which share the same wire
/// shape otherwise.
pub const NULL_TYPE: &str = "null";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValueKind {
    LocalVariable,
    Field,
    ArrayElement,
    Return,
}

impl ValueKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ValueKind::LocalVariable => "LOCAL_VARIABLE",
            ValueKind::Field => "FIELD",
            ValueKind::ArrayElement => "ARRAY_ELEMENT",
            ValueKind::Return => "RETURN",
        }
    }
}

impl core::str::FromStr for ValueKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "LOCAL_VARIABLE" => Ok(ValueKind::LocalVariable),
            "FIELD" => Ok(ValueKind::Field),
            "ARRAY_ELEMENT" => Ok(ValueKind::ArrayElement),
            "RETURN" => Ok(ValueKind::Return),
            _ => Err(()),
        }
    }
}

/// A primitive payload. Text counts as primitive.
#[derive(Clone, Debug, PartialEq)]
pub enum Primitive {
    Null,
    Bool(bool),
    Int(i128),
    Float(f64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Primitive(Primitive),
    Fields(Vec<RuntimeValue>),
    Elements(Vec<RuntimeValue>),
    /// A non-primitive whose content lies beyond the capture depth.
    Truncated,
}

/// One captured variable, field, array element or return value.
#[derive(Clone, Debug, PartialEq)]
pub struct RuntimeValue {
    pub kind: ValueKind,
    pub name: String,
    pub type_name: Option<String>,
    pub payload: Payload,
}

impl RuntimeValue {
    pub fn primitive(kind: ValueKind, name: impl Into<String>, type_name: &str, value: Primitive) -> Self {
        let type_name = if value == Primitive::Null { NULL_TYPE } else { type_name };
        RuntimeValue {
            kind,
            name: name.into(),
            type_name: Some(type_name.into()),
            payload: Payload::Primitive(value),
        }
    }

    pub fn object(kind: ValueKind, name: impl Into<String>, type_name: &str, fields: Vec<RuntimeValue>) -> Self {
        RuntimeValue {
            kind,
            name: name.into(),
            type_name: Some(type_name.into()),
            payload: Payload::Fields(fields),
        }
    }

    /// An array whose elements get named by their decimal index.
    pub fn array(
        kind: ValueKind,
        name: impl Into<String>,
        type_name: &str,
        elements: Vec<Payload>,
        element_type: &str,
    ) -> Self {
        let elements = elements
            .into_iter()
            .enumerate()
            .map(|(i, payload)| RuntimeValue {
                kind: ValueKind::ArrayElement,
                name: i.to_string(),
                type_name: Some(element_type.into()),
                payload,
            })
            .collect();
        RuntimeValue {
            kind,
            name: name.into(),
            type_name: Some(type_name.into()),
            payload: Payload::Elements(elements),
        }
    }

    pub fn truncated(kind: ValueKind, name: impl Into<String>, type_name: &str) -> Self {
        RuntimeValue {
            kind,
            name: name.into(),
            type_name: Some(type_name.into()),
            payload: Payload::Truncated,
        }
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self.payload, Payload::Primitive(_))
    }

    pub fn children(&self) -> &[RuntimeValue] {
        match &self.payload {
            Payload::Fields(c) | Payload::Elements(c) => c,
            _ => &[],
        }
    }

    /// Number of dereference steps below this value: 0 for leaves and
    /// truncated nodes, one more than the deepest child otherwise.
    pub fn nesting_depth(&self) -> u32 {
        match &self.payload {
            Payload::Fields(c) | Payload::Elements(c) => 1 + c.iter().map(Self::nesting_depth).max().unwrap_or(0),
            _ => 0,
        }
    }

    /// The same value as a collector would have captured it at `depth`.
    pub fn truncate_to_depth(&self, depth: u32) -> RuntimeValue {
        let payload = match &self.payload {
            Payload::Fields(_) | Payload::Elements(_) if depth == 0 => Payload::Truncated,
            Payload::Fields(c) => Payload::Fields(c.iter().map(|v| v.truncate_to_depth(depth - 1)).collect()),
            Payload::Elements(c) => Payload::Elements(c.iter().map(|v| v.truncate_to_depth(depth - 1)).collect()),
            other => other.clone(),
        };
        RuntimeValue {
            payload,
            ..self.clone()
        }
    }
}

/// Renders a primitive leaf deterministically. Integers print in decimal,
/// floats in their shortest round-trip form (always with a fraction or
/// exponent), text as a quoted, escaped literal.
pub fn canonical_value_string(v: &RuntimeValue) -> Result<String, DiffError> {
    match &v.payload {
        Payload::Primitive(p) => Ok(canonical_primitive(p)),
        _ => Err(DiffError::NotPrimitive),
    }
}

pub fn canonical_primitive(p: &Primitive) -> String {
    match p {
        Primitive::Null => "null".into(),
        Primitive::Bool(b) => b.to_string(),
        Primitive::Int(i) => i.to_string(),
        Primitive::Float(f) => format!("{f:?}"),
        Primitive::Text(s) => quote(s),
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// One stack frame at a breakpoint hit.
#[derive(Clone, Debug, PartialEq)]
pub struct StackFrameContext {
    /// 1 for the frame holding the breakpoint.
    pub position_from_top: u32,
    /// `qualified.Name:line`
    pub location: String,
    /// `method:line, qualified.Name` entries, innermost first.
    pub stack_trace: Vec<String>,
    pub values: Vec<RuntimeValue>,
}

/// One breakpoint hit.
#[derive(Clone, Debug, PartialEq)]
pub struct ProgramState {
    pub file: String,
    pub line_number: u32,
    pub frames: Vec<StackFrameContext>,
}

impl ProgramState {
    /// The frame whose variables are visible at the breakpoint line.
    pub fn top_frame(&self) -> Option<&StackFrameContext> {
        self.frames.iter().min_by_key(|f| f.position_from_top)
    }

    /// A copy placed at `line`, with the breakpoint frame's location and
    /// innermost stack entry renumbered to match.
    pub fn relocated(&self, line: u32) -> ProgramState {
        let mut state = self.clone();
        let old = self.line_number;
        state.line_number = line;
        if old != line {
            for frame in state.frames.iter_mut().filter(|f| f.position_from_top == 1) {
                if let Some(loc) = replace_line_suffix(&frame.location, old, line) {
                    frame.location = loc;
                }
                if let Some(first) = frame.stack_trace.first_mut() {
                    if let Some(entry) = replace_entry_line(first, old, line) {
                        *first = entry;
                    }
                }
            }
        }
        state
    }
}

/// `Name:12` -> `Name:<new>` when the suffix is `old`.
fn replace_line_suffix(s: &str, old: u32, new: u32) -> Option<String> {
    let (head, num) = s.rsplit_once(':')?;
    (num.parse::<u32>().ok()? == old).then(|| format!("{head}:{new}"))
}

/// `method:12, Name` -> `method:<new>, Name` when the line is `old`.
fn replace_entry_line(s: &str, old: u32, new: u32) -> Option<String> {
    let (frame, rest) = s.split_once(", ").map_or((s, None), |(a, b)| (a, Some(b)));
    let replaced = replace_line_suffix(frame, old, new)?;
    Some(match rest {
        Some(rest) => format!("{replaced}, {rest}"),
        None => replaced,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VersionTag {
    Original,
    Patched,
}

impl VersionTag {
    pub fn as_str(self) -> &'static str {
        match self {
            VersionTag::Original => "original",
            VersionTag::Patched => "patched",
        }
    }
}

impl core::str::FromStr for VersionTag {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "original" => Ok(VersionTag::Original),
            "patched" => Ok(VersionTag::Patched),
            _ => Err(()),
        }
    }
}

/// Envelope pairing a trace with the run that produced it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceMetadata {
    pub version: Option<VersionTag>,
    pub test_id: Option<String>,
    pub depth: Option<u32>,
    pub collector: Option<String>,
    pub max_array_elements: Option<u32>,
    pub max_string_length: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExecutionTrace {
    pub metadata: Option<TraceMetadata>,
    /// States in execution order.
    pub states: Vec<ProgramState>,
}

impl ExecutionTrace {
    pub fn new(metadata: TraceMetadata, states: Vec<ProgramState>) -> Self {
        ExecutionTrace {
            metadata: Some(metadata),
            states,
        }
    }

    pub fn depth(&self) -> Option<u32> {
        self.metadata.as_ref().and_then(|m| m.depth)
    }

    pub fn version(&self) -> Option<VersionTag> {
        self.metadata.as_ref().and_then(|m| m.version)
    }

    pub fn test_id(&self) -> Option<&str> {
        self.metadata.as_ref().and_then(|m| m.test_id.as_deref())
    }
}
