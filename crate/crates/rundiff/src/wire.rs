//! JSON wire format for execution traces.
//!
//! ```json
//! {
//!   "metadata": { "version": "original", "testId": "...", "depth": 1, ... },
//!   "breakpoint": [
//!     {
//!       "file": "foo/BasicMath.java",
//!       "lineNumber": 5,
//!       "stackFrameContexts": [
//!         {
//!           "positionFromTopInStackTrace": 1,
//!           "location": "foo.BasicMath:5",
//!           "stackTrace": ["add:5, foo.BasicMath"],
//!           "runtimeValueCollection": [
//!             { "kind": "LOCAL_VARIABLE", "name": "x", "type": "int",
//!               "value": 23, "fields": null, "arrayElements": null }
//!           ]
//!         }
//!       ]
//!     }
//!   ]
//! }
//! ```
//!
//! A value node has at most one of `value`, `fields` and `arrayElements`
//! non-null. A node with all three null is a null leaf when its type is
//! `"null"` and a depth-truncated object otherwise.
//!
//! Serialization is canonical: keys in the order above, two-space indent,
//! LF line ends and a trailing newline. The metadata object is omitted when
//! the trace has none, and absent metadata fields are omitted.

use std::fmt::Write;

use rundiff_core::trace::NULL_TYPE;
use rundiff_core::{
    ExecutionTrace, Payload, Primitive, ProgramState, RuntimeValue, StackFrameContext, TraceMetadata, ValueKind,
    VersionTag,
};
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    /// `position` is `line:column` for syntax errors and a JSON path such as
    /// `$.breakpoint[0].lineNumber` for schema errors.
    #[error("malformed trace at {position}: {reason}")]
    MalformedTrace { position: String, reason: String },
    #[error("value at {position} nests {found} levels, beyond the declared depth {limit}")]
    DepthViolation { position: String, found: u32, limit: u32 },
}

/// A parsed trace plus the paths of keys the parser did not recognise.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedTrace {
    pub trace: ExecutionTrace,
    pub unknown_keys: Vec<String>,
}

impl ParsedTrace {
    pub fn warning_count(&self) -> usize {
        self.unknown_keys.len()
    }
}

pub fn parse_trace(bytes: &[u8]) -> Result<ParsedTrace, TraceError> {
    let text = std::str::from_utf8(bytes).map_err(|e| TraceError::MalformedTrace {
        position: format!("byte {}", e.valid_up_to()),
        reason: "input is not UTF-8".into(),
    })?;
    let value: Value = serde_json::from_str(text).map_err(|e| TraceError::MalformedTrace {
        position: format!("{}:{}", e.line(), e.column()),
        reason: e.to_string(),
    })?;
    parse_trace_value(&value)
}

/// Validates an already-parsed JSON document as a trace.
pub fn parse_trace_value(value: &Value) -> Result<ParsedTrace, TraceError> {
    let mut p = Parser { unknown: Vec::new() };
    let trace = p.trace(value, "$")?;
    Ok(ParsedTrace {
        trace,
        unknown_keys: p.unknown,
    })
}

fn malformed<T>(position: &str, reason: impl Into<String>) -> Result<T, TraceError> {
    Err(TraceError::MalformedTrace {
        position: position.to_string(),
        reason: reason.into(),
    })
}

struct Parser {
    unknown: Vec<String>,
}

impl Parser {
    fn object<'a>(&mut self, v: &'a Value, at: &str, known: &[&str]) -> Result<&'a Map<String, Value>, TraceError> {
        let Value::Object(map) = v else {
            return malformed(at, "expected an object");
        };
        for key in map.keys() {
            if !known.contains(&key.as_str()) {
                self.unknown.push(format!("{at}.{key}"));
            }
        }
        Ok(map)
    }

    fn trace(&mut self, v: &Value, at: &str) -> Result<ExecutionTrace, TraceError> {
        let map = self.object(v, at, &["metadata", "breakpoint"])?;
        let metadata = match map.get("metadata") {
            None | Some(Value::Null) => None,
            Some(m) => Some(self.metadata(m, &format!("{at}.metadata"))?),
        };
        let at_bp = format!("{at}.breakpoint");
        let Some(Value::Array(items)) = map.get("breakpoint") else {
            return malformed(&at_bp, "expected an array");
        };
        let states = items
            .iter()
            .enumerate()
            .map(|(i, s)| self.state(s, &format!("{at_bp}[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let trace = ExecutionTrace { metadata, states };
        check_depth(&trace, &at_bp)?;
        Ok(trace)
    }

    fn metadata(&mut self, v: &Value, at: &str) -> Result<TraceMetadata, TraceError> {
        let map = self.object(
            v,
            at,
            &[
                "version",
                "testId",
                "depth",
                "collector",
                "maxArrayElements",
                "maxStringLength",
            ],
        )?;
        let version = match opt_str(map, "version", at)? {
            None => None,
            Some(s) => Some(
                s.parse::<VersionTag>()
                    .or_else(|_| malformed(&format!("{at}.version"), "expected \"original\" or \"patched\""))?,
            ),
        };
        Ok(TraceMetadata {
            version,
            test_id: opt_str(map, "testId", at)?.map(str::to_string),
            depth: opt_u32(map, "depth", at)?,
            collector: opt_str(map, "collector", at)?.map(str::to_string),
            max_array_elements: opt_u32(map, "maxArrayElements", at)?,
            max_string_length: opt_u32(map, "maxStringLength", at)?,
        })
    }

    fn state(&mut self, v: &Value, at: &str) -> Result<ProgramState, TraceError> {
        let map = self.object(v, at, &["file", "lineNumber", "stackFrameContexts"])?;
        let file = req_str(map, "file", at)?.to_string();
        let line_number = req_u32(map, "lineNumber", at)?;
        if line_number == 0 {
            return malformed(&format!("{at}.lineNumber"), "line numbers start at 1");
        }
        let frames_at = format!("{at}.stackFrameContexts");
        let frames = req_array(map, "stackFrameContexts", at)?;
        if frames.is_empty() {
            return malformed(&frames_at, "a program state needs at least one frame");
        }
        let frames = frames
            .iter()
            .enumerate()
            .map(|(i, f)| self.frame(f, &format!("{frames_at}[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ProgramState {
            file,
            line_number,
            frames,
        })
    }

    fn frame(&mut self, v: &Value, at: &str) -> Result<StackFrameContext, TraceError> {
        let map = self.object(
            v,
            at,
            &[
                "positionFromTopInStackTrace",
                "location",
                "stackTrace",
                "runtimeValueCollection",
            ],
        )?;
        let position_from_top = req_u32(map, "positionFromTopInStackTrace", at)?;
        if position_from_top == 0 {
            return malformed(&format!("{at}.positionFromTopInStackTrace"), "positions start at 1");
        }
        let location = req_str(map, "location", at)?.to_string();
        let st_at = format!("{at}.stackTrace");
        let stack_trace = req_array(map, "stackTrace", at)?
            .iter()
            .enumerate()
            .map(|(i, e)| match e {
                Value::String(s) => Ok(s.clone()),
                _ => malformed(&format!("{st_at}[{i}]"), "expected a string"),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if stack_trace.is_empty() {
            return malformed(&st_at, "stack trace is empty");
        }
        let rv_at = format!("{at}.runtimeValueCollection");
        let values = self.values(req_array(map, "runtimeValueCollection", at)?, &rv_at)?;
        Ok(StackFrameContext {
            position_from_top,
            location,
            stack_trace,
            values,
        })
    }

    fn values(&mut self, items: &[Value], at: &str) -> Result<Vec<RuntimeValue>, TraceError> {
        items
            .iter()
            .enumerate()
            .map(|(i, v)| self.value(v, &format!("{at}[{i}]")))
            .collect()
    }

    fn value(&mut self, v: &Value, at: &str) -> Result<RuntimeValue, TraceError> {
        let map = self.object(v, at, &["kind", "name", "type", "value", "fields", "arrayElements"])?;
        let kind_text = req_str(map, "kind", at)?;
        let kind = kind_text
            .parse::<ValueKind>()
            .or_else(|_| malformed(&format!("{at}.kind"), format!("unknown kind {kind_text:?}")))?;
        let name = req_str(map, "name", at)?.to_string();
        let type_name = opt_str(map, "type", at)?.map(str::to_string);

        let present = |key: &str| map.get(key).is_some_and(|v| !v.is_null());
        let shapes = ["value", "fields", "arrayElements"]
            .iter()
            .filter(|k| present(k))
            .count();
        if shapes > 1 {
            return malformed(at, "at most one of value, fields and arrayElements may be non-null");
        }
        let payload = if present("value") {
            Payload::Primitive(primitive(&map["value"], &format!("{at}.value"))?)
        } else if present("fields") {
            let f_at = format!("{at}.fields");
            let Value::Array(items) = &map["fields"] else {
                return malformed(&f_at, "expected an array or null");
            };
            Payload::Fields(self.values(items, &f_at)?)
        } else if present("arrayElements") {
            let a_at = format!("{at}.arrayElements");
            let Value::Array(items) = &map["arrayElements"] else {
                return malformed(&a_at, "expected an array or null");
            };
            Payload::Elements(self.values(items, &a_at)?)
        } else if type_name.as_deref() == Some(NULL_TYPE) {
            Payload::Primitive(Primitive::Null)
        } else {
            Payload::Truncated
        };
        Ok(RuntimeValue {
            kind,
            name,
            type_name,
            payload,
        })
    }
}

fn primitive(v: &Value, at: &str) -> Result<Primitive, TraceError> {
    match v {
        Value::Bool(b) => Ok(Primitive::Bool(*b)),
        Value::String(s) => Ok(Primitive::Text(s.clone())),
        Value::Number(n) => number(n, at),
        _ => malformed(at, "a primitive value must be a number, boolean or string"),
    }
}

/// Integers keep every digit; anything with a fraction or exponent is a
/// float.
fn number(n: &Number, at: &str) -> Result<Primitive, TraceError> {
    let text = n.to_string();
    if text.contains(['.', 'e', 'E']) {
        match text.parse::<f64>() {
            Ok(f) if f.is_finite() => Ok(Primitive::Float(f)),
            _ => malformed(at, format!("number {text} is out of range")),
        }
    } else {
        text.parse::<i128>()
            .map(Primitive::Int)
            .or_else(|_| malformed(at, format!("integer {text} is out of range")))
    }
}

fn field<'a>(map: &'a Map<String, Value>, key: &str) -> Option<&'a Value> {
    map.get(key).filter(|v| !v.is_null())
}

fn opt_str<'a>(map: &'a Map<String, Value>, key: &str, at: &str) -> Result<Option<&'a str>, TraceError> {
    match field(map, key) {
        None => Ok(None),
        Some(Value::String(s)) => Ok(Some(s)),
        Some(_) => malformed(&format!("{at}.{key}"), "expected a string"),
    }
}

fn req_str<'a>(map: &'a Map<String, Value>, key: &str, at: &str) -> Result<&'a str, TraceError> {
    opt_str(map, key, at)?.map_or_else(|| malformed(&format!("{at}.{key}"), "missing string"), Ok)
}

fn opt_u32(map: &Map<String, Value>, key: &str, at: &str) -> Result<Option<u32>, TraceError> {
    match field(map, key) {
        None => Ok(None),
        Some(Value::Number(n)) => match n.to_string().parse::<u32>() {
            Ok(x) => Ok(Some(x)),
            Err(_) => malformed(&format!("{at}.{key}"), "expected a non-negative integer"),
        },
        Some(_) => malformed(&format!("{at}.{key}"), "expected a non-negative integer"),
    }
}

fn req_u32(map: &Map<String, Value>, key: &str, at: &str) -> Result<u32, TraceError> {
    opt_u32(map, key, at)?.map_or_else(|| malformed(&format!("{at}.{key}"), "missing integer"), Ok)
}

fn req_array<'a>(map: &'a Map<String, Value>, key: &str, at: &str) -> Result<&'a [Value], TraceError> {
    match field(map, key) {
        Some(Value::Array(items)) => Ok(items),
        _ => malformed(&format!("{at}.{key}"), "expected an array"),
    }
}

fn check_depth(trace: &ExecutionTrace, at: &str) -> Result<(), TraceError> {
    let Some(limit) = trace.depth() else { return Ok(()) };
    for (i, state) in trace.states.iter().enumerate() {
        for (j, frame) in state.frames.iter().enumerate() {
            for (k, value) in frame.values.iter().enumerate() {
                let found = value.nesting_depth();
                if found > limit {
                    return Err(TraceError::DepthViolation {
                        position: format!("{at}[{i}].stackFrameContexts[{j}].runtimeValueCollection[{k}]"),
                        found,
                        limit,
                    });
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Serialization

/// Canonical document for `trace`.
pub fn serialize_trace(trace: &ExecutionTrace) -> String {
    let mut w = JsonWriter::default();
    write_trace(&mut w, trace);
    w.finish()
}

/// A minimal pretty printer that emits keys in call order.
#[derive(Default)]
pub(crate) struct JsonWriter {
    out: String,
    indent: usize,
    /// Whether the current container already holds an item.
    has_items: Vec<bool>,
}

impl JsonWriter {
    pub(crate) fn finish(mut self) -> String {
        self.out.push('\n');
        self.out
    }

    fn newline(&mut self) {
        self.out.push('\n');
        for _ in 0..self.indent {
            self.out.push_str("  ");
        }
    }

    fn item(&mut self) {
        if let Some(has) = self.has_items.last_mut() {
            if *has {
                self.out.push(',');
            }
            *has = true;
            self.newline();
        }
    }

    pub(crate) fn key(&mut self, key: &str) {
        self.item();
        self.string_literal(key);
        self.out.push_str(": ");
    }

    fn open(&mut self, bracket: char) {
        self.out.push(bracket);
        self.indent += 1;
        self.has_items.push(false);
    }

    fn close(&mut self, bracket: char) {
        self.indent -= 1;
        if self.has_items.pop() == Some(true) {
            self.newline();
        }
        self.out.push(bracket);
    }

    pub(crate) fn begin_object(&mut self) {
        self.open('{');
    }

    pub(crate) fn end_object(&mut self) {
        self.close('}');
    }

    pub(crate) fn begin_array(&mut self) {
        self.open('[');
    }

    pub(crate) fn end_array(&mut self) {
        self.close(']');
    }

    /// Marks the start of an array element.
    pub(crate) fn element(&mut self) {
        self.item();
    }

    pub(crate) fn string_literal(&mut self, s: &str) {
        self.out
            .push_str(&serde_json::to_string(s).expect("strings always serialize"));
    }

    pub(crate) fn raw(&mut self, s: &str) {
        self.out.push_str(s);
    }

    pub(crate) fn null(&mut self) {
        self.out.push_str("null");
    }

    pub(crate) fn uint(&mut self, n: u64) {
        let _ = write!(self.out, "{n}");
    }
}

pub(crate) fn write_trace(w: &mut JsonWriter, trace: &ExecutionTrace) {
    w.begin_object();
    if let Some(meta) = &trace.metadata {
        w.key("metadata");
        write_metadata(w, meta);
    }
    w.key("breakpoint");
    w.begin_array();
    for state in &trace.states {
        w.element();
        write_state(w, state);
    }
    w.end_array();
    w.end_object();
}

fn write_metadata(w: &mut JsonWriter, m: &TraceMetadata) {
    w.begin_object();
    if let Some(v) = m.version {
        w.key("version");
        w.string_literal(v.as_str());
    }
    if let Some(t) = &m.test_id {
        w.key("testId");
        w.string_literal(t);
    }
    if let Some(d) = m.depth {
        w.key("depth");
        w.uint(d.into());
    }
    if let Some(c) = &m.collector {
        w.key("collector");
        w.string_literal(c);
    }
    if let Some(n) = m.max_array_elements {
        w.key("maxArrayElements");
        w.uint(n.into());
    }
    if let Some(n) = m.max_string_length {
        w.key("maxStringLength");
        w.uint(n.into());
    }
    w.end_object();
}

pub(crate) fn write_state(w: &mut JsonWriter, s: &ProgramState) {
    w.begin_object();
    w.key("file");
    w.string_literal(&s.file);
    w.key("lineNumber");
    w.uint(s.line_number.into());
    w.key("stackFrameContexts");
    w.begin_array();
    for frame in &s.frames {
        w.element();
        w.begin_object();
        w.key("positionFromTopInStackTrace");
        w.uint(frame.position_from_top.into());
        w.key("location");
        w.string_literal(&frame.location);
        w.key("stackTrace");
        w.begin_array();
        for entry in &frame.stack_trace {
            w.element();
            w.string_literal(entry);
        }
        w.end_array();
        w.key("runtimeValueCollection");
        write_values(w, &frame.values);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

fn write_values(w: &mut JsonWriter, values: &[RuntimeValue]) {
    w.begin_array();
    for v in values {
        w.element();
        write_value(w, v);
    }
    w.end_array();
}

fn write_value(w: &mut JsonWriter, v: &RuntimeValue) {
    w.begin_object();
    w.key("kind");
    w.string_literal(v.kind.as_str());
    w.key("name");
    w.string_literal(&v.name);
    w.key("type");
    match &v.type_name {
        Some(t) => w.string_literal(t),
        None => w.null(),
    }
    w.key("value");
    match &v.payload {
        Payload::Primitive(p) => write_primitive(w, p),
        _ => w.null(),
    }
    w.key("fields");
    match &v.payload {
        Payload::Fields(c) => write_values(w, c),
        _ => w.null(),
    }
    w.key("arrayElements");
    match &v.payload {
        Payload::Elements(c) => write_values(w, c),
        _ => w.null(),
    }
    w.end_object();
}

fn write_primitive(w: &mut JsonWriter, p: &Primitive) {
    match p {
        Primitive::Null => w.null(),
        Primitive::Bool(b) => w.raw(if *b { "true" } else { "false" }),
        Primitive::Int(i) => w.raw(&i.to_string()),
        // JSON has no spelling for NaN or the infinities.
        Primitive::Float(f) if !f.is_finite() => w.null(),
        Primitive::Float(f) => w.raw(&format!("{f:?}")),
        Primitive::Text(s) => w.string_literal(s),
    }
}
