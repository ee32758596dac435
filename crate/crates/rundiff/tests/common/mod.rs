//! Random traces covering the whole wire schema.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use rundiff::rundiff_core::trace::RETURN_NAME;
use rundiff::rundiff_core::{
    ExecutionTrace, Payload, Primitive, ProgramState, RuntimeValue, StackFrameContext, TraceMetadata, ValueKind,
    VersionTag,
};

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
}

fn text(rng: &mut impl Rng) -> String {
    const PIECES: &[&str] = &[
        "a", "Z", " ", "\"", "\\", "\n", "\t", "\u{1}", "\u{7f}", "é", "日本", "😀", "/", "<b>",
    ];
    (0..rng.gen_range(0..6)).map(|_| *PIECES.choose(rng).unwrap()).collect()
}

fn float(rng: &mut impl Rng) -> f64 {
    match rng.gen_range(0..4) {
        0 => [0.0, -0.0, 1.0, 0.1, 1e-7, 1e300, f64::MIN_POSITIVE, f64::MAX][rng.gen_range(0..8)],
        1 => rng.gen_range(-1e6..1e6),
        _ => loop {
            let f = f64::from_bits(rng.gen());
            if f.is_finite() {
                break f;
            }
        },
    }
}

fn primitive(rng: &mut impl Rng) -> Primitive {
    match rng.gen_range(0..6) {
        0 => Primitive::Null,
        1 => Primitive::Bool(rng.gen()),
        2 => Primitive::Int(rng.gen_range(-5..5)),
        3 => Primitive::Int(rng.gen()),
        4 => Primitive::Float(float(rng)),
        _ => Primitive::Text(text(rng)),
    }
}

const TYPES: &[&str] = &["int", "double", "String", "Obj", "java.util.List<Integer>", "int[]"];

pub fn value(rng: &mut impl Rng, kind: ValueKind, name: String, depth_left: u32) -> RuntimeValue {
    let type_name = if rng.gen_bool(0.1) {
        None
    } else {
        Some(TYPES.choose(rng).unwrap().to_string())
    };
    let payload = match rng.gen_range(0..8) {
        0..=3 => Payload::Primitive(primitive(rng)),
        4 => Payload::Truncated,
        _ if depth_left == 0 => Payload::Truncated,
        5 | 6 => Payload::Fields(
            (0..rng.gen_range(0..4))
                .map(|i| value(rng, ValueKind::Field, format!("f{i}"), depth_left - 1))
                .collect(),
        ),
        _ => Payload::Elements(
            (0..rng.gen_range(0..4))
                .map(|i| value(rng, ValueKind::ArrayElement, i.to_string(), depth_left - 1))
                .collect(),
        ),
    };
    let type_name = match payload {
        Payload::Primitive(Primitive::Null) => Some("null".to_string()),
        _ => type_name,
    };
    RuntimeValue {
        kind,
        name,
        type_name,
        payload,
    }
}

fn frame(rng: &mut impl Rng, position: u32, line: u32, max_depth: u32) -> StackFrameContext {
    let values = (0..rng.gen_range(0..5))
        .map(|i| {
            let (kind, name) = match rng.gen_range(0..6) {
                0 => (ValueKind::Return, RETURN_NAME.to_string()),
                1 => (ValueKind::Field, format!("field{i}")),
                _ => (ValueKind::LocalVariable, format!("{}{i}", text(rng))),
            };
            value(rng, kind, name, max_depth)
        })
        .collect();
    StackFrameContext {
        position_from_top: position,
        location: format!("pkg.Cls:{line}"),
        stack_trace: (0..rng.gen_range(1..4))
            .map(|k| format!("m{k}:{}, pkg.Cls", line + k))
            .collect(),
        values,
    }
}

pub fn trace(rng: &mut impl Rng) -> ExecutionTrace {
    let max_depth = rng.gen_range(0..=3);
    let states = (0..rng.gen_range(0..6))
        .map(|_| {
            let line = rng.gen_range(1..2000);
            ProgramState {
                file: format!("pkg/{}.java", text(rng)),
                line_number: line,
                frames: (1..=rng.gen_range(1..3))
                    .map(|p| frame(rng, p, line, max_depth))
                    .collect(),
            }
        })
        .collect();
    let metadata = rng.gen_bool(0.7).then(|| TraceMetadata {
        version: [None, Some(VersionTag::Original), Some(VersionTag::Patched)][rng.gen_range(0..3)],
        test_id: rng.gen_bool(0.5).then(|| text(rng)),
        depth: rng.gen_bool(0.7).then(|| max_depth + rng.gen_range(0..2)),
        collector: rng.gen_bool(0.5).then(|| "py-collector 0.1".to_string()),
        max_array_elements: rng.gen_bool(0.3).then(|| rng.gen_range(1..1000)),
        max_string_length: rng.gen_bool(0.3).then(|| rng.gen_range(1..5000)),
    });
    ExecutionTrace { metadata, states }
}

/// Structural equality that tells -0.0 from 0.0 and compares floats by bits.
pub fn same_trace(a: &ExecutionTrace, b: &ExecutionTrace) -> bool {
    fn same_value(a: &RuntimeValue, b: &RuntimeValue) -> bool {
        a.kind == b.kind
            && a.name == b.name
            && a.type_name == b.type_name
            && match (&a.payload, &b.payload) {
                (Payload::Primitive(Primitive::Float(x)), Payload::Primitive(Primitive::Float(y))) => {
                    x.to_bits() == y.to_bits()
                }
                (Payload::Fields(x), Payload::Fields(y)) | (Payload::Elements(x), Payload::Elements(y)) => {
                    x.len() == y.len() && x.iter().zip(y).all(|(p, q)| same_value(p, q))
                }
                (x, y) => x == y,
            }
    }
    a.metadata == b.metadata
        && a.states.len() == b.states.len()
        && a.states.iter().zip(&b.states).all(|(s, t)| {
            s.file == t.file
                && s.line_number == t.line_number
                && s.frames.len() == t.frames.len()
                && s.frames.iter().zip(&t.frames).all(|(f, g)| {
                    f.position_from_top == g.position_from_top
                        && f.location == g.location
                        && f.stack_trace == g.stack_trace
                        && f.values.len() == g.values.len()
                        && f.values.iter().zip(&g.values).all(|(v, w)| same_value(v, w))
                })
        })
}
