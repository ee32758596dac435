//! Stable hashing of program states.

use alloc::vec::Vec;

use crate::trace::{canonical_primitive, Payload, ProgramState, RuntimeValue};

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// 64-bit FNV-1a.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes
        .iter()
        .fold(FNV_OFFSET, |h, &b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

/// Canonical byte encoding of a state: every field in a fixed order, strings
/// length-prefixed so distinct states never share an encoding.
pub fn canonical_state_bytes(state: &ProgramState) -> Vec<u8> {
    let mut out = Vec::new();
    put_str(&mut out, &state.file);
    put_u32(&mut out, state.line_number);
    put_u32(&mut out, state.frames.len() as u32);
    for frame in &state.frames {
        put_u32(&mut out, frame.position_from_top);
        put_str(&mut out, &frame.location);
        put_u32(&mut out, frame.stack_trace.len() as u32);
        for entry in &frame.stack_trace {
            put_str(&mut out, entry);
        }
        put_values(&mut out, &frame.values);
    }
    out
}

fn put_values(out: &mut Vec<u8>, values: &[RuntimeValue]) {
    put_u32(out, values.len() as u32);
    for v in values {
        put_str(out, v.kind.as_str());
        put_str(out, &v.name);
        match &v.type_name {
            Some(t) => {
                out.push(1);
                put_str(out, t);
            }
            None => out.push(0),
        }
        match &v.payload {
            Payload::Primitive(p) => {
                out.push(b'p');
                // The canonical string keeps the type distinction (1 vs 1.0).
                put_str(out, &canonical_primitive(p));
            }
            Payload::Fields(c) => {
                out.push(b'f');
                put_values(out, c);
            }
            Payload::Elements(c) => {
                out.push(b'e');
                put_values(out, c);
            }
            Payload::Truncated => out.push(b't'),
        }
    }
}

fn put_u32(out: &mut Vec<u8>, n: u32) {
    out.extend_from_slice(&n.to_le_bytes());
}

fn put_str(out: &mut Vec<u8>, s: &str) {
    put_u32(out, s.len() as u32);
    out.extend_from_slice(s.as_bytes());
}
