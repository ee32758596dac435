//! Random trace-pair fixtures and brute-force oracles for the differencer.
//!
//! The generator records, for every state, its line in original coordinates
//! and the variables each source line reads. The oracles work from that
//! record alone; they never call the lexer, the line mapping, the
//! relocation or the hashing code they check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rundiff_core::trace::RETURN_NAME;
use rundiff_core::{
    ExecutionTrace, MatchedLines, Payload, Primitive, ProgramState, RuntimeValue, SourceFile, StackFrameContext,
    StateValue, ValueKind,
};

#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub max_states: usize,
    pub max_vars: usize,
    pub max_depth: u32,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_states: 20,
            max_vars: 5,
            max_depth: 3,
        }
    }
}

/// A state as the generator knows it: original-coordinate line plus values.
#[derive(Clone, Debug, PartialEq)]
pub struct AbstractState {
    pub line: u32,
    pub values: Vec<RuntimeValue>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub original_src: SourceFile,
    pub patched_src: SourceFile,
    pub matched: MatchedLines,
    pub original: ExecutionTrace,
    pub patched: ExecutionTrace,
    pub original_states: Vec<AbstractState>,
    pub patched_states: Vec<AbstractState>,
    /// Ground truth: variables read on each original line.
    pub reads: BTreeMap<u32, BTreeSet<String>>,
    pub return_lines: BTreeSet<u32>,
}

pub fn var_name(i: usize) -> String {
    format!("v{i}")
}

fn gen_primitive(rng: &mut impl Rng) -> Primitive {
    match rng.gen_range(0..10) {
        0..=4 => Primitive::Int(rng.gen_range(0..3)),
        5 => Primitive::Bool(rng.gen()),
        6 | 7 => Primitive::Text(["a", "b", "it's \"q\""].choose(rng).unwrap().to_string()),
        8 => Primitive::Float([0.5, 1.0, 1e-7][rng.gen_range(0..3)]),
        _ => Primitive::Null,
    }
}

pub fn gen_value(rng: &mut impl Rng, kind: ValueKind, name: String, depth_left: u32) -> RuntimeValue {
    match rng.gen_range(0..10) {
        0..=4 => RuntimeValue::primitive(kind, name, "int", gen_primitive(rng)),
        5..=7 => {
            if depth_left == 0 {
                return RuntimeValue::truncated(kind, name, "Obj");
            }
            let n = rng.gen_range(0..=3);
            let fields = (0..n)
                .map(|i| gen_value(rng, ValueKind::Field, format!("f{i}"), depth_left - 1))
                .collect();
            RuntimeValue::object(kind, name, "Obj", fields)
        }
        _ => {
            if depth_left == 0 {
                return RuntimeValue::truncated(kind, name, "int[]");
            }
            let n = rng.gen_range(0..=3);
            let elements = (0..n)
                .map(|i| gen_value(rng, ValueKind::ArrayElement, i.to_string(), depth_left - 1))
                .collect();
            RuntimeValue {
                kind,
                name,
                type_name: Some("Obj[]".into()),
                payload: Payload::Elements(elements),
            }
        }
    }
}

pub fn concrete_state(line: u32, values: &[RuntimeValue]) -> ProgramState {
    ProgramState {
        file: "pkg/Fixture.java".into(),
        line_number: line,
        frames: vec![
            StackFrameContext {
                position_from_top: 1,
                location: format!("pkg.Fixture:{line}"),
                stack_trace: vec![format!("run:{line}, pkg.Fixture"), "testRun:12, pkg.FixtureTest".into()],
                values: values.to_vec(),
            },
            StackFrameContext {
                position_from_top: 2,
                location: "pkg.FixtureTest:12".into(),
                stack_trace: vec!["testRun:12, pkg.FixtureTest".into()],
                values: vec![RuntimeValue::primitive(
                    ValueKind::LocalVariable,
                    "v0",
                    "int",
                    Primitive::Int(99),
                )],
            },
        ],
    }
}

fn gen_state(rng: &mut impl Rng, lines: &[u32], cfg: &GenConfig, return_lines: &BTreeSet<u32>) -> AbstractState {
    let line = *lines.choose(rng).unwrap();
    let mut names: Vec<usize> = (0..cfg.max_vars).collect();
    names.shuffle(rng);
    let count = rng.gen_range(0..=cfg.max_vars);
    let mut values: Vec<RuntimeValue> = names[..count]
        .iter()
        .map(|&i| gen_value(rng, ValueKind::LocalVariable, var_name(i), cfg.max_depth))
        .collect();
    if return_lines.contains(&line) && rng.gen_bool(0.7) {
        values.push(gen_value(rng, ValueKind::Return, RETURN_NAME.into(), cfg.max_depth));
    }
    AbstractState { line, values }
}

fn mutate(rng: &mut impl Rng, state: &AbstractState, lines: &[u32], cfg: &GenConfig) -> AbstractState {
    let mut s = state.clone();
    match rng.gen_range(0..4) {
        0 => {}
        1 if !s.values.is_empty() => {
            let i = rng.gen_range(0..s.values.len());
            let v = &s.values[i];
            s.values[i] = gen_value(rng, v.kind, v.name.clone(), cfg.max_depth);
        }
        2 => s.line = *lines.choose(rng).unwrap(),
        _ if !s.values.is_empty() => {
            let i = rng.gen_range(0..s.values.len());
            s.values.remove(i);
        }
        _ => {}
    }
    s
}

pub fn generate(rng: &mut impl Rng, cfg: &GenConfig) -> Fixture {
    let n_lines = rng.gen_range(3..=8u32);
    let mut original_lines = Vec::new();
    let mut reads = BTreeMap::new();
    let mut return_lines = BTreeSet::new();
    for line in 1..=n_lines {
        let k = rng.gen_range(0..=cfg.max_vars.min(3));
        let mut vars: Vec<String> = (0..cfg.max_vars).map(var_name).collect();
        vars.shuffle(rng);
        vars.truncate(k);
        let text = match rng.gen_range(0..4) {
            0 if !vars.is_empty() => {
                return_lines.insert(line);
                format!("    return {};", vars.join(" + "))
            }
            1 => {
                vars.clear();
                format!("    int pad{line} = 1;")
            }
            _ => format!("    use({});", vars.join(", ")),
        };
        reads.insert(line, vars.into_iter().collect::<BTreeSet<_>>());
        original_lines.push(text);
    }

    // Patched version: same lines, with unrelated lines inserted in between.
    let mut patched_lines = Vec::new();
    let mut pairs = Vec::new();
    for (i, text) in original_lines.iter().enumerate() {
        for _ in 0..rng.gen_range(0..=2) {
            patched_lines.push(format!("    int extra{} = 0;", patched_lines.len()));
        }
        patched_lines.push(text.clone());
        pairs.push((i as u32 + 1, patched_lines.len() as u32));
    }
    let matched = MatchedLines::from_pairs(pairs);
    let lines: Vec<u32> = (1..=n_lines).collect();

    let original_states: Vec<AbstractState> = (0..rng.gen_range(0..=cfg.max_states))
        .map(|_| gen_state(rng, &lines, cfg, &return_lines))
        .collect();
    let patched_states: Vec<AbstractState> = (0..rng.gen_range(0..=cfg.max_states))
        .map(|i| match original_states.get(i) {
            Some(s) if rng.gen_bool(0.7) => mutate(rng, s, &lines, cfg),
            _ => gen_state(rng, &lines, cfg, &return_lines),
        })
        .collect();

    let original = ExecutionTrace {
        metadata: None,
        states: original_states
            .iter()
            .map(|s| concrete_state(s.line, &s.values))
            .collect(),
    };
    let patched = ExecutionTrace {
        metadata: None,
        states: patched_states
            .iter()
            .map(|s| concrete_state(matched.to_patched(s.line).unwrap(), &s.values))
            .collect(),
    };

    Fixture {
        original_src: SourceFile::new("pkg/Fixture.java", original_lines),
        patched_src: SourceFile::new("pkg/Fixture.java", patched_lines),
        matched,
        original,
        patched,
        original_states,
        patched_states,
        reads,
        return_lines,
    }
}

// ---------------------------------------------------------------------------
// Oracles

fn oracle_value_string(p: &Primitive) -> String {
    match p {
        Primitive::Null => "null".to_string(),
        Primitive::Bool(b) => if *b { "true" } else { "false" }.to_string(),
        Primitive::Int(i) => format!("{i}"),
        Primitive::Float(f) if *f == 0.5 => "0.5".to_string(),
        Primitive::Float(f) if *f == 1.0 => "1.0".to_string(),
        Primitive::Float(f) if *f == 1e-7 => "1e-7".to_string(),
        Primitive::Float(f) => panic!("oracle has no rendering for {f}"),
        Primitive::Text(s) => {
            let mut out = String::from("\"");
            for c in s.chars() {
                if c == '"' || c == '\\' {
                    out.push('\\');
                }
                out.push(c);
            }
            out.push('"');
            out
        }
    }
}

fn leaves(line: u32, path: &str, v: &RuntimeValue, out: &mut Vec<StateValue>) {
    let here = if path.is_empty() {
        v.name.clone()
    } else {
        format!("{path}.{}", v.name)
    };
    match &v.payload {
        Payload::Primitive(p) => out.push(StateValue {
            line,
            path: here,
            value: oracle_value_string(p),
        }),
        Payload::Fields(c) | Payload::Elements(c) => {
            for child in c {
                leaves(line, &here, child, out);
            }
        }
        Payload::Truncated => {}
    }
}

/// Every relevant state value of one side, in execution order.
pub fn oracle_state_values(fx: &Fixture, states: &[AbstractState]) -> Vec<StateValue> {
    let mut out = Vec::new();
    for s in states {
        for v in &s.values {
            let relevant = if v.kind == ValueKind::Return {
                fx.return_lines.contains(&s.line)
            } else {
                fx.reads[&s.line].contains(&v.name)
            };
            if relevant {
                leaves(s.line, "", v, &mut out);
            }
        }
    }
    out
}

/// Literal set difference keeping the first occurrence of each element.
pub fn oracle_difference<T: Clone + PartialEq>(left: &[T], right: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::new();
    for x in left {
        if !right.contains(x) && !out.contains(x) {
            out.push(x.clone());
        }
    }
    out
}

pub struct OracleResult {
    pub ousv: Vec<StateValue>,
    pub pusv: Vec<StateValue>,
    /// Indices into the original and patched state lists.
    pub unique_original: Vec<usize>,
    pub unique_patched: Vec<usize>,
}

pub fn oracle_unique_state_indices(left: &[AbstractState], right: &[AbstractState]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for (i, s) in left.iter().enumerate() {
        let in_right = right.iter().any(|r| r == s);
        let repeat = left[..i].iter().any(|r| r == s);
        if !in_right && !repeat {
            out.push(i);
        }
    }
    out
}

pub fn oracle(fx: &Fixture) -> OracleResult {
    let osv = oracle_state_values(fx, &fx.original_states);
    let psv = oracle_state_values(fx, &fx.patched_states);
    OracleResult {
        ousv: oracle_difference(&osv, &psv),
        pusv: oracle_difference(&psv, &osv),
        unique_original: oracle_unique_state_indices(&fx.original_states, &fx.patched_states),
        unique_patched: oracle_unique_state_indices(&fx.patched_states, &fx.original_states),
    }
}
