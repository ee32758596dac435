//! One comparison from sources and traces to reports.

use std::fs;
use std::path::{Path, PathBuf};

use rundiff_core::{
    classify, first_unique, matched_lines, myers_diff, render_augmented_diff, run_state_differencing, DiffError,
    ExecutionTrace, FailureSignal, FirstUnique, Lexicon, LineDiff, MatchedLines, Outcome, RenderError, RenderOptions,
    ScopeError, ScopeStrategy, SourceFile, StateDiffResult, VersionTag,
};

use crate::output::{emit_textual_output, HTML_FILE, RUNTIME_DIFF_FILE, TRACES_FILE};
use crate::wire::{parse_trace, ParsedTrace, TraceError};

/// Process exit status for a completed comparison.
pub fn outcome_exit_code(outcome: Outcome) -> i32 {
    match outcome {
        Outcome::AugmentedDiff => 0,
        Outcome::InvisibleDiff => 10,
        Outcome::NoDiffDetected => 11,
        Outcome::TimeLimit => 12,
        Outcome::MemoryFailure => 13,
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Trace { path: PathBuf, source: TraceError },
    #[error("{path}: trace is tagged {found}, expected {expected}")]
    VersionMismatch {
        path: PathBuf,
        found: &'static str,
        expected: &'static str,
    },
    #[error("{0}")]
    Scope(#[from] ScopeError),
    #[error("{0}")]
    Diff(#[from] DiffError),
    #[error("{0}")]
    Render(#[from] RenderError),
    #[error("collector for the {version} version: {message}")]
    Collector { version: &'static str, message: String },
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Scope(_) => 3,
            Error::Collector { .. } => 4,
            _ => 2,
        }
    }
}

pub fn read_source(path: &Path) -> Result<SourceFile, Error> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let bytes = fs::read(path).map_err(io)?;
    let text = String::from_utf8(bytes)
        .map_err(|e| io(std::io::Error::new(std::io::ErrorKind::InvalidData, e.utf8_error())))?;
    Ok(SourceFile::from_text(path.display().to_string(), &text))
}

/// Reads a trace and checks its version tag, when it carries one.
pub fn read_trace(path: &Path, expected: VersionTag) -> Result<ParsedTrace, Error> {
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let parsed = parse_trace(&bytes).map_err(|source| Error::Trace {
        path: path.to_path_buf(),
        source,
    })?;
    match parsed.trace.version() {
        Some(found) if found != expected => Err(Error::VersionMismatch {
            path: path.to_path_buf(),
            found: found.as_str(),
            expected: expected.as_str(),
        }),
        _ => Ok(parsed),
    }
}

#[derive(Clone, Debug)]
pub struct CompareOptions {
    pub strategy: ScopeStrategy,
    pub render: RenderOptions,
    pub html: bool,
    pub json: bool,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            strategy: ScopeStrategy::default(),
            render: RenderOptions::default(),
            html: true,
            json: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub diff: LineDiff,
    pub matched: MatchedLines,
    pub result: StateDiffResult,
    pub outcome: Outcome,
    pub firsts: FirstUnique,
    /// Present only for an augmented diff with HTML requested.
    pub html: Option<String>,
    /// Unique-values document and both-traces document, when JSON is requested.
    pub documents: Option<(String, String)>,
}

pub fn compare(
    original_src: &SourceFile,
    patched_src: &SourceFile,
    original: &ExecutionTrace,
    patched: &ExecutionTrace,
    options: &CompareOptions,
) -> Result<Comparison, Error> {
    let diff = myers_diff(original_src, patched_src);
    let matched = matched_lines(original_src, patched_src, options.strategy)?;
    let lexicon = Lexicon::for_strategy(options.strategy);
    let result = run_state_differencing(original, patched, original_src, patched_src, &matched, &lexicon)?;
    let outcome = classify(&result, None);
    let firsts = first_unique(&result);

    let html = if options.html && outcome == Outcome::AugmentedDiff {
        let test_id = original.test_id().or(patched.test_id()).unwrap_or("unnamed test");
        Some(render_augmented_diff(
            original_src,
            patched_src,
            &diff,
            &firsts,
            test_id,
            &options.render,
        )?)
    } else {
        None
    };
    let documents = options
        .json
        .then(|| emit_textual_output(&result, Some(outcome), original, patched));
    Ok(Comparison {
        diff,
        matched,
        result,
        outcome,
        firsts,
        html,
        documents,
    })
}

/// Messages about traces whose capture settings differ, which can make
/// values differ for reasons unrelated to the change.
pub fn capture_warnings(original: &ExecutionTrace, patched: &ExecutionTrace) -> Vec<String> {
    let (Some(o), Some(p)) = (&original.metadata, &patched.metadata) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut check = |what: &str, a: Option<u32>, b: Option<u32>| {
        if a != b {
            out.push(format!("traces differ in {what}: {a:?} vs {b:?}"));
        }
    };
    check("depth", o.depth, p.depth);
    check("maxArrayElements", o.max_array_elements, p.max_array_elements);
    check("maxStringLength", o.max_string_length, p.max_string_length);
    out
}

/// Writes the reports of `c` into `dir`, returning the files written.
pub fn write_reports(c: &Comparison, dir: &Path) -> Result<Vec<PathBuf>, Error> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| Error::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let mut written = Vec::new();
    let mut put = |name: &str, content: &str| {
        let path = dir.join(name);
        fs::write(&path, content).map_err(io(&path))?;
        written.push(path);
        Ok::<_, Error>(())
    };
    if let Some((unique, traces)) = &c.documents {
        put(RUNTIME_DIFF_FILE, unique)?;
        put(TRACES_FILE, traces)?;
    }
    if let Some(html) = &c.html {
        put(HTML_FILE, html)?;
    }
    Ok(written)
}

/// Outcome of a run that never reached comparison.
pub fn failure_outcome(signal: FailureSignal) -> Outcome {
    classify(&StateDiffResult::default(), Some(signal))
}
