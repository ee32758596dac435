//! Command-line driver.
//!
//! Exit status: 0 augmented diff, 10 invisible diff, 11 no diff detected,
//! 12 time limit, 13 memory failure, 2 bad input, 3 unbalanced scope,
//! 4 collector failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rundiff_core::{matched_lines, FailureSignal, MatchedLines, RenderOptions, ScopeStrategy, VersionTag};

use crate::collector::{self, CollectorStatus, Invocation};
use crate::pipeline::{self, outcome_exit_code, CompareOptions, Error};

#[derive(Debug, Parser)]
#[command(
    name = "rundiff",
    version,
    about = "Show how a patch changes what a test observes at runtime"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the matched lines of two versions of a file, one `original<TAB>patched` pair per line.
    ///
    /// Given two directories, every file present in both with differing
    /// content is processed and each pair is prefixed with its path.
    MatchedLines {
        original: PathBuf,
        patched: PathBuf,
        #[arg(long, default_value = "brace-balanced", value_parser = parse_strategy)]
        scope_strategy: ScopeStrategy,
    },
    /// Compare two traces already collected for the two versions.
    Compare {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        original_trace: PathBuf,
        #[arg(long)]
        patched_trace: PathBuf,
    },
    /// Collect a trace for each version with the collector, then compare them.
    Run {
        #[command(flatten)]
        common: Common,
        /// State depth handed to the collector.
        #[arg(long, default_value_t = 1)]
        depth: u32,
        /// Seconds allowed per collector run.
        #[arg(long, default_value = "600", value_parser = parse_seconds)]
        time_limit: Duration,
        /// Working tree the original version's test runs in.
        #[arg(long, default_value = ".")]
        original_root: PathBuf,
        /// Working tree the patched version's test runs in.
        #[arg(long, default_value = ".")]
        patched_root: PathBuf,
        /// Covering test command.
        #[arg(last = true, required = true)]
        test_command: Vec<OsString>,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Original version of the changed file.
    pub original: PathBuf,
    /// Patched version of the changed file.
    pub patched: PathBuf,
    #[arg(long, default_value = "brace-balanced", value_parser = parse_strategy)]
    pub scope_strategy: ScopeStrategy,
    /// Reports to write.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "html,json")]
    pub format: Vec<Format>,
    /// Unchanged lines shown around each change in the HTML diff.
    #[arg(long, default_value_t = 3)]
    pub context_lines: usize,
    #[arg(long, default_value = "rundiff-out")]
    pub output_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Html,
    Json,
}

impl Common {
    fn options(&self) -> CompareOptions {
        CompareOptions {
            strategy: self.scope_strategy,
            render: RenderOptions {
                context_lines: self.context_lines,
            },
            html: self.format.contains(&Format::Html),
            json: self.format.contains(&Format::Json),
        }
    }
}

fn parse_strategy(s: &str) -> Result<ScopeStrategy, String> {
    s.parse()
        .map_err(|_| format!("unknown scope strategy {s:?}; use brace-balanced or indentation-based"))
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(Duration::from_secs_f64(x)),
        _ => Err(format!("expected a positive number of seconds, got {s:?}")),
    }
}

/// Parses `args`, runs the command and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    run(cli)
}

pub fn run(cli: Cli) -> i32 {
    let status = match cli.command {
        Command::MatchedLines {
            original,
            patched,
            scope_strategy,
        } => cmd_matched_lines(&original, &patched, scope_strategy),
        Command::Compare {
            common,
            original_trace,
            patched_trace,
        } => cmd_compare(&common, &original_trace, &patched_trace),
        Command::Run {
            common,
            depth,
            time_limit,
            original_root,
            patched_root,
            test_command,
        } => cmd_run(
            &common,
            depth,
            time_limit,
            [&original_root, &patched_root],
            &test_command,
        ),
    };
    match status {
        Ok(code) => code,
        Err(e) => {
            eprintln!("rundiff: {e}");
            e.exit_code()
        }
    }
}

fn print_pairs(prefix: Option<&str>, matched: &MatchedLines) {
    let mut out = std::io::stdout().lock();
    for (o, p) in matched.pairs() {
        let _ = match prefix {
            Some(path) => writeln!(out, "{path}\t{o}\t{p}"),
            None => writeln!(out, "{o}\t{p}"),
        };
    }
}

fn cmd_matched_lines(original: &Path, patched: &Path, strategy: ScopeStrategy) -> Result<i32, Error> {
    if original.is_dir() && patched.is_dir() {
        return matched_lines_batch(original, patched, strategy);
    }
    let o = pipeline::read_source(original)?;
    let p = pipeline::read_source(patched)?;
    print_pairs(None, &matched_lines(&o, &p, strategy)?);
    Ok(0)
}

/// Matched lines for every changed file of two directory trees. Errors are
/// reported per file; the worst one decides the exit status.
fn matched_lines_batch(original: &Path, patched: &Path, strategy: ScopeStrategy) -> Result<i32, Error> {
    let mut status = 0;
    let entries = walkdir::WalkDir::new(original).sort_by_file_name();
    for entry in entries {
        let entry = entry.map_err(|e| Error::Io {
            path: e.path().unwrap_or(original).to_path_buf(),
            source: e.into(),
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = entry.path().strip_prefix(original).expect("walk stays under its root");
        let other = patched.join(rel);
        if !other.is_file() || std::fs::read(entry.path()).ok() == std::fs::read(&other).ok() {
            continue;
        }
        let label = rel.to_string_lossy().replace('\\', "/");
        let result = pipeline::read_source(entry.path())
            .and_then(|o| Ok((o, pipeline::read_source(&other)?)))
            .and_then(|(o, p)| Ok(matched_lines(&o, &p, strategy)?));
        match result {
            Ok(m) => print_pairs(Some(&label), &m),
            Err(e) => {
                eprintln!("rundiff: {label}: {e}");
                status = status.max(e.exit_code());
            }
        }
    }
    Ok(status)
}

fn cmd_compare(common: &Common, original_trace: &Path, patched_trace: &Path) -> Result<i32, Error> {
    let ot = pipeline::read_trace(original_trace, VersionTag::Original)?;
    let pt = pipeline::read_trace(patched_trace, VersionTag::Patched)?;
    for (path, parsed) in [(original_trace, &ot), (patched_trace, &pt)] {
        if parsed.warning_count() > 0 {
            eprintln!(
                "rundiff: warning: {}: ignored {} unknown key(s), first at {}",
                path.display(),
                parsed.warning_count(),
                parsed.unknown_keys[0]
            );
        }
    }
    finish(common, &ot.trace, &pt.trace)
}

fn finish(
    common: &Common,
    original: &rundiff_core::ExecutionTrace,
    patched: &rundiff_core::ExecutionTrace,
) -> Result<i32, Error> {
    let osrc = pipeline::read_source(&common.original)?;
    let psrc = pipeline::read_source(&common.patched)?;
    for w in pipeline::capture_warnings(original, patched) {
        eprintln!("rundiff: warning: {w}");
    }
    let c = pipeline::compare(&osrc, &psrc, original, patched, &common.options())?;
    for path in pipeline::write_reports(&c, &common.output_dir)? {
        eprintln!("rundiff: wrote {}", path.display());
    }
    println!("{}", c.outcome);
    if let Some(sv) = &c.firsts.original {
        println!("original\t{sv}");
    }
    if let Some(sv) = &c.firsts.patched {
        println!("patched\t{sv}");
    }
    Ok(outcome_exit_code(c.outcome))
}

fn cmd_run(
    common: &Common,
    depth: u32,
    time_limit: Duration,
    roots: [&Path; 2],
    test_command: &[OsString],
) -> Result<i32, Error> {
    let osrc = pipeline::read_source(&common.original)?;
    let psrc = pipeline::read_source(&common.patched)?;
    let matched = matched_lines(&osrc, &psrc, common.scope_strategy)?;

    let out_dir = std::path::absolute(&common.output_dir).map_err(|source| Error::Io {
        path: common.output_dir.clone(),
        source,
    })?;
    std::fs::create_dir_all(&out_dir).map_err(|source| Error::Io {
        path: out_dir.clone(),
        source,
    })?;

    let program = collector::collector_program();
    let versions = [VersionTag::Original, VersionTag::Patched];
    let files = [&common.original, &common.patched];
    let lines: [Vec<u32>; 2] = [matched.original_lines().collect(), matched.patched_lines().collect()];
    let mut invocations = Vec::new();
    for i in 0..2 {
        let name = versions[i].as_str();
        let manifest = out_dir.join(format!("{name}.breakpoints"));
        let text = collector::manifest_text(&collector::manifest_path(files[i], roots[i]), lines[i].iter().copied());
        std::fs::write(&manifest, text).map_err(|source| Error::Io {
            path: manifest.clone(),
            source,
        })?;
        invocations.push(Invocation {
            program: program.clone(),
            version: versions[i],
            manifest,
            depth,
            out: out_dir.join(format!("{name}.trace.json")),
            test_command: test_command.to_vec(),
            root: roots[i].to_path_buf(),
            log: out_dir.join(format!("{name}.collector.log")),
            stdout: out_dir.join(format!("{name}.test.out")),
            time_limit,
        });
    }

    let statuses: Vec<CollectorStatus> = std::thread::scope(|s| {
        let handles: Vec<_> = invocations.iter().map(|inv| s.spawn(|| inv.run())).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("collector thread panicked"))
            .collect()
    });

    let mut signal = None;
    for (inv, status) in invocations.iter().zip(&statuses) {
        let version = inv.version.as_str();
        match status {
            CollectorStatus::Finished => {}
            CollectorStatus::OutOfMemory => {
                eprintln!("rundiff: collector for the {version} version ran out of memory");
                signal = Some(FailureSignal::Memory);
            }
            CollectorStatus::TimedOut => {
                eprintln!("rundiff: collector for the {version} version exceeded {:?}", time_limit);
                signal = signal.or(Some(FailureSignal::Timeout));
            }
            CollectorStatus::NotStarted(e) => {
                return Err(Error::Collector {
                    version,
                    message: format!("cannot start {}: {e}", inv.program.to_string_lossy()),
                })
            }
            CollectorStatus::Failed { status, diagnostics } => {
                return Err(Error::Collector {
                    version,
                    message: format!("{status}\n{}", diagnostics.trim_end()),
                })
            }
        }
    }
    if let Some(signal) = signal {
        let outcome = pipeline::failure_outcome(signal);
        println!("{outcome}");
        return Ok(outcome_exit_code(outcome));
    }

    let ot = pipeline::read_trace(&invocations[0].out, VersionTag::Original)?;
    let pt = pipeline::read_trace(&invocations[1].out, VersionTag::Patched)?;
    finish(common, &ot.trace, &pt.trace)
}
