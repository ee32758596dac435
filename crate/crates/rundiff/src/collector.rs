//! Driving an external trace collector.
//!
//! A collector is any executable accepting
//!
//! ```text
//! <collector> --breakpoints <manifest> --depth <d> --out <trace> -- <test argv...>
//! ```
//!
//! It runs the test, stops at every line listed in the manifest and writes
//! the trace in the wire format. A collector that runs out of memory exits
//! nonzero after printing [`MEMORY_SENTINEL`] on stderr.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{self, BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::process::{Child, Command, ExitStatus, Stdio};
use std::time::{Duration, Instant};

use rundiff_core::VersionTag;

pub const MEMORY_SENTINEL: &str = "RUNDIFF-COLLECTOR: MEMORY";
pub const COLLECTOR_ENV: &str = "RUNDIFF_COLLECTOR";
pub const DEFAULT_COLLECTOR: &str = "rundiff-collector";
/// Set for the collector process so it can tag its trace.
pub const VERSION_ENV: &str = "RUNDIFF_VERSION";

/// `RUNDIFF_COLLECTOR` when set, otherwise `rundiff-collector` on `PATH`.
pub fn collector_program() -> OsString {
    std::env::var_os(COLLECTOR_ENV)
        .filter(|v| !v.is_empty())
        .unwrap_or_else(|| DEFAULT_COLLECTOR.into())
}

/// Breakpoint manifest text: one `path:line` per line.
pub fn manifest_text(file: &str, lines: impl IntoIterator<Item = u32>) -> String {
    lines.into_iter().map(|l| format!("{file}:{l}\n")).collect()
}

/// Parses a manifest back into `(path, line)` entries.
pub fn parse_manifest(text: &str) -> Result<Vec<(String, u32)>, String> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (path, line) = l.rsplit_once(':').ok_or_else(|| format!("no line number in {l:?}"))?;
            match line.parse::<u32>() {
                Ok(n) if n >= 1 => Ok((path.to_string(), n)),
                _ => Err(format!("bad line number in {l:?}")),
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Invocation {
    pub program: OsString,
    pub version: VersionTag,
    pub manifest: PathBuf,
    pub depth: u32,
    pub out: PathBuf,
    pub test_command: Vec<OsString>,
    /// Working directory of the collector, the version's project root.
    pub root: PathBuf,
    /// Receives the collector's stderr.
    pub log: PathBuf,
    /// Receives the collector's stdout, normally the test's own output.
    pub stdout: PathBuf,
    pub time_limit: Duration,
}

#[derive(Debug)]
pub enum CollectorStatus {
    Finished,
    TimedOut,
    OutOfMemory,
    Failed { status: ExitStatus, diagnostics: String },
    NotStarted(io::Error),
}

impl Invocation {
    pub fn command(&self) -> Command {
        let mut cmd = Command::new(&self.program);
        cmd.arg("--breakpoints")
            .arg(&self.manifest)
            .arg("--depth")
            .arg(self.depth.to_string())
            .arg("--out")
            .arg(&self.out)
            .arg("--")
            .args(&self.test_command)
            .current_dir(&self.root)
            .env(VERSION_ENV, self.version.as_str())
            .stdin(Stdio::null());
        cmd
    }

    /// Runs the collector to completion or until the time limit.
    pub fn run(&self) -> CollectorStatus {
        let files = File::create(&self.stdout).and_then(|out| Ok((out, File::create(&self.log)?)));
        let (out, err) = match files {
            Ok(pair) => pair,
            Err(e) => return CollectorStatus::NotStarted(e),
        };
        let mut cmd = self.command();
        cmd.stdout(out).stderr(err);
        isolate(&mut cmd);
        let mut child = match cmd.spawn() {
            Ok(c) => c,
            Err(e) => return CollectorStatus::NotStarted(e),
        };
        let status = match wait_with_deadline(&mut child, Instant::now() + self.time_limit) {
            Ok(Some(status)) => status,
            Ok(None) => return CollectorStatus::TimedOut,
            Err(e) => return CollectorStatus::NotStarted(e),
        };
        if status.success() {
            return CollectorStatus::Finished;
        }
        if log_has_sentinel(&self.log) {
            return CollectorStatus::OutOfMemory;
        }
        let diagnostics = fs::read_to_string(&self.log).unwrap_or_default();
        CollectorStatus::Failed { status, diagnostics }
    }
}

fn log_has_sentinel(path: &Path) -> bool {
    File::open(path)
        .map(|f| {
            BufReader::new(f)
                .split(b'\n')
                .map_while(Result::ok)
                .any(|line| String::from_utf8_lossy(&line).trim_end() == MEMORY_SENTINEL)
        })
        .unwrap_or(false)
}

/// Polls `child` until it exits or `deadline` passes, killing it (and its
/// process group on Unix) in the latter case.
fn wait_with_deadline(child: &mut Child, deadline: Instant) -> io::Result<Option<ExitStatus>> {
    let mut pause = Duration::from_millis(1);
    loop {
        if let Some(status) = child.try_wait()? {
            return Ok(Some(status));
        }
        let now = Instant::now();
        if now >= deadline {
            kill_tree(child);
            child.wait()?;
            return Ok(None);
        }
        std::thread::sleep(pause.min(deadline - now));
        pause = (pause * 2).min(Duration::from_millis(50));
    }
}

#[cfg(unix)]
fn isolate(cmd: &mut Command) {
    use std::os::unix::process::CommandExt;
    cmd.process_group(0);
}

#[cfg(not(unix))]
fn isolate(_: &mut Command) {}

#[cfg(unix)]
fn kill_tree(child: &mut Child) {
    let Ok(pgid) = libc::pid_t::try_from(child.id()) else {
        let _ = child.kill();
        return;
    };
    // SAFETY: killpg has no memory-safety preconditions. The group id is
    // the collector's own pid, made a group leader by `isolate`.
    unsafe {
        libc::killpg(pgid, libc::SIGKILL);
    }
}

#[cfg(not(unix))]
fn kill_tree(child: &mut Child) {
    let _ = child.kill();
}

/// Path of `file` relative to `root` when it lies inside it, as written into
/// the manifest.
pub fn manifest_path(file: &Path, root: &Path) -> String {
    let canon = |p: &Path| fs::canonicalize(p).unwrap_or_else(|_| p.to_path_buf());
    let (file_c, root_c) = (canon(file), canon(root));
    let rel = file_c
        .strip_prefix(&root_c)
        .map(Path::to_path_buf)
        .unwrap_or_else(|_| file.to_path_buf());
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join("/")
}
