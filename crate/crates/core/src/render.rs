//! HTML rendering of the augmented diff: a unified diff with the first unique
//! runtime value of each version shown beneath the line where it was seen.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::diff::{LineDiff, SourceFile};
use crate::differ::StateValue;
use crate::report::FirstUnique;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    /// Unchanged lines shown around each change.
    pub context_lines: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { context_lines: 3 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Original,
    Patched,
}

impl Side {
    fn label(self) -> &'static str {
        match self {
            Side::Original => "original",
            Side::Patched => "patched",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RenderError {
    /// The annotated line does not exist in that version of the file.
    AnchorMissing { side: Side, line: u32 },
}

impl fmt::Display for RenderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RenderError::AnchorMissing { side, line } => {
                write!(f, "no {} line to anchor an annotation at line {line}", side.label())
            }
        }
    }
}

impl core::error::Error for RenderError {}

/// Callout text for a state value, e.g. `j=27`.
pub fn annotation_text(sv: &StateValue) -> String {
    format!("{}={}", sv.path, sv.value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Row {
    Context(u32, u32),
    Deleted(u32),
    Inserted(u32),
}

impl Row {
    fn is_change(self) -> bool {
        !matches!(self, Row::Context(..))
    }
}

fn rows(diff: &LineDiff, original_len: u32, patched_len: u32) -> Vec<Row> {
    let mut out = Vec::new();
    let (mut o, mut p) = (1, 1);
    let sentinel = (original_len + 1, patched_len + 1);
    for &(mo, mp) in diff.unchanged.iter().chain(core::iter::once(&sentinel)) {
        out.extend((o..mo).map(Row::Deleted));
        out.extend((p..mp).map(Row::Inserted));
        if (mo, mp) != sentinel {
            out.push(Row::Context(mo, mp));
        }
        o = mo + 1;
        p = mp + 1;
    }
    out
}

fn anchor_row(rows: &[Row], side: Side, line: u32) -> Option<usize> {
    rows.iter().position(|r| match (side, *r) {
        (Side::Original, Row::Context(o, _) | Row::Deleted(o)) => o == line,
        (Side::Patched, Row::Context(_, p) | Row::Inserted(p)) => p == line,
        _ => false,
    })
}

/// Renders a self-contained HTML5 document (inline stylesheet, no scripts).
///
/// Each first unique value is shown in a callout row directly below its line:
/// the original-side value under its original line, the patched-side value
/// under the patched line matched to it. Hunk context is widened until both
/// anchors are visible.
pub fn render_augmented_diff(
    original: &SourceFile,
    patched: &SourceFile,
    diff: &LineDiff,
    firsts: &FirstUnique,
    test_id: &str,
    options: &RenderOptions,
) -> Result<String, RenderError> {
    let rows = rows(diff, original.len(), patched.len());

    let mut anchors: Vec<(usize, Side, &StateValue)> = Vec::new();
    if let Some(sv) = &firsts.original {
        let at = anchor_row(&rows, Side::Original, sv.line).ok_or(RenderError::AnchorMissing {
            side: Side::Original,
            line: sv.line,
        })?;
        anchors.push((at, Side::Original, sv));
    }
    if let Some(sv) = &firsts.patched {
        let missing = RenderError::AnchorMissing {
            side: Side::Patched,
            line: sv.line,
        };
        let line = diff.to_patched(sv.line).ok_or(missing.clone())?;
        let at = anchor_row(&rows, Side::Patched, line).ok_or(missing)?;
        anchors.push((at, Side::Patched, sv));
    }

    let visible = visible_rows(&rows, &anchors, options.context_lines);

    let mut html = String::new();
    let title = escape(&original.path);
    let _ = write!(
        html,
        "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>Augmented diff: {title}</title>\n<style>\n{STYLE}</style>\n</head>\n<body>\n<header>\n<h1>{title}</h1>\n<p class=\"test\">Covering test: <code>{}</code></p>\n",
        escape(test_id)
    );
    if firsts.is_empty() {
        html.push_str("<p class=\"banner none\">no runtime difference detected</p>\n");
    } else {
        let _ = writeln!(
            html,
            "<p class=\"banner\">The execution of test <code>{}</code> reveals values that only occur in one version.</p>",
            escape(test_id)
        );
    }
    html.push_str("</header>\n<table class=\"diff\">\n");

    let mut prev: Option<usize> = None;
    for &i in &visible {
        if prev.is_none_or(|p| p + 1 != i) {
            write_hunk_header(&mut html, &rows, &visible, i);
        }
        prev = Some(i);
        write_row(&mut html, rows[i], original, patched);
        for &(at, side, sv) in &anchors {
            if at == i {
                let _ = writeln!(
                    html,
                    "<tr class=\"callout {0}\"><td class=\"ln\"></td><td class=\"ln\"></td><td class=\"sign\"></td><td class=\"code\"><span class=\"label\">{0}</span> <span class=\"rv\">{1}</span> <span class=\"note\">only occurs in the {0} version</span></td></tr>",
                    side.label(),
                    escape(&annotation_text(sv))
                );
            }
        }
    }
    html.push_str("</table>\n</body>\n</html>\n");
    Ok(html)
}

fn visible_rows(rows: &[Row], anchors: &[(usize, Side, &StateValue)], context: usize) -> Vec<usize> {
    let changes: Vec<usize> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_change())
        .map(|(i, _)| i)
        .collect();
    let mut visible = BTreeSet::new();
    for &c in &changes {
        let lo = c.saturating_sub(context);
        let hi = (c + context).min(rows.len().saturating_sub(1));
        visible.extend(lo..=hi);
    }
    for &(a, _, _) in anchors {
        // Widen the nearest hunk until it reaches the anchor.
        let nearest = changes.iter().min_by_key(|&&c| c.abs_diff(a));
        match nearest {
            Some(&c) => visible.extend(c.min(a)..=c.max(a)),
            None => {
                let lo = a.saturating_sub(context);
                let hi = (a + context).min(rows.len() - 1);
                visible.extend(lo..=hi);
            }
        }
    }
    visible.into_iter().collect()
}

fn write_hunk_header(html: &mut String, rows: &[Row], visible: &[usize], start: usize) {
    let mut end = start;
    while visible.binary_search(&(end + 1)).is_ok() {
        end += 1;
    }
    let (mut o_start, mut o_count, mut p_start, mut p_count) = (None, 0, None, 0);
    for row in &rows[start..=end] {
        match *row {
            Row::Context(o, p) => {
                o_start.get_or_insert(o);
                p_start.get_or_insert(p);
                o_count += 1;
                p_count += 1;
            }
            Row::Deleted(o) => {
                o_start.get_or_insert(o);
                o_count += 1;
            }
            Row::Inserted(p) => {
                p_start.get_or_insert(p);
                p_count += 1;
            }
        }
    }
    let _ = writeln!(
        html,
        "<tr class=\"hunk\"><td colspan=\"4\">@@ -{},{} +{},{} @@</td></tr>",
        o_start.unwrap_or(0),
        o_count,
        p_start.unwrap_or(0),
        p_count
    );
}

fn write_row(html: &mut String, row: Row, original: &SourceFile, patched: &SourceFile) {
    let (class, o, p, sign, text) = match row {
        Row::Context(o, p) => ("ctx", Some(o), Some(p), " ", original.line(o)),
        Row::Deleted(o) => ("del", Some(o), None, "-", original.line(o)),
        Row::Inserted(p) => ("ins", None, Some(p), "+", patched.line(p)),
    };
    let num = |n: Option<u32>| n.map(|n| format!("{n}")).unwrap_or_default();
    let _ = writeln!(
        html,
        "<tr class=\"{class}\"><td class=\"ln\">{}</td><td class=\"ln\">{}</td><td class=\"sign\">{sign}</td><td class=\"code\">{}</td></tr>",
        num(o),
        num(p),
        escape(text.unwrap_or(""))
    );
}

const STYLE: &str = "body { font-family: sans-serif; margin: 1.5em; }
h1 { font-size: 1.2em; font-family: monospace; }
.banner { padding: 0.4em 0.8em; background: #fff8c5; border: 1px solid #d4a72c; }
.banner.none { background: #f6f8fa; border-color: #d0d7de; }
table.diff { border-collapse: collapse; font-family: monospace; width: 100%; }
table.diff td { padding: 0 0.5em; white-space: pre; vertical-align: top; }
td.ln { color: #6e7781; text-align: right; width: 1%; }
td.sign { width: 1%; }
tr.del { background: #ffebe9; }
tr.ins { background: #e6ffec; }
tr.hunk td { background: #ddf4ff; color: #57606a; }
tr.callout td.code { white-space: normal; }
tr.callout .label { font-weight: bold; text-transform: uppercase; font-size: 0.8em; }
tr.callout .rv { padding: 0.1em 0.4em; border-radius: 3px; font-weight: bold; }
tr.callout.original .rv { background: #ffcecb; }
tr.callout.patched .rv { background: #aceebb; }
tr.callout .note { color: #57606a; font-size: 0.9em; }
";

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            c => out.push(c),
        }
    }
    out
}
