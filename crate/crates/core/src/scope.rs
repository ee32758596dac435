//! Detection of function-like scopes.

use alloc::vec;
use alloc::vec::Vec;

use crate::diff::SourceFile;
use crate::error::ScopeError;
use crate::lex::{sanitize, tokenize, Lexicon, Token};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ScopeStrategy {
    /// Functions are a header followed by a `{ ... }` block.
    #[default]
    BraceBalanced,
    /// Functions are a `def` header followed by more-indented lines.
    IndentationBased,
}

impl core::str::FromStr for ScopeStrategy {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "brace" | "brace-balanced" => Ok(ScopeStrategy::BraceBalanced),
            "indent" | "indentation" | "indentation-based" => Ok(ScopeStrategy::IndentationBased),
            _ => Err(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScopeKind {
    Function,
    /// Fallback covering a file without detectable functions.
    WholeFile,
}

/// A function-like region of a file.
///
/// `start_line..=end_line` spans the header through the closing line. The
/// body excludes the header and the closing brace; for a single-line scope
/// the body is that line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scope {
    pub start_line: u32,
    pub end_line: u32,
    pub body_start: u32,
    pub body_end: u32,
    pub kind: ScopeKind,
}

impl Scope {
    pub fn whole_file(len: u32) -> Scope {
        Scope {
            start_line: 1,
            end_line: len.max(1),
            body_start: 1,
            body_end: len.max(1),
            kind: ScopeKind::WholeFile,
        }
    }

    fn function(start_line: u32, end_line: u32, body_start: u32, body_end: u32) -> Scope {
        let (body_start, body_end) = if start_line == end_line {
            (start_line, end_line)
        } else {
            (body_start, body_end)
        };
        Scope {
            start_line,
            end_line,
            body_start,
            body_end,
            kind: ScopeKind::Function,
        }
    }

    pub fn contains(&self, line: u32) -> bool {
        (self.start_line..=self.end_line).contains(&line)
    }

    pub fn body_contains(&self, line: u32) -> bool {
        (self.body_start..=self.body_end).contains(&line)
    }

    pub fn line_count(&self) -> u32 {
        self.end_line - self.start_line + 1
    }
}

/// Finds the function-like scopes of `src`, ordered by start line. Scopes are
/// nested or disjoint. A file without any function yields one whole-file
/// scope.
pub fn detect_scopes(src: &SourceFile, strategy: ScopeStrategy) -> Result<Vec<Scope>, ScopeError> {
    let lexicon = Lexicon::for_strategy(strategy);
    let code = sanitize(src.lines(), &lexicon);
    let mut scopes = match strategy {
        ScopeStrategy::BraceBalanced => brace_scopes(&code)?,
        ScopeStrategy::IndentationBased => indent_scopes(&code),
    };
    if scopes.is_empty() {
        return Ok(vec![Scope::whole_file(src.len())]);
    }
    scopes.sort_by_key(|s| (s.start_line, core::cmp::Reverse(s.end_line)));
    Ok(scopes)
}

/// The innermost scope containing `line`, or the whole file.
pub fn innermost(scopes: &[Scope], line: u32, file_len: u32) -> Scope {
    scopes
        .iter()
        .filter(|s| s.kind == ScopeKind::Function && s.contains(line))
        .min_by_key(|s| s.line_count())
        .copied()
        .unwrap_or_else(|| Scope::whole_file(file_len))
}

const CONTROL_WORDS: &[&str] = &[
    "if",
    "else",
    "for",
    "foreach",
    "while",
    "do",
    "switch",
    "case",
    "catch",
    "try",
    "finally",
    "synchronized",
    "return",
    "new",
    "match",
    "loop",
    "lock",
    "using",
    "with",
];

const TYPE_WORDS: &[&str] = &[
    "class",
    "interface",
    "enum",
    "record",
    "struct",
    "union",
    "impl",
    "trait",
    "namespace",
    "module",
    "object",
];

fn is_function_header(header: &str) -> bool {
    let tokens = tokenize(header);
    let Some(last) = tokens.last() else {
        return false;
    };
    if matches!(last, Token::Punct("->") | Token::Punct("=>") | Token::Punct("=")) {
        return false;
    }
    let mut depth = 0i32;
    let mut saw_paren = false;
    for t in &tokens {
        match *t {
            Token::Punct("(") => {
                depth += 1;
                saw_paren = true;
            }
            Token::Punct(")") => depth -= 1,
            Token::Punct("=") if depth == 0 => return false,
            Token::Ident(w) if depth == 0 && (CONTROL_WORDS.contains(&w) || TYPE_WORDS.contains(&w)) => return false,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    saw_paren && depth == 0
}

struct Open {
    line: u32,
    header_start: Option<u32>,
}

fn brace_scopes(code: &[alloc::string::String]) -> Result<Vec<Scope>, ScopeError> {
    let mut scopes = Vec::new();
    let mut stack: Vec<Open> = Vec::new();
    let mut header = alloc::string::String::new();
    let mut header_start: Option<u32> = None;
    let mut paren_depth = 0i32;

    for (i, text) in code.iter().enumerate() {
        let line = i as u32 + 1;
        for c in text.chars() {
            match c {
                '{' => {
                    let start = if is_function_header(&header) {
                        header_start
                    } else {
                        None
                    };
                    stack.push(Open {
                        line,
                        header_start: start,
                    });
                    header.clear();
                    header_start = None;
                    paren_depth = 0;
                }
                '}' => {
                    let open = stack.pop().ok_or(ScopeError::UnbalancedScope { line })?;
                    if let Some(start) = open.header_start {
                        let (body_start, body_end) = if open.line == line {
                            (line, line)
                        } else {
                            (open.line + 1, line - 1)
                        };
                        scopes.push(Scope::function(start, line, body_start, body_end));
                    }
                    header.clear();
                    header_start = None;
                    paren_depth = 0;
                }
                ';' if paren_depth <= 0 => {
                    header.clear();
                    header_start = None;
                    paren_depth = 0;
                }
                _ => {
                    if c == '(' {
                        paren_depth += 1;
                    } else if c == ')' {
                        paren_depth -= 1;
                    }
                    if !c.is_whitespace() && header_start.is_none() {
                        header_start = Some(line);
                    }
                    header.push(c);
                }
            }
        }
        header.push(' ');
    }
    if let Some(open) = stack.pop() {
        return Err(ScopeError::UnbalancedScope { line: open.line });
    }
    Ok(scopes)
}

fn indent_width(line: &str) -> Option<usize> {
    if line.trim().is_empty() {
        return None;
    }
    let mut width = 0;
    for c in line.chars() {
        match c {
            ' ' => width += 1,
            '\t' => width = (width / 8 + 1) * 8,
            _ => break,
        }
    }
    Some(width)
}

fn is_def_header(line: &str) -> bool {
    let trimmed = line.trim_start();
    let rest = trimmed.strip_prefix("async").map_or(trimmed, |r| r.trim_start());
    rest.strip_prefix("def")
        .is_some_and(|r| r.starts_with(|c: char| c.is_whitespace()))
}

fn indent_scopes(code: &[alloc::string::String]) -> Vec<Scope> {
    let mut scopes = Vec::new();
    for (i, text) in code.iter().enumerate() {
        if !is_def_header(text) {
            continue;
        }
        let Some(indent) = indent_width(text) else { continue };

        // The header may continue over several lines while brackets are open.
        let mut depth = 0i32;
        let mut header_end = i;
        for (j, t) in code.iter().enumerate().skip(i) {
            for c in t.chars() {
                match c {
                    '(' | '[' | '{' => depth += 1,
                    ')' | ']' | '}' => depth -= 1,
                    _ => {}
                }
            }
            header_end = j;
            if depth <= 0 {
                break;
            }
        }

        let mut end = header_end;
        for (j, t) in code.iter().enumerate().skip(header_end + 1) {
            match indent_width(t) {
                None => continue,
                Some(w) if w > indent => end = j,
                Some(_) => break,
            }
        }
        let start_line = i as u32 + 1;
        let end_line = end as u32 + 1;
        let body_start = header_end as u32 + 2;
        scopes.push(if end_line < body_start {
            // Single-line definition: `def f(): return 1`
            Scope::function(start_line, end_line, start_line, end_line)
        } else {
            Scope {
                start_line,
                end_line,
                body_start,
                body_end: end_line,
                kind: ScopeKind::Function,
            }
        });
    }
    scopes
}
