//! Lexical helpers shared by scope detection and the relevance filter.
//!
//! Neither needs a real parser. Source lines are first *sanitized*: string
//! literals, character literals and comments are blanked out with spaces so
//! later passes only see code. Sanitizing keeps line lengths, so column
//! positions stay valid.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::diff::SourceFile;
use crate::scope::ScopeStrategy;

/// Comment and literal syntax of the source language family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Syntax {
    /// `//` and `/* */` comments, `"` strings, `'c'` character literals,
    /// `"""` text blocks.
    CLike,
    /// `#` comments, `'`/`"` strings and their triple-quoted forms.
    Python,
}

const C_LIKE_KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "auto",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "delete",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "extern",
    "false",
    "final",
    "finally",
    "float",
    "for",
    "function",
    "goto",
    "if",
    "implements",
    "import",
    "in",
    "instanceof",
    "int",
    "interface",
    "let",
    "long",
    "native",
    "new",
    "null",
    "nullptr",
    "package",
    "private",
    "protected",
    "public",
    "record",
    "register",
    "return",
    "short",
    "signed",
    "sizeof",
    "static",
    "strictfp",
    "struct",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "true",
    "try",
    "typedef",
    "typeof",
    "undefined",
    "union",
    "unsigned",
    "var",
    "void",
    "volatile",
    "while",
    "yield",
    "fn",
    "mut",
    "self",
    "Self",
    "impl",
    "trait",
    "pub",
    "use",
    "mod",
    "match",
    "loop",
    "where",
    "unsafe",
    "async",
    "await",
];

const PYTHON_KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class", "continue", "def", "del",
    "elif", "else", "except", "finally", "for", "from", "global", "if", "import", "in", "is", "lambda", "nonlocal",
    "not", "or", "pass", "raise", "return", "try", "while", "with", "yield", "self", "cls",
];

/// Language knowledge used by the lexical passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lexicon {
    pub syntax: Syntax,
    /// Words never reported as variables.
    pub keywords: BTreeSet<String>,
    /// Receiver names (`this`, `self`). A member accessed through one of them
    /// is reported, since it is a field of the current object.
    pub receivers: BTreeSet<String>,
    /// Whether `'...'` delimits strings rather than single characters.
    pub single_quote_strings: bool,
    /// The keyword introducing a return statement.
    pub return_keyword: String,
}

impl Lexicon {
    pub fn for_strategy(strategy: ScopeStrategy) -> Self {
        match strategy {
            ScopeStrategy::BraceBalanced => Lexicon {
                syntax: Syntax::CLike,
                keywords: C_LIKE_KEYWORDS.iter().map(|s| s.to_string()).collect(),
                receivers: ["this", "self"].iter().map(|s| s.to_string()).collect(),
                single_quote_strings: false,
                return_keyword: "return".into(),
            },
            ScopeStrategy::IndentationBased => Lexicon {
                syntax: Syntax::Python,
                keywords: PYTHON_KEYWORDS.iter().map(|s| s.to_string()).collect(),
                receivers: ["self", "cls"].iter().map(|s| s.to_string()).collect(),
                single_quote_strings: true,
                return_keyword: "return".into(),
            },
        }
    }

    /// Replaces the keyword list.
    pub fn with_keywords<I, S>(mut self, keywords: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.keywords = keywords.into_iter().map(Into::into).collect();
        self
    }

    pub fn is_keyword(&self, word: &str) -> bool {
        self.keywords.contains(word)
    }
}

/// Blanks out comments and literals across a whole file.
pub fn sanitize(lines: &[String], lexicon: &Lexicon) -> Vec<String> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mode {
        Code,
        BlockComment,
        Triple(char),
    }

    let mut mode = Mode::Code;
    let mut out = Vec::with_capacity(lines.len());
    for line in lines {
        let chars: Vec<char> = line.chars().collect();
        let mut buf = String::with_capacity(line.len());
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let next = chars.get(i + 1).copied();
            match mode {
                Mode::BlockComment => {
                    if c == '*' && next == Some('/') {
                        buf.push_str("  ");
                        i += 2;
                        mode = Mode::Code;
                    } else {
                        buf.push(' ');
                        i += 1;
                    }
                }
                Mode::Triple(q) => {
                    if c == '\\' {
                        buf.push(' ');
                        if next.is_some() {
                            buf.push(' ');
                        }
                        i += 2;
                    } else if c == q && next == Some(q) && chars.get(i + 2) == Some(&q) {
                        buf.push_str("   ");
                        i += 3;
                        mode = Mode::Code;
                    } else {
                        buf.push(' ');
                        i += 1;
                    }
                }
                Mode::Code => {
                    let triple = |q: char| next == Some(q) && chars.get(i + 2) == Some(&q);
                    match (lexicon.syntax, c) {
                        (Syntax::CLike, '/') if next == Some('/') => {
                            pad(&mut buf, chars.len() - i);
                            i = chars.len();
                        }
                        (Syntax::CLike, '/') if next == Some('*') => {
                            buf.push_str("  ");
                            i += 2;
                            mode = Mode::BlockComment;
                        }
                        (Syntax::Python, '#') => {
                            pad(&mut buf, chars.len() - i);
                            i = chars.len();
                        }
                        (_, '"') if triple('"') => {
                            buf.push_str("   ");
                            i += 3;
                            mode = Mode::Triple('"');
                        }
                        (Syntax::Python, '\'') if triple('\'') => {
                            buf.push_str("   ");
                            i += 3;
                            mode = Mode::Triple('\'');
                        }
                        (_, '"') => {
                            let end = quoted_end(&chars, i, '"');
                            pad(&mut buf, end - i);
                            i = end;
                        }
                        (_, '\'') if lexicon.single_quote_strings => {
                            let end = quoted_end(&chars, i, '\'');
                            pad(&mut buf, end - i);
                            i = end;
                        }
                        (_, '\'') => {
                            // Character literal, or a lone quote (e.g. a lifetime).
                            let end = if next == Some('\\') {
                                chars[i + 2..].iter().position(|&ch| ch == '\'').map(|p| i + 2 + p + 1)
                            } else if chars.get(i + 2) == Some(&'\'') {
                                Some(i + 3)
                            } else {
                                None
                            };
                            match end {
                                Some(end) => {
                                    pad(&mut buf, end - i);
                                    i = end;
                                }
                                None => {
                                    buf.push(c);
                                    i += 1;
                                }
                            }
                        }
                        _ => {
                            buf.push(c);
                            i += 1;
                        }
                    }
                }
            }
        }
        out.push(buf);
    }
    out
}

fn pad(buf: &mut String, n: usize) {
    buf.extend(core::iter::repeat_n(' ', n));
}

/// Index one past the closing quote of the literal opened at `start`, or the
/// end of the line when it is unterminated.
fn quoted_end(chars: &[char], start: usize, quote: char) -> usize {
    let mut i = start + 1;
    while i < chars.len() {
        match chars[i] {
            '\\' => i += 2,
            c if c == quote => return i + 1,
            _ => i += 1,
        }
    }
    chars.len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token<'a> {
    Ident(&'a str),
    Number(&'a str),
    Punct(&'a str),
}

const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", "**=", "//=", "...", "==", "!=", "<=", ">=", "=>", "->", "::", "+=", "-=", "*=", "/=", "%=",
    "&=", "|=", "^=", ":=", "&&", "||", "++", "--", "<<", "**",
];

/// Splits sanitized code into identifiers, numbers and punctuation.
pub fn tokenize(code: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut rest = code;
    while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            rest = &rest[c.len_utf8()..];
        } else if c.is_alphabetic() || c == '_' || c == '$' {
            let end = rest
                .char_indices()
                .find(|&(_, ch)| !(ch.is_alphanumeric() || ch == '_' || ch == '$'))
                .map_or(rest.len(), |(i, _)| i);
            tokens.push(Token::Ident(&rest[..end]));
            rest = &rest[end..];
        } else if c.is_ascii_digit() {
            let end = rest
                .char_indices()
                .find(|&(_, ch)| !(ch.is_ascii_alphanumeric() || ch == '_' || ch == '.'))
                .map_or(rest.len(), |(i, _)| i);
            tokens.push(Token::Number(&rest[..end]));
            rest = &rest[end..];
        } else {
            let len = OPERATORS
                .iter()
                .find(|op| rest.starts_with(**op))
                .map_or(c.len_utf8(), |op| op.len());
            tokens.push(Token::Punct(&rest[..len]));
            rest = &rest[len..];
        }
    }
    tokens
}

/// Identifiers read on each line of a source file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelevantVarsIndex {
    by_line: BTreeMap<u32, BTreeSet<String>>,
    returns: BTreeSet<u32>,
}

impl RelevantVarsIndex {
    pub fn build(src: &SourceFile, lexicon: &Lexicon) -> Self {
        let mut index = RelevantVarsIndex::default();
        for (i, code) in sanitize(src.lines(), lexicon).iter().enumerate() {
            let line = i as u32 + 1;
            let tokens = tokenize(code);
            if tokens.contains(&Token::Ident(lexicon.return_keyword.as_str())) {
                index.returns.insert(line);
            }
            let vars = read_identifiers(&tokens, lexicon);
            if !vars.is_empty() {
                index.by_line.insert(line, vars);
            }
        }
        index
    }

    /// Identifiers read on `line`; empty for blank, comment-only or unknown lines.
    pub fn get(&self, line: u32) -> Option<&BTreeSet<String>> {
        self.by_line.get(&line)
    }

    pub fn contains(&self, line: u32, name: &str) -> bool {
        self.by_line.get(&line).is_some_and(|s| s.contains(name))
    }

    /// Whether `line` holds a return statement.
    pub fn is_return_line(&self, line: u32) -> bool {
        self.returns.contains(&line)
    }
}

/// Identifiers read on one line of `src`.
///
/// Keywords, called names, and members reached through `.` are skipped. The
/// target of a plain `=` assignment is a write and is skipped too, while
/// compound assignments (`+=`, `++`) read their target and keep it.
pub fn relevant_vars(src: &SourceFile, line: u32, lexicon: &Lexicon) -> BTreeSet<String> {
    RelevantVarsIndex::build(src, lexicon)
        .get(line)
        .cloned()
        .unwrap_or_default()
}

fn read_identifiers(tokens: &[Token<'_>], lexicon: &Lexicon) -> BTreeSet<String> {
    let mut vars = BTreeSet::new();
    for stmt in split_statements(tokens) {
        let assigns = top_level_assignments(stmt);
        let mut start = 0;
        for &eq in &assigns {
            let lhs = &stmt[start..eq];
            if !is_plain_target(lhs) {
                collect(lhs, lexicon, &mut vars);
            }
            start = eq + 1;
        }
        collect(&stmt[start..], lexicon, &mut vars);
    }
    vars
}

fn split_statements<'t, 'a>(tokens: &'t [Token<'a>]) -> Vec<&'t [Token<'a>]> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, t) in tokens.iter().enumerate() {
        match t {
            Token::Punct("(") | Token::Punct("[") => depth += 1,
            Token::Punct(")") | Token::Punct("]") => depth -= 1,
            Token::Punct(";") | Token::Punct("{") | Token::Punct("}") if depth <= 0 => {
                out.push(&tokens[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&tokens[start..]);
    out
}

fn top_level_assignments(stmt: &[Token<'_>]) -> Vec<usize> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    for (i, t) in stmt.iter().enumerate() {
        match t {
            Token::Punct("(") | Token::Punct("[") => depth += 1,
            Token::Punct(")") | Token::Punct("]") => depth -= 1,
            Token::Punct("=") | Token::Punct(":=") if depth == 0 => out.push(i),
            _ => {}
        }
    }
    out
}

/// A left-hand side that only names variables (possibly with a declared
/// type), as opposed to a field, element or dereference target.
fn is_plain_target(lhs: &[Token<'_>]) -> bool {
    lhs.iter().any(|t| matches!(t, Token::Ident(_)))
        && lhs.iter().all(|t| match t {
            Token::Ident(_) => true,
            Token::Punct(p) => matches!(*p, "<" | ">" | "," | "?" | ":" | "&" | "@"),
            Token::Number(_) => false,
        })
}

fn collect(tokens: &[Token<'_>], lexicon: &Lexicon, vars: &mut BTreeSet<String>) {
    for (i, t) in tokens.iter().enumerate() {
        let Token::Ident(word) = *t else { continue };
        if lexicon.is_keyword(word) {
            continue;
        }
        let prev = i.checked_sub(1).map(|j| tokens[j]);
        let next = tokens.get(i + 1).copied();
        if next == Some(Token::Punct("(")) {
            continue;
        }
        match prev {
            Some(Token::Punct(".")) => {
                let receiver = i
                    .checked_sub(2)
                    .map(|j| tokens[j])
                    .is_some_and(|r| matches!(r, Token::Ident(w) if lexicon.receivers.contains(w)));
                let preceded = i >= 3 && tokens[i - 3] == Token::Punct(".");
                if !receiver || preceded {
                    continue;
                }
            }
            Some(Token::Punct("::")) | Some(Token::Punct("@")) | Some(Token::Punct("->")) => continue,
            _ => {}
        }
        if lexicon.receivers.contains(word) {
            continue;
        }
        vars.insert(word.to_string());
    }
}
