use core::fmt;

/// Scope detection failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScopeError {
    /// A brace without a partner; `line` is where the stray brace sits.
    UnbalancedScope { line: u32 },
}

impl fmt::Display for ScopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScopeError::UnbalancedScope { line } => write!(f, "unbalanced brace at line {line}"),
        }
    }
}

impl core::error::Error for ScopeError {}

/// Failure while differencing two traces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffError {
    /// A patched-version state sits on a line that has no matched original line.
    UnmappedLine { line: u32 },
    /// A state refers to a line beyond the end of its source file.
    LineOutOfRange { line: u32, len: u32 },
    /// A leaf was expected but the value has no primitive payload.
    NotPrimitive,
}

impl fmt::Display for DiffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffError::UnmappedLine { line } => {
                write!(f, "patched line {line} is not a matched line")
            }
            DiffError::LineOutOfRange { line, len } => {
                write!(f, "line {line} is outside the source file ({len} lines)")
            }
            DiffError::NotPrimitive => f.write_str("value is not a primitive leaf"),
        }
    }
}

impl core::error::Error for DiffError {}
