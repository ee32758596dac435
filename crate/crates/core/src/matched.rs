//! Matched lines: where breakpoints go.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::diff::{myers_diff, LineDiff, SourceFile};
use crate::error::ScopeError;
use crate::scope::{detect_scopes, innermost, Scope, ScopeKind, ScopeStrategy};

/// Unchanged line pairs `(original, patched)` that lie inside a changed
/// function. Each side appears at most once; pairs are ordered by the
/// original line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchedLines {
    pairs: Vec<(u32, u32)>,
    by_patched: BTreeMap<u32, u32>,
}

impl MatchedLines {
    /// Builds a map from explicit pairs. Pairs are sorted by original line;
    /// a line repeated on either side keeps its first pair.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut by_original = BTreeMap::new();
        let mut by_patched = BTreeMap::new();
        for (o, p) in pairs {
            if by_original.contains_key(&o) || by_patched.contains_key(&p) {
                continue;
            }
            by_original.insert(o, p);
            by_patched.insert(p, o);
        }
        MatchedLines {
            pairs: by_original.into_iter().collect(),
            by_patched,
        }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// The original line matched to a patched line.
    pub fn to_original(&self, patched_line: u32) -> Option<u32> {
        self.by_patched.get(&patched_line).copied()
    }

    pub fn to_patched(&self, original_line: u32) -> Option<u32> {
        self.pairs
            .binary_search_by_key(&original_line, |&(o, _)| o)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn original_lines(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().map(|&(o, _)| o)
    }

    pub fn patched_lines(&self) -> impl Iterator<Item = u32> + '_ {
        self.by_patched.keys().copied()
    }

    /// The same pairs with the two sides exchanged.
    pub fn inverted(&self) -> MatchedLines {
        MatchedLines::from_pairs(self.pairs.iter().map(|&(o, p)| (p, o)))
    }
}

/// Computes the matched lines between two versions of a file.
///
/// A pair qualifies when its original line sits in the body of a function
/// that contains a deleted line, or of a function whose patched counterpart
/// (the innermost function around the patched line) contains an inserted
/// line. Lines outside any function belong to the whole-file scope.
pub fn matched_lines(
    original: &SourceFile,
    patched: &SourceFile,
    strategy: ScopeStrategy,
) -> Result<MatchedLines, ScopeError> {
    let diff = myers_diff(original, patched);
    let original_scopes = detect_scopes(original, strategy)?;
    let patched_scopes = detect_scopes(patched, strategy)?;
    Ok(matched_from_diff(
        &diff,
        (&original_scopes, original.len()),
        (&patched_scopes, patched.len()),
    ))
}

pub fn matched_from_diff(diff: &LineDiff, original: (&[Scope], u32), patched: (&[Scope], u32)) -> MatchedLines {
    if diff.is_empty() {
        return MatchedLines::default();
    }
    // The whole-file scope only owns the lines outside every function.
    let changed = |scope: &Scope, lines: &BTreeSet<u32>, (scopes, len): (&[Scope], u32)| match scope.kind {
        ScopeKind::WholeFile => lines
            .iter()
            .any(|&l| innermost(scopes, l, len).kind == ScopeKind::WholeFile),
        ScopeKind::Function => lines.range(scope.start_line..=scope.end_line).next().is_some(),
    };
    let pairs = diff.unchanged.iter().copied().filter(|&(o, p)| {
        let o_scope = innermost(original.0, o, original.1);
        let p_scope = innermost(patched.0, p, patched.1);
        o_scope.body_contains(o)
            && (changed(&o_scope, &diff.deleted, original) || changed(&p_scope, &diff.inserted, patched))
    });
    MatchedLines::from_pairs(pairs)
}
