//! Line-level diffing with Myers' O(ND) algorithm (linear-space variant).

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// A source file split into lines. Line numbers are 1-based and dense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceFile {
    pub path: String,
    lines: Vec<String>,
}

impl SourceFile {
    pub fn new(path: impl Into<String>, lines: Vec<String>) -> Self {
        SourceFile {
            path: path.into(),
            lines,
        }
    }

    /// Splits `text` on LF. A CR before the LF is stripped, and a final line
    /// terminator does not open an extra empty line.
    pub fn from_text(path: impl Into<String>, text: &str) -> Self {
        let mut lines: Vec<String> = text
            .split('\n')
            .map(|l| l.strip_suffix('\r').unwrap_or(l).into())
            .collect();
        if text.is_empty() || text.ends_with('\n') {
            lines.pop();
        }
        SourceFile::new(path, lines)
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    /// The text of 1-based line `n`.
    pub fn line(&self, n: u32) -> Option<&str> {
        let idx = (n as usize).checked_sub(1)?;
        self.lines.get(idx).map(String::as_str)
    }

    pub fn len(&self) -> u32 {
        self.lines.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

/// Result of a line diff. All line numbers are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LineDiff {
    /// Original lines absent from the patched version.
    pub deleted: BTreeSet<u32>,
    /// Patched lines absent from the original version.
    pub inserted: BTreeSet<u32>,
    /// Unchanged lines as `(original, patched)`, strictly increasing in both.
    pub unchanged: Vec<(u32, u32)>,
}

impl LineDiff {
    pub fn is_empty(&self) -> bool {
        self.deleted.is_empty() && self.inserted.is_empty()
    }

    pub fn edit_distance(&self) -> usize {
        self.deleted.len() + self.inserted.len()
    }

    pub fn to_patched(&self, original_line: u32) -> Option<u32> {
        self.unchanged
            .binary_search_by_key(&original_line, |&(o, _)| o)
            .ok()
            .map(|i| self.unchanged[i].1)
    }

    pub fn to_original(&self, patched_line: u32) -> Option<u32> {
        self.unchanged
            .binary_search_by_key(&patched_line, |&(_, p)| p)
            .ok()
            .map(|i| self.unchanged[i].0)
    }

    /// The same diff seen from the other side.
    pub fn inverted(&self) -> LineDiff {
        LineDiff {
            deleted: self.inserted.clone(),
            inserted: self.deleted.clone(),
            unchanged: self.unchanged.iter().map(|&(o, p)| (p, o)).collect(),
        }
    }
}

/// Diffs two source files line by line. Lines compare as raw text, so
/// whitespace-only edits count as changes.
pub fn myers_diff(original: &SourceFile, patched: &SourceFile) -> LineDiff {
    diff_slices(original.lines(), patched.lines())
}

/// Myers diff over arbitrary comparable items.
pub fn diff_slices<T: PartialEq>(old: &[T], new: &[T]) -> LineDiff {
    let mut matches = Vec::new();
    conquer(old, 0..old.len(), new, 0..new.len(), &mut matches);

    let mut diff = LineDiff::default();
    let mut next_old = 0;
    let mut next_new = 0;
    for &(o, n) in &matches {
        diff.deleted.extend((next_old..o).map(|i| i as u32 + 1));
        diff.inserted.extend((next_new..n).map(|i| i as u32 + 1));
        diff.unchanged.push((o as u32 + 1, n as u32 + 1));
        next_old = o + 1;
        next_new = n + 1;
    }
    diff.deleted.extend((next_old..old.len()).map(|i| i as u32 + 1));
    diff.inserted.extend((next_new..new.len()).map(|i| i as u32 + 1));
    diff
}

type Range = core::ops::Range<usize>;

/// Diagonal-indexed furthest-reaching array.
struct V {
    offset: isize,
    data: Vec<usize>,
}

impl V {
    fn new(max_d: usize) -> Self {
        V {
            offset: max_d as isize + 1,
            data: vec![0; 2 * max_d + 3],
        }
    }
}

impl core::ops::Index<isize> for V {
    type Output = usize;
    fn index(&self, k: isize) -> &usize {
        &self.data[(k + self.offset) as usize]
    }
}

impl core::ops::IndexMut<isize> for V {
    fn index_mut(&mut self, k: isize) -> &mut usize {
        &mut self.data[(k + self.offset) as usize]
    }
}

fn common_prefix<T: PartialEq>(old: &[T], o: Range, new: &[T], n: Range) -> usize {
    old[o].iter().zip(&new[n]).take_while(|(a, b)| a == b).count()
}

fn common_suffix<T: PartialEq>(old: &[T], o: Range, new: &[T], n: Range) -> usize {
    old[o]
        .iter()
        .rev()
        .zip(new[n].iter().rev())
        .take_while(|(a, b)| a == b)
        .count()
}

/// Finds a point on an optimal edit path strictly between the two corners of
/// the edit graph. Both ranges must be non-empty with no common prefix or
/// suffix.
fn middle_split<T: PartialEq>(old: &[T], o: Range, new: &[T], p: Range) -> (usize, usize) {
    let n = o.len();
    let m = p.len();
    let delta = n as isize - m as isize;
    let odd = delta & 1 == 1;
    let max_d = (n + m).div_ceil(2) + 1;
    let mut vf = V::new(max_d);
    let mut vb = V::new(max_d);

    for d in 0..max_d as isize {
        let mut k = -d;
        while k <= d {
            let mut x = if k == -d || (k != d && vf[k - 1] < vf[k + 1]) {
                vf[k + 1]
            } else {
                vf[k - 1] + 1
            };
            let y = (x as isize - k) as usize;
            let (x0, y0) = (x, y);
            if x < n && y < m {
                x += common_prefix(old, o.start + x..o.end, new, p.start + y..p.end);
            }
            vf[k] = x;
            if odd && (k - delta).abs() < d && vf[k] + vb[-(k - delta)] >= n {
                return (o.start + x0, p.start + y0);
            }
            k += 2;
        }

        let mut k = -d;
        while k <= d {
            let mut x = if k == -d || (k != d && vb[k - 1] < vb[k + 1]) {
                vb[k + 1]
            } else {
                vb[k - 1] + 1
            };
            let mut y = (x as isize - k) as usize;
            if x < n && y < m {
                let adv = common_suffix(old, o.start..o.start + n - x, new, p.start..p.start + m - y);
                x += adv;
                y += adv;
            }
            vb[k] = x;
            if !odd && (k - delta).abs() <= d && vb[k] + vf[-(k - delta)] >= n {
                return (o.start + n - x, p.start + m - y);
            }
            k += 2;
        }
    }
    unreachable!("edit graph always has a middle snake")
}

fn conquer<T: PartialEq>(old: &[T], mut o: Range, new: &[T], mut p: Range, out: &mut Vec<(usize, usize)>) {
    let prefix = common_prefix(old, o.clone(), new, p.clone());
    out.extend((0..prefix).map(|i| (o.start + i, p.start + i)));
    o.start += prefix;
    p.start += prefix;

    let suffix = common_suffix(old, o.clone(), new, p.clone());
    o.end -= suffix;
    p.end -= suffix;

    if !o.is_empty() && !p.is_empty() {
        let (x, y) = middle_split(old, o.clone(), new, p.clone());
        conquer(old, o.start..x, new, p.start..y, out);
        conquer(old, x..o.end, new, y..p.end, out);
    }

    out.extend((0..suffix).map(|i| (o.end + i, p.end + i)));
}
