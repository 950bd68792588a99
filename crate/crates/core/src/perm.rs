//! Permutations, diagrams, Rothe diagrams and pattern containment.
//!
//! All public indices are 1-based: rows, columns, positions and values of a
//! permutation of `[n] = {1, ..., n}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported `n`; columns are stored as 64-bit row masks.
pub const MAX_N: usize = 64;

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking that it is a bijection on `[n]`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n > MAX_N {
            return Err(Error::SizeLimit {
                size: n,
                limit: MAX_N,
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    input: join(&entries, ","),
                    reason: format!("entry {v} is outside 1..={n}"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation {
                    input: join(&entries, ","),
                    reason: format!("entry {v} repeated"),
                });
            }
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            entries: (1..=n).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `w_i` for a 1-based position `i`.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { entries: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn inversions(&self) -> usize {
        let w = &self.entries;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    /// `w s_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Permutation { entries }
    }

    /// Positions `i` with `w_i < w_{i+1}`.
    pub fn ascents(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] < p[1])
            .map(|(i, _)| i + 1)
    }

    /// The permutation order-isomorphic to `values` (which must be distinct).
    pub fn flatten(values: &[usize]) -> Self {
        let mut sorted: Vec<usize> = values.to_vec();
        sorted.sort_unstable();
        let entries = values
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect();
        Permutation { entries }
    }
}

fn join(values: &[usize], sep: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

impl fmt::Display for Permutation {
    /// Digits without separators for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            f.write_str(&join(&self.entries, ""))
        } else {
            f.write_str(&join(&self.entries, ","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::InvalidPermutation {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        let entries = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad("non-numeric entry")))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| bad("non-digit character"))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(entries).map_err(|e| match e {
            Error::InvalidPermutation { reason, .. } => bad(&reason),
            other => other,
        })
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((1..=n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (0..succ.len().saturating_sub(1))
            .rev()
            .find(|&i| succ[i] < succ[i + 1])
        {
            let j = (i + 1..succ.len()).rev().find(|&j| succ[j] > succ[i]).unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { entries: current })
    }
}

/// A column of a diagram: a subset of `[n]` stored as a bit mask (row `r` is bit `r - 1`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column(u64);

impl Column {
    pub const EMPTY: Column = Column(0);

    pub fn from_bits(bits: u64) -> Self {
        Column(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_rows<I: IntoIterator<Item = usize>>(rows: I) -> Self {
        Column(
            rows.into_iter()
                .fold(0u64, |acc, r| acc | (1u64 << (r - 1))),
        )
    }

    /// The interval `[j] = {1, ..., j}`.
    pub fn interval(j: usize) -> Self {
        if j >= 64 {
            Column(u64::MAX)
        } else {
            Column((1u64 << j) - 1)
        }
    }

    pub fn contains(self, row: usize) -> bool {
        (1..=64).contains(&row) && self.0 >> (row - 1) & 1 == 1
    }

    pub fn insert(&mut self, row: usize) {
        self.0 |= 1u64 << (row - 1);
    }

    pub fn remove(&mut self, row: usize) {
        self.0 &= !(1u64 << (row - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Rows in increasing order.
    pub fn rows(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let r = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(r)
            }
        })
    }

    /// `Some(j)` if the column equals `[j]` for some `j >= 1`.
    pub fn as_interval(self) -> Option<usize> {
        if self.0 != 0 && self.0 & (self.0 + 1) == 0 {
            Some(self.0.count_ones() as usize)
        } else {
            None
        }
    }

    /// Smallest `i` with `i` not in the column but `i + 1` in it.
    pub fn smallest_missing_tooth(self) -> Option<usize> {
        let teeth = (self.0 >> 1) & !self.0;
        (teeth != 0).then(|| teeth.trailing_zeros() as usize + 1)
    }

    /// Exchanges rows `i` and `i + 1`.
    pub fn swap_rows(self, i: usize) -> Self {
        let a = self.contains(i);
        let b = self.contains(i + 1);
        let mut out = self;
        if a != b {
            out.0 ^= (1u64 << (i - 1)) | (1u64 << i);
        }
        out
    }

    /// Removes row `k` and shifts the rows below it up by one.
    pub fn delete_row(self, k: usize) -> Self {
        let low = self.0 & ((1u64 << (k - 1)) - 1);
        let high = if k >= 64 { 0 } else { self.0 >> k };
        Column(low | (high << (k - 1)))
    }

    /// Inserts an empty row at position `k`, shifting rows `>= k` down by one.
    pub fn insert_row(self, k: usize) -> Self {
        let low = self.0 & ((1u64 << (k - 1)) - 1);
        let high = self.0 >> (k - 1);
        Column(low | (high << k))
    }

    /// `self <= other`: equal size and the `t`-th least element of `self` does
    /// not exceed the `t`-th least element of `other`, for every `t`.
    pub fn leq(self, other: Column) -> bool {
        self.len() == other.len() && self.rows().zip(other.rows()).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.rows()).finish()
    }
}

/// `R <= S` in the column order used by flagged Weyl modules.
pub fn column_leq(r: Column, s: Column) -> bool {
    r.leq(s)
}

/// A diagram: an ordered sequence of columns, each a subset of `[n]`.
///
/// `n` bounds the row indices. Rothe diagrams have exactly `n` columns; other
/// diagrams (such as the orthodontic reconstruction) may have any number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    columns: Vec<Column>,
}

impl Diagram {
    pub fn new(n: usize, columns: Vec<Column>) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::SizeLimit {
                size: n,
                limit: MAX_N,
            });
        }
        let frame = Column::interval(n);
        if let Some((j, _)) = columns
            .iter()
            .enumerate()
            .find(|(_, c)| c.0 & !frame.0 != 0)
        {
            return Err(Error::InvalidDiagram(format!(
                "column {} has a row outside 1..={n}",
                j + 1
            )));
        }
        Ok(Diagram { n, columns })
    }

    /// The `n x n` empty diagram.
    pub fn empty(n: usize) -> Self {
        Diagram {
            n,
            columns: vec![Column::EMPTY; n],
        }
    }

    /// Builds an `n x n` diagram from 1-based `(row, column)` boxes.
    pub fn from_boxes(n: usize, boxes: &[(usize, usize)]) -> Result<Self> {
        let mut columns = vec![Column::EMPTY; n];
        for &(r, c) in boxes {
            if r == 0 || r > n || c == 0 || c > n {
                return Err(Error::InvalidDiagram(format!(
                    "box ({r},{c}) outside [{n}]x[{n}]"
                )));
            }
            columns[c - 1].insert(r);
        }
        Diagram::new(n, columns)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// Column `j` (1-based).
    pub fn column(&self, j: usize) -> Column {
        self.columns[j - 1]
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        col >= 1 && col <= self.columns.len() && self.columns[col - 1].contains(row)
    }

    pub fn num_boxes(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    /// Boxes `(row, col)` in column-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.rows().map(move |r| (r, j + 1)))
    }

    /// Number of boxes in row `k`.
    pub fn row_len(&self, k: usize) -> usize {
        self.columns.iter().filter(|c| c.contains(k)).count()
    }

    /// True iff `(r,c'),(r',c)` with `r < r'`, `c < c'` always forces `(r,c)`.
    pub fn has_northwest_property(&self) -> bool {
        let cols = &self.columns;
        for c in 0..cols.len() {
            for cp in c + 1..cols.len() {
                for r in cols[cp].rows() {
                    // A box strictly below r in column c requires (r, c).
                    let below = cols[c].0 >> r;
                    if below != 0 && !cols[c].contains(r) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Deletes row `k` and column `l` (see [`DeleteMode`]).
    pub fn delete_row_col(&self, k: usize, l: usize, mode: DeleteMode) -> Result<Diagram> {
        if k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange {
                what: "row",
                index: k,
                max: self.n,
            });
        }
        if l == 0 || l > self.columns.len() {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: l,
                max: self.columns.len(),
            });
        }
        Ok(match mode {
            DeleteMode::Reindex => Diagram {
                n: self.n - 1,
                columns: self
                    .columns
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j + 1 != l)
                    .map(|(_, c)| c.delete_row(k))
                    .collect(),
            },
            DeleteMode::KeepIndex => Diagram {
                n: self.n,
                columns: self
                    .columns
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| {
                        if j + 1 == l {
                            Column::EMPTY
                        } else {
                            let mut c = c;
                            c.remove(k);
                            c
                        }
                    })
                    .collect(),
            },
        })
    }

    /// Multiset equality of the nonempty columns.
    pub fn column_equivalent(&self, other: &Diagram) -> bool {
        let key = |d: &Diagram| {
            let mut v: Vec<Column> = d.columns.iter().copied().filter(|c| !c.is_empty()).collect();
            v.sort_unstable();
            v
        };
        key(self) == key(other)
    }

    /// Appends empty columns until there are at least `len` columns.
    pub fn padded(&self, len: usize) -> Diagram {
        let mut columns = self.columns.clone();
        if columns.len() < len {
            columns.resize(len, Column::EMPTY);
        }
        Diagram { n: self.n, columns }
    }

    /// Parses the text format: one line per column, `j: i1 i2 ...`, with
    /// empty columns written `j:`. The grid size is the number of columns.
    pub fn parse_text(text: &str) -> Result<Diagram> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let n = lines.len();
        if n > MAX_N {
            return Err(Error::SizeLimit {
                size: n,
                limit: MAX_N,
            });
        }
        let mut columns = Vec::with_capacity(n);
        for (idx, line) in lines.iter().enumerate() {
            let (head, rest) = line.split_once(':').ok_or_else(|| {
                Error::InvalidDiagram(format!("line {} lacks `j:` prefix", idx + 1))
            })?;
            let j: usize = head
                .trim()
                .parse()
                .map_err(|_| Error::InvalidDiagram(format!("bad column label `{head}`")))?;
            if j != idx + 1 {
                return Err(Error::InvalidDiagram(format!(
                    "expected column {}, found {j}",
                    idx + 1
                )));
            }
            let mut col = Column::EMPTY;
            for tok in rest.split_whitespace() {
                let r: usize = tok
                    .parse()
                    .map_err(|_| Error::InvalidDiagram(format!("bad row `{tok}` in column {j}")))?;
                if r == 0 || r > n {
                    return Err(Error::InvalidDiagram(format!(
                        "row {r} in column {j} outside 1..={n}"
                    )));
                }
                col.insert(r);
            }
            columns.push(col);
        }
        Diagram::new(n, columns)
    }

    /// Inverse of [`Diagram::parse_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (j, c) in self.columns.iter().enumerate() {
            out.push_str(&format!("{}:", j + 1));
            for r in c.rows() {
                out.push_str(&format!(" {r}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram(n={}, ", self.n)?;
        f.debug_list().entries(&self.columns).finish()?;
        write!(f, ")")
    }
}

/// How [`Diagram::delete_row_col`] treats the removed row and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeleteMode {
    /// Remove the row and column and relabel the rest order-preservingly into `[n-1]`.
    Reindex,
    /// Remove only the boxes in the row or column, keeping the `[n] x [n]` frame.
    KeepIndex,
}

/// `D(w) = {(i,j) : i < w^{-1}(j) and j < w(i)}`.
pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let n = w.size();
    let inv = w.inverse();
    let columns = (1..=n)
        .map(|j| Column::from_rows((1..inv.get(j)).filter(|&i| j < w.get(i))))
        .collect();
    Diagram { n, columns }
}

/// Lexicographically least realization `j_1 < ... < j_m` of `sigma` in `w`.
pub fn contains_pattern(w: &Permutation, sigma: &Permutation) -> Option<Vec<usize>> {
    let m = sigma.size();
    if m > w.size() {
        return None;
    }
    let mut chosen = Vec::with_capacity(m);
    if search_pattern(w.entries(), sigma.entries(), 0, &mut chosen) {
        Some(chosen.into_iter().map(|j| j + 1).collect())
    } else {
        None
    }
}

fn search_pattern(w: &[usize], sigma: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let t = chosen.len();
    if t == sigma.len() {
        return true;
    }
    let remaining = sigma.len() - t;
    for j in start..=w.len() - remaining {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(s, &p)| (sigma[s] < sigma[t]) == (w[p] < w[j]));
        if consistent {
            chosen.push(j);
            if search_pattern(w, sigma, j + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// The pattern in `S_{n-1}` obtained by deleting the entry in position `k`.
pub fn one_step_pattern(w: &Permutation, k: usize) -> Result<Permutation> {
    if k == 0 || k > w.size() {
        return Err(Error::IndexOutOfRange {
            what: "position",
            index: k,
            max: w.size(),
        });
    }
    let removed = w.get(k);
    let entries = w
        .entries()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i + 1 != k)
        .map(|(_, &v)| if v > removed { v - 1 } else { v })
        .collect();
    Ok(Permutation { entries })
}
