//! Root operators, quantized Demazure operators and the tableau expansion
//! of Schubert polynomials.
//!
//! Tableaux are kept as flat reading words. A word becomes a filling of an
//! intermediate diagram `O(w, r)` only when read into it through
//! [`read_into_diagram`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::orthodontia::Orthodontia;
use crate::perm::{Diagram, Permutation};
use crate::poly::{Monomial, Polynomial};

/// A reading word with entries in `[n]`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(entries: Vec<u8>) -> Self {
        Word(entries)
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `wt(T)`: the number of occurrences of each of `1, ..., n`.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut wt = vec![0; n];
        for &e in &self.0 {
            wt[e as usize - 1] += 1;
        }
        wt
    }

    fn concat(&self, tail: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + tail.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&tail.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&e| e < 10) { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let bad = || Error::InvalidPermutation {
            input: s.to_string(),
            reason: "not a word of positive integers".to_string(),
        };
        let s = s.trim();
        let entries: Option<Vec<u8>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect()
        };
        match entries {
            Some(e) if e.iter().all(|&x| x > 0) => Ok(Word(e)),
            _ => Err(bad()),
        }
    }
}

/// The root operator `f_i`.
///
/// Pairs every `i` with a later `i + 1` (ignoring already paired letters and
/// all other letters); if some `i` stays unpaired, the leftmost one becomes
/// `i + 1`. Returns `None` when every `i` is paired.
pub fn root_operator(i: usize, word: &Word) -> Option<Word> {
    root_operator_position(i, word).map(|pos| {
        let mut out = word.clone();
        out.0[pos] += 1;
        out
    })
}

/// Position (0-based) of the letter `f_i` would change.
pub fn root_operator_position(i: usize, word: &Word) -> Option<usize> {
    let lo = i as u8;
    let hi = lo + 1;
    let mut open: Vec<usize> = Vec::new();
    for (pos, &e) in word.0.iter().enumerate() {
        if e == lo {
            open.push(pos);
        } else if e == hi {
            open.pop();
        }
    }
    open.first().copied()
}

/// `pi~_i`: the union of the full `f_i`-strings of the given words.
pub fn quantized_demazure(i: usize, words: &BTreeSet<Word>) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for w in words {
        let mut current = w.clone();
        loop {
            let next = root_operator(i, &current);
            out.insert(current);
            match next {
                Some(n) => current = n,
                None => break,
            }
        }
    }
    out
}

/// `omega~_j^m`: `m` copies of `1, 2, ..., j`.
pub fn omega_block(j: usize, m: usize) -> Word {
    Word(
        std::iter::repeat_n((1..=j as u8).collect::<Vec<_>>(), m)
            .flatten()
            .collect(),
    )
}

/// The tableau family `T_w` together with every stage `T_w(r)`.
#[derive(Clone, Debug)]
pub struct Tableaux {
    orthodontia: Orthodontia,
    tau: Permutation,
    stages: Vec<BTreeSet<Word>>,
}

impl Tableaux {
    pub fn new(w: &Permutation) -> Self {
        let orthodontia = Orthodontia::new(w);
        let n = w.size();
        let seq = orthodontia.sequence().clone();
        let l = seq.len();

        let mut prefix = Word::default();
        for (j, &k) in seq.interval_multiplicities.iter().enumerate() {
            prefix = prefix.concat(&omega_block(j + 1, k));
        }

        let mut stages = vec![BTreeSet::new(); l + 1];
        if l == 0 {
            stages[0].insert(prefix);
        } else {
            stages[l].insert(omega_block(seq.teeth[l - 1], seq.step_multiplicities[l - 1]));
            for r in (0..l).rev() {
                let head = if r == 0 {
                    prefix.clone()
                } else {
                    omega_block(seq.teeth[r - 1], seq.step_multiplicities[r - 1])
                };
                let raised = quantized_demazure(seq.teeth[r], &stages[r + 1]);
                stages[r] = raised.iter().map(|t| head.concat(t)).collect();
            }
        }

        let tau = tau_for(orthodontia.rothe(), &orthodontia.reconstruction().padded(n))
            .expect("D(w) is column-equivalent to its orthodontic reconstruction");
        Tableaux {
            orthodontia,
            tau,
            stages,
        }
    }

    pub fn orthodontia(&self) -> &Orthodontia {
        &self.orthodontia
    }

    /// `T_w = T_w(0)`.
    pub fn set(&self) -> &BTreeSet<Word> {
        &self.stages[0]
    }

    /// `T_w(r)` for `0 <= r <= l`.
    pub fn stage(&self, r: usize) -> Result<&BTreeSet<Word>> {
        self.stages.get(r).ok_or(Error::IndexOutOfRange {
            what: "stage",
            index: r,
            max: self.stages.len() - 1,
        })
    }

    pub fn num_stages(&self) -> usize {
        self.stages.len()
    }

    /// The column reindexing `tau` matching `D(w)` to `D_{i,m}` padded with empty columns.
    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    /// Boxes of `O(w, r)` in filling order: the columns `tau^{-1}(1), tau^{-1}(2), ...`
    /// that are nonempty in `O(w, r)`, each read top to bottom.
    pub fn layout(&self, r: usize) -> Result<Vec<(usize, usize)>> {
        if r >= self.stages.len() {
            return Err(Error::IndexOutOfRange {
                what: "stage",
                index: r,
                max: self.stages.len() - 1,
            });
        }
        let diagram = self.orthodontia.intermediate(r);
        let inv = self.tau.inverse();
        Ok(inv
            .entries()
            .iter()
            .flat_map(|&c| diagram.column(c).rows().map(move |row| (row, c)))
            .collect())
    }

    /// Reads `word` into `O(w, r)` and checks that the filling is column-strict and row-flagged.
    pub fn read(&self, word: &Word, r: usize) -> Result<FillingView> {
        let layout = self.layout(r)?;
        if layout.len() != word.len() {
            return Err(Error::LengthMismatch {
                expected: layout.len(),
                actual: word.len(),
            });
        }
        let cells = layout
            .into_iter()
            .zip(word.entries())
            .map(|((row, col), &v)| Cell { row, col, value: v })
            .collect();
        let view = FillingView {
            diagram: self.orthodontia.intermediate(r).clone(),
            word: word.clone(),
            cells,
        };
        view.validate()?;
        Ok(view)
    }

    /// `sum over T in T_w of x^{wt(T)}`.
    pub fn polynomial(&self) -> Polynomial {
        let n = self.orthodontia.n();
        let mut out = Polynomial::zero(n);
        for t in self.set() {
            out.add_term(Monomial::new(t.weight(n)), BigInt::from(1));
        }
        out
    }

    /// Original column indices in which `f_{i_j}` changes a letter, over every
    /// word of `T_w(j)` and every iterate `f_{i_j}^u`.
    pub fn root_operator_columns(&self, j: usize) -> Result<BTreeSet<usize>> {
        let l = self.orthodontia.len();
        if j == 0 || j > l {
            return Err(Error::IndexOutOfRange {
                what: "step",
                index: j,
                max: l,
            });
        }
        let tooth = self.orthodontia.sequence().teeth[j - 1];
        let layout = self.layout(j)?;
        let mut cols = BTreeSet::new();
        for t in &self.stages[j] {
            let mut current = t.clone();
            while let Some(pos) = root_operator_position(tooth, &current) {
                cols.insert(layout[pos].1);
                current.0[pos] += 1;
            }
        }
        Ok(cols)
    }
}

/// The unique column bijection `tau` with column `c` of `d` equal to column
/// `tau(c)` of `target`, and `tau(c) < tau(c')` whenever columns `c < c'` of
/// `d` are equal. Both diagrams must have the same number of columns.
pub fn tau_for(d: &Diagram, target: &Diagram) -> Option<Permutation> {
    if d.num_columns() != target.num_columns() {
        return None;
    }
    let mut used = vec![false; target.num_columns()];
    let mut tau = Vec::with_capacity(d.num_columns());
    for col in d.columns() {
        let slot = target
            .columns()
            .iter()
            .enumerate()
            .position(|(t, c)| !used[t] && c == col)?;
        used[slot] = true;
        tau.push(slot + 1);
    }
    Permutation::new(tau).ok()
}

/// `tau` for the Rothe diagram of `w`.
pub fn tau_reindexing(w: &Permutation) -> Permutation {
    Tableaux::new(w).tau
}

/// `T_w`.
pub fn tableaux_set(w: &Permutation) -> BTreeSet<Word> {
    Tableaux::new(w).stages.swap_remove(0)
}

/// `T_w(r)`.
pub fn tableaux_stage(w: &Permutation, r: usize) -> Result<BTreeSet<Word>> {
    Tableaux::new(w).stage(r).cloned()
}

/// Schubert polynomial of `w` as the weight generating function of `T_w`.
pub fn schubert_from_tableaux(w: &Permutation) -> Polynomial {
    Tableaux::new(w).polynomial()
}

/// Reads `word` into `O(w, r)`.
pub fn read_into_diagram(word: &Word, w: &Permutation, r: usize) -> Result<FillingView> {
    Tableaux::new(w).read(word, r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub value: u8,
}

/// A word read into an intermediate diagram.
#[derive(Clone, Debug)]
pub struct FillingView {
    diagram: Diagram,
    word: Word,
    cells: Vec<Cell>,
}

impl FillingView {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Cells in reading order; cell `p` holds letter `p` of the word.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<u8> {
        self.cells
            .iter()
            .find(|c| c.row == row && c.col == col)
            .map(|c| c.value)
    }

    fn validate(&self) -> Result<()> {
        for pair in self.cells.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a.col == b.col && a.value >= b.value {
                return Err(Error::FillingViolation {
                    property: "column strictness",
                    row: b.row,
                    col: b.col,
                });
            }
        }
        if let Some(c) = self.cells.iter().find(|c| c.value as usize > c.row) {
            return Err(Error::FillingViolation {
                property: "row flag",
                row: c.row,
                col: c.col,
            });
        }
        Ok(())
    }
}
