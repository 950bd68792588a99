//! The orthodontia algorithm on Rothe diagrams.
//!
//! Starting from `D(w)`, repeatedly empty every column of the form `[j]`
//! (recording how many there were), then swap rows `i` and `i + 1` where `i`
//! is the smallest missing tooth of the leftmost nonempty column. The
//! sequence of swapped rows `i = (i_1, ..., i_l)` together with the recorded
//! multiplicities `k_1, ..., k_n; m_1, ..., m_l` rebuilds `D(w)` up to column
//! order and evaluates `S_w` through Demazure operators.

use crate::error::{Error, Result};
use crate::perm::{rothe_diagram, Column, Diagram, Permutation};
use crate::poly::{Monomial, Polynomial};

/// The orthodontic sequence `(i, m)` of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthodonticSequence {
    /// Missing teeth `i_1, ..., i_l`.
    pub teeth: Vec<usize>,
    /// `k_1, ..., k_n`: number of columns `[j]` in `D(w)`.
    pub interval_multiplicities: Vec<usize>,
    /// `m_1, ..., m_l`: number of columns `[i_r]` emptied after swap `r`.
    pub step_multiplicities: Vec<usize>,
}

impl OrthodonticSequence {
    /// Number of swaps `l`.
    pub fn len(&self) -> usize {
        self.teeth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.teeth.is_empty()
    }

    /// `D_{i,m}`: `k_j` copies of `[j]` for each `j`, followed by `m_r` copies
    /// of `s_{i_1} ... s_{i_r} [i_r]` for each step `r`, in that order.
    pub fn build_diagram(&self, n: usize) -> Diagram {
        let mut columns = Vec::new();
        for (j, &k) in self.interval_multiplicities.iter().enumerate() {
            columns.extend(std::iter::repeat_n(Column::interval(j + 1), k));
        }
        for (r, &m) in self.step_multiplicities.iter().enumerate() {
            let mut col = Column::interval(self.teeth[r]);
            for &i in self.teeth[..=r].iter().rev() {
                col = col.swap_rows(i);
            }
            columns.extend(std::iter::repeat_n(col, m));
        }
        Diagram::new(n, columns).expect("orthodontic reconstruction stays inside the frame")
    }
}

/// One swap of the algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthodontiaStep {
    /// The missing tooth `i_r`.
    pub tooth: usize,
    /// `O(w, r)`: the diagram right after the swap, with the original column indexing.
    pub diagram: Diagram,
    /// Columns equal to `[i_r]` that are emptied after this swap (their count is `m_r`).
    pub removed: Vec<usize>,
}

/// Full trace of the orthodontia run on `D(w)`.
#[derive(Clone, Debug)]
pub struct Orthodontia {
    perm: Permutation,
    rothe: Diagram,
    sequence: OrthodonticSequence,
    initial_removed: Vec<usize>,
    steps: Vec<OrthodontiaStep>,
}

/// Runs the orthodontia on `D(w)`.
pub fn orthodontic_sequence(w: &Permutation) -> Orthodontia {
    Orthodontia::new(w)
}

/// True iff the nonempty columns of the two diagrams agree as multisets.
pub fn column_equivalent(a: &Diagram, b: &Diagram) -> bool {
    a.column_equivalent(b)
}

impl Orthodontia {
    pub fn new(w: &Permutation) -> Self {
        let n = w.size();
        let rothe = rothe_diagram(w);
        let mut columns: Vec<Column> = rothe.columns().to_vec();

        let mut interval_multiplicities = vec![0; n];
        let mut initial_removed = Vec::new();
        for (c, col) in columns.iter_mut().enumerate() {
            if let Some(j) = col.as_interval() {
                interval_multiplicities[j - 1] += 1;
                initial_removed.push(c + 1);
                *col = Column::EMPTY;
            }
        }

        let mut steps = Vec::new();
        let mut teeth = Vec::new();
        let mut step_multiplicities = Vec::new();
        while let Some(first) = columns.iter().find(|c| !c.is_empty()) {
            let tooth = first
                .smallest_missing_tooth()
                .expect("a nonempty non-interval column has a missing tooth");
            for col in columns.iter_mut() {
                *col = col.swap_rows(tooth);
            }
            let diagram = Diagram::new(n, columns.clone()).expect("row swaps stay in the frame");
            let target = Column::interval(tooth);
            let mut removed = Vec::new();
            for (c, col) in columns.iter_mut().enumerate() {
                if *col == target {
                    removed.push(c + 1);
                    *col = Column::EMPTY;
                }
            }
            teeth.push(tooth);
            step_multiplicities.push(removed.len());
            steps.push(OrthodontiaStep {
                tooth,
                diagram,
                removed,
            });
        }

        Orthodontia {
            perm: w.clone(),
            rothe,
            sequence: OrthodonticSequence {
                teeth,
                interval_multiplicities,
                step_multiplicities,
            },
            initial_removed,
            steps,
        }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn n(&self) -> usize {
        self.perm.size()
    }

    pub fn sequence(&self) -> &OrthodonticSequence {
        &self.sequence
    }

    pub fn rothe(&self) -> &Diagram {
        &self.rothe
    }

    pub fn steps(&self) -> &[OrthodontiaStep] {
        &self.steps
    }

    /// Number of swaps `l`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `O(w, r)` for `0 <= r <= l`; `O(w, 0) = D(w)`.
    pub fn intermediate(&self, r: usize) -> &Diagram {
        if r == 0 {
            &self.rothe
        } else {
            &self.steps[r - 1].diagram
        }
    }

    /// Columns emptied right after `O(w, r)` is formed: the `k`-columns for
    /// `r = 0`, the `[i_r]` columns otherwise.
    pub fn removed_at(&self, r: usize) -> &[usize] {
        if r == 0 {
            &self.initial_removed
        } else {
            &self.steps[r - 1].removed
        }
    }

    /// `O(w, r)_-`: `O(w, r)` with the columns recorded at step `r` emptied.
    pub fn trimmed(&self, r: usize) -> Diagram {
        let d = self.intermediate(r);
        let mut columns = d.columns().to_vec();
        for &c in self.removed_at(r) {
            columns[c - 1] = Column::EMPTY;
        }
        Diagram::new(d.n(), columns).expect("subdiagram of a valid diagram")
    }

    /// Orthodontic impact `I_w(j)`: the original indices of the columns of
    /// `O(w, j-1)_-` that have a box in row `i_j + 1`.
    pub fn impact(&self, j: usize) -> Result<Vec<usize>> {
        if j == 0 || j > self.len() {
            return Err(Error::IndexOutOfRange {
                what: "step",
                index: j,
                max: self.len(),
            });
        }
        let row = self.steps[j - 1].tooth + 1;
        let trimmed = self.trimmed(j - 1);
        Ok(trimmed
            .columns()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(row))
            .map(|(c, _)| c + 1)
            .collect())
    }

    /// Every repeated tooth `i_r = i_s` (`r != s`) has `I_w(r) = I_w(s) = {c}` for a single column `c`.
    pub fn is_multiplicity_free(&self) -> bool {
        let teeth = &self.sequence.teeth;
        let impacts: Vec<Vec<usize>> = (1..=self.len())
            .map(|j| self.impact(j).expect("step in range"))
            .collect();
        for r in 0..teeth.len() {
            for s in r + 1..teeth.len() {
                if teeth[r] == teeth[s] && (impacts[r].len() != 1 || impacts[r] != impacts[s]) {
                    return false;
                }
            }
        }
        true
    }

    /// `D_{i,m}` for this run.
    pub fn reconstruction(&self) -> Diagram {
        self.sequence.build_diagram(self.n())
    }

    /// `S_w = omega_1^{k_1} ... omega_n^{k_n} pi_{i_1}(omega_{i_1}^{m_1} pi_{i_2}( ... pi_{i_l}(omega_{i_l}^{m_l}) ... ))`.
    pub fn polynomial(&self) -> Polynomial {
        let n = self.n();
        let seq = &self.sequence;
        let omega_power = |j: usize, m: usize| {
            Monomial::new((0..n).map(|t| if t < j { m as u32 } else { 0 }).collect())
        };
        let l = seq.len();
        let mut f = match l {
            0 => Polynomial::one(n),
            _ => Polynomial::term(omega_power(seq.teeth[l - 1], seq.step_multiplicities[l - 1]), 1.into()),
        };
        for r in (0..l).rev() {
            f = f.demazure(seq.teeth[r]);
            if r > 0 {
                f = f.mul_monomial(&omega_power(seq.teeth[r - 1], seq.step_multiplicities[r - 1]));
            }
        }
        let mut prefix = Monomial::one(n);
        for (j, &k) in seq.interval_multiplicities.iter().enumerate() {
            prefix = prefix.mul(&omega_power(j + 1, k));
        }
        f.mul_monomial(&prefix)
    }
}

/// Schubert polynomial of `w` through the orthodontic operator formula.
pub fn schubert_orthodontic(w: &Permutation) -> Polynomial {
    Orthodontia::new(w).polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;
    use crate::poly::schubert_classic;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn col(rows: &[usize]) -> Column {
        Column::from_rows(rows.iter().copied())
    }

    #[test]
    fn sequence_of_31542() {
        let o = orthodontic_sequence(&p("31542"));
        let seq = o.sequence();
        assert_eq!(seq.teeth, vec![2, 3, 1]);
        assert_eq!(seq.interval_multiplicities, vec![1, 0, 0, 0, 0]);
        assert_eq!(seq.step_multiplicities, vec![0, 1, 1]);
    }

    #[test]
    fn trace_of_31542() {
        let o = orthodontic_sequence(&p("31542"));
        let e = Column::EMPTY;
        assert_eq!(o.intermediate(1).columns(), &[e, col(&[1, 2, 4]), e, col(&[2]), e]);
        assert_eq!(o.intermediate(2).columns(), &[e, col(&[1, 2, 3]), e, col(&[2]), e]);
        assert_eq!(o.intermediate(3).columns(), &[e, e, e, col(&[1]), e]);
        assert_eq!(o.removed_at(0), &[1]);
        assert_eq!(o.removed_at(2), &[2]);
        assert_eq!(o.removed_at(3), &[4]);
    }

    #[test]
    fn reconstruction_of_31542() {
        let o = orthodontic_sequence(&p("31542"));
        let dim = o.reconstruction();
        assert_eq!(dim.columns(), &[col(&[1]), col(&[1, 3, 4]), col(&[3])]);
        assert!(column_equivalent(&dim, o.rothe()));
    }

    #[test]
    fn identity_has_empty_sequence() {
        let o = orthodontic_sequence(&Permutation::identity(4));
        assert!(o.sequence().teeth.is_empty());
        assert_eq!(o.sequence().interval_multiplicities, vec![0; 4]);
        assert!(o.sequence().step_multiplicities.is_empty());
        assert_eq!(o.reconstruction().num_columns(), 0);
        assert_eq!(o.polynomial(), Polynomial::one(4));
        assert!(o.is_multiplicity_free());
    }

    #[test]
    fn column_equivalence_examples() {
        let a = Diagram::new(2, vec![Column::EMPTY, col(&[1])]).unwrap();
        let b = Diagram::new(2, vec![col(&[1]), Column::EMPTY]).unwrap();
        assert!(column_equivalent(&a, &b));
        assert!(column_equivalent(&a, &a));
        let c = Diagram::new(2, vec![col(&[2]), Column::EMPTY]).unwrap();
        assert!(!column_equivalent(&a, &c));
    }

    #[test]
    fn example_457812693() {
        let o = orthodontic_sequence(&p("457812693"));
        assert_eq!(o.sequence().teeth, vec![6, 5, 7, 6, 2, 1, 3, 2]);
        assert_eq!(o.impact(1).unwrap(), vec![3]);
        assert_eq!(o.impact(4).unwrap(), vec![3]);
        assert_eq!(o.impact(5).unwrap(), vec![6]);
        assert_eq!(o.impact(8).unwrap(), vec![6]);
        assert!(o.is_multiplicity_free());
        assert!(o.impact(0).is_err());
        assert!(o.impact(9).is_err());
    }

    #[test]
    fn multiplicitous_pattern_is_not_multiplicity_free() {
        let o = orthodontic_sequence(&p("12543"));
        assert!(!o.is_multiplicity_free());
    }

    #[test]
    fn operator_formula_matches_example() {
        let expected = schubert_classic(&p("31542"));
        assert_eq!(schubert_orthodontic(&p("31542")), expected);
    }

    #[test]
    fn reconstruction_is_column_equivalent_on_s5() {
        for w in permutations(5) {
            let o = orthodontic_sequence(&w);
            assert!(column_equivalent(&o.reconstruction(), o.rothe()), "w = {w}");
        }
    }

    #[test]
    fn intermediate_diagrams_are_northwest_on_s6() {
        for w in permutations(6) {
            let o = orthodontic_sequence(&w);
            for r in 0..=o.len() {
                assert!(o.intermediate(r).has_northwest_property(), "w = {w}, r = {r}");
            }
        }
    }

    #[test]
    fn impacts_are_nonempty() {
        for w in permutations(6) {
            let o = orthodontic_sequence(&w);
            for j in 1..=o.len() {
                assert!(!o.impact(j).unwrap().is_empty(), "w = {w}, j = {j}");
            }
        }
    }

    #[test]
    fn distinct_teeth_give_zero_one_on_s6() {
        for w in permutations(6) {
            let o = orthodontic_sequence(&w);
            let mut teeth = o.sequence().teeth.clone();
            teeth.sort_unstable();
            teeth.dedup();
            if teeth.len() == o.len() {
                assert!(schubert_classic(&w).is_zero_one(), "w = {w}");
            }
        }
    }

    #[test]
    fn reconstruction_box_count_is_length() {
        for w in permutations(5) {
            let o = orthodontic_sequence(&w);
            assert_eq!(o.reconstruction().num_boxes(), w.inversions(), "w = {w}");
        }
    }
}
