//! Dual characters of flagged Weyl modules.
//!
//! The coefficient of a monomial `m` in `chi_D` is the dimension of the span
//! of the products `prod_j det(Y^{C_j}_{D_j})` over all `C <= D` of weight
//! `m`, where `Y` is the generic upper-triangular matrix. Everything here is
//! exact: determinants are expanded symbolically and ranks are computed by
//! fraction-free elimination.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{one_step_pattern, rothe_diagram, Column, DeleteMode, Diagram, Permutation};
use crate::poly::{schubert_classic, Monomial, Polynomial};

/// Largest `n` accepted by [`dual_character`] unless overridden.
pub const DEFAULT_SIZE_LIMIT: usize = 6;

/// Monomial in the `y_{ij}`, stored as a sorted multiset of `(i, j)` with `i <= j`.
pub type YMonomial = Vec<(u8, u8)>;

/// Polynomial in the upper-triangular indeterminates `y_{ij}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YPolynomial {
    terms: BTreeMap<YMonomial, BigInt>,
}

impl YPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), BigInt::one());
        YPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[(u8, u8)]) -> BigInt {
        let mut key = m.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: YMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &YPolynomial) -> YPolynomial {
        let mut out = YPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut m = Vec::with_capacity(a.len() + b.len());
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                m.sort_unstable();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (t, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            match (t, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = if negative { -c } else { c.clone() };
            let vars: Vec<String> = m.iter().map(|(i, j)| format!("y{i}{j}")).collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `C <= D`: the two diagrams have the same number of columns and each column of `C` is `<=` the
/// corresponding column of `D`.
pub fn diagram_leq(c: &Diagram, d: &Diagram) -> bool {
    c.num_columns() == d.num_columns()
        && c.columns().iter().zip(d.columns()).all(|(a, b)| a.leq(*b))
}

/// `det(Y^R_S)`: rows `R`, columns `S` of the upper-triangular symbolic matrix.
///
/// Expanded over the bijections `R -> S` that stay on or above the diagonal,
/// so the result is zero exactly when `R <= S` fails.
pub fn minor(rows: Column, cols: Column) -> Result<YPolynomial> {
    if rows.len() != cols.len() {
        return Err(Error::LengthMismatch {
            expected: rows.len(),
            actual: cols.len(),
        });
    }
    let r: Vec<usize> = rows.rows().collect();
    let s: Vec<usize> = cols.rows().collect();
    let mut out = YPolynomial::zero();
    let mut assignment = Vec::with_capacity(r.len());
    let mut used = vec![false; s.len()];
    expand_minor(&r, &s, &mut assignment, &mut used, &mut out);
    Ok(out)
}

fn expand_minor(
    r: &[usize],
    s: &[usize],
    assignment: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut YPolynomial,
) {
    let depth = assignment.len();
    if depth == r.len() {
        let inversions = (0..depth)
            .flat_map(|a| (a + 1..depth).map(move |b| (a, b)))
            .filter(|&(a, b)| assignment[a] > assignment[b])
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let mut m: YMonomial = (0..depth)
            .map(|a| (r[a] as u8, s[assignment[a]] as u8))
            .collect();
        m.sort_unstable();
        out.add_term(m, BigInt::from(sign));
        return;
    }
    for t in 0..s.len() {
        if !used[t] && r[depth] <= s[t] {
            used[t] = true;
            assignment.push(t);
            expand_minor(r, s, assignment, used, out);
            assignment.pop();
            used[t] = false;
        }
    }
}

/// All columns `S <= d`, in increasing order of their row sets.
pub fn columns_below(d: Column) -> Vec<Column> {
    let bounds: Vec<usize> = d.rows().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(bounds.len());
    fill_columns_below(&bounds, 1, &mut chosen, &mut out);
    out
}

fn fill_columns_below(bounds: &[usize], from: usize, chosen: &mut Vec<usize>, out: &mut Vec<Column>) {
    let t = chosen.len();
    if t == bounds.len() {
        out.push(Column::from_rows(chosen.iter().copied()));
        return;
    }
    for row in from..=bounds[t] {
        chosen.push(row);
        fill_columns_below(bounds, row + 1, chosen, out);
        chosen.pop();
    }
}

/// The weight `prod_j prod_{i in C_j} x_i` as an exponent vector.
pub fn diagram_weight(c: &Diagram) -> Vec<u32> {
    let mut wt = vec![0; c.n()];
    for col in c.columns() {
        for row in col.rows() {
            wt[row - 1] += 1;
        }
    }
    wt
}

/// Every `C <= D`, grouped by weight.
pub fn subdiagram_groups(d: &Diagram) -> BTreeMap<Vec<u32>, Vec<Diagram>> {
    let choices: Vec<Vec<Column>> = d.columns().iter().map(|&c| columns_below(c)).collect();
    let mut groups: BTreeMap<Vec<u32>, Vec<Diagram>> = BTreeMap::new();
    let mut current = Vec::with_capacity(choices.len());
    let mut weight = vec![0u32; d.n()];
    collect_groups(d.n(), &choices, &mut current, &mut weight, &mut groups);
    groups
}

fn collect_groups(
    n: usize,
    choices: &[Vec<Column>],
    current: &mut Vec<Column>,
    weight: &mut Vec<u32>,
    groups: &mut BTreeMap<Vec<u32>, Vec<Diagram>>,
) {
    let j = current.len();
    if j == choices.len() {
        let c = Diagram::new(n, current.clone()).expect("rows stay within the frame");
        groups.entry(weight.clone()).or_default().push(c);
        return;
    }
    for &col in &choices[j] {
        for row in col.rows() {
            weight[row - 1] += 1;
        }
        current.push(col);
        collect_groups(n, choices, current, weight, groups);
        current.pop();
        for row in col.rows() {
            weight[row - 1] -= 1;
        }
    }
}

/// `prod_j det(Y^{C_j}_{D_j})`.
pub fn determinant_product(c: &Diagram, d: &Diagram) -> Result<YPolynomial> {
    let mut cache = HashMap::new();
    product_cached(c, d, &mut cache)
}

fn product_cached(
    c: &Diagram,
    d: &Diagram,
    cache: &mut HashMap<(Column, Column), YPolynomial>,
) -> Result<YPolynomial> {
    if c.num_columns() != d.num_columns() {
        return Err(Error::LengthMismatch {
            expected: d.num_columns(),
            actual: c.num_columns(),
        });
    }
    let mut out = YPolynomial::one();
    for (&cj, &dj) in c.columns().iter().zip(d.columns()) {
        if cj.is_empty() && dj.is_empty() {
            continue;
        }
        let m = match cache.get(&(cj, dj)) {
            Some(m) => m.clone(),
            None => {
                let m = minor(cj, dj)?;
                cache.insert((cj, dj), m.clone());
                m
            }
        };
        out = out.mul(&m);
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// Dimension of the span of the determinant products of `members` against `d`.
pub fn span_rank(members: &[Diagram], d: &Diagram) -> Result<usize> {
    let mut cache = HashMap::new();
    let products = members
        .iter()
        .map(|c| product_cached(c, d, &mut cache))
        .collect::<Result<Vec<_>>>()?;
    Ok(rank_of(&products))
}

fn rank_of(products: &[YPolynomial]) -> usize {
    let mut index: BTreeMap<&YMonomial, usize> = BTreeMap::new();
    for p in products {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m).or_insert(next);
        }
    }
    let rows = products
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::zero(); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    bareiss_rank(rows)
}

/// Rank over the rationals of an integer matrix, by fraction-free elimination.
///
/// Panics if an elimination step is not an exact division; that can only
/// happen through a bug.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for c in col + 1..cols {
                let num = pivot * &row[c] - &lead * &pivot_row[c];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "inexact division in fraction-free elimination");
                row[c] = q;
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// `chi_D` with the default size limit.
pub fn dual_character(d: &Diagram) -> Result<Polynomial> {
    dual_character_with_limit(d, DEFAULT_SIZE_LIMIT)
}

/// `chi_D`, refusing diagrams with more than `limit` rows.
pub fn dual_character_with_limit(d: &Diagram, limit: usize) -> Result<Polynomial> {
    if d.n() > limit {
        return Err(Error::SizeLimit {
            size: d.n(),
            limit,
        });
    }
    let groups: Vec<(Vec<u32>, Vec<Diagram>)> = subdiagram_groups(d).into_iter().collect();
    let coefficients = groups
        .par_iter()
        .map(|(wt, members)| span_rank(members, d).map(|r| (wt.clone(), r)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Polynomial::zero(d.n());
    for (wt, r) in coefficients {
        out.add_term(Monomial::new(wt), BigInt::from(r));
    }
    Ok(out)
}

/// Outcome of [`pattern_dominance_check`].
#[derive(Clone, Debug)]
pub struct DominanceReport {
    /// `M`, see [`removed_weight`].
    pub m: Polynomial,
    /// `F = chi_D - M * chi_{D^}(x_k = 0)`.
    pub f: Polynomial,
    /// `F` has no negative coefficient.
    pub ok: bool,
    /// For every weight group of `D^` avoiding `x_k`, the augmented diagrams
    /// span at least as much against `D` as the group spans against `D^`.
    pub rank_monotone: bool,
    /// Every `C^ <= D^` without boxes in row `k` augments to a diagram `<= D`
    /// and is recovered from it. Only checked when `n <= 4`.
    pub augmentation: Option<bool>,
}

/// Largest `n` at which [`pattern_dominance_check`] also checks the augmentation map.
pub const AUGMENTATION_CHECK_LIMIT: usize = 4;

/// `C^_aug = C^ + (boxes of D in row k) + (boxes of D in column l)`.
pub fn augment(c_hat: &Diagram, d: &Diagram, k: usize, l: usize) -> Diagram {
    let columns = c_hat
        .columns()
        .iter()
        .zip(d.columns())
        .enumerate()
        .map(|(j, (&c, &dj))| {
            if j + 1 == l {
                dj
            } else {
                let mut c = c;
                if dj.contains(k) {
                    c.insert(k);
                }
                c
            }
        })
        .collect();
    Diagram::new(d.n(), columns).expect("same frame as D")
}

/// `M`: the weight of the boxes of `D` lying in row `k` or column `l`, each box counted once.
///
/// This is `(prod_{(k,i) in D} x_k)(prod_{(i,l) in D} x_i)` whenever `(k, l)` is not a box of
/// `D`. When it is, the product formula counts that box twice and the inequality can fail;
/// see [`literal_factor`].
pub fn removed_weight(d: &Diagram, k: usize, l: usize) -> Polynomial {
    let mut exps = vec![0u32; d.n()];
    for (j, c) in d.columns().iter().enumerate() {
        for row in c.rows() {
            if row == k || j + 1 == l {
                exps[row - 1] += 1;
            }
        }
    }
    Polynomial::monomial(exps)
}

/// `(prod_{(k,i) in D} x_k)(prod_{(i,l) in D} x_i)` taken literally, so a box at `(k, l)`
/// contributes `x_k^2`.
pub fn literal_factor(d: &Diagram, k: usize, l: usize) -> Polynomial {
    let mut exps = vec![0u32; d.n()];
    exps[k - 1] += d.row_len(k) as u32;
    for row in d.column(l).rows() {
        exps[row - 1] += 1;
    }
    Polynomial::monomial(exps)
}

/// Checks `chi_D - M * chi_{D^}(x_k = 0) >= 0`, where `D^` is `D` with row `k`
/// and column `l` emptied.
pub fn pattern_dominance_check(d: &Diagram, k: usize, l: usize) -> Result<DominanceReport> {
    pattern_dominance_check_with_limit(d, k, l, DEFAULT_SIZE_LIMIT)
}

pub fn pattern_dominance_check_with_limit(
    d: &Diagram,
    k: usize,
    l: usize,
    limit: usize,
) -> Result<DominanceReport> {
    let n = d.n();
    let d_hat = d.delete_row_col(k, l, DeleteMode::KeepIndex)?;
    let m = removed_weight(d, k, l);

    let chi = dual_character_with_limit(d, limit)?;
    let chi_hat = dual_character_with_limit(&d_hat, limit)?;
    let f = &chi - &(&m * &chi_hat.set_var_zero(k));
    let ok = f.has_nonnegative_coefficients();

    let groups = subdiagram_groups(&d_hat);
    let rank_monotone = groups
        .par_iter()
        .filter(|(wt, _)| wt[k - 1] == 0)
        .map(|(_, members)| -> Result<bool> {
            let augmented: Vec<Diagram> = members.iter().map(|c| augment(c, d, k, l)).collect();
            Ok(span_rank(&augmented, d)? >= span_rank(members, &d_hat)?)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);

    let augmentation = (n <= AUGMENTATION_CHECK_LIMIT).then(|| {
        let mut images = BTreeSet::new();
        groups.values().flatten().filter(|c| c.row_len(k) == 0).all(|c| {
            let aug = augment(c, d, k, l);
            let back = aug
                .delete_row_col(k, l, DeleteMode::KeepIndex)
                .expect("indices already validated");
            diagram_leq(&aug, d) && &back == c && images.insert(aug.to_text())
        })
    });

    Ok(DominanceReport {
        m,
        f,
        ok,
        rank_monotone,
        augmentation,
    })
}

/// The monomial `M` and pattern `sigma` for removing row `k` and column `w_k` of `D(w)`.
pub fn pattern_factor(w: &Permutation, k: usize) -> Result<(Polynomial, Permutation)> {
    let sigma = one_step_pattern(w, k)?;
    Ok((removed_weight(&rothe_diagram(w), k, w.get(k)), sigma))
}

/// `S_w - M * S_sigma(x_1, ..., x_k skipped, ..., x_n)`.
pub fn schubert_pattern_difference(w: &Permutation, k: usize) -> Result<Polynomial> {
    let (m, sigma) = pattern_factor(w, k)?;
    let lifted = schubert_classic(&sigma).embed_skipping(k);
    Ok(&schubert_classic(w) - &(&m * &lifted))
}

/// Whether [`schubert_pattern_difference`] has nonnegative coefficients.
pub fn schubert_pattern_inequality(w: &Permutation, k: usize) -> Result<bool> {
    Ok(schubert_pattern_difference(w, k)?.has_nonnegative_coefficients())
}
