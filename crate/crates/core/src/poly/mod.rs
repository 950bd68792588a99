//! Exact multivariate polynomials over the integers, with divided difference
//! and Demazure operators.

mod schubert;

pub use schubert::{schubert_classic, AscentChoice, SchubertCache, DEFAULT_CACHE_CAPACITY};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An exponent vector `(a_1, ..., a_n)` standing for `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomials over different rings");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Graded lexicographic comparison: higher total degree first, then
    /// larger exponent of `x_1`, then `x_2`, and so on.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in `x_1, ..., x_n` with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so equal polynomials have identical term maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::term(Monomial::one(nvars), BigInt::one())
    }

    pub fn term(m: Monomial, coeff: BigInt) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        p.add_term(m, coeff);
        p
    }

    pub fn monomial(exponents: Vec<u32>) -> Self {
        Self::term(Monomial(exponents), BigInt::one())
    }

    /// The variable `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e)
    }

    /// `omega_j = x_1 x_2 ... x_j`.
    pub fn omega(nvars: usize, j: usize) -> Self {
        Self::monomial((0..nvars).map(|t| u32::from(t < j)).collect())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector of wrong length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order.
    pub fn terms_grlex(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.grlex_cmp(b.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        assert_eq!(m.nvars(), self.nvars, "monomial over a different ring");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Polynomial {
        self.check_operator_index(i);
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut e = k.0.clone();
                    e.swap(i - 1, i);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    fn check_operator_index(&self, i: usize) {
        assert!(
            i >= 1 && i < self.nvars,
            "operator index {i} outside 1..{}",
            self.nvars
        );
    }

    /// Exact quotient by `x_i - x_{i+1}`.
    ///
    /// Panics if the division leaves a remainder: every caller divides an
    /// antisymmetrized numerator, so a remainder means a bug upstream.
    pub fn div_by_difference(&self, i: usize) -> Polynomial {
        self.check_operator_index(i);
        let xi = i - 1;
        // Long division in x_i: x_i - x_{i+1} is monic in x_i, so repeatedly
        // cancel the term with the largest x_i exponent.
        let mut rest: BTreeMap<(u32, Monomial), BigInt> = self
            .terms
            .iter()
            .map(|(k, c)| ((k.0[xi], k.clone()), c.clone()))
            .collect();
        let mut quotient = Polynomial::zero(self.nvars);
        while let Some(((deg, m), c)) = rest.pop_last() {
            assert!(
                deg > 0,
                "inexact division by x{} - x{}: remainder term {m}",
                i,
                i + 1
            );
            let mut q = m.0.clone();
            q[xi] -= 1;
            let mut shifted = q.clone();
            shifted[xi + 1] += 1;
            let key = (deg - 1, Monomial(shifted));
            let cancelled = {
                let entry = rest.entry(key.clone()).or_default();
                *entry += &c;
                entry.is_zero()
            };
            if cancelled {
                rest.remove(&key);
            }
            quotient.add_term(Monomial(q), c);
        }
        quotient
    }

    /// The divided difference `(f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        let numerator = self - &self.swap_vars(i);
        numerator.div_by_difference(i)
    }

    /// The Demazure operator `pi_i(f) = d_i(x_i f)`.
    pub fn demazure(&self, i: usize) -> Polynomial {
        self.check_operator_index(i);
        let mut e = vec![0; self.nvars];
        e[i - 1] = 1;
        self.mul_monomial(&Monomial(e)).divided_difference(i)
    }

    /// Substitutes `x_k := 0`.
    pub fn set_var_zero(&self, k: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[k - 1] == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-embeds a polynomial in `n - 1` variables into `n` variables,
    /// skipping `x_k`: `f(x_1, ..., x_{k-1}, x_{k+1}, ..., x_n)`.
    pub fn embed_skipping(&self, k: usize) -> Polynomial {
        assert!(k >= 1 && k <= self.nvars + 1);
        Polynomial {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.insert(k - 1, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// All coefficients lie in `{0, 1}`.
    pub fn is_zero_one(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    /// Largest coefficient, or zero for the zero polynomial.
    pub fn max_coefficient(&self) -> BigInt {
        self.terms.values().max().cloned().unwrap_or_default()
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, ..., 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `f - g` has no negative coefficient.
    pub fn coefficientwise_geq(&self, other: &Polynomial) -> bool {
        assert_eq!(self.nvars, other.nvars, "polynomials over different rings");
        other
            .terms
            .iter()
            .all(|(m, c)| self.terms.get(m).map_or(BigInt::zero(), |v| v.clone()) >= *c)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Line-oriented structured rendering: one `term exponents=... coefficient=...` line per term.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms_grlex() {
            let e: Vec<String> = m.0.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("term exponents={} coefficient={c}\n", e.join(",")));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Terms in graded lexicographic order, e.g. `x1^3*x2*x3 + 2*x1^2*x2^2*x4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms_grlex().into_iter().enumerate() {
            let is_const = m.degree() == 0;
            let abs = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if is_const {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = Polynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}
