use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::Polynomial;
use crate::perm::Permutation;

/// Default number of Schubert polynomials kept by the shared cache.
pub const DEFAULT_CACHE_CAPACITY: usize = 1 << 16;

/// Which ascent to descend along when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscentChoice {
    Leftmost,
    Rightmost,
}

/// Memo table for Schubert polynomials, keyed by one-line notation.
///
/// Safe to share between threads. Once `capacity` entries are stored, new
/// results are still returned but no longer retained.
pub struct SchubertCache {
    capacity: usize,
    choice: AscentChoice,
    table: Mutex<HashMap<Permutation, Arc<Polynomial>>>,
}

impl SchubertCache {
    pub fn new(capacity: usize) -> Self {
        Self::with_choice(capacity, AscentChoice::Leftmost)
    }

    pub fn with_choice(capacity: usize, choice: AscentChoice) -> Self {
        SchubertCache {
            capacity,
            choice,
            table: Mutex::new(HashMap::new()),
        }
    }

    /// The process-wide cache used by [`schubert_classic`].
    pub fn global() -> &'static SchubertCache {
        static GLOBAL: OnceLock<SchubertCache> = OnceLock::new();
        GLOBAL.get_or_init(|| SchubertCache::new(DEFAULT_CACHE_CAPACITY))
    }

    pub fn len(&self) -> usize {
        self.table.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, w: &Permutation) -> Option<Arc<Polynomial>> {
        self.table.lock().unwrap().get(w).cloned()
    }

    fn store(&self, w: Permutation, f: Arc<Polynomial>) {
        let mut table = self.table.lock().unwrap();
        if table.len() < self.capacity {
            table.insert(w, f);
        }
    }

    /// The Schubert polynomial of `w`, in variables `x_1, ..., x_n`.
    ///
    /// Climbs from `w` towards `w_0` through `w s_i` for an ascent `i` until
    /// a cached polynomial (or `w_0` itself) is reached, then applies the
    /// divided differences on the way back down.
    pub fn get(&self, w: &Permutation) -> Arc<Polynomial> {
        let n = w.size();
        let mut chain: Vec<(Permutation, usize)> = Vec::new();
        let mut current = w.clone();
        let mut poly = loop {
            if let Some(hit) = self.lookup(&current) {
                break hit;
            }
            let ascent = match self.choice {
                AscentChoice::Leftmost => current.ascents().next(),
                AscentChoice::Rightmost => current.ascents().last(),
            };
            match ascent {
                None => {
                    // Only w_0 has no ascent.
                    let staircase = Polynomial::monomial(
                        (0..n).map(|t| (n - 1 - t) as u32).collect(),
                    );
                    let staircase = Arc::new(staircase);
                    self.store(current.clone(), staircase.clone());
                    break staircase;
                }
                Some(i) => {
                    let up = current.swap_positions(i);
                    chain.push((current, i));
                    current = up;
                }
            }
        };
        while let Some((v, i)) = chain.pop() {
            poly = Arc::new(poly.divided_difference(i));
            self.store(v, poly.clone());
        }
        poly
    }
}

/// Schubert polynomial of `w` by divided differences from `w_0`, memoized in the shared cache.
pub fn schubert_classic(w: &Permutation) -> Polynomial {
    if w.size() <= 1 {
        return Polynomial::one(w.size());
    }
    SchubertCache::global().get(w).as_ref().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;
    use num_bigint::BigInt;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn schubert_31542() -> Polynomial {
        let terms: [[u32; 5]; 8] = [
            [3, 1, 1, 0, 0],
            [3, 1, 0, 1, 0],
            [3, 0, 1, 1, 0],
            [2, 2, 1, 0, 0],
            [2, 1, 2, 0, 0],
            [2, 2, 0, 1, 0],
            [2, 1, 1, 1, 0],
            [2, 0, 2, 1, 0],
        ];
        Polynomial::from_terms(5, terms.iter().map(|e| (e.to_vec(), BigInt::from(1))))
    }

    #[test]
    fn longest_element_is_staircase() {
        for n in 2..6 {
            let e: Vec<u32> = (0..n).map(|t| (n - 1 - t) as u32).collect();
            assert_eq!(schubert_classic(&Permutation::longest(n)), Polynomial::monomial(e));
        }
    }

    #[test]
    fn identity_is_one() {
        for n in 0..6 {
            assert_eq!(schubert_classic(&Permutation::identity(n)), Polynomial::one(n));
        }
    }

    #[test]
    fn worked_example_31542() {
        let s = schubert_classic(&p("31542"));
        assert_eq!(s, schubert_31542());
        assert!(s.is_zero_one());
        assert_eq!(
            s.to_string(),
            "x1^3*x2*x3 + x1^3*x2*x4 + x1^3*x3*x4 + x1^2*x2^2*x3 + x1^2*x2^2*x4 \
             + x1^2*x2*x3^2 + x1^2*x2*x3*x4 + x1^2*x3^2*x4"
        );
    }

    #[test]
    fn operator_formula_example_31542() {
        // x1 * pi_2 pi_3 (x1 x2 x3 * pi_1(x1))
        let x1 = Polynomial::var(5, 1);
        let inner = &Polynomial::omega(5, 3) * &x1.demazure(1);
        let f = &x1 * &inner.demazure(3).demazure(2);
        assert_eq!(f, schubert_31542());
    }

    #[test]
    fn max_coefficient_of_12543_is_two() {
        assert_eq!(schubert_classic(&p("12543")).max_coefficient(), BigInt::from(2));
    }

    #[test]
    fn ascent_strategies_agree_on_s5() {
        let left = SchubertCache::with_choice(usize::MAX, AscentChoice::Leftmost);
        let right = SchubertCache::with_choice(usize::MAX, AscentChoice::Rightmost);
        for w in permutations(5) {
            assert_eq!(left.get(&w), right.get(&w), "w = {w}");
        }
    }

    #[test]
    fn zero_capacity_cache_still_computes() {
        let cache = SchubertCache::new(0);
        assert_eq!(*cache.get(&p("31542")), schubert_31542());
        assert!(cache.is_empty());
    }

    #[test]
    fn coefficient_sums_on_s3() {
        // S_3 in lex order: 1, x1+x2, x1, x1x2, x1^2, x1^2x2
        let sums: Vec<BigInt> = permutations(3)
            .map(|w| schubert_classic(&w).coefficient_sum())
            .collect();
        assert_eq!(sums, [1, 2, 1, 1, 1, 1].map(BigInt::from));
    }
}
