//! Configurations in Rothe diagrams, multiplicitous patterns, and the
//! zero-one classification of permutations.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::orthodontia::Orthodontia;
use crate::perm::{contains_pattern, permutations, rothe_diagram, Diagram, Permutation};
use crate::poly::schubert_classic;

/// The twelve minimal patterns whose Schubert polynomials have a coefficient 2.
pub const MULTIPLICITOUS_PATTERNS: [&str; 12] = [
    "12543", "13254", "13524", "13542", "21543", "125364", "125634", "215364", "215634",
    "315264", "315624", "315642",
];

/// The multiplicitous patterns as permutations.
pub fn multiplicitous_patterns() -> Vec<Permutation> {
    MULTIPLICITOUS_PATTERNS
        .iter()
        .map(|s| s.parse().expect("valid pattern"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigurationKind {
    A,
    B,
    BPrime,
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigurationKind::A => "A",
            ConfigurationKind::B => "B",
            ConfigurationKind::BPrime => "B'",
        })
    }
}

/// An instance `(r1, c1, r2, c2, r3[, r4])` of a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConfigurationInstance {
    pub kind: ConfigurationKind,
    pub r1: usize,
    pub c1: usize,
    pub r2: usize,
    pub c2: usize,
    pub r3: usize,
    /// Absent for configuration A.
    pub r4: Option<usize>,
}

impl ConfigurationInstance {
    /// Sort key: the index tuple, then the kind.
    pub fn key(&self) -> (usize, usize, usize, usize, usize, Option<usize>, ConfigurationKind) {
        (self.r1, self.c1, self.r2, self.c2, self.r3, self.r4, self.kind)
    }

    /// Whether the defining conditions hold in `D(w)`.
    pub fn holds(&self, w: &Permutation) -> bool {
        self.holds_in(&rothe_diagram(w), w)
    }

    /// As [`holds`](Self::holds), with `d = D(w)` already computed.
    pub fn holds_in(&self, d: &Diagram, w: &Permutation) -> bool {
        let n = w.size();
        let &ConfigurationInstance {
            kind,
            r1,
            c1,
            r2,
            c2,
            r3,
            r4,
        } = self;
        let in_range = |x: usize| (1..=n).contains(&x);
        if ![r1, c1, r2, c2, r3].into_iter().all(in_range) || !r4.is_none_or(in_range) {
            return false;
        }
        match (kind, r4) {
            (ConfigurationKind::A, None) => {
                r3 < r1
                    && r1 < r2
                    && 1 < c1
                    && c1 < c2
                    && d.contains(r1, c1)
                    && d.contains(r2, c2)
                    && !d.contains(r1, c2)
                    && w.get(r3) < c1
            }
            // B only needs 1 < c1. With 2 < c1, D(315264) has no instance of any kind.
            (ConfigurationKind::B, Some(r4)) => {
                r4 != r3
                    && r3 < r1
                    && r4 < r1
                    && r1 < r2
                    && 1 < c1
                    && c1 < c2
                    && d.contains(r1, c1)
                    && d.contains(r1, c2)
                    && d.contains(r2, c2)
                    && w.get(r3) < c1
                    && w.get(r4) < c2
            }
            (ConfigurationKind::BPrime, Some(r4)) => {
                r4 < r3
                    && r3 < r1
                    && r1 < r2
                    && 2 < c1
                    && c1 < c2
                    && d.contains(r1, c1)
                    && d.contains(r1, c2)
                    && d.contains(r2, c1)
                    && w.get(r3) < c1
                    && w.get(r4) < c1
            }
            _ => false,
        }
    }
}

impl fmt::Display for ConfigurationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (r1={}, c1={}, r2={}, c2={}, r3={}",
            self.kind, self.r1, self.c1, self.r2, self.c2, self.r3
        )?;
        if let Some(r4) = self.r4 {
            write!(f, ", r4={r4}")?;
        }
        f.write_str(")")
    }
}

/// The least instance of configuration A, B or B' in `D = D(w)`, ordered by
/// [`ConfigurationInstance::key`].
pub fn find_configuration(d: &Diagram, w: &Permutation) -> Option<ConfigurationInstance> {
    let n = w.size();
    for r1 in 1..=n {
        for c1 in 2..=n {
            if !d.contains(r1, c1) {
                continue;
            }
            for r2 in r1 + 1..=n {
                for c2 in c1 + 1..=n {
                    let a = d.contains(r2, c2) && !d.contains(r1, c2);
                    let b = d.contains(r1, c2) && d.contains(r2, c2);
                    let bp = c1 > 2 && d.contains(r1, c2) && d.contains(r2, c1);
                    if !(a || b || bp) {
                        continue;
                    }
                    let found = |kind, r3, r4| ConfigurationInstance {
                        kind,
                        r1,
                        c1,
                        r2,
                        c2,
                        r3,
                        r4,
                    };
                    for r3 in 1..r1 {
                        if a && w.get(r3) < c1 {
                            return Some(found(ConfigurationKind::A, r3, None));
                        }
                        for r4 in 1..r1 {
                            if r4 == r3 {
                                continue;
                            }
                            if b && w.get(r3) < c1 && w.get(r4) < c2 {
                                return Some(found(ConfigurationKind::B, r3, Some(r4)));
                            }
                            if bp && r4 < r3 && w.get(r3) < c1 && w.get(r4) < c1 {
                                return Some(found(ConfigurationKind::BPrime, r3, Some(r4)));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// The first multiplicitous pattern contained in `w`, with its lexicographically least occurrence.
pub fn multiplicitous_witness(w: &Permutation) -> Option<(Permutation, Vec<usize>)> {
    multiplicitous_patterns()
        .into_iter()
        .find_map(|p| contains_pattern(w, &p).map(|at| (p, at)))
}

pub fn avoids_multiplicitous(w: &Permutation) -> bool {
    multiplicitous_witness(w).is_none()
}

/// The four equivalent zero-one predicates, each computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneStatus {
    /// Every coefficient of the Schubert polynomial is 0 or 1; only computed on request.
    pub by_expansion: Option<bool>,
    pub by_patterns: bool,
    pub by_configurations: bool,
    pub by_multiplicity_free: bool,
}

impl ZeroOneStatus {
    pub fn agree(&self) -> bool {
        let v = self.by_patterns;
        self.by_configurations == v
            && self.by_multiplicity_free == v
            && self.by_expansion.is_none_or(|e| e == v)
    }

    /// The common verdict, taken from the pattern predicate.
    pub fn is_zero_one(&self) -> bool {
        self.by_patterns
    }
}

/// Computes the predicates. With `checked`, any disagreement is an error.
pub fn zero_one_status(
    w: &Permutation,
    include_expansion: bool,
    checked: bool,
) -> Result<ZeroOneStatus> {
    let status = ZeroOneStatus {
        by_expansion: include_expansion.then(|| schubert_classic(w).is_zero_one()),
        by_patterns: avoids_multiplicitous(w),
        by_configurations: find_configuration(&rothe_diagram(w), w).is_none(),
        by_multiplicity_free: Orthodontia::new(w).is_multiplicity_free(),
    };
    if checked && !status.agree() {
        return Err(Error::Disagreement {
            perm: w.to_string(),
            detail: format!("{status:?}"),
        });
    }
    Ok(status)
}

/// Which predicates a survey evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurveyMethods {
    /// Patterns, configurations and multiplicity-freeness.
    Fast,
    /// The fast predicates plus the expansion.
    All,
}

impl SurveyMethods {
    pub fn default_limit(self) -> usize {
        match self {
            SurveyMethods::Fast => 8,
            SurveyMethods::All => 7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveySummary {
    pub n: usize,
    pub zero_one: usize,
    pub total: usize,
    /// Permutations on which the predicates disagree, in lexicographic order.
    pub disagreements: Vec<Permutation>,
}

/// Classifies every permutation of size `n`.
pub fn survey(n: usize, methods: SurveyMethods, limit: Option<usize>) -> Result<SurveySummary> {
    let limit = limit.unwrap_or(methods.default_limit());
    if n > limit {
        return Err(Error::SizeLimit { size: n, limit });
    }
    let all: Vec<Permutation> = permutations(n).collect();
    let statuses: Vec<ZeroOneStatus> = all
        .par_iter()
        .map(|w| zero_one_status(w, methods == SurveyMethods::All, false))
        .collect::<Result<_>>()?;
    let disagreements = all
        .iter()
        .zip(&statuses)
        .filter(|(_, s)| !s.agree())
        .map(|(w, _)| w.clone())
        .collect();
    Ok(SurveySummary {
        n,
        zero_one: statuses.iter().filter(|s| s.is_zero_one()).count(),
        total: all.len(),
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::one_step_pattern;
    use num_bigint::BigInt;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Every instance of every kind, by exhaustive search over index tuples.
    fn all_instances(w: &Permutation) -> Vec<ConfigurationInstance> {
        let n = w.size();
        let d = rothe_diagram(w);
        let mut out = Vec::new();
        let kinds = [
            ConfigurationKind::A,
            ConfigurationKind::B,
            ConfigurationKind::BPrime,
        ];
        for r1 in 1..=n {
            for c1 in 1..=n {
                for r2 in 1..=n {
                    for c2 in 1..=n {
                        for r3 in 1..=n {
                            for r4 in std::iter::once(None).chain((1..=n).map(Some)) {
                                for kind in kinds {
                                    let inst = ConfigurationInstance {
                                        kind,
                                        r1,
                                        c1,
                                        r2,
                                        c2,
                                        r3,
                                        r4,
                                    };
                                    if inst.holds_in(&d, w) {
                                        out.push(inst);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn configuration_in_13254() {
        let w = p("13254");
        let found = find_configuration(&rothe_diagram(&w), &w).unwrap();
        assert_eq!(found.kind, ConfigurationKind::A);
        assert_eq!((found.r1, found.c1, found.r2, found.c2, found.r3), (2, 2, 4, 4, 1));
        assert!(found.holds(&w));
    }

    #[test]
    fn identity_has_no_configuration() {
        let id = Permutation::identity(6);
        assert_eq!(find_configuration(&rothe_diagram(&id), &id), None);
    }

    #[test]
    fn every_multiplicitous_pattern_has_a_configuration() {
        for w in multiplicitous_patterns() {
            let found = find_configuration(&rothe_diagram(&w), &w);
            assert!(found.is_some_and(|f| f.holds(&w)), "w = {w}");
        }
    }

    #[test]
    fn configuration_b_in_315264_uses_the_second_column() {
        let w = p("315264");
        let found = find_configuration(&rothe_diagram(&w), &w).unwrap();
        assert_eq!(
            found,
            ConfigurationInstance {
                kind: ConfigurationKind::B,
                r1: 3,
                c1: 2,
                r2: 5,
                c2: 4,
                r3: 2,
                r4: Some(1)
            }
        );
        assert_eq!(all_instances(&w), vec![found]);
    }

    #[test]
    fn scan_returns_the_least_instance_on_s6() {
        for w in permutations(6) {
            let least = all_instances(&w).into_iter().min_by_key(|i| i.key());
            assert_eq!(find_configuration(&rothe_diagram(&w), &w), least, "w = {w}");
        }
    }

    #[test]
    fn avoidance_examples() {
        assert!(!avoids_multiplicitous(&p("12543")));
        assert_eq!(
            multiplicitous_witness(&p("12543")),
            Some((p("12543"), vec![1, 2, 3, 4, 5]))
        );
        assert!(permutations(4).all(|w| avoids_multiplicitous(&w)));
        assert!(avoids_multiplicitous(&p("457812693")));
    }

    #[test]
    fn status_examples() {
        let s = zero_one_status(&p("31542"), true, true).unwrap();
        assert_eq!(
            s,
            ZeroOneStatus {
                by_expansion: Some(true),
                by_patterns: true,
                by_configurations: true,
                by_multiplicity_free: true
            }
        );
        let s = zero_one_status(&p("12543"), true, true).unwrap();
        assert!(s.agree() && !s.is_zero_one());
        assert_eq!(s.by_expansion, Some(false));
        assert_eq!(zero_one_status(&p("12543"), false, true).unwrap().by_expansion, None);
    }

    #[test]
    fn multiplicitous_patterns_have_coefficient_two() {
        for w in multiplicitous_patterns() {
            assert_eq!(schubert_classic(&w).max_coefficient(), BigInt::from(2), "w = {w}");
        }
    }

    #[test]
    fn multiplicitous_patterns_are_minimal() {
        for w in multiplicitous_patterns() {
            for k in 1..=w.size() {
                let sigma = one_step_pattern(&w, k).unwrap();
                assert!(schubert_classic(&sigma).is_zero_one(), "{w} -> {sigma}");
            }
        }
    }

    #[test]
    fn four_predicates_agree_on_s6() {
        for w in permutations(6) {
            zero_one_status(&w, true, true).unwrap();
        }
    }

    #[test]
    fn configurations_match_patterns_on_s6() {
        for w in permutations(6) {
            assert_eq!(
                find_configuration(&rothe_diagram(&w), &w).is_none(),
                avoids_multiplicitous(&w),
                "w = {w}"
            );
        }
    }

    #[test]
    fn zero_one_class_is_pattern_closed_on_s6() {
        for w in permutations(6) {
            if !schubert_classic(&w).is_zero_one() {
                continue;
            }
            for k in 1..=6 {
                let sigma = one_step_pattern(&w, k).unwrap();
                assert!(schubert_classic(&sigma).is_zero_one(), "{w} -> {sigma}");
            }
        }
    }

    #[test]
    fn configuration_free_implies_multiplicity_free_on_s7() {
        for w in permutations(7) {
            if find_configuration(&rothe_diagram(&w), &w).is_none() {
                assert!(Orthodontia::new(&w).is_multiplicity_free(), "w = {w}");
            }
        }
    }

    #[test]
    fn small_surveys() {
        let s = survey(1, SurveyMethods::All, None).unwrap();
        assert_eq!((s.zero_one, s.total), (1, 1));
        let s = survey(4, SurveyMethods::Fast, None).unwrap();
        assert_eq!((s.zero_one, s.total), (24, 24));
        let s = survey(5, SurveyMethods::All, None).unwrap();
        assert_eq!((s.zero_one, s.total), (115, 120));
        assert!(s.disagreements.is_empty());
    }

    #[test]
    fn survey_limits() {
        assert_eq!(
            survey(8, SurveyMethods::All, None).unwrap_err(),
            Error::SizeLimit { size: 8, limit: 7 }
        );
        assert!(survey(9, SurveyMethods::Fast, None).is_err());
        assert!(survey(3, SurveyMethods::Fast, Some(2)).is_err());
    }
}
