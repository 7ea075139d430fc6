//! Derived-series membership via triviality in free solvable quotients.
//!
//! A word is trivial in F/F^(d) exactly when it is trivial in F/F^(d-1)
//! and every Fox derivative vanishes in the group ring of F/F^(d-1) (the
//! Magnus embedding of the free solvable group). Vanishing is decided by
//! grouping derivative terms into equivalence classes mod F^(d-1), which
//! recurses on triviality of quotients u v^-1. The base case d = 1 is the
//! exponent-vector test.
//!
//! Every call carries an explicit resource budget; exceeding it reports a
//! resource error, never a wrong answer.

use std::collections::HashMap;

use crate::error::ResourceError;
use crate::word::Word;

/// Resource ceilings for the recursive membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Longest intermediate reduced word allowed.
    pub max_word_length: usize,
    /// Deepest derived-series level allowed.
    pub max_recursion_depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_word_length: 100_000, max_recursion_depth: 6 }
    }
}

struct Ctx {
    rank: usize,
    budget: Budget,
    // Triviality verdicts per (depth, word), shared across the whole
    // top-level call; the recursion revisits identical quotients often.
    memo: HashMap<(usize, Word), bool>,
}

impl Ctx {
    /// Is `w` trivial in F/F^(d)?
    fn trivial_mod_derived(&mut self, w: &Word, d: usize) -> Result<bool, ResourceError> {
        if d == 0 || w.is_identity() {
            return Ok(true);
        }
        if w.len() > self.budget.max_word_length {
            return Err(ResourceError::WordLength {
                len: w.len(),
                limit: self.budget.max_word_length,
            });
        }
        if w.exponent_vector(self.rank).iter().any(|&e| e != 0) {
            return Ok(false);
        }
        if d == 1 {
            return Ok(true);
        }
        if d > self.budget.max_recursion_depth {
            return Err(ResourceError::RecursionDepth {
                depth: d,
                limit: self.budget.max_recursion_depth,
            });
        }
        if let Some(&v) = self.memo.get(&(d, w.clone())) {
            return Ok(v);
        }
        let verdict = self.derivatives_vanish(w, d - 1)?;
        self.memo.insert((d, w.clone()), verdict);
        Ok(verdict)
    }

    /// Do all Fox derivatives of `w` vanish in Z[F/F^(d)]?
    fn derivatives_vanish(&mut self, w: &Word, d: usize) -> Result<bool, ResourceError> {
        for gen in distinct_generators(w) {
            let terms = derivative_terms(w, gen);
            // Words with different exponent vectors are never equal in any
            // abelian-or-deeper quotient, so bucket on that first.
            let mut buckets: HashMap<Vec<i64>, Vec<(Word, i64)>> = HashMap::new();
            for (word, coeff) in terms {
                buckets
                    .entry(word.exponent_vector(self.rank))
                    .or_default()
                    .push((word, coeff));
            }
            for bucket in buckets.into_values() {
                // Group the bucket into classes mod F^(d); the derivative
                // vanishes iff every class sums to zero.
                let mut classes: Vec<(Word, i64)> = Vec::new();
                'terms: for (word, coeff) in bucket {
                    for (rep, total) in classes.iter_mut() {
                        let quotient = word.multiply(&rep.inverse());
                        if quotient.len() > self.budget.max_word_length {
                            return Err(ResourceError::WordLength {
                                len: quotient.len(),
                                limit: self.budget.max_word_length,
                            });
                        }
                        if self.trivial_mod_derived(&quotient, d)? {
                            *total += coeff;
                            continue 'terms;
                        }
                    }
                    classes.push((word, coeff));
                }
                if classes.iter().any(|(_, total)| *total != 0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn distinct_generators(w: &Word) -> Vec<usize> {
    let mut gens: Vec<usize> = w.letters().iter().map(|l| l.gen).collect();
    gens.sort_unstable();
    gens.dedup();
    gens
}

/// All Fox-derivative terms of `w` with respect to `gen`, as reduced
/// prefix words with merged integer coefficients.
fn derivative_terms(w: &Word, gen: usize) -> Vec<(Word, i64)> {
    let mut acc: HashMap<Word, i64> = HashMap::new();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if !l.inverse {
            if l.gen == gen {
                *acc.entry(prefix.clone()).or_insert(0) += 1;
            }
            prefix = prefix.multiply(&Word::from_letters([l]));
        } else {
            prefix = prefix.multiply(&Word::from_letters([l]));
            if l.gen == gen {
                *acc.entry(prefix.clone()).or_insert(0) -= 1;
            }
        }
    }
    acc.retain(|_, c| *c != 0);
    acc.into_iter().collect()
}

/// Membership test `w` in F^(d) (the d-th derived subgroup of the free
/// group of the given rank).
pub fn in_derived_subgroup(
    w: &Word,
    rank: usize,
    d: usize,
    budget: &Budget,
) -> Result<bool, ResourceError> {
    let mut ctx = Ctx { rank, budget: *budget, memo: HashMap::new() };
    ctx.trivial_mod_derived(w, d)
}

/// Largest d <= max_depth with `w` in F^(d). The identity word lies in
/// every derived subgroup, so it reports `max_depth`.
pub fn derived_depth(
    w: &Word,
    rank: usize,
    max_depth: usize,
    budget: &Budget,
) -> Result<usize, ResourceError> {
    let mut ctx = Ctx { rank, budget: *budget, memo: HashMap::new() };
    for d in 1..=max_depth {
        if !ctx.trivial_mod_derived(w, d)? {
            return Ok(d - 1);
        }
    }
    Ok(max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magnus::{lcs_weight, LcsWeight};
    use crate::word::{parse_word, Alphabet};

    fn ab() -> Alphabet {
        Alphabet::new(vec!["x", "y", "z"]).unwrap()
    }

    fn w(t: &str) -> Word {
        parse_word(t, &ab()).unwrap()
    }

    fn depth(t: &str, dmax: usize) -> usize {
        derived_depth(&w(t), 3, dmax, &Budget::default()).unwrap()
    }

    #[test]
    fn generators_have_depth_zero() {
        assert_eq!(depth("x", 3), 0);
        assert_eq!(depth("xy^-1z", 3), 0);
    }

    #[test]
    fn commutators_have_depth_one() {
        assert_eq!(depth("[x,y]", 3), 1);
        assert_eq!(depth("[x,y][y,z]", 3), 1);
    }

    #[test]
    fn double_commutator_has_depth_exactly_two() {
        // [[x,y],[x^-1,y]] is a commutator of two derived elements but has
        // a nonzero weight-4 Magnus part, so it misses F^(3)
        // (F^(3) sits inside lower-central weight 8).
        let word = w("[[x,y],[x^-1,y]]");
        assert_eq!(
            derived_depth(&word, 3, 3, &Budget::default()).unwrap(),
            2
        );
        assert_eq!(lcs_weight(&word, 3, 4), LcsWeight::Finite(4));
    }

    #[test]
    fn theorem_curve_has_depth_exactly_two() {
        let a = w("[[x,y][x^-1,y], z[y^-1,x][y,x]z^-1]");
        assert_eq!(derived_depth(&a, 3, 3, &Budget::default()).unwrap(), 2);
    }

    #[test]
    fn identity_saturates_max_depth() {
        assert_eq!(depth("1", 4), 4);
    }

    #[test]
    fn membership_is_monotone() {
        let word = w("[[x,y],[y,z]]");
        let budget = Budget::default();
        assert!(in_derived_subgroup(&word, 3, 1, &budget).unwrap());
        assert!(in_derived_subgroup(&word, 3, 2, &budget).unwrap());
        assert!(!in_derived_subgroup(&word, 3, 3, &budget).unwrap());
    }

    #[test]
    fn budget_violations_are_reported() {
        let tight = Budget { max_word_length: 4, max_recursion_depth: 6 };
        let word = w("[[x,y],[x^-1,y]]");
        assert!(matches!(
            derived_depth(&word, 3, 3, &tight),
            Err(ResourceError::WordLength { .. })
        ));
        let shallow = Budget { max_word_length: 100_000, max_recursion_depth: 2 };
        assert!(matches!(
            derived_depth(&word, 3, 3, &shallow),
            Err(ResourceError::RecursionDepth { .. })
        ));
    }
}
