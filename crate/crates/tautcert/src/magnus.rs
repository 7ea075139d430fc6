//! Magnus expansion into truncated noncommutative power series.
//!
//! The embedding sends `x_i` to `1 + X_i` and `x_i^-1` to the truncated
//! geometric series `1 - X_i + X_i^2 - ...`. The lowest nonzero degree of
//! `w - 1` detects the lower-central weight of `w`: `w` lies in the k-th
//! term of the lower central series (paper indexing, `G_0 = G`) exactly
//! when its weight is at least `k + 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::Word;

/// Noncommutative polynomial truncated above a cutoff degree. Monomials
/// are sequences of generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    rank: usize,
    cutoff: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(rank: usize, cutoff: usize) -> Self {
        TruncatedSeries { rank, cutoff, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, cutoff: usize) -> Self {
        let mut s = TruncatedSeries::zero(rank, cutoff);
        s.add_term(vec![], BigInt::one());
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &[u32]) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, monomial: Vec<u32>, c: BigInt) {
        if c.is_zero() || monomial.len() > self.cutoff {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rank, self.cutoff), (rhs.rank, rhs.cutoff));
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn negated(&self) -> Self {
        TruncatedSeries {
            rank: self.rank,
            cutoff: self.cutoff,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!((self.rank, self.cutoff), (rhs.rank, rhs.cutoff));
        let mut out = TruncatedSeries::zero(self.rank, self.cutoff);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                if m.len() + n.len() > self.cutoff {
                    continue;
                }
                let mut mono = m.clone();
                mono.extend_from_slice(n);
                out.add_term(mono, a * b);
            }
        }
        out
    }

    /// The degree-`k` homogeneous component.
    pub fn degree_part(&self, k: usize) -> BTreeMap<Vec<u32>, BigInt> {
        self.terms
            .iter()
            .filter(|(m, _)| m.len() == k)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Smallest positive degree with a nonzero term, if any.
    pub fn lowest_positive_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter(|m| !m.is_empty())
            .map(Vec::len)
            .min()
    }
}

/// Series of a single letter: `1 + X_i` or the truncated geometric series
/// for the inverse.
fn letter_series(gen: usize, inverse: bool, rank: usize, cutoff: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(rank, cutoff);
    if !inverse {
        s.add_term(vec![gen as u32], BigInt::one());
    } else {
        let mut sign = BigInt::from(-1);
        for d in 1..=cutoff {
            s.add_term(vec![gen as u32; d], sign.clone());
            sign = -sign;
        }
    }
    s
}

/// Magnus expansion of a word, truncated above `cutoff`.
pub fn magnus_expand(w: &Word, rank: usize, cutoff: usize) -> TruncatedSeries {
    assert!(cutoff >= 1, "cutoff must be at least 1");
    let mut acc = TruncatedSeries::one(rank, cutoff);
    for &l in w.letters() {
        acc = acc.mul(&letter_series(l.gen, l.inverse, rank, cutoff));
    }
    acc
}

/// Lower-central weight as detected by the Magnus expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcsWeight {
    /// The identity word lies in every term of the series.
    Infinite,
    /// Exact weight: lowest nonzero Magnus degree.
    Finite(usize),
    /// All degrees up to the cutoff vanish; the weight is at least this.
    AtLeast(usize),
}

impl LcsWeight {
    /// True when the weight is known to be at least `k`.
    pub fn at_least(&self, k: usize) -> bool {
        match *self {
            LcsWeight::Infinite => true,
            LcsWeight::Finite(d) => d >= k,
            LcsWeight::AtLeast(d) => d >= k,
        }
    }
}

/// Weight of `w` up to the cutoff: the smallest degree `d <= cutoff` with
/// a nonzero degree-`d` Magnus term, `AtLeast(cutoff + 1)` if none, and
/// `Infinite` for the trivial word.
pub fn lcs_weight(w: &Word, rank: usize, cutoff: usize) -> LcsWeight {
    if w.is_identity() {
        return LcsWeight::Infinite;
    }
    let series = magnus_expand(w, rank, cutoff);
    match series.lowest_positive_degree() {
        Some(d) => LcsWeight::Finite(d),
        None => LcsWeight::AtLeast(cutoff + 1),
    }
}
