//! The integral group ring Z[F] of a free group: formal integer
//! combinations of freely reduced words with convolution product.
//!
//! This is the codomain of Fox derivatives. No zero coefficients are ever
//! stored, so equality is structural.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn one() -> Self {
        GroupRingElement::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        GroupRingElement { terms }
    }

    pub fn from_term(w: Word, coefficient: BigInt) -> Self {
        let mut out = GroupRingElement::zero();
        out.add_term(w, coefficient);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (word, coefficient) pairs.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, w: Word, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coefficient);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Convolution product: words multiply by free-group multiplication.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.multiply(v), a * b);
            }
        }
        out
    }

    /// Left multiplication by a single word, the common case in the Fox
    /// product rule.
    pub fn mul_word_left(&self, w: &Word) -> Self {
        GroupRingElement {
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (w.multiply(u), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return GroupRingElement::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Canonical text form over an alphabet, e.g. `1 - x y x^-1`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag.is_one() {
                out.push_str(&w.format(alphabet));
            } else if w.is_identity() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{} {}", mag, w.format(alphabet)));
            }
        }
        out
    }
}
