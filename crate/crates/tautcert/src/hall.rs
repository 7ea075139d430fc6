//! Hall basic commutators, free-Lie coordinates on lower-central
//! quotients, and the collection process.
//!
//! Basic commutators of weight k are defined inductively: weight 1 is the
//! generators in index order; `[x, y]` is basic of weight i + j when x, y
//! are basic of weights i, j, `x < y` in the global order, and, if
//! `y = [w, z]`, additionally `x >= w`. Elements of equal weight are
//! ordered by recursive lexicographic comparison of (left, right) order
//! indices, and every weight-k element is greater than all lower-weight
//! ones.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::NilpotentError;
use crate::magnus::{magnus_expand, TruncatedSeries};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutatorShape {
    Leaf(usize),
    Node(Box<BasicCommutator>, Box<BasicCommutator>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCommutator {
    shape: CommutatorShape,
    weight: usize,
    order_index: usize,
}

impl BasicCommutator {
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Position in the global Hall order (0-based across all weights).
    pub fn order_index(&self) -> usize {
        self.order_index
    }

    pub fn shape(&self) -> &CommutatorShape {
        &self.shape
    }

    /// Realizes the commutator as a freely reduced word.
    pub fn as_word(&self) -> Word {
        match &self.shape {
            CommutatorShape::Leaf(i) => Word::generator(*i),
            CommutatorShape::Node(u, v) => u.as_word().commutator(&v.as_word()),
        }
    }

    /// Expansion in the free associative algebra, degree = weight:
    /// leaves are single letters and `[u,v]` maps to `uv - vu`.
    fn lie_expansion(&self) -> BTreeMap<Vec<u32>, BigInt> {
        match &self.shape {
            CommutatorShape::Leaf(i) => {
                let mut m = BTreeMap::new();
                m.insert(vec![*i as u32], BigInt::one());
                m
            }
            CommutatorShape::Node(u, v) => {
                let a = u.lie_expansion();
                let b = v.lie_expansion();
                let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
                let mut acc = |m1: &BTreeMap<Vec<u32>, BigInt>,
                               m2: &BTreeMap<Vec<u32>, BigInt>,
                               sign: i64,
                               out: &mut BTreeMap<Vec<u32>, BigInt>| {
                    for (p, cp) in m1 {
                        for (q, cq) in m2 {
                            let mut mono = p.clone();
                            mono.extend_from_slice(q);
                            let c = cp * cq * BigInt::from(sign);
                            let e = out.entry(mono).or_insert_with(BigInt::zero);
                            *e += c;
                        }
                    }
                };
                acc(&a, &b, 1, &mut out);
                acc(&b, &a, -1, &mut out);
                out.retain(|_, c| !c.is_zero());
                out
            }
        }
    }
}

impl fmt::Display for BasicCommutator {
    /// Bracket notation over canonical names, e.g. `[x1,[x1,x2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            CommutatorShape::Leaf(i) => write!(f, "x{}", i + 1),
            CommutatorShape::Node(u, v) => write!(f, "[{u},{v}]"),
        }
    }
}

/// All basic commutators of weight at most `max_weight` on `rank`
/// generators, in the global order. The weight-k count equals the Witt
/// number N(rank, k).
pub fn hall_basis(rank: usize, max_weight: usize) -> Vec<BasicCommutator> {
    assert!(rank >= 1 && max_weight >= 1);
    let mut levels: Vec<Vec<BasicCommutator>> = Vec::with_capacity(max_weight);
    let mut next_index = 0usize;
    let leaves: Vec<BasicCommutator> = (0..rank)
        .map(|i| {
            let c = BasicCommutator {
                shape: CommutatorShape::Leaf(i),
                weight: 1,
                order_index: next_index,
            };
            next_index += 1;
            c
        })
        .collect();
    levels.push(leaves);

    for k in 2..=max_weight {
        let mut candidates: Vec<(usize, usize, BasicCommutator)> = Vec::new();
        for i in 1..k {
            let j = k - i;
            for x in &levels[i - 1] {
                for y in &levels[j - 1] {
                    if x.order_index >= y.order_index {
                        continue;
                    }
                    if let CommutatorShape::Node(w, _) = &y.shape {
                        if x.order_index < w.order_index {
                            continue;
                        }
                    }
                    candidates.push((
                        x.order_index,
                        y.order_index,
                        BasicCommutator {
                            shape: CommutatorShape::Node(Box::new(x.clone()), Box::new(y.clone())),
                            weight: k,
                            order_index: 0,
                        },
                    ));
                }
            }
        }
        candidates.sort_by_key(|(xi, yi, _)| (*xi, *yi));
        let mut level = Vec::with_capacity(candidates.len());
        for (_, _, mut c) in candidates {
            c.order_index = next_index;
            next_index += 1;
            level.push(c);
        }
        levels.push(level);
    }
    levels.into_iter().flatten().collect()
}

/// The weight-k slice of the Hall basis.
pub fn hall_basis_of_weight(rank: usize, k: usize) -> Vec<BasicCommutator> {
    hall_basis(rank, k)
        .into_iter()
        .filter(|b| b.weight() == k)
        .collect()
}

/// Integer coordinates of `w` on the weight-k basic commutators: the
/// unique vector c with the degree-k Magnus part of `w` equal to
/// `sum c_i Lie(b_i)`. Requires all Magnus terms of degree below k to
/// vanish (`w` in the corresponding lower-central term).
pub fn lie_coordinates(w: &Word, rank: usize, k: usize) -> Result<Vec<BigInt>, NilpotentError> {
    let series = magnus_expand(w, rank, k);
    lie_coordinates_of_series(&series, rank, k)
}

/// Series-level variant used by the collection loop.
pub fn lie_coordinates_of_series(
    series: &TruncatedSeries,
    rank: usize,
    k: usize,
) -> Result<Vec<BigInt>, NilpotentError> {
    assert!(k >= 1 && series.cutoff() >= k);
    if let Some(d) = series.lowest_positive_degree() {
        if d < k {
            return Err(NilpotentError::WeightTooLow { requested: k, found: d });
        }
    }
    let basis = hall_basis_of_weight(rank, k);
    let expansions: Vec<BTreeMap<Vec<u32>, BigInt>> =
        basis.iter().map(BasicCommutator::lie_expansion).collect();
    let target = series.degree_part(k);

    // Index the monomials appearing anywhere.
    let mut monomials: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for m in target.keys() {
        let next = monomials.len();
        monomials.entry(m.clone()).or_insert(next);
    }
    for exp in &expansions {
        for m in exp.keys() {
            let next = monomials.len();
            monomials.entry(m.clone()).or_insert(next);
        }
    }

    let rows = monomials.len();
    let cols = basis.len();
    let mut aug = vec![vec![BigRational::zero(); cols + 1]; rows];
    for (b, exp) in expansions.iter().enumerate() {
        for (m, c) in exp {
            aug[monomials[m]][b] = BigRational::from(c.clone());
        }
    }
    for (m, c) in &target {
        aug[monomials[m]][cols] = BigRational::from(c.clone());
    }

    // Gaussian elimination; the Lie images of the weight-k basis are a
    // Z-basis, so the system has a unique integral solution. Anything
    // else is reported loudly.
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].recip();
        for v in aug[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..=cols {
                    let s = &f * &aug[row][c];
                    aug[r][c] -= s;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == rows {
            break;
        }
    }
    // Consistency: zero rows must have zero right-hand side.
    for r in row..rows {
        if !aug[r][cols].is_zero() {
            return Err(NilpotentError::NonIntegralSolution);
        }
    }
    let mut out = Vec::with_capacity(cols);
    for col in 0..cols {
        let value = match pivot_of_col[col] {
            Some(r) => aug[r][cols].clone(),
            None => BigRational::zero(),
        };
        if !value.denom().is_one() {
            return Err(NilpotentError::NonIntegralSolution);
        }
        out.push(value.numer().clone());
    }
    Ok(out)
}

/// One collected factor: a basic commutator and its nonzero exponent.
pub type CollectedFactor = (BasicCommutator, BigInt);

/// Collection modulo weight `max_weight + 1`: exponents in increasing
/// basic-commutator order with
/// `w == prod c_i^{e_i}  (mod the next lower-central term)`.
///
/// Each round reads the exponents from the Lie coordinates of the running
/// remainder and divides the ordered product out on the left. The
/// remainder is tracked as a truncated Magnus series, so exponents may be
/// large without materializing enormous words.
pub fn collect(w: &Word, rank: usize, max_weight: usize) -> Result<Vec<CollectedFactor>, NilpotentError> {
    assert!(max_weight >= 1);
    let mut remainder = magnus_expand(w, rank, max_weight);
    let mut out = Vec::new();
    for k in 1..=max_weight {
        let coords = lie_coordinates_of_series(&remainder, rank, k)?;
        let basis = hall_basis_of_weight(rank, k);
        let mut product = TruncatedSeries::one(rank, max_weight);
        for (b, e) in basis.into_iter().zip(coords) {
            if e.is_zero() {
                continue;
            }
            let base = magnus_expand(&b.as_word(), rank, max_weight);
            product = product.mul(&series_pow(&base, &e));
            out.push((b, e));
        }
        remainder = series_inverse(&product).mul(&remainder);
    }
    Ok(out)
}

/// Residual series after dividing the collected product out of `w`; its
/// positive degrees vanish through `max_weight` by construction.
pub fn collection_remainder(
    w: &Word,
    rank: usize,
    max_weight: usize,
    factors: &[CollectedFactor],
) -> TruncatedSeries {
    let mut product = TruncatedSeries::one(rank, max_weight);
    for (b, e) in factors {
        let base = magnus_expand(&b.as_word(), rank, max_weight);
        product = product.mul(&series_pow(&base, e));
    }
    magnus_expand(w, rank, max_weight).mul(&series_inverse(&product))
}

/// Inverse of a series with constant term 1.
pub fn series_inverse(s: &TruncatedSeries) -> TruncatedSeries {
    let rank = s.rank();
    let cutoff = s.cutoff();
    let one = TruncatedSeries::one(rank, cutoff);
    assert_eq!(s.coefficient(&[]), BigInt::one(), "series must have constant term 1");
    // n = s - 1 has no constant term, so the Neumann sum
    // 1 - n + n^2 - ... terminates at the cutoff.
    let mut n = s.clone();
    n.add_term(vec![], BigInt::from(-1));
    let minus_n = n.negated();
    let mut acc = one.clone();
    let mut power = one;
    for _ in 0..cutoff {
        power = power.mul(&minus_n);
        if power.terms().next().is_none() {
            break;
        }
        acc = acc.add(&power);
    }
    acc
}

/// Integer power of a series with constant term 1 (binary exponentiation,
/// negative exponents via the inverse).
pub fn series_pow(s: &TruncatedSeries, e: &BigInt) -> TruncatedSeries {
    let base = if e.is_negative() { series_inverse(s) } else { s.clone() };
    let mut exp = e.abs();
    let mut acc = TruncatedSeries::one(s.rank(), s.cutoff());
    let mut sq = base;
    let two = BigInt::from(2);
    while !exp.is_zero() {
        if (&exp % &two) == BigInt::one() {
            acc = acc.mul(&sq);
        }
        exp /= &two;
        if !exp.is_zero() {
            sq = sq.mul(&sq);
        }
    }
    acc
}
