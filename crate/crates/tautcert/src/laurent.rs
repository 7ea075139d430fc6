//! Multivariate Laurent polynomials over the rationals, with exact
//! determinants via fraction-free Bareiss elimination.
//!
//! These are the abelianized shadows of group-ring elements: a word maps
//! to the monomial of its exponent vector. Terms are kept in graded
//! lexicographic order, which fixes printing and comparison.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::group_ring::GroupRingElement;
use crate::matrix::Matrix;
use crate::scalar::{Field, PrimeFieldElement, Rational};
use crate::word::Alphabet;

/// Exponent vector of a Laurent monomial in `rank` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn unit(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }

    /// Canonical standalone text, factors separated by spaces:
    /// `t_x^2 t_y^-1`. The empty product prints as `1`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        self.format_with_separator(alphabet, " ")
    }

    fn format_with_separator(&self, alphabet: &Alphabet, sep: &str) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(format!("t_{}", alphabet.name(i)));
            } else {
                parts.push(format!("t_{}^{}", alphabet.name(i), e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(sep)
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then lex.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    rank: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPolynomial {
    pub fn zero(rank: usize) -> Self {
        LaurentPolynomial { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        LaurentPolynomial::constant(rank, BigRational::one())
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        let mut out = LaurentPolynomial::zero(rank);
        out.add_term(Monomial::unit(rank), c);
        out
    }

    /// The single variable `t_i`.
    pub fn variable(rank: usize, i: usize) -> Self {
        assert!(i < rank);
        let mut exps = vec![0i64; rank];
        exps[i] = 1;
        let mut out = LaurentPolynomial::zero(rank);
        out.add_term(Monomial(exps), BigRational::one());
        out
    }

    pub fn monomial(rank: usize, exps: Vec<i64>, c: Rational) -> Self {
        assert_eq!(exps.len(), rank);
        let mut out = LaurentPolynomial::zero(rank);
        out.add_term(Monomial(exps), c);
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Units of Q[t^±] are the nonzero single-monomial elements.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.0.len(), self.rank, "monomial rank mismatch");
        if Zero::is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank, "Laurent rank mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank, "Laurent rank mismatch");
        let mut out = LaurentPolynomial::zero(self.rank);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }

    /// Multiplies by the monomial `c * t^exps`.
    pub fn shift(&self, exps: &Monomial, c: &Rational) -> Self {
        let mut out = LaurentPolynomial::zero(self.rank);
        for (m, a) in &self.terms {
            out.add_term(m.mul(exps), a * c);
        }
        out
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the polynomial subring (all exponents
    /// nonnegative). Returns `None` if the division is not exact; Bareiss
    /// elimination guarantees exactness, so `None` signals a bug loudly.
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.rank, divisor.rank);
        let (dlm, dlc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = LaurentPolynomial::zero(self.rank);
        while !rem.is_zero() {
            let (rlm, rlc) = rem.leading().expect("nonzero has a leading term");
            let q = rlm.div(dlm);
            if q.0.iter().any(|&e| e < 0) {
                return None;
            }
            let qc = rlc / dlc;
            let qpoly = LaurentPolynomial::monomial(self.rank, q.0.clone(), qc);
            rem = rem.sub(&qpoly.mul(divisor));
            quot = quot.add(&qpoly);
        }
        Some(quot)
    }

    /// Evaluates at a point of (F_p - {0})^g; nonzero coordinates are
    /// required because exponents may be negative.
    pub fn evaluate_prime_field(
        &self,
        point: &[PrimeFieldElement],
    ) -> Result<PrimeFieldElement, AlgebraError> {
        assert_eq!(point.len(), self.rank);
        let modulus = point
            .first()
            .map(|e| e.modulus())
            .ok_or(AlgebraError::DivisionByZero)?;
        let mut acc = PrimeFieldElement::new(0, modulus);
        for (m, c) in &self.terms {
            let mut term = PrimeFieldElement::from_rational(c, modulus)?;
            for (i, &e) in m.0.iter().enumerate() {
                let base = if e < 0 { point[i].inv()? } else { point[i] };
                for _ in 0..e.unsigned_abs() {
                    term = term.mul(&base);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Canonical text in ascending graded-lex term order, factors joined
    /// by `*`: `1 - t_x*t_y`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
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
            let mono = m.format_with_separator(alphabet, "*");
            if mono == "1" {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

/// Ring homomorphism Z[F] -> Q[t^±]: each word maps to the monomial of
/// its exponent vector.
pub fn abelianize(xi: &GroupRingElement, rank: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero(rank);
    for (w, c) in xi.terms() {
        out.add_term(
            Monomial(w.exponent_vector(rank)),
            BigRational::from(c.clone()),
        );
    }
    out
}

/// Exact determinant of a Laurent-polynomial matrix.
///
/// Each row is first divided by a monomial unit so all entries land in the
/// polynomial subring; fraction-free Bareiss elimination (whose divisions
/// are exact by the Sylvester identity) computes the determinant there,
/// and the factored units multiply back in at the end.
pub fn det_laurent(m: &Matrix<LaurentPolynomial>) -> Result<LaurentPolynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Err(AlgebraError::NonSquare { rows: 0, cols: 0 });
    }
    let rank = m.at(0, 0).rank();
    let mut unit = LaurentPolynomial::one(rank);
    let mut work = m.clone();

    for i in 0..n {
        let row_zero = (0..n).all(|j| work.at(i, j).is_zero());
        if row_zero {
            return Ok(LaurentPolynomial::zero(rank));
        }
        let mut mins = vec![i64::MAX; rank];
        for j in 0..n {
            for (mono, _) in work.at(i, j).terms() {
                for (k, &e) in mono.0.iter().enumerate() {
                    mins[k] = mins[k].min(e);
                }
            }
        }
        let mins: Vec<i64> = mins
            .into_iter()
            .map(|v| if v == i64::MAX { 0 } else { v })
            .collect();
        let factor = Monomial(mins.clone());
        let inverse = Monomial(mins.iter().map(|v| -v).collect());
        unit = unit.shift(&factor, &BigRational::one());
        for j in 0..n {
            let shifted = work.at(i, j).shift(&inverse, &BigRational::one());
            *work.at_mut(i, j) = shifted;
        }
    }

    // Fraction-free Bareiss elimination on the polynomial part.
    let mut sign_negative = false;
    let mut prev = LaurentPolynomial::one(rank);
    for k in 0..n.saturating_sub(1) {
        let pivot_row = match (k..n).find(|&r| !work.at(r, k).is_zero()) {
            Some(r) => r,
            None => return Ok(LaurentPolynomial::zero(rank)),
        };
        if pivot_row != k {
            for j in 0..n {
                let a = work.at(pivot_row, j).clone();
                let b = work.at(k, j).clone();
                *work.at_mut(pivot_row, j) = b;
                *work.at_mut(k, j) = a;
            }
            sign_negative = !sign_negative;
        }
        let pivot = work.at(k, k).clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = pivot
                    .mul(work.at(i, j))
                    .sub(&work.at(i, k).mul(work.at(k, j)));
                let q = if num.is_zero() {
                    LaurentPolynomial::zero(rank)
                } else {
                    num.div_exact(&prev)
                        .expect("Bareiss division is exact on polynomial entries")
                };
                *work.at_mut(i, j) = q;
            }
            *work.at_mut(i, k) = LaurentPolynomial::zero(rank);
        }
        prev = pivot;
    }

    let mut det = work.at(n - 1, n - 1).mul(&unit);
    if sign_negative {
        det = det.neg();
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn tx() -> LaurentPolynomial {
        LaurentPolynomial::variable(2, 0)
    }

    fn ty() -> LaurentPolynomial {
        LaurentPolynomial::variable(2, 1)
    }

    fn names() -> Alphabet {
        Alphabet::new(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn graded_lex_ordering() {
        let one = Monomial::unit(2);
        let x = Monomial(vec![1, 0]);
        let xy = Monomial(vec![1, 1]);
        let x_inv_y = Monomial(vec![-1, 1]);
        assert!(one < x);
        assert!(x < xy);
        assert!(x_inv_y < one);
    }

    #[test]
    fn format_matches_canonical_forms() {
        let p = LaurentPolynomial::one(2).sub(&tx().mul(&ty()));
        assert_eq!(p.format(&names()), "1 - t_x*t_y");
        let m = Monomial(vec![2, -1]);
        assert_eq!(m.format(&names()), "t_x^2 t_y^-1");
        assert_eq!(LaurentPolynomial::zero(2).format(&names()), "0");
    }

    #[test]
    fn det_2x2_example() {
        // [[1, t_x],[t_y, 1]] -> 1 - t_x t_y
        let m = Matrix::from_rows(vec![
            vec![LaurentPolynomial::one(2), tx()],
            vec![ty(), LaurentPolynomial::one(2)],
        ]);
        let expected = LaurentPolynomial::one(2).sub(&tx().mul(&ty()));
        assert_eq!(det_laurent(&m).unwrap(), expected);
    }

    #[test]
    fn det_identity() {
        let z = LaurentPolynomial::zero(3);
        let o = LaurentPolynomial::one(3);
        let m = Matrix::from_fn(3, 3, |i, j| if i == j { o.clone() } else { z.clone() });
        assert_eq!(det_laurent(&m).unwrap(), LaurentPolynomial::one(3));
    }

    #[test]
    fn det_proportional_rows_vanishes() {
        // [[1, t],[t^-1, 1]] over one variable
        let t = LaurentPolynomial::variable(1, 0);
        let tinv = LaurentPolynomial::monomial(1, vec![-1], rational(1));
        let m = Matrix::from_rows(vec![
            vec![LaurentPolynomial::one(1), t],
            vec![tinv, LaurentPolynomial::one(1)],
        ]);
        assert!(det_laurent(&m).unwrap().is_zero());
    }

    #[test]
    fn abelianize_kills_conjugation() {
        use crate::group_ring::GroupRingElement;
        use crate::word::parse_word;
        let ab = names();
        let w = parse_word("xyx^-1", &ab).unwrap();
        let xi = GroupRingElement::one().sub(&GroupRingElement::from_word(w));
        let p = abelianize(&xi, 2);
        assert_eq!(p, LaurentPolynomial::one(2).sub(&ty()));
    }

    #[test]
    fn evaluation_at_prime_field_points() {
        let p = LaurentPolynomial::one(2).sub(&tx().mul(&ty()));
        let two = PrimeFieldElement::new(2, 5);
        let one = PrimeFieldElement::new(1, 5);
        // 1 - 2*1 = -1 = 4 mod 5
        assert_eq!(p.evaluate_prime_field(&[two, one]).unwrap().value(), 4);
        let m = LaurentPolynomial::monomial(2, vec![-1, 0], rational(1));
        // at t_x = 2: 2^-1 = 3 mod 5
        assert_eq!(m.evaluate_prime_field(&[two, one]).unwrap().value(), 3);
    }
}
