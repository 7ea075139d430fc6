//! Fox free differential calculus on a free group.
//!
//! The derivative `d/dx_i` is the unique map into the group ring with
//! `d(x_j) = delta_ij`, `d(x_j^-1) = -delta_ij x_j^-1`, and the product
//! rule `d(uv) = du + u dv`. Derivatives are computed in a single
//! left-to-right pass accumulating reduced prefixes, so the cost is linear
//! in the word length with no recursion.

use num_bigint::BigInt;

use crate::error::WordError;
use crate::group_ring::GroupRingElement;
use crate::laurent::{abelianize, LaurentPolynomial};
use crate::matrix::Matrix;
use crate::representation::LinearRep;
use crate::scalar::Field;
use crate::word::Word;

/// Fox derivative of `w` with respect to generator `i`.
pub fn fox_derivative(w: &Word, i: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if !l.inverse {
            if l.gen == i {
                out.add_term(prefix.clone(), BigInt::from(1));
            }
            prefix = prefix.multiply(&Word::from_letters([l]));
        } else {
            prefix = prefix.multiply(&Word::from_letters([l]));
            if l.gen == i {
                out.add_term(prefix.clone(), BigInt::from(-1));
            }
        }
    }
    out
}

/// The g x g Fox Jacobian of a surface-to-ambient homomorphism: entry
/// (j, i) is `d/dx_i images[j]`. Rows are indexed by the surface words,
/// columns by the ambient generators; this orientation is recorded in
/// every certificate.
///
/// The rank is `images.len()`; a letter outside that range signals an
/// unbalanced presentation and is rejected.
pub fn fox_jacobian(images: &[Word]) -> Result<Matrix<GroupRingElement>, WordError> {
    let g = images.len();
    for w in images {
        if let Some(max) = w.max_generator() {
            if max >= g {
                return Err(WordError::ArityMismatch { needed: max + 1, supplied: g });
            }
        }
    }
    Ok(Matrix::from_fn(g, g, |j, i| fox_derivative(&images[j], i)))
}

/// Entrywise abelianization of the Fox Jacobian, landing in Laurent
/// polynomials in one variable per ambient generator.
pub fn abelianized_jacobian(images: &[Word]) -> Result<Matrix<LaurentPolynomial>, WordError> {
    let g = images.len();
    let jac = fox_jacobian(images)?;
    Ok(jac.map(|xi| abelianize(xi, g)))
}

/// Evaluates a word under a linear representation: the product of the
/// generator matrices (or their inverses) along the letters.
pub fn evaluate_word<F: Field>(w: &Word, rep: &LinearRep<F>) -> Matrix<F> {
    let mut acc = rep.identity_matrix();
    for &l in w.letters() {
        let m = if l.inverse { rep.inverse_matrix(l.gen) } else { rep.matrix(l.gen) };
        acc = acc.mul(m);
    }
    acc
}

/// Linear extension of a representation to the group ring: the sum over
/// terms of coefficient times the word's matrix. This is the ring
/// homomorphism `alpha: Z[x_1..x_g] -> End(V)`.
pub fn evaluate<F: Field>(xi: &GroupRingElement, rep: &LinearRep<F>) -> Matrix<F> {
    let n = rep.dim();
    let proto = rep.prototype();
    let mut acc = Matrix::from_fn(n, n, |_, _| proto.zero_like());
    for (w, c) in xi.terms() {
        let scale = proto.integer_like(c);
        let m = evaluate_word(w, rep);
        acc = acc.add(&m.map(|e| e.mul(&scale)));
    }
    acc
}

/// The evaluated gn x gn block matrix `(alpha(d/dx_i images[j]))` of the
/// tautness criterion, with row blocks indexed by surface words.
pub fn evaluated_jacobian<F: Field>(
    images: &[Word],
    rep: &LinearRep<F>,
) -> Result<Matrix<F>, WordError> {
    let jac = fox_jacobian(images)?;
    let g = images.len();
    let blocks: Vec<Vec<Matrix<F>>> = (0..g)
        .map(|j| (0..g).map(|i| evaluate(jac.at(j, i), rep)).collect())
        .collect();
    Ok(Matrix::from_blocks(&blocks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, PrimeFieldElement};
    use crate::word::{parse_word, Alphabet};

    fn ab() -> Alphabet {
        Alphabet::new(vec!["x", "y"]).unwrap()
    }

    fn w(t: &str) -> Word {
        parse_word(t, &ab()).unwrap()
    }

    /// Independent oracle: recursive product-rule expansion by splitting
    /// the word in half, with the one-letter base cases.
    fn fox_recursive(word: &Word, i: usize) -> GroupRingElement {
        let letters = word.letters();
        match letters.len() {
            0 => GroupRingElement::zero(),
            1 => {
                let l = letters[0];
                if l.gen != i {
                    GroupRingElement::zero()
                } else if l.inverse {
                    GroupRingElement::from_term(Word::from_letters([l]), BigInt::from(-1))
                } else {
                    GroupRingElement::one()
                }
            }
            n => {
                let u = Word::from_letters(letters[..n / 2].iter().copied());
                let v = Word::from_letters(letters[n / 2..].iter().copied());
                // d(uv) = du + u dv
                fox_recursive(&u, i).add(&fox_recursive(&v, i).mul_word_left(&u))
            }
        }
    }

    #[test]
    fn derivative_of_generators_and_inverses() {
        assert_eq!(fox_derivative(&w("xy"), 0), GroupRingElement::one());
        assert_eq!(fox_derivative(&w("xy"), 1), GroupRingElement::from_word(w("x")));
        assert_eq!(fox_derivative(&w("yx"), 0), GroupRingElement::from_word(w("y")));
        assert_eq!(fox_derivative(&w("yx"), 1), GroupRingElement::one());
        assert_eq!(
            fox_derivative(&w("x^-1"), 0),
            GroupRingElement::from_term(w("x^-1"), BigInt::from(-1))
        );
    }

    #[test]
    fn derivative_of_commutator() {
        // Oracle: recursive product-rule expansion.
        let c = w("[x,y]");
        let expected = GroupRingElement::one().sub(&GroupRingElement::from_word(w("xyx^-1")));
        assert_eq!(fox_derivative(&c, 0), expected);
        assert_eq!(fox_derivative(&c, 0), fox_recursive(&c, 0));
        assert_eq!(fox_derivative(&c, 1), fox_recursive(&c, 1));
    }

    #[test]
    fn derivative_matches_recursive_oracle_on_longer_words() {
        for text in ["x^3", "xyx^-1y^-1yx", "[x,[x,y]]x^-2", "y^-4[y,x]x"] {
            let word = w(text);
            for i in 0..2 {
                assert_eq!(fox_derivative(&word, i), fox_recursive(&word, i), "{text} d{i}");
            }
        }
    }

    #[test]
    fn jacobian_of_product_presentation_is_identity() {
        let images = vec![w("x"), w("y")];
        let jac = fox_jacobian(&images).unwrap();
        assert_eq!(*jac.at(0, 0), GroupRingElement::one());
        assert!(jac.at(0, 1).is_zero());
        assert!(jac.at(1, 0).is_zero());
        assert_eq!(*jac.at(1, 1), GroupRingElement::one());
    }

    #[test]
    fn jacobian_rejects_unbalanced_images() {
        let images = vec![w("xyx^-1")];
        assert!(fox_jacobian(&images).is_err());
        // rank-1 alphabet: image x^3 -> [[1 + x + x^2]]
        let a1 = Alphabet::new(vec!["x"]).unwrap();
        let x3 = parse_word("x^3", &a1).unwrap();
        let jac = fox_jacobian(std::slice::from_ref(&x3)).unwrap();
        let expected = GroupRingElement::one()
            .add(&GroupRingElement::from_word(parse_word("x", &a1).unwrap()))
            .add(&GroupRingElement::from_word(parse_word("x^2", &a1).unwrap()));
        assert_eq!(*jac.at(0, 0), expected);
    }

    #[test]
    fn abelianized_jacobian_of_multisuture_example() {
        let images = vec![w("xy"), w("yx")];
        let jac = abelianized_jacobian(&images).unwrap();
        assert_eq!(*jac.at(0, 0), LaurentPolynomial::one(2));
        assert_eq!(*jac.at(0, 1), LaurentPolynomial::variable(2, 0));
        assert_eq!(*jac.at(1, 0), LaurentPolynomial::variable(2, 1));
        assert_eq!(*jac.at(1, 1), LaurentPolynomial::one(2));
    }

    #[test]
    fn evaluate_is_linear_extension() {
        // 1 - xy under the one-dimensional x -> 2, y -> 3 over F_7
        let rep = LinearRep::new(vec![
            Matrix::from_rows(vec![vec![PrimeFieldElement::new(2, 7)]]),
            Matrix::from_rows(vec![vec![PrimeFieldElement::new(3, 7)]]),
        ])
        .unwrap();
        let xi = GroupRingElement::one().sub(&GroupRingElement::from_word(w("xy")));
        let m = evaluate(&xi, &rep);
        // 1 - 6 = -5 = 2 mod 7
        assert_eq!(m.at(0, 0).value(), 2);
        let zero = evaluate(&GroupRingElement::zero(), &rep);
        assert!(zero.at(0, 0).is_zero());
        // d/dz(z) evaluates to the identity under any representation
        let one = evaluate(&GroupRingElement::one(), &rep);
        assert!(one.is_identity());
    }

    #[test]
    fn evaluated_jacobian_blocks() {
        let rep = LinearRep::new(vec![
            Matrix::from_rows(vec![vec![rational(2)]]),
            Matrix::from_rows(vec![vec![rational(5)]]),
        ])
        .unwrap();
        let m = evaluated_jacobian(&[w("xy"), w("yx")], &rep).unwrap();
        // [[1, 2],[5, 1]]
        assert_eq!(*m.at(0, 0), rational(1));
        assert_eq!(*m.at(0, 1), rational(2));
        assert_eq!(*m.at(1, 0), rational(5));
        assert_eq!(*m.at(1, 1), rational(1));
    }
}
