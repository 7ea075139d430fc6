//! Exact scalar domains: rationals, Gaussian rationals, and odd prime
//! fields with modulus below 2^31.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! crate. Prime-field elements carry their modulus, so values from
//! different fields never mix silently.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Arbitrary-precision rational in canonical reduced form.
pub type Rational = BigRational;

/// Exact field operations. Elements act as their own domain witnesses:
/// `zero_like`/`one_like` build constants in the same field as `self`,
/// which lets prime-field elements carry their modulus.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, AlgebraError>;

    /// Complex conjugate; the identity on rationals and prime fields.
    fn conj(&self) -> Self {
        self.clone()
    }

    /// Image of an integer in the field of `self`.
    fn integer_like(&self, n: &num_bigint::BigInt) -> Self;

    fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&rhs.inv()?))
    }
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        if Zero::is_zero(self) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.recip())
    }
    fn integer_like(&self, n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

/// Convenience constructor for integer-valued rationals.
pub fn rational(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses the canonical rational text form `p/q` (or a bare integer).
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    BigRational::from_str(text.trim()).map_err(|_| AlgebraError::ScalarParse {
        text: text.to_string(),
        domain: "Q".to_string(),
    })
}

/// Element of Q(i): a pair of rationals, real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical form `a/b+c/d i`; pure reals print as plain rationals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            return write!(f, "{}", self.re);
        }
        if self.im.is_negative() {
            write!(f, "{}-{} i", self.re, -&self.im)
        } else {
            write!(f, "{}+{} i", self.re, self.im)
        }
    }
}

impl Field for GaussianRational {
    fn zero_like(&self) -> Self {
        GaussianRational::from_rational(BigRational::zero())
    }
    fn one_like(&self) -> Self {
        GaussianRational::from_rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
    fn neg(&self) -> Self {
        GaussianRational::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }
    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }
    fn integer_like(&self, n: &BigInt) -> Self {
        GaussianRational::from_rational(BigRational::from_integer(n.clone()))
    }
}

/// Parses `a/b+c/d i` (also bare rationals and forms like `-1/2 i`).
pub fn parse_gaussian(text: &str) -> Result<GaussianRational, AlgebraError> {
    let t = text.trim();
    let err = || AlgebraError::ScalarParse {
        text: text.to_string(),
        domain: "QI".to_string(),
    };
    if let Some(stripped) = t.strip_suffix('i') {
        let body = stripped.trim_end();
        // Split on the last top-level '+' or '-' that separates re and im.
        let chars: Vec<char> = body.chars().collect();
        for k in (1..chars.len()).rev() {
            if chars[k] == '+' || chars[k] == '-' {
                // Skip signs that belong to an exponent-free rational start
                // such as the '-' in "3/-4" (not produced canonically, but
                // guard anyway) or a leading sign.
                if chars[k - 1] == '/' || chars[k - 1] == '+' || chars[k - 1] == '-' {
                    continue;
                }
                let re_part: String = chars[..k].iter().collect();
                let im_part: String = chars[k..].iter().collect();
                let re = parse_rational(&re_part).map_err(|_| err())?;
                let im_text = im_part.trim();
                let im = if im_text == "+" {
                    BigRational::one()
                } else if im_text == "-" {
                    -BigRational::one()
                } else {
                    parse_rational(im_text).map_err(|_| err())?
                };
                return Ok(GaussianRational::new(re, im));
            }
        }
        // Pure imaginary: "i", "-i", "c/d i".
        let im_text = body.trim();
        let im = if im_text.is_empty() {
            BigRational::one()
        } else if im_text == "-" {
            -BigRational::one()
        } else {
            parse_rational(im_text).map_err(|_| err())?
        };
        return Ok(GaussianRational::new(BigRational::zero(), im));
    }
    Ok(GaussianRational::from_rational(parse_rational(t).map_err(|_| err())?))
}

/// Residue in an odd prime field F_p, p < 2^31. The modulus rides along
/// with the value so products stay within u64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

/// Checks the prime-field modulus contract: odd prime below 2^31.
pub fn validate_prime(p: u64) -> Result<(), AlgebraError> {
    if p < 3 || p % 2 == 0 || p >= (1 << 31) || !is_prime(p) {
        return Err(AlgebraError::InvalidPrime { p });
    }
    Ok(())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeFieldElement {
    /// Reduces an integer into F_p. The modulus must already be validated.
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        let v = ((value % m) + m) % m;
        PrimeFieldElement { value: v as u64, modulus }
    }

    pub fn from_residue(value: u64, modulus: u64) -> Self {
        PrimeFieldElement { value: value % modulus, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Image of a rational with denominator coprime to p.
    pub fn from_rational(r: &Rational, modulus: u64) -> Result<Self, AlgebraError> {
        let p = BigInt::from(modulus);
        let num = r.numer() % &p;
        let den = r.denom() % &p;
        let num = to_residue(&num, modulus);
        let den = to_residue(&den, modulus);
        let den = PrimeFieldElement::from_residue(den, modulus);
        if Field::is_zero(&den) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(PrimeFieldElement::from_residue(num, modulus).mul(&den.inv()?))
    }
}

fn to_residue(n: &BigInt, modulus: u64) -> u64 {
    use num_traits::ToPrimitive;
    let p = BigInt::from(modulus);
    let r = ((n % &p) + &p) % &p;
    r.to_u64().expect("residue fits u64")
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for PrimeFieldElement {
    fn zero_like(&self) -> Self {
        PrimeFieldElement { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        PrimeFieldElement { value: 1 % self.modulus, modulus: self.modulus }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "mixed prime-field moduli");
        PrimeFieldElement {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "mixed prime-field moduli");
        PrimeFieldElement {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "mixed prime-field moduli");
        // modulus < 2^31, so the product fits in u64
        PrimeFieldElement {
            value: (self.value * rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        PrimeFieldElement {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        if self.value == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        // Fermat: p is prime, so a^(p-2) inverts a.
        let mut base = self.value;
        let mut exp = self.modulus - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (acc * base) % self.modulus;
            }
            base = (base * base) % self.modulus;
            exp >>= 1;
        }
        Ok(PrimeFieldElement { value: acc, modulus: self.modulus })
    }
    fn integer_like(&self, n: &BigInt) -> Self {
        PrimeFieldElement::from_residue(to_residue(n, self.modulus), self.modulus)
    }
}

/// Parses a residue (any integer literal) into F_p.
pub fn parse_prime_field(text: &str, modulus: u64) -> Result<PrimeFieldElement, AlgebraError> {
    let v: i64 = text.trim().parse().map_err(|_| AlgebraError::ScalarParse {
        text: text.to_string(),
        domain: format!("Fp:{modulus}"),
    })?;
    Ok(PrimeFieldElement::new(v, modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_display() {
        assert_eq!(rational(6).div(&rational(4)).unwrap().to_string(), "3/2");
        assert_eq!(parse_rational("-10/4").unwrap().to_string(), "-5/2");
        assert_eq!(parse_rational("7").unwrap().to_string(), "7");
    }

    #[test]
    fn gaussian_arithmetic_and_display() {
        let i = GaussianRational::new(rational(0), rational(1));
        assert_eq!(i.mul(&i), GaussianRational::from_rational(rational(-1)));
        let z = GaussianRational::new(rational(1) / rational(2), rational(-3) / rational(4));
        assert_eq!(z.to_string(), "1/2-3/4 i");
        assert_eq!(parse_gaussian(&z.to_string()).unwrap(), z);
        assert_eq!(parse_gaussian("5/3").unwrap(), GaussianRational::from_rational(parse_rational("5/3").unwrap()));
        assert_eq!(parse_gaussian("-2 i").unwrap(), GaussianRational::new(rational(0), rational(-2)));
        let w = z.mul(&z.inv().unwrap());
        assert_eq!(w, z.one_like());
    }

    #[test]
    fn prime_field_ops() {
        validate_prime(5).unwrap();
        assert!(validate_prime(4).is_err());
        assert!(validate_prime(2).is_err());
        assert!(validate_prime(1 << 31).is_err());
        let a = PrimeFieldElement::new(-3, 7);
        assert_eq!(a.value(), 4);
        assert_eq!(a.mul(&a.inv().unwrap()).value(), 1);
        assert!(PrimeFieldElement::new(0, 7).inv().is_err());
    }

    #[test]
    fn rational_image_in_prime_field() {
        let r = parse_rational("3/2").unwrap();
        let f = PrimeFieldElement::from_rational(&r, 7).unwrap();
        // 3 * inv(2) = 3 * 4 = 12 = 5 mod 7
        assert_eq!(f.value(), 5);
        assert!(PrimeFieldElement::from_rational(&parse_rational("1/7").unwrap(), 7).is_err());
    }
}
