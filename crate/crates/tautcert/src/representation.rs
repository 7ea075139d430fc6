//! Linear representations of a free group over the exact scalar domains,
//! with duals and the self-duality shortcuts (unitary, SL2).

use std::fmt;

use crate::error::{AlgebraError, CertifyError};
use crate::matrix::Matrix;
use crate::scalar::{Field, GaussianRational, PrimeFieldElement, Rational};

/// A representation over one fixed field: an invertible matrix per
/// generator, with the inverses precomputed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRep<F: Field> {
    dim: usize,
    mats: Vec<Matrix<F>>,
    invs: Vec<Matrix<F>>,
}

impl<F: Field> LinearRep<F> {
    /// Validates shape and invertibility (determinant nonzero) of every
    /// generator matrix.
    pub fn new(mats: Vec<Matrix<F>>) -> Result<Self, CertifyError> {
        if mats.is_empty() {
            return Err(CertifyError::GeneratorCount { expected: 1, got: 0 });
        }
        let dim = mats[0].rows();
        let mut invs = Vec::with_capacity(mats.len());
        for (index, m) in mats.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim || dim == 0 {
                return Err(CertifyError::MatrixShape { index, dim });
            }
            let det = m.det().map_err(CertifyError::Algebra)?;
            if det.is_zero() {
                return Err(CertifyError::NonInvertibleGenerator { index });
            }
            invs.push(
                m.inverse()
                    .map_err(|_| CertifyError::NonInvertibleGenerator { index })?,
            );
        }
        Ok(LinearRep { dim, mats, invs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of generators covered.
    pub fn rank(&self) -> usize {
        self.mats.len()
    }

    pub fn matrix(&self, i: usize) -> &Matrix<F> {
        &self.mats[i]
    }

    pub fn inverse_matrix(&self, i: usize) -> &Matrix<F> {
        &self.invs[i]
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.mats
    }

    pub fn prototype(&self) -> &F {
        self.mats[0].at(0, 0)
    }

    pub fn identity_matrix(&self) -> Matrix<F> {
        Matrix::identity_like(self.dim, self.prototype())
    }

    /// The dual representation: every generator matrix replaced by its
    /// inverse-transpose. Applying it twice returns the original.
    pub fn dual(&self) -> Self {
        let mats: Vec<Matrix<F>> = self.invs.iter().map(Matrix::transpose).collect();
        let invs: Vec<Matrix<F>> = self.mats.iter().map(Matrix::transpose).collect();
        LinearRep { dim: self.dim, mats, invs }
    }

    /// Extends by identity matrices on `extra` fresh generators, the
    /// representation extension of a handle attachment.
    pub fn extend_by_identity(&self, extra: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..extra {
            out.mats.push(self.identity_matrix());
            out.invs.push(self.identity_matrix());
        }
        out
    }

    fn all_unitary(&self) -> bool {
        self.mats
            .iter()
            .all(|m| m.mul(&m.conj_transpose()).is_identity())
    }

    fn all_det_one(&self) -> bool {
        self.mats.iter().all(|m| {
            m.det()
                .map(|d| d == d.one_like())
                .unwrap_or(false)
        })
    }
}

/// Scalar domain tag for a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Rational,
    GaussianRational,
    PrimeField(u64),
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => write!(f, "Q"),
            Domain::GaussianRational => write!(f, "QI"),
            Domain::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Why a single determinant check suffices in the tautness criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfDualReason {
    /// Every generator matrix times its conjugate transpose is the
    /// identity.
    Unitary,
    /// Dimension 2 and every generator determinant is 1.
    Sl2,
    /// Self-duality was asserted by the caller.
    Assumed,
}

impl SelfDualReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            SelfDualReason::Unitary => "unitary",
            SelfDualReason::Sl2 => "SL2",
            SelfDualReason::Assumed => "assumed",
        }
    }
}

/// A representation over one of the supported exact scalar domains.
#[derive(Debug, Clone, PartialEq)]
pub enum Representation {
    Rational(LinearRep<Rational>),
    Gaussian(LinearRep<GaussianRational>),
    PrimeField(LinearRep<PrimeFieldElement>),
}

impl Representation {
    pub fn from_rational(mats: Vec<Matrix<Rational>>) -> Result<Self, CertifyError> {
        Ok(Representation::Rational(LinearRep::new(mats)?))
    }

    pub fn from_gaussian(mats: Vec<Matrix<GaussianRational>>) -> Result<Self, CertifyError> {
        Ok(Representation::Gaussian(LinearRep::new(mats)?))
    }

    pub fn from_prime_field(mats: Vec<Matrix<PrimeFieldElement>>) -> Result<Self, CertifyError> {
        Ok(Representation::PrimeField(LinearRep::new(mats)?))
    }

    pub fn dim(&self) -> usize {
        match self {
            Representation::Rational(r) => r.dim(),
            Representation::Gaussian(r) => r.dim(),
            Representation::PrimeField(r) => r.dim(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Representation::Rational(r) => r.rank(),
            Representation::Gaussian(r) => r.rank(),
            Representation::PrimeField(r) => r.rank(),
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            Representation::Rational(_) => Domain::Rational,
            Representation::Gaussian(_) => Domain::GaussianRational,
            Representation::PrimeField(r) => Domain::PrimeField(r.prototype().modulus()),
        }
    }

    pub fn dual(&self) -> Self {
        match self {
            Representation::Rational(r) => Representation::Rational(r.dual()),
            Representation::Gaussian(r) => Representation::Gaussian(r.dual()),
            Representation::PrimeField(r) => Representation::PrimeField(r.dual()),
        }
    }

    pub fn extend_by_identity(&self, extra: usize) -> Self {
        match self {
            Representation::Rational(r) => Representation::Rational(r.extend_by_identity(extra)),
            Representation::Gaussian(r) => Representation::Gaussian(r.extend_by_identity(extra)),
            Representation::PrimeField(r) => {
                Representation::PrimeField(r.extend_by_identity(extra))
            }
        }
    }

    /// Detects the self-duality shortcuts: "unitary" when every generator
    /// matrix times its conjugate transpose is the identity (rational and
    /// Gaussian-rational domains, where conjugation is meaningful), "SL2"
    /// when the dimension is 2 and every generator has determinant 1 (any
    /// field). Absence only means the dual determinant must be checked
    /// too; it never blocks certification.
    pub fn self_dual_reason(&self) -> Option<SelfDualReason> {
        let unitary = match self {
            Representation::Rational(r) => r.all_unitary(),
            Representation::Gaussian(r) => r.all_unitary(),
            Representation::PrimeField(_) => false,
        };
        if unitary {
            return Some(SelfDualReason::Unitary);
        }
        let det_one = match self {
            Representation::Rational(r) => r.all_det_one(),
            Representation::Gaussian(r) => r.all_det_one(),
            Representation::PrimeField(r) => r.all_det_one(),
        };
        if self.dim() == 2 && det_one {
            return Some(SelfDualReason::Sl2);
        }
        None
    }

    /// Generator matrices rendered in canonical bracket text.
    pub fn matrix_texts(&self) -> Vec<String> {
        match self {
            Representation::Rational(r) => r.mats.iter().map(Matrix::bracket_text).collect(),
            Representation::Gaussian(r) => r.mats.iter().map(Matrix::bracket_text).collect(),
            Representation::PrimeField(r) => r.mats.iter().map(Matrix::bracket_text).collect(),
        }
    }
}

/// Builds the trivial one-dimensional rational representation on `rank`
/// generators.
pub fn trivial_representation(rank: usize) -> Representation {
    use crate::scalar::rational;
    let mats = (0..rank)
        .map(|_| Matrix::from_rows(vec![vec![rational(1)]]))
        .collect();
    Representation::from_rational(mats).expect("identity matrices are invertible")
}

/// One-dimensional representation over F_p from nonzero scalars.
pub fn one_dim_prime_field(
    values: &[u64],
    modulus: u64,
) -> Result<Representation, CertifyError> {
    let mats = values
        .iter()
        .map(|&v| Matrix::from_rows(vec![vec![PrimeFieldElement::new(v as i64, modulus)]]))
        .collect();
    Representation::from_prime_field(mats)
}

/// Parses one matrix in bracket text `[[a,b],[c,d]]` with entries parsed
/// by `parse_entry`.
pub fn parse_bracket_matrix<F: Field>(
    text: &str,
    parse_entry: &dyn Fn(&str) -> Result<F, AlgebraError>,
) -> Result<Matrix<F>, AlgebraError> {
    let t = text.trim();
    let err = || AlgebraError::ScalarParse {
        text: text.to_string(),
        domain: "matrix".to_string(),
    };
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(err)?;
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, c) in inner.char_indices() {
        match c {
            '[' => {
                if depth == 0 {
                    start = Some(i + 1);
                }
                depth += 1;
            }
            ']' => {
                if depth == 0 {
                    return Err(err());
                }
                depth -= 1;
                if depth == 0 {
                    let row_text = &inner[start.ok_or_else(err)?..i];
                    let row = row_text
                        .split(',')
                        .map(|e| parse_entry(e.trim()))
                        .collect::<Result<Vec<F>, _>>()?;
                    rows.push(row);
                }
            }
            _ => {}
        }
    }
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(err());
    }
    Ok(Matrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_rational, rational};

    fn beta() -> Representation {
        let x = Matrix::from_rows(vec![vec![rational(1), rational(1)], vec![rational(0), rational(1)]]);
        let y = Matrix::from_rows(vec![vec![rational(0), rational(1)], vec![rational(-1), rational(0)]]);
        let z = Matrix::identity_like(2, &rational(0));
        Representation::from_rational(vec![x, y, z]).unwrap()
    }

    #[test]
    fn construction_rejects_singular_generators() {
        let singular = Matrix::from_rows(vec![vec![rational(1), rational(2)], vec![rational(2), rational(4)]]);
        let err = Representation::from_rational(vec![singular]);
        assert!(matches!(err, Err(CertifyError::NonInvertibleGenerator { index: 0 })));
    }

    #[test]
    fn dual_is_inverse_transpose_and_involutive() {
        // One-dimensional x -> 2 dualizes to x -> 1/2.
        let rep = Representation::from_rational(vec![Matrix::from_rows(vec![vec![rational(2)]])]).unwrap();
        match rep.dual() {
            Representation::Rational(r) => {
                assert_eq!(*r.matrix(0).at(0, 0), parse_rational("1/2").unwrap())
            }
            _ => unreachable!(),
        }
        assert_eq!(rep.dual().dual(), rep);
        // The rotation [[0,1],[-1,0]] is fixed by inverse-transpose
        // (hand-checked 2x2 oracle: inverse = [[0,-1],[1,0]], transpose back).
        let b = beta();
        match (b.dual(), b.clone()) {
            (Representation::Rational(d), Representation::Rational(orig)) => {
                assert_eq!(d.matrix(1), orig.matrix(1));
            }
            _ => unreachable!(),
        }
        let id_rep = trivial_representation(3);
        assert_eq!(id_rep.dual(), id_rep);
    }

    #[test]
    fn self_dual_shortcuts() {
        // beta has determinant 1 everywhere but beta(x) is not unitary,
        // so the SL2 route applies.
        assert_eq!(beta().self_dual_reason(), Some(SelfDualReason::Sl2));
        let two = Representation::from_rational(vec![Matrix::from_rows(vec![vec![rational(2)]])]).unwrap();
        assert_eq!(two.self_dual_reason(), None);
        let shear = Representation::from_rational(vec![Matrix::from_rows(vec![
            vec![rational(1), rational(1)],
            vec![rational(0), rational(1)],
        ])])
        .unwrap();
        assert_eq!(shear.self_dual_reason(), Some(SelfDualReason::Sl2));
        // A rotation matrix alone is orthogonal, hence unitary.
        let rot = Representation::from_rational(vec![Matrix::from_rows(vec![
            vec![rational(0), rational(1)],
            vec![rational(-1), rational(0)],
        ])])
        .unwrap();
        assert_eq!(rot.self_dual_reason(), Some(SelfDualReason::Unitary));
    }

    #[test]
    fn bracket_matrix_round_trip() {
        let m = Matrix::from_rows(vec![vec![rational(1), rational(-2)], vec![rational(0), rational(7)]]);
        let text = m.bracket_text();
        assert_eq!(text, "[[1,-2],[0,7]]");
        let parsed = parse_bracket_matrix(&text, &parse_rational).unwrap();
        assert_eq!(parsed, m);
    }
}
