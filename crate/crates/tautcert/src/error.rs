//! Error types shared across the crate.

use thiserror::Error;

/// Errors from word parsing and free-group operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown generator '{name}' at position {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error("homomorphism needs {needed} images but {supplied} were supplied")]
    ArityMismatch { needed: usize, supplied: usize },
    #[error("alphabet must have at least one generator")]
    EmptyAlphabet,
    #[error("duplicate generator name '{name}'")]
    DuplicateGenerator { name: String },
    #[error("'{name}' is not a valid generator name (letters then optional digits)")]
    BadGeneratorName { name: String },
}

/// Errors from exact scalar and matrix arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is {rows}x{cols} but a square matrix is required")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("{p} is not an odd prime below 2^31")]
    InvalidPrime { p: u64 },
    #[error("cannot parse scalar '{text}' in domain {domain}")]
    ScalarParse { text: String, domain: String },
}

/// Errors from the nilpotent machinery (Magnus, Hall basis, collection).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilpotentError {
    #[error("word has a nonzero Magnus term in degree {found}, below the requested weight {requested}")]
    WeightTooLow { requested: usize, found: usize },
    #[error("basic-commutator coordinate system produced a non-integral or inconsistent solution")]
    NonIntegralSolution,
    #[error("collection exponent {value} exceeds the word-building budget")]
    ExponentBudget { value: String },
    #[error(transparent)]
    Resource(#[from] ResourceError),
}

/// Resource-budget violations. These are always reported explicitly and
/// never silently degraded into a wrong answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResourceError {
    #[error("intermediate word of length {len} exceeds the budget of {limit} letters")]
    WordLength { len: usize, limit: usize },
    #[error("recursion depth {depth} exceeds the budget of {limit}")]
    RecursionDepth { depth: usize, limit: usize },
}

/// Errors from presentations, representations and certification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("presentation has genus {genus} but {words} surface words (unbalanced)")]
    Unbalanced { genus: usize, words: usize },
    #[error("surface word {index} uses a generator outside the ambient alphabet")]
    WordOutOfRange { index: usize },
    #[error("representation has one matrix per generator; expected {expected}, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("generator matrix {index} is not square of dimension {dim}")]
    MatrixShape { index: usize, dim: usize },
    #[error("generator matrix {index} is not invertible")]
    NonInvertibleGenerator { index: usize },
    #[error("representation rank {rep_rank} does not match presentation genus {genus}")]
    RankMismatch { rep_rank: usize, genus: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Resource(#[from] ResourceError),
}

/// Errors from gallery lookup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalleryError {
    #[error("unknown gallery name '{name}'; known: product-g, gen2-multisuture, genus3-derived2, genus3-plus-handles-g, solvable-K")]
    UnknownName { name: String },
    #[error("gallery parameter out of range: {message}")]
    BadParameter { message: String },
}
