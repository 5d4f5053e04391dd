use thiserror::Error;

/// Errors from building or manipulating matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NonSymmetric(usize, usize),
    #[error("diagonal entry {0} is not zero")]
    BadDiagonal(usize),
    #[error("entry ({0}, {1}) is not +1 or -1")]
    BadEntry(usize, usize),
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
    #[error("order {order} exceeds the configured limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Errors from spectrum certification and the three-eigenvalue machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("factor for eigenvalue {0} does not annihilate the matrix")]
    AnnihilationFails(String),
    #[error("multiplicity mismatch for {value}: expected {expected}, found {actual}")]
    MultiplicityMismatch { value: String, expected: usize, actual: usize },
    #[error("claimed multiplicities sum to {claimed}, matrix has order {order}")]
    OrderMismatch { claimed: usize, order: usize },
    #[error("surd eigenvalue {0} is missing its conjugate with equal multiplicity")]
    UnpairedSurd(String),
    #[error("{0} is not an algebraic integer")]
    NotAlgebraicInteger(String),
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(i64),
    #[error("{0} is not the smallest eigenvalue")]
    NotSmallest(i64),
    #[error("clique size {c} is outside 1..={max}")]
    BadCliqueSize { c: usize, max: usize },
    #[error("rows do not form a clique: entry ({0}, {1}) is -1 after switching")]
    NotAClique(usize, usize),
    #[error("radicand is negative")]
    NegativeRadicand,
    #[error("discriminant is negative")]
    NegativeDiscriminant,
    #[error("precondition fails: {0}")]
    PreconditionFails(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Errors from the nonexistence engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NonexistenceError {
    #[error("matrix is not positive semidefinite")]
    NotPsd,
    #[error("forbidden 3x3 pattern on rows ({0}, {1}, {2})")]
    ForbiddenPattern(usize, usize, usize),
    #[error("entries must lie in {{0, +s, -s}} with diagonal s")]
    BadEntries,
    #[error("spectrum does not have exactly three distinct integer eigenvalues")]
    NotThreeEigenvalues,
    #[error("order {0} is odd")]
    OddOrder(usize),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Errors from explicit constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("exponent {0} is not supported")]
    UnsupportedExponent(u32),
    #[error("bad parameters: {0}")]
    BadVariantParams(String),
    #[error("{0} is not a prime power congruent to 1 mod 4")]
    BadOrder(u64),
    #[error("matrix does not have exactly two eigenvalues")]
    NotTwoEigenvalue,
    #[error("bad dimension {0}")]
    BadDimension(usize),
    #[error("Golay code construction failed: {0}")]
    GolayConstructionFailed(String),
    #[error("no clique of size {0} found")]
    CliqueNotFound(usize),
    #[error("line system check failed: {0}")]
    Invalid(String),
    #[error("unknown construction {0}")]
    Unknown(String),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Errors from the classification layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("invariant expects order {expected}, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
}

/// Errors from bound calculators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("angle is outside the range where the relative bound applies")]
    AngleOutOfRange,
    #[error("dimension {0} is too small")]
    DimensionTooSmall(usize),
    #[error("bad bound data: {0}")]
    Data(String),
}
