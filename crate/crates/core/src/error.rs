use thiserror::Error;

/// Errors raised by the arithmetic, oracle and catalog layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("simple index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("matrix is not unipotent of order dividing {0}")]
    NotUnipotent(u64),
    #[error("block size {size} outside 1..={max}")]
    SizeOutOfRange { size: usize, max: usize },
    #[error("degree {degree} too large for p = {p} (need degree < p)")]
    DegreeTooLarge { degree: usize, p: u64 },
    #[error("degree {degree} exceeds dimension {dim}")]
    DegreeExceedsDimension { degree: usize, dim: usize },
    #[error("rank parameter {i} outside {min}..={max}")]
    RankOutOfRange { i: usize, min: usize, max: usize },
    #[error("rank mismatch: SL_{0} vs SL_{1}")]
    RankMismatch(usize, usize),
    #[error("invalid alcove weight {parts:?} for SL_{i} at p = {p}")]
    InvalidWeight { i: usize, p: u64, parts: Vec<u32> },
    #[error("object shape is zero")]
    EmptyShape,
    #[error("shape has {got} entries but p - 1 = {expected}")]
    ShapeLength { got: usize, expected: usize },
    #[error("categorical dimension of X is 0 mod p; gl(X) does not split off the scalars")]
    ZeroDimension,
    #[error("summand listing does not reassemble the object")]
    OrderMismatch,
    #[error("class has a nonzero L1 component; its symmetric algebra is infinite")]
    NonzeroTrivialPart,
    #[error("object is not of the form nL_i")]
    NotHomogeneous,
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
