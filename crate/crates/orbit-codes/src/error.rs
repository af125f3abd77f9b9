use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size p^(e*n) exceeds the 2^24 cap")]
    SizeCapExceeded,
    #[error("{m} does not divide {n}")]
    NotADivisor { m: u32, n: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("operation requires a nonzero subspace")]
    ZeroDimensional,
    #[error("n must be even")]
    OddN,
    #[error("k = {k} out of range for t = {t}")]
    BadK { k: u32, t: u32 },
    #[error("l = {l} out of range for t = {t}")]
    BadL { l: u32, t: u32 },
    #[error("m = {m} out of range for t = {t}")]
    BadM { m: u32, t: u32 },
    #[error("shape constraint violated: {0}")]
    BadShape(String),
    #[error("summands are not in direct sum")]
    DirectSumFailure,
    #[error("the span Y is a proper subspace of the field")]
    YNotFull,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("non-exact division in a closed-form count")]
    InexactDivision,
    #[error("arithmetic overflow in a closed-form count")]
    Overflow,
    #[error("polynomial degrees violate the required pattern: {0}")]
    BadDegree(String),
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("subspaces have different dimensions")]
    DimensionMismatch,
    #[error("construction family not supported by this operation")]
    UnsupportedFamily,
    #[error("enumeration too large: {0}")]
    TooLarge(String),
}
