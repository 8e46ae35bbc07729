use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("expected a positive integer, got {0}")]
    NonPositive(String),
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: String, modulus: String },
    #[error("excluded case: {0}")]
    ExcludedCase(String),
    #[error("moduli are not pairwise coprime: {0}")]
    NotCoprime(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivByZero,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("{d} does not divide the extension degree {e}")]
    BadSubfield { d: usize, e: usize },
    #[error("{s} is not a multiplier candidate modulo {modulus}")]
    BadMultiplier { s: i64, modulus: u64 },
    #[error("sweep too large: {0}")]
    SweepTooLarge(String),
    #[error("no {m}-adic splitting is given by this multiplier (maximum {max})")]
    NoSuchSplitting { m: u64, max: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("coset is not stable under Frobenius: {0}")]
    NotGaloisStable(String),
    #[error("class is not invariant under multiplication by q: {0}")]
    NotInvariant(String),
    #[error("duplicate locator at positions {0} and {1}")]
    DuplicateLocator(usize, usize),
    #[error("zero column multiplier at position {0}")]
    ZeroMultiplier(usize),
    #[error("message space of size {size} exceeds the budget {budget}")]
    TooLarge { size: String, budget: u64 },
    #[error("code is not contained in the parent GRS code: {0}")]
    NotSubcode(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("closed form and brute force disagree: {0}")]
    OracleInconsistency(String),
}
