use thiserror::Error;

/// Errors shared by every module in the crate.
///
/// Validation is total: each rejected input maps to exactly one variant,
/// and all arithmetic is checked 128-bit, so overflow surfaces as
/// [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value must be positive, got {0}")]
    NonPositive(i128),
    #[error("{a} and {b} are not coprime (gcd = {gcd})")]
    NotCoprime { a: i128, b: i128, gcd: i128 },
    #[error("m = {m} and n = {n} have the same parity (exactly one must be even)")]
    SameParity { m: i128, n: i128 },
    #[error("parameters must satisfy m > n >= 1, got m = {m}, n = {n}")]
    OrderViolation { m: i128, n: i128 },
    #[error("generators must have gcd 1, got gcd = {0}")]
    GcdNotOne(i128),
    #[error("need at least two distinct generators, got {0}")]
    TooFewGenerators(usize),
    #[error("modulus {0} is not one of the generators")]
    ModulusNotGenerator(i128),
    #[error("arithmetic overflow: an intermediate value exceeds the 128-bit range")]
    Overflow,
    #[error("oracle table needs {needed} entries, budget allows {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },
    #[error("target {target} is not above the Frobenius number {frobenius}")]
    TargetNotAboveFrobenius { target: i128, frobenius: i128 },
}

pub type Result<T> = std::result::Result<T, Error>;
