use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {n} is too small (need n >= {min})")]
    ModulusTooSmall { n: u64, min: u64 },
    #[error("modulus {0} is even; only odd moduli are supported here")]
    EvenModulus(u64),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("{s} is not coprime to {n}")]
    NotCoprime { s: i64, n: u64 },
    #[error("element of Z[zeta_{0}] is not fixed by complex conjugation")]
    NotReal(u64),
    #[error("{b} is not a basis index for n = {n}")]
    NotBasisIndex { b: u64, n: u64 },
    #[error("{d} does not divide {n}")]
    NotDivisor { d: u64, n: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("q = {0} gives a solvable PSL(2,q); need q >= 4")]
    SolvableGroup(u64),
    #[error("order {n} is out of scope: {reason}")]
    OutOfScope { n: u64, reason: String },
    #[error("augmentation vector for n = {n} has augmentation {sum}, expected 1")]
    BadAugmentation { n: u64, sum: i64 },
    #[error("lambda values are inconsistent: {0}")]
    InconsistentLambdas(String),
    #[error("instance file: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}
