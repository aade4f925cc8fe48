//! Crate-wide error type.

use thiserror::Error;

use crate::cyclotomic::BlockViolation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field order {p}^{m} exceeds the supported 2^63 bound")]
    FieldTooLarge { p: u64, m: usize },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{q} is not a power of the field characteristic {p}")]
    NotCharPower { q: u64, p: u64 },
    #[error("GF({p}^{d}) is not a subfield of GF({p}^{m})")]
    NoSuchSubfield { p: u64, d: usize, m: usize },
    #[error("element does not lie in GF({q}^{r})")]
    NotInSubfield { q: u64, r: usize },
    #[error("no primitive {n}th root of unity: {n} does not divide {group}")]
    NoNthRoot { n: u64, group: u128 },
    #[error("division by the zero polynomial")]
    ZeroPolyDivision,
    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,
    #[error("reciprocal of the zero polynomial is undefined")]
    ZeroPolyReciprocal,
    #[error("length n must be positive")]
    ZeroLength,
    #[error("gcd(n, q) must be 1, got n = {n}, q = {q}")]
    NotCoprime { n: usize, q: u64 },
    #[error("extension degree r must be at least 2")]
    ExtensionTooSmall,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid block: {0}")]
    InvalidBlock(BlockViolation),
    #[error("block enumeration capped at n <= {cap}, got n = {n}")]
    EnumerationCapped { n: usize, cap: usize },
    #[error("operation requires a complete block")]
    NotComplete,
    #[error("operation requires q to be a power of 2")]
    NotCharTwo,
    #[error("operation requires r = 2")]
    RequiresRankTwo,
    #[error("generator is not Galois coprime")]
    NotGaloisCoprime,
    #[error("polynomial does not divide x^{n} - 1")]
    NotDivisorOfXnMinus1 { n: usize },
    #[error("root exponent set is not closed under multiplication by q^r")]
    RootSetNotClosed,
    #[error("polynomial must have coefficients in GF({q})")]
    CoefficientsNotInBaseField { q: u64 },
    #[error(
        "enumeration of {required} words exceeds the guard {guard} (raise the guard to proceed)"
    )]
    GuardExceeded { required: u128, guard: u64 },
    #[error("rank-sum oracle limited to n <= 20 rows, got {0}")]
    RankMatrixTooLarge(usize),
    #[error("a = {a} is not invertible modulo {n}")]
    AffineNotInvertible { a: usize, n: usize },
    #[error("g(1) = 0: the even-weight subcode is not proper")]
    EvenSubcodeDegenerate,
    #[error("code is not reversible (-B != B)")]
    NotReversible,
    #[error("codebook construction requires a block-built code")]
    NoBlock,
    #[error("closed-form count failed the integrality check")]
    NonIntegralCount,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
