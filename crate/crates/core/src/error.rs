use thiserror::Error;

/// A reason a 5-tuple is not an element of the index set for `Z_m x Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error("tuple components must be positive")]
    ZeroComponent,
    #[error("a = {a} does not divide m = {m}")]
    ANotDividingM { a: u64, m: u64 },
    #[error("b = {b} does not divide a = {a}")]
    BNotDividingA { b: u64, a: u64 },
    #[error("c = {c} does not divide n = {n}")]
    CNotDividingN { c: u64, n: u64 },
    #[error("d = {d} does not divide c = {c}")]
    DNotDividingC { d: u64, c: u64 },
    #[error("quotients differ: a/b = {left} but c/d = {right}")]
    QuotientMismatch { left: u64, right: u64 },
    #[error("ell = {ell} is outside 1..={quotient}")]
    EllOutOfRange { ell: u64, quotient: u64 },
    #[error("gcd(ell = {ell}, a/b = {quotient}) != 1")]
    EllNotCoprime { ell: u64, quotient: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} must be a positive integer")]
    Zero(&'static str),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponents must satisfy 1 <= a <= b (got a = {a}, b = {b})")]
    ExponentOrder { a: u32, b: u32 },
    #[error("order exponent c = {c} exceeds a + b = {max}")]
    ExponentTooLarge { c: u32, max: u32 },
    #[error("invalid type key: A = {a} does not divide B = {b}")]
    TypeKey { a: u64, b: u64 },
    #[error("tuple is not in J({m},{n}): {reason}")]
    NotMember { m: u64, n: u64, reason: MembershipError },
    #[error("element set is not a subgroup: {0}")]
    NotClosed(String),
    #[error("no tuple materializes to the given subgroup")]
    NoMatchingTuple,
    #[error("m*n = {product} exceeds the brute-force bound {bound}")]
    BoundExceeded { product: u128, bound: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
