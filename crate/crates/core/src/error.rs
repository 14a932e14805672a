use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed indeterminates '{0}' and '{1}'")]
    MixedIndeterminates(char, char),
    #[error("negative exponent {0} outside Laurent mode")]
    NegativeExponent(i32),
    #[error("division is only defined for ordinary polynomials")]
    LaurentDivision,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("denominator vanishes under substitution")]
    Pole,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a horizontal strip")]
    NotHorizontalStrip(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("expected a polynomial: {0}")]
    NotPolynomial(String),
    #[error("expected integer coefficients: {0}")]
    NotIntegral(String),
    #[error("triangular system failure: {0}")]
    Triangular(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("series operation: {0}")]
    Series(String),
    #[error("expression not in the span of the basis: {0}")]
    NotInSpan(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
