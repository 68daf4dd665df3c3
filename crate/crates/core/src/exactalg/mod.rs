//! Exact coefficient rings: `BigInt`, Laurent polynomials in `t`,
//! polynomials in `q,t` and rational functions in `q,t`.

mod dense;
mod laurent;
mod polyqt;
mod ratqt;
mod ring;

pub use laurent::LaurentT;
pub use polyqt::PolyQT;
pub use ratqt::RatQT;
pub use ring::{Ring, RingTag};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("rational function is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

/// How to specialize a Laurent polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    TToOne,
    TToInverse,
}

/// Result of [`specialize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Specialized {
    Int(BigInt),
    Laurent(LaurentT),
}

pub fn specialize(a: &LaurentT, mode: Specialization) -> Specialized {
    match mode {
        Specialization::TToOne => Specialized::Int(a.at_one()),
        Specialization::TToInverse => Specialized::Laurent(a.invert_t()),
    }
}

/// Certify that a rational function is a polynomial and return it.
pub fn ratqt_to_poly(a: &RatQT) -> Result<PolyQT, AlgError> {
    a.to_poly()
}

pub(crate) fn parse_err(what: &'static str, input: &str) -> AlgError {
    AlgError::Parse {
        what,
        input: input.to_string(),
    }
}

/// Parse an integer coefficient written as a JSON string or number.
pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Result<BigInt, AlgError> {
    match v {
        serde_json::Value::String(s) => s.trim().parse().map_err(|_| parse_err("integer", s)),
        serde_json::Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| parse_err("integer", &n.to_string())),
        other => Err(parse_err("integer", &other.to_string())),
    }
}
