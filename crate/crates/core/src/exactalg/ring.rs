use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::{bigint_from_json, AlgError, LaurentT, PolyQT, RatQT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    Int,
    LaurentT,
    PolyQT,
    RatQT,
}

impl RingTag {
    pub fn name(self) -> &'static str {
        match self {
            RingTag::Int => "INT",
            RingTag::LaurentT => "LAURENT_T",
            RingTag::PolyQT => "POLY_QT",
            RingTag::RatQT => "RAT_QT",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "INT" => RingTag::Int,
            "LAURENT_T" => RingTag::LaurentT,
            "POLY_QT" => RingTag::PolyQT,
            "RAT_QT" => RingTag::RatQT,
            _ => return None,
        })
    }
}

/// A commutative coefficient ring usable inside symmetric-function expansions.
///
/// All rings here embed into `RatQT`; the `try_*` conversions return `None`
/// when a value is not representable, so narrowing is always explicit.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TAG: RingTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    fn from_int(n: &BigInt) -> Self;
    fn to_ratqt(&self) -> RatQT;
    fn try_from_ratqt(r: &RatQT) -> Option<Self>;
    fn try_from_laurent(l: &LaurentT) -> Option<Self>;

    /// Substitute `t -> 1/t`, when the ring can hold the result.
    fn invert_t(&self) -> Option<Self>;
    /// Substitute `t -> 1`, when the ring can hold the result.
    fn at_t_one(&self) -> Option<Self>;

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, AlgError>;

    fn try_from_rational(q: &BigRational) -> Option<Self> {
        if q.denom().is_one() {
            Some(Self::from_int(q.numer()))
        } else {
            Self::try_from_ratqt(&RatQT::from_rational(q))
        }
    }

    fn scale_int(&self, n: &BigInt) -> Self {
        self.times(&Self::from_int(n))
    }
}

impl Ring for BigInt {
    const TAG: RingTag = RingTag::Int;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }
    fn to_ratqt(&self) -> RatQT {
        RatQT::from_int(self.clone())
    }
    fn try_from_ratqt(r: &RatQT) -> Option<Self> {
        r.to_poly().ok()?.as_constant()
    }
    fn try_from_laurent(l: &LaurentT) -> Option<Self> {
        l.as_constant()
    }
    fn invert_t(&self) -> Option<Self> {
        Some(self.clone())
    }
    fn at_t_one(&self) -> Option<Self> {
        Some(self.clone())
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self, AlgError> {
        bigint_from_json(v)
    }
    fn try_from_rational(q: &BigRational) -> Option<Self> {
        q.denom().is_one().then(|| q.numer().clone())
    }
}

impl Ring for LaurentT {
    const TAG: RingTag = RingTag::LaurentT;

    fn zero() -> Self {
        LaurentT::zero()
    }
    fn one() -> Self {
        LaurentT::one()
    }
    fn is_zero(&self) -> bool {
        LaurentT::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_int(n: &BigInt) -> Self {
        LaurentT::constant(n.clone())
    }
    fn to_ratqt(&self) -> RatQT {
        RatQT::from_laurent(self)
    }
    fn try_from_ratqt(r: &RatQT) -> Option<Self> {
        r.to_laurent()
    }
    fn try_from_laurent(l: &LaurentT) -> Option<Self> {
        Some(l.clone())
    }
    fn invert_t(&self) -> Option<Self> {
        Some(LaurentT::invert_t(self))
    }
    fn at_t_one(&self) -> Option<Self> {
        Some(LaurentT::constant(self.at_one()))
    }
    fn to_json(&self) -> Value {
        LaurentT::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self, AlgError> {
        LaurentT::from_json(v)
    }
}

impl Ring for PolyQT {
    const TAG: RingTag = RingTag::PolyQT;

    fn zero() -> Self {
        PolyQT::zero()
    }
    fn one() -> Self {
        PolyQT::one()
    }
    fn is_zero(&self) -> bool {
        PolyQT::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_int(n: &BigInt) -> Self {
        PolyQT::constant(n.clone())
    }
    fn to_ratqt(&self) -> RatQT {
        RatQT::from_poly(self.clone())
    }
    fn try_from_ratqt(r: &RatQT) -> Option<Self> {
        r.to_poly().ok()
    }
    fn try_from_laurent(l: &LaurentT) -> Option<Self> {
        PolyQT::from_laurent(l)
    }
    fn invert_t(&self) -> Option<Self> {
        None
    }
    fn at_t_one(&self) -> Option<Self> {
        Some(self.at_t_one())
    }
    fn to_json(&self) -> Value {
        PolyQT::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self, AlgError> {
        PolyQT::from_json(v)
    }
}

impl Ring for RatQT {
    const TAG: RingTag = RingTag::RatQT;

    fn zero() -> Self {
        RatQT::zero()
    }
    fn one() -> Self {
        RatQT::one()
    }
    fn is_zero(&self) -> bool {
        RatQT::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_int(n: &BigInt) -> Self {
        RatQT::from_int(n.clone())
    }
    fn to_ratqt(&self) -> RatQT {
        self.clone()
    }
    fn try_from_ratqt(r: &RatQT) -> Option<Self> {
        Some(r.clone())
    }
    fn try_from_laurent(l: &LaurentT) -> Option<Self> {
        Some(RatQT::from_laurent(l))
    }
    fn invert_t(&self) -> Option<Self> {
        Some(RatQT::invert_t(self))
    }
    fn at_t_one(&self) -> Option<Self> {
        RatQT::at_t_one(self)
    }
    fn to_json(&self) -> Value {
        RatQT::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self, AlgError> {
        RatQT::from_json(v)
    }
    fn try_from_rational(q: &BigRational) -> Option<Self> {
        Some(RatQT::from_rational(q))
    }
}

/// Format an integer coefficient in front of a monomial (`""` means the
/// monomial is `1`).
pub(crate) fn fmt_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    mono: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if mono.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{abs}{mono}")
    }
}
