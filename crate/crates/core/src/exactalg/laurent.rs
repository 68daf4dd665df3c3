use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use super::ring::fmt_term;
use super::{bigint_from_json, parse_err, AlgError};

/// Element of `Z[t, 1/t]`, stored as exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentT {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `Some((c, e))` when the value is `c t^e` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next()?;
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c);
        }
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * n)).collect(),
        }
    }

    /// Value at `t = 1` (sum of coefficients).
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute `t -> 1/t`.
    pub fn invert_t(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when no negative exponents occur.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Coefficientwise `self <= other`.
    pub fn coeffwise_le(&self, other: &Self) -> bool {
        let diff = other - self;
        diff.has_nonnegative_coeffs()
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (e, c) in &self.terms {
            m.insert(format!("t^{e}"), Value::String(c.to_string()));
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgError> {
        match v {
            Value::Object(m) => {
                let mut out = Self::zero();
                for (k, c) in m {
                    let e = k
                        .strip_prefix("t^")
                        .and_then(|s| s.parse::<i64>().ok())
                        .ok_or_else(|| parse_err("Laurent exponent key", k))?;
                    out.add_term(e, &bigint_from_json(c)?);
                }
                Ok(out)
            }
            Value::String(s) => s.parse(),
            Value::Number(_) => Ok(Self::constant(bigint_from_json(v)?)),
            other => Err(parse_err("Laurent polynomial", &other.to_string())),
        }
    }
}

impl fmt::Display for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            fmt_term(f, i == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentT({self})")
    }
}

impl FromStr for LaurentT {
    type Err = AlgError;

    /// Accepts sums like `1 + 2t - t^3 + t^-1`; `*` and spaces are optional.
    fn from_str(s: &str) -> Result<Self, AlgError> {
        let mut out = Self::zero();
        for (c, mono) in super::polyqt::split_terms(s).ok_or_else(|| parse_err("Laurent", s))? {
            let mut e = 0i64;
            for (var, pow) in mono {
                if var != 't' {
                    return Err(parse_err("Laurent", s));
                }
                e += pow;
            }
            out.add_term(e, &c);
        }
        Ok(out)
    }
}

impl Add<&LaurentT> for &LaurentT {
    type Output = LaurentT;
    fn add(self, rhs: &LaurentT) -> LaurentT {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub<&LaurentT> for &LaurentT {
    type Output = LaurentT;
    fn sub(self, rhs: &LaurentT) -> LaurentT {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul<&LaurentT> for &LaurentT {
    type Output = LaurentT;
    fn mul(self, rhs: &LaurentT) -> LaurentT {
        let mut out = LaurentT::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentT {
    type Output = LaurentT;
    fn neg(self) -> LaurentT {
        LaurentT {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(LaurentT, Add, add);
forward_owned!(LaurentT, Sub, sub);
forward_owned!(LaurentT, Mul, mul);

impl From<i64> for LaurentT {
    fn from(n: i64) -> Self {
        LaurentT::constant(BigInt::from(n))
    }
}
