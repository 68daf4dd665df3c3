use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use super::ring::fmt_term;
use super::{bigint_from_json, parse_err, AlgError, LaurentT};

/// Element of `Z[q, t]`, stored as `(q-exponent, t-exponent)` -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct PolyQT {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl PolyQT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigInt)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: (u32, u32), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn from_laurent(l: &LaurentT) -> Option<Self> {
        let mut out = Self::zero();
        for (e, c) in l.terms() {
            out.add_term((0, u32::try_from(e).ok()?), c);
        }
        Some(out)
    }

    /// The value as a Laurent polynomial when `q` does not occur.
    pub fn to_laurent(&self) -> Option<LaurentT> {
        let mut out = LaurentT::zero();
        for ((a, b), c) in &self.terms {
            if *a != 0 {
                return None;
            }
            out.add_term(i64::from(*b), c);
        }
        Some(out)
    }

    /// Substitute `q = 0`.
    pub fn at_q_zero(&self) -> LaurentT {
        let mut out = LaurentT::zero();
        for ((a, b), c) in &self.terms {
            if *a == 0 {
                out.add_term(i64::from(*b), c);
            }
        }
        out
    }

    /// Substitute `t = 1`.
    pub fn at_t_one(&self) -> Self {
        let mut out = Self::zero();
        for ((a, _), c) in &self.terms {
            out.add_term((*a, 0), c);
        }
        out
    }

    pub fn eval_int(&self, q: &BigInt, t: &BigInt) -> BigInt {
        let mut s = BigInt::zero();
        for ((a, b), c) in &self.terms {
            s += c * num_traits::pow(q.clone(), *a as usize) * num_traits::pow(t.clone(), *b as usize);
        }
        s
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * n)).collect(),
        }
    }

    pub fn mul_monomial(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Gcd of the integer coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide every coefficient by `n`, which must divide all of them.
    pub(crate) fn div_int_exact(&self, n: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c / n)).collect(),
        }
    }

    /// Leading term under graded lex order with `q > t`.
    pub fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms
            .iter()
            .max_by_key(|((a, b), _)| (a + b, *a))
            .map(|(k, c)| (*k, c))
    }

    pub fn max_q_deg(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_t_deg(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn coeffwise_le(&self, other: &Self) -> bool {
        (other - self).has_nonnegative_coeffs()
    }

    /// Dense form indexed `[q-exp][t-exp]`.
    pub(crate) fn to_dense(&self) -> Vec<Vec<BigInt>> {
        if self.is_zero() {
            return Vec::new();
        }
        let qd = self.max_q_deg() as usize;
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); qd + 1];
        for ((a, b), c) in &self.terms {
            let row = &mut rows[*a as usize];
            if row.len() <= *b as usize {
                row.resize(*b as usize + 1, BigInt::zero());
            }
            row[*b as usize] = c.clone();
        }
        rows
    }

    pub(crate) fn from_dense(rows: &[Vec<BigInt>]) -> Self {
        let mut terms = BTreeMap::new();
        for (a, row) in rows.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((a as u32, b as u32), c.clone());
                }
            }
        }
        Self { terms }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for ((a, b), c) in &self.terms {
            m.insert(format!("q^{a} t^{b}"), Value::String(c.to_string()));
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgError> {
        match v {
            Value::Object(m) => {
                let mut out = Self::zero();
                for (k, c) in m {
                    let key = parse_qt_key(k).ok_or_else(|| parse_err("q,t exponent key", k))?;
                    out.add_term(key, &bigint_from_json(c)?);
                }
                Ok(out)
            }
            Value::String(s) => s.parse(),
            Value::Number(_) => Ok(Self::constant(bigint_from_json(v)?)),
            other => Err(parse_err("q,t polynomial", &other.to_string())),
        }
    }
}

fn parse_qt_key(k: &str) -> Option<(u32, u32)> {
    let mut it = k.split_whitespace();
    let a = it.next()?.strip_prefix("q^")?.parse().ok()?;
    let b = it.next()?.strip_prefix("t^")?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

fn var_power(v: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}^{e}"),
    }
}

impl fmt::Display for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let mono = format!("{}{}", var_power("q", *a), var_power("t", *b));
            fmt_term(f, i == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQT({self})")
    }
}

/// Split a textual sum of monomials into `(coefficient, [(variable, exponent)])`.
///
/// Grammar: terms joined by `+`/`-`; a term is an optional integer followed by
/// factors `v` or `v^e` (`e` may be negative), optionally separated by `*`.
/// Whitespace is ignored.
pub(crate) fn split_terms(s: &str) -> Option<Vec<(BigInt, Vec<(char, i64)>)>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = BigInt::one();
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if !out.is_empty() {
            return None;
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: BigInt = if i > start {
            chars[start..i].iter().collect::<String>().parse().ok()?
        } else {
            BigInt::one()
        };
        let mut factors = Vec::new();
        while i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            if chars[i] == '*' {
                i += 1;
                continue;
            }
            let v = chars[i];
            if !v.is_ascii_alphabetic() {
                return None;
            }
            i += 1;
            let mut e = 1i64;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let es = i;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                e = chars[es..i].iter().collect::<String>().parse().ok()?;
            }
            factors.push((v, e));
        }
        if i == start && factors.is_empty() {
            return None;
        }
        out.push((sign * coeff, factors));
    }
    Some(out)
}

impl FromStr for PolyQT {
    type Err = AlgError;

    /// Accepts sums like `1 + q^2t - 3q*t^2`.
    fn from_str(s: &str) -> Result<Self, AlgError> {
        let mut out = Self::zero();
        for (c, mono) in split_terms(s).ok_or_else(|| parse_err("q,t polynomial", s))? {
            let (mut a, mut b) = (0i64, 0i64);
            for (v, e) in mono {
                match v {
                    'q' => a += e,
                    't' => b += e,
                    _ => return Err(parse_err("q,t polynomial", s)),
                }
            }
            let a = u32::try_from(a).map_err(|_| parse_err("q,t polynomial", s))?;
            let b = u32::try_from(b).map_err(|_| parse_err("q,t polynomial", s))?;
            out.add_term((a, b), &c);
        }
        Ok(out)
    }
}

impl Add<&PolyQT> for &PolyQT {
    type Output = PolyQT;
    fn add(self, rhs: &PolyQT) -> PolyQT {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&PolyQT> for &PolyQT {
    type Output = PolyQT;
    fn sub(self, rhs: &PolyQT) -> PolyQT {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul<&PolyQT> for &PolyQT {
    type Output = PolyQT;
    fn mul(self, rhs: &PolyQT) -> PolyQT {
        let mut out = PolyQT::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &PolyQT {
    type Output = PolyQT;
    fn neg(self) -> PolyQT {
        PolyQT {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Add for PolyQT {
    type Output = PolyQT;
    fn add(self, rhs: PolyQT) -> PolyQT {
        &self + &rhs
    }
}

impl Sub for PolyQT {
    type Output = PolyQT;
    fn sub(self, rhs: PolyQT) -> PolyQT {
        &self - &rhs
    }
}

impl Mul for PolyQT {
    type Output = PolyQT;
    fn mul(self, rhs: PolyQT) -> PolyQT {
        &self * &rhs
    }
}

impl From<i64> for PolyQT {
    fn from(n: i64) -> Self {
        PolyQT::constant(BigInt::from(n))
    }
}
