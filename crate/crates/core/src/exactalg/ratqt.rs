use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::dense::{b_exact_div, b_gcd};
use super::{parse_err, AlgError, LaurentT, PolyQT};

/// Element of `Q(q, t)` as a reduced fraction of two `PolyQT`.
///
/// Numerator and denominator are coprime and the denominator's graded-lex
/// leading coefficient is positive, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: PolyQT,
    den: PolyQT,
}

impl RatQT {
    pub fn zero() -> Self {
        Self::from_poly(PolyQT::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyQT::one())
    }

    pub fn from_int(n: BigInt) -> Self {
        Self::from_poly(PolyQT::constant(n))
    }

    pub fn from_poly(p: PolyQT) -> Self {
        Self {
            num: p,
            den: PolyQT::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::new(
            PolyQT::constant(q.numer().clone()),
            PolyQT::constant(q.denom().clone()),
        )
        .expect("rational denominators are nonzero")
    }

    /// Laurent polynomials with negative exponents become `p / t^e`.
    pub fn from_laurent(l: &LaurentT) -> Self {
        let low = l.min_exp().unwrap_or(0).min(0);
        let num = PolyQT::from_laurent(&l.shift(-low)).expect("shifted to nonnegative exponents");
        if low == 0 {
            Self::from_poly(num)
        } else {
            Self::new(num, PolyQT::monomial(BigInt::one(), 0, (-low) as u32))
                .expect("monomial denominator")
        }
    }

    pub fn new(num: PolyQT, den: PolyQT) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: PolyQT, den: PolyQT) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.as_constant().is_some() {
            let g = num.content().gcd(&den.content());
            (num.div_int_exact(&g), den.div_int_exact(&g))
        } else {
            let (nd, dd) = (num.to_dense(), den.to_dense());
            let g = b_gcd(&nd, &dd);
            let n = b_exact_div(&nd, &g).expect("gcd divides numerator");
            let d = b_exact_div(&dd, &g).expect("gcd divides denominator");
            (PolyQT::from_dense(&n), PolyQT::from_dense(&d))
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -&num;
            den = -&den;
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &PolyQT {
        &self.num
    }

    pub fn denom(&self) -> &PolyQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some_and(|c| c.is_one())
    }

    /// Exact polynomial value, or `NotPolynomial`.
    pub fn to_poly(&self) -> Result<PolyQT, AlgError> {
        if self.is_polynomial() {
            return Ok(self.num.clone());
        }
        b_exact_div(&self.num.to_dense(), &self.den.to_dense())
            .map(|d| PolyQT::from_dense(&d))
            .ok_or_else(|| AlgError::NotPolynomial(self.to_string()))
    }

    /// Laurent value when `q` is absent and the denominator is a monomial in `t`.
    pub fn to_laurent(&self) -> Option<LaurentT> {
        let n = self.num.to_laurent()?;
        let d = self.den.to_laurent()?;
        let (c, e) = d.as_monomial()?;
        if !c.is_one() {
            return None;
        }
        Some(n.shift(-e))
    }

    pub fn inverse(&self) -> Result<Self, AlgError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `t -> 1/t`.
    pub fn invert_t(&self) -> Self {
        let e = self.num.max_t_deg().max(self.den.max_t_deg());
        let flip = |p: &PolyQT| {
            PolyQT::from_terms(p.terms().map(|((a, b), c)| ((a, e - b), c.clone())))
        };
        Self::reduce(flip(&self.num), flip(&self.den))
    }

    /// Substitute `t = 1`, if the denominator does not vanish there.
    pub fn at_t_one(&self) -> Option<Self> {
        let d = self.den.at_t_one();
        (!d.is_zero()).then(|| Self::reduce(self.num.at_t_one(), d))
    }

    /// Substitute `q = t` and return the result as a function of `t` alone.
    pub fn at_q_eq_t(&self) -> Option<Self> {
        let sub = |p: &PolyQT| PolyQT::from_terms(p.terms().map(|((a, b), c)| ((0, a + b), c.clone())));
        let d = sub(&self.den);
        (!d.is_zero()).then(|| Self::reduce(sub(&self.num), d))
    }

    pub fn to_json(&self) -> Value {
        json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgError> {
        match v {
            Value::Object(m) if m.contains_key("num") => {
                let num = PolyQT::from_json(&m["num"])?;
                let den = match m.get("den") {
                    Some(d) => PolyQT::from_json(d)?,
                    None => PolyQT::one(),
                };
                Self::new(num, den)
            }
            Value::Object(_) | Value::String(_) | Value::Number(_) => {
                Ok(Self::from_poly(PolyQT::from_json(v)?))
            }
            other => Err(parse_err("rational function", &other.to_string())),
        }
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQT({self})")
    }
}

impl Add<&RatQT> for &RatQT {
    type Output = RatQT;
    fn add(self, rhs: &RatQT) -> RatQT {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatQT::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatQT::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatQT> for &RatQT {
    type Output = RatQT;
    fn sub(self, rhs: &RatQT) -> RatQT {
        self + &(-rhs)
    }
}

impl Mul<&RatQT> for &RatQT {
    type Output = RatQT;
    fn mul(self, rhs: &RatQT) -> RatQT {
        if self.is_zero() || rhs.is_zero() {
            return RatQT::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatQT::from_poly(&self.num * &rhs.num);
        }
        RatQT::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatQT> for &RatQT {
    type Output = RatQT;
    /// Panics on division by zero.
    fn div(self, rhs: &RatQT) -> RatQT {
        self * &rhs.inverse().expect("division by zero in RatQT")
    }
}

impl Neg for &RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: &str, d: &str) -> RatQT {
        RatQT::new(n.parse().unwrap(), d.parse().unwrap()).unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        assert_eq!(&r("1 - q", "1 - t") * &r("1 - t", "1 - q"), RatQT::one());
    }

    #[test]
    fn to_poly_cases() {
        assert_eq!(r("q - qt", "1 - t").to_poly().unwrap(), "q".parse().unwrap());
        assert_eq!(r("1 + qt", "1").to_poly().unwrap(), "1 + qt".parse().unwrap());
        assert!(matches!(r("1", "1 - t").to_poly(), Err(AlgError::NotPolynomial(_))));
    }

    #[test]
    fn normalization_is_canonical() {
        assert_eq!(r("2 - 2t", "4 - 4t^2"), r("1", "2 + 2t"));
        assert_eq!(r("1", "-t"), r("-1", "t"));
        assert!(r("1", "-t").denom().leading().unwrap().1.is_positive());
    }

    #[test]
    fn invert_t_and_laurent() {
        let l: LaurentT = "t^-2 + 3t".parse().unwrap();
        let x = RatQT::from_laurent(&l);
        assert_eq!(x.to_laurent().unwrap(), l);
        assert_eq!(x.invert_t().to_laurent().unwrap(), l.invert_t());
    }

    #[test]
    fn json_round_trip() {
        let x = r("1 - q^2", "1 - t^2");
        assert_eq!(RatQT::from_json(&x.to_json()).unwrap(), x);
    }
}
