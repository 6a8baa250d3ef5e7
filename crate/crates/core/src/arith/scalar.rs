//! Exact elements of the quadratic field `Q(sqrt 2)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `a + b*sqrt(2)` with `a`, `b` reduced arbitrary-precision rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Scalar { a, b }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn sqrt2() -> Self {
        Scalar {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// `1/sqrt(2) = sqrt(2)/2`.
    pub fn inv_sqrt2() -> Self {
        Scalar {
            a: BigRational::zero(),
            b: BigRational::new(BigInt::one(), BigInt::from(2)),
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b*sqrt(2)`.
    pub fn conjugate(&self) -> Self {
        Scalar {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a^2 - 2 b^2`, zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        &self.a * &self.a - two * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(Scalar {
            a: c.a / &n,
            b: c.b / n,
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(a: BigRational) -> Self {
        Scalar::from_rational(a)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let two = BigRational::from_integer(BigInt::from(2));
        Scalar {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] otherwise.
impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.checked_div(&rhs).expect("division by zero scalar")
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    /// `p/q` when rational, otherwise `p/q+r/s*sqrt2` (or `-r/s*sqrt2`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*sqrt2", self.a, sign, self.b.abs())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p`, `p/q`, `r/s*sqrt2`, `p/q+r/s*sqrt2` and `p/q-r/s*sqrt2`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = s.strip_suffix("*sqrt2") else {
            return Ok(Scalar::from_rational(parse_rational(&s)?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let a = parse_rational(&body[..i])?;
                let b = parse_rational(body[i..].trim_start_matches('+'))?;
                Ok(Scalar { a, b })
            }
            None => Ok(Scalar {
                a: BigRational::zero(),
                b: parse_rational(body)?,
            }),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        let h = Scalar::inv_sqrt2();
        assert_eq!(&h * &h, Scalar::frac(1, 2));
        assert_eq!(&h * &Scalar::sqrt2(), Scalar::one());
    }

    #[test]
    fn rationals_are_reduced() {
        let x = Scalar::new(q(4, 8), q(-6, 9));
        assert_eq!(x.to_string(), "1/2-2/3*sqrt2");
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Scalar::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3".parse::<Scalar>().unwrap(), Scalar::from_int(3));
        assert_eq!("-3/6".parse::<Scalar>().unwrap(), Scalar::frac(-1, 2));
        assert_eq!(
            "1/2+3/4*sqrt2".parse::<Scalar>().unwrap(),
            Scalar::new(q(1, 2), q(3, 4))
        );
        assert_eq!(
            "-1/2-3*sqrt2".parse::<Scalar>().unwrap(),
            Scalar::new(q(-1, 2), q(-3, 1))
        );
        assert_eq!("1/2*sqrt2".parse::<Scalar>().unwrap(), Scalar::inv_sqrt2());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    prop_compose! {
        fn scalar()(an in -50i64..50, ad in 1i64..20, bn in -50i64..50, bd in 1i64..20) -> Scalar {
            Scalar::new(q(an, ad), q(bn, bd))
        }
    }

    proptest! {
        #[test]
        fn mul_associative(x in scalar(), y in scalar(), z in scalar()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn distributive(x in scalar(), y in scalar(), z in scalar()) {
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn inverse_recomposes(x in scalar()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inverse().unwrap(), Scalar::one());
        }

        #[test]
        fn conjugate_product_is_norm(x in scalar()) {
            prop_assert_eq!(&x * &x.conjugate(), Scalar::from_rational(x.norm()));
        }

        #[test]
        fn display_parse_roundtrip(x in scalar()) {
            prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }
    }
}
