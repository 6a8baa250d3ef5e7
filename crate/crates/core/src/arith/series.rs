//! Power series over `Q(sqrt 2)` truncated modulo `zeta^T`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Scalar;
use crate::error::{Error, Result};

/// Default truncation order for local computations.
pub const DEFAULT_ORDER: usize = 8;

/// Coefficients of `zeta^0 .. zeta^(T-1)`; the length is the truncation order `T`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Scalar>", into = "Vec<Scalar>")]
pub struct TruncatedSeries {
    coeffs: Vec<Scalar>,
}

impl TryFrom<Vec<Scalar>> for TruncatedSeries {
    type Error = Error;
    fn try_from(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidTruncation { min: 1, got: 0 });
        }
        Ok(TruncatedSeries { coeffs })
    }
}

impl From<TruncatedSeries> for Vec<Scalar> {
    fn from(s: TruncatedSeries) -> Self {
        s.coeffs
    }
}

impl TruncatedSeries {
    /// Builds a series of order `order` from leading coefficients; missing ones are
    /// zero and extra ones are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Scalar>) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        let mut c: Vec<Scalar> = coeffs.into_iter().take(order).collect();
        c.resize(order, Scalar::zero());
        TruncatedSeries { coeffs: c }
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| Scalar::from_int(c)))
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, [])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Scalar::one())
    }

    pub fn constant(order: usize, c: Scalar) -> Self {
        Self::from_coeffs(order, [c])
    }

    /// The uniformizer `zeta`; vanishes identically when `order == 1`.
    pub fn zeta(order: usize) -> Self {
        Self::monomial(order, 1, Scalar::one())
    }

    /// `c * zeta^k`.
    pub fn monomial(order: usize, k: usize, c: Scalar) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &Scalar {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Index of the lowest nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at `zeta^T`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let t = self.order();
        let mut out = vec![Scalar::zero(); t];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..t - i].iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse modulo `zeta^T`.
    pub fn inverse(&self) -> Result<Self> {
        let a0_inv = self.coeffs[0].inverse().map_err(|_| Error::NonUnit)?;
        let t = self.order();
        let mut inv: Vec<Scalar> = Vec::with_capacity(t);
        inv.push(a0_inv.clone());
        for k in 1..t {
            let mut acc = Scalar::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &inv[k - j]);
            }
            inv.push(-(&acc * &a0_inv));
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Exact division by `zeta` of a series with zero constant term. The top
    /// coefficient of the quotient is not determined by the truncated input and
    /// is set to zero; multiplying back by `zeta` recovers the input exactly.
    pub fn div_zeta(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "series has nonzero constant term, not divisible by zeta".into(),
            ));
        }
        let t = self.order();
        let mut c: Vec<Scalar> = self.coeffs[1..].to_vec();
        c.push(Scalar::zero());
        debug_assert_eq!(c.len(), t);
        Ok(TruncatedSeries { coeffs: c })
    }

    /// Reinterprets the series at another truncation order (zero-padding or cutting).
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    /// Panics on mismatched orders; see [`TruncatedSeries::try_add`].
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_add(rhs).expect("truncation order mismatch")
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_sub(rhs).expect("truncation order mismatch")
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_mul(rhs).expect("truncation order mismatch")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
