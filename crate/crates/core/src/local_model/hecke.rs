use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{Mat2, Scalar, TruncatedSeries};
use crate::configuration::FiberPoint;
use crate::error::{Error, Result};

/// A column `(f0, f1)` of the rank-two free module.
pub type Column = (TruncatedSeries, TruncatedSeries);

/// The functional `(f0, f1) -> xi0 f0(0) + xi1 f1(0)`, normalized so that its
/// first nonzero component is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvaluationCovector {
    xi0: Scalar,
    xi1: Scalar,
}

impl EvaluationCovector {
    pub fn new(xi0: Scalar, xi1: Scalar) -> Result<Self> {
        let lead = if !xi0.is_zero() {
            xi0.clone()
        } else if !xi1.is_zero() {
            xi1.clone()
        } else {
            return Err(Error::ZeroCovector);
        };
        let inv = lead.inverse()?;
        Ok(EvaluationCovector {
            xi0: &xi0 * &inv,
            xi1: &xi1 * &inv,
        })
    }

    /// The covector on the line `[x0 : x1]` given by a fiber point.
    pub fn from_fiber_point(pt: &FiberPoint) -> Self {
        let (x0, x1) = pt.homogeneous();
        Self::new(x0, x1).expect("homogeneous coordinates are never both zero")
    }

    /// The fiber point `[xi0 : xi1]`; inverse to [`Self::from_fiber_point`].
    pub fn fiber_point(&self) -> FiberPoint {
        if self.xi1.is_zero() {
            FiberPoint::Infinity
        } else if self.xi0.is_zero() {
            FiberPoint::Zero
        } else {
            FiberPoint::Finite(self.xi0.checked_div(&self.xi1).expect("xi1 is nonzero"))
        }
    }

    pub fn xi0(&self) -> &Scalar {
        &self.xi0
    }

    pub fn xi1(&self) -> &Scalar {
        &self.xi1
    }

    pub fn evaluate(&self, col: &Column) -> Scalar {
        &(&self.xi0 * col.0.constant_term()) + &(&self.xi1 * col.1.constant_term())
    }

    pub fn annihilates(&self, col: &Column) -> bool {
        self.evaluate(col).is_zero()
    }
}

/// Free generators of `ker(ev_xi)`: `(1, -xi0/xi1), (0, zeta)` when
/// `xi1 != 0`, otherwise `(0, 1), (zeta, 0)`.
pub fn hecke_kernel(xi: &EvaluationCovector, order: usize) -> Result<(Column, Column)> {
    if order < 2 {
        return Err(Error::InvalidTruncation { min: 2, got: order });
    }
    let c = |s: Scalar| TruncatedSeries::constant(order, s);
    let z = TruncatedSeries::zeta(order);
    let zero = TruncatedSeries::zero(order);
    if !xi.xi1.is_zero() {
        let ratio = xi.xi0.checked_div(&xi.xi1)?;
        Ok(((c(Scalar::one()), c(-ratio)), (zero, z)))
    } else {
        Ok(((zero.clone(), c(Scalar::one())), (z, zero)))
    }
}

/// `eps` together with the unit that was divided out of its second column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeEps {
    pub eps: Mat2,
    /// `u` with `det(columns) = u * zeta`; the second column of `eps` is the
    /// second generator times `u^-1`.
    pub rescale: TruncatedSeries,
}

/// The inclusion `F -> V` with the generators as columns, normalized so that
/// `det(eps) = zeta` exactly by dividing the second column by a unit.
pub fn eps_from_generators(gen1: &Column, gen2: &Column) -> Result<HeckeEps> {
    let eps0 = Mat2::from_columns(gen1.clone(), gen2.clone())?;
    let t = eps0.order();
    if t < 2 {
        return Err(Error::InvalidTruncation { min: 2, got: t });
    }
    let det = eps0.det();
    if det.is_unit() {
        return Err(Error::NotSimpleZero);
    }
    let u = det.div_zeta()?;
    let u_inv = u.inverse().map_err(|_| Error::NotSimpleZero)?;
    let eps = eps0.scale_column(1, &u_inv);
    debug_assert_eq!(eps.det(), TruncatedSeries::zeta(t));
    Ok(HeckeEps { eps, rescale: u })
}

/// Local `beta = (f1, f2)^T` and `gamma = (g1, g2)`, both carrying an implicit `d zeta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalHiggs {
    pub beta: Column,
    pub gamma: Column,
}

impl LocalHiggs {
    /// `gamma * beta = g1 f1 + g2 f2`, the local quadratic differential.
    pub fn gamma_beta(&self) -> TruncatedSeries {
        &(&self.gamma.0 * &self.beta.0) + &(&self.gamma.1 * &self.beta.1)
    }

    /// `eps = [[f2, -f1], [g1, g2]]`.
    pub fn reassemble(&self) -> Result<Mat2> {
        Mat2::new(
            self.beta.1.clone(),
            -&self.beta.0,
            self.gamma.0.clone(),
            self.gamma.1.clone(),
        )
    }

    pub fn beta_vanishes_at_origin(&self) -> bool {
        self.beta.0.constant_term().is_zero() && self.beta.1.constant_term().is_zero()
    }

    pub fn gamma_vanishes_at_origin(&self) -> bool {
        self.gamma.0.constant_term().is_zero() && self.gamma.1.constant_term().is_zero()
    }
}

/// Reads `beta = (-eps12, eps11)` and `gamma = (eps21, eps22)` off `eps`.
pub fn beta_gamma_from_eps(eps: &Mat2) -> Result<LocalHiggs> {
    let t = eps.order();
    if t < 2 || eps.det() != TruncatedSeries::zeta(t) {
        return Err(Error::Precondition("det(eps) must equal zeta".into()));
    }
    Ok(LocalHiggs {
        beta: (-eps.get(0, 1), eps.get(0, 0).clone()),
        gamma: (eps.get(1, 0).clone(), eps.get(1, 1).clone()),
    })
}

/// Nonvanishing of `det f` in the truncated ring, a finite-order stand-in for
/// `f` not being a zero divisor.
pub fn is_injective(f: &Mat2) -> bool {
    f.det().valuation().is_some_and(|v| v < f.order())
}
