use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{Mat2, Scalar, TruncatedSeries};
use crate::error::{Error, Result};

/// `P`, `Q` with `P * phi * Q = diag(1, zeta)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    pub p: Mat2,
    pub q: Mat2,
    /// Zero-based position of the unit constant term used as pivot.
    pub pivot: (usize, usize),
}

/// Reduces a 2x2 matrix with determinant exactly `zeta` to `diag(1, zeta)`.
/// An input already equal to `diag(1, zeta)` gets identity factors.
///
/// Some constant term `a_ij` of `phi` is a unit. With pivot row `i`, the
/// left factor keeps row `i` of `phi` on top and replaces the bottom row by
/// `a_1j * row_0 - a_0j * row_1`, whose constant terms vanish, so that row is
/// `zeta * (c1, c2)`. The right factor is the adjugate-style matrix
/// `[[c2, -phi_i1], [-c1, phi_i0]]` divided by the unit
/// `x = phi_i0 c2 - phi_i1 c1`.
pub fn smith_form(phi: &Mat2) -> Result<SmithForm> {
    let t = phi.order();
    if t < 2 {
        return Err(Error::InvalidTruncation { min: 2, got: t });
    }
    if phi.det() != TruncatedSeries::zeta(t) {
        return Err(Error::Precondition("det(phi) must equal zeta".into()));
    }
    if *phi == Mat2::smith_target(t) {
        return Ok(SmithForm {
            p: Mat2::identity(t),
            q: Mat2::identity(t),
            pivot: (0, 0),
        });
    }
    let a = phi.constant_terms();
    let pivot = [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .find(|&(i, j)| !a[i][j].is_zero())
        .ok_or_else(|| Error::Internal("det(phi) = zeta but no constant term is a unit".into()))?;
    let (i, j) = pivot;

    let c = |s: &Scalar| TruncatedSeries::constant(t, s.clone());
    let top = if i == 0 {
        (TruncatedSeries::one(t), TruncatedSeries::zero(t))
    } else {
        (TruncatedSeries::zero(t), TruncatedSeries::one(t))
    };
    let p = Mat2::new(top.0, top.1, c(&a[1][j]), c(&-&a[0][j]))?;

    let m = p.try_mul(phi)?;
    let c1 = m.get(1, 0).div_zeta()?;
    let c2 = m.get(1, 1).div_zeta()?;
    let (r0, r1) = (m.get(0, 0).clone(), m.get(0, 1).clone());
    let x = &(&r0 * &c2) - &(&r1 * &c1);
    let x_inv = x
        .inverse()
        .map_err(|_| Error::Internal("Smith normalizer is not a unit".into()))?;
    let q = Mat2::new(c2, -&r1, -&c1, r0)?.scale_series(&x_inv);

    let form = SmithForm { p, q, pivot };
    if form.p.try_mul(phi)?.try_mul(&form.q)? != Mat2::smith_target(t) {
        return Err(Error::Internal("Smith recomposition failed".into()));
    }
    Ok(form)
}
