//! Local normal form of `(beta, gamma)` at a zero of `q` where neither vanishes.
//!
//! At such a zero the fiber point is `Finite(b)` in a fixed trivialization
//! `e1, e2` of `V = L^-2 K + L K`. Choosing a local frame `s0` of `L` with
//! `s0^3 = b` gives the frame `sigma1 = s0^-2 e1`, `sigma2 = s0 e2`, in which the
//! evaluation functional becomes `sigma1* + sigma2*`. The kernel is generated
//! by `eta1 = zeta/sqrt2 (sigma1 + sigma2)` and `eta2 = 1/sqrt2 (-sigma1 + sigma2)`,
//! and `eps = 1/sqrt2 [[zeta, -1], [zeta, 1]]` in these frames.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::hecke::{beta_gamma_from_eps, EvaluationCovector, LocalHiggs};
use crate::arith::{Mat2, Scalar, TruncatedSeries};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormReport {
    pub b: Scalar,
    pub order: usize,
    /// Evaluation functional in the adapted frame.
    pub covector: EvaluationCovector,
    pub eps: Mat2,
    pub higgs: LocalHiggs,
    pub gamma_beta: TruncatedSeries,
    pub checks: Vec<Check>,
}

impl NormalFormReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The part of the report that must not depend on `b`.
    pub fn matrix_output(&self) -> (&EvaluationCovector, &Mat2, &LocalHiggs, &TruncatedSeries) {
        (&self.covector, &self.eps, &self.higgs, &self.gamma_beta)
    }
}

/// Covector of the fiber point `Finite(b)` written in the frame adapted to
/// `s0` with `s0^3 = cube`: `(b / cube, 1)` up to scale.
fn adapted_covector(b: &Scalar, cube: &Scalar) -> Result<EvaluationCovector> {
    EvaluationCovector::new(b.checked_div(cube)?, Scalar::one())
}

fn normal_form_eps(order: usize) -> Result<Mat2> {
    let h = Scalar::inv_sqrt2();
    let z = TruncatedSeries::zeta(order);
    let c = |x: Scalar| TruncatedSeries::constant(order, x);
    // eta1 = zeta/sqrt2 (sigma1 + sigma2), eta2 = 1/sqrt2 (-sigma1 + sigma2)
    let eta1 = (z.scale(&h), z.scale(&h));
    let eta2 = (c(-&h), c(h.clone()));
    Mat2::from_columns(eta1, eta2)
}

/// Builds the normal form at order `order` for the parameter `b` and checks
/// every identity it should satisfy. Errors only on invalid input; failed
/// identities are reported in [`NormalFormReport::checks`].
pub fn normal_form_check(b: &Scalar, order: usize) -> Result<NormalFormReport> {
    if b.is_zero() {
        return Err(Error::Precondition("b must be nonzero".into()));
    }
    if order < 2 {
        return Err(Error::InvalidTruncation { min: 2, got: order });
    }
    let h = Scalar::inv_sqrt2();
    let z = TruncatedSeries::zeta(order);
    let c = |x: Scalar| TruncatedSeries::constant(order, x);

    let covector = adapted_covector(b, b)?;
    let eps = normal_form_eps(order)?;
    let higgs = beta_gamma_from_eps(&eps)?;
    let gamma_beta = higgs.gamma_beta();

    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool| {
        checks.push(Check {
            name: name.to_string(),
            passed,
        })
    };

    let unit_cov = EvaluationCovector::new(Scalar::one(), Scalar::one())?;
    check("covector is sigma1* + sigma2*", covector == unit_cov);
    check(
        "eps = 1/sqrt2 [[zeta, -1], [zeta, 1]]",
        eps == Mat2::new(
            z.clone(),
            c(-Scalar::one()),
            z.clone(),
            TruncatedSeries::one(order),
        )?
        .scale(&h),
    );
    check(
        "ev_xi annihilates eps",
        covector.annihilates(&eps.column(0)) && covector.annihilates(&eps.column(1)),
    );
    check("det eps = zeta", eps.det() == z);
    check(
        "beta = 1/sqrt2 (1, zeta)",
        higgs.beta == (c(h.clone()), z.scale(&h)),
    );
    check(
        "gamma = 1/sqrt2 (zeta, 1)",
        higgs.gamma == (z.scale(&h), c(h.clone())),
    );
    check("gamma beta = zeta", gamma_beta == z);
    check(
        "zeta coefficient of q is 1",
        gamma_beta.coeff(1).is_one() && gamma_beta.valuation() == Some(1),
    );
    check("reassembly returns eps", higgs.reassemble()? == eps);
    check(
        "covector independent of b",
        adapted_covector(b, b)? == adapted_covector(&Scalar::one(), &Scalar::one())?,
    );
    check(
        "beta and gamma nonvanishing at the zero",
        !higgs.beta_vanishes_at_origin() && !higgs.gamma_vanishes_at_origin(),
    );

    Ok(NormalFormReport {
        b: b.clone(),
        order,
        covector,
        eps,
        higgs,
        gamma_beta,
        checks,
    })
}
