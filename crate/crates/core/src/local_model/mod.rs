//! Exact local model of the Hecke modification at a simple zero `x` of `q`.
//!
//! The complete local ring at `x` is modeled by `Q(sqrt2)[[zeta]] / zeta^T`;
//! every identity below is checked on coefficients.

mod hecke;
mod normal_form;
mod phi;
mod smith;

use serde::{Deserialize, Serialize};

pub use hecke::{
    beta_gamma_from_eps, eps_from_generators, hecke_kernel, is_injective, Column, EvaluationCovector,
    HeckeEps, LocalHiggs,
};
pub use normal_form::{normal_form_check, Check, NormalFormReport};
pub use phi::{phi_e, phi_e_matrix, verify_phi_e, PhiEReport, ScalarMat2};
pub use smith::{smith_form, SmithForm};

use crate::arith::TruncatedSeries;
use crate::configuration::FiberPoint;
use crate::error::Result;

/// Outcome of kernel -> eps -> (beta, gamma) for one covector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTrip {
    pub eps: HeckeEps,
    pub higgs: LocalHiggs,
    pub annihilated: bool,
    pub det_is_zeta: bool,
    pub gamma_beta_is_zeta: bool,
    pub reassembles: bool,
}

impl RoundTrip {
    pub fn identities_hold(&self) -> bool {
        self.annihilated && self.det_is_zeta && self.gamma_beta_is_zeta && self.reassembles
    }
}

pub fn hecke_round_trip(xi: &EvaluationCovector, order: usize) -> Result<RoundTrip> {
    let (g1, g2) = hecke_kernel(xi, order)?;
    let eps = eps_from_generators(&g1, &g2)?;
    let higgs = beta_gamma_from_eps(&eps.eps)?;
    let z = TruncatedSeries::zeta(order);
    Ok(RoundTrip {
        annihilated: xi.annihilates(&eps.eps.column(0)) && xi.annihilates(&eps.eps.column(1)),
        det_is_zeta: eps.eps.det() == z,
        gamma_beta_is_zeta: higgs.gamma_beta() == z,
        reassembles: higgs.reassemble()? == eps.eps,
        higgs,
        eps,
    })
}

/// `(beta vanishes, gamma vanishes)` at the zero for a given fiber point:
/// `[1:0]` kills `beta`, `[0:1]` kills `gamma`, a finite point kills neither.
pub fn expected_vanishing(pt: &FiberPoint) -> (bool, bool) {
    match pt {
        FiberPoint::Infinity => (true, false),
        FiberPoint::Zero => (false, true),
        FiberPoint::Finite(_) => (false, false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;

    #[test]
    fn round_trip_vanishing_pattern() {
        for pt in [
            FiberPoint::Zero,
            FiberPoint::Infinity,
            FiberPoint::Finite(Scalar::frac(-3, 2)),
        ] {
            let rt = hecke_round_trip(&EvaluationCovector::from_fiber_point(&pt), 8).unwrap();
            assert!(rt.identities_hold());
            assert_eq!(
                (
                    rt.higgs.beta_vanishes_at_origin(),
                    rt.higgs.gamma_vanishes_at_origin()
                ),
                expected_vanishing(&pt),
                "{pt:?}"
            );
        }
    }
}
