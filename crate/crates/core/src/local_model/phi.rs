//! The canonical isomorphism `E* (x) det E -> E`,
//! `l (x) s1 ^ s2 -> l(s2) s1 - l(s1) s2`, on a rank-two space with basis `s1, s2`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Scalar;
use crate::error::{Error, Result};

/// Plain 2x2 matrix over the scalar field, row-major.
pub type ScalarMat2 = [[Scalar; 2]; 2];

fn det2(m: &ScalarMat2) -> Scalar {
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

fn apply(m: &ScalarMat2, v: &(Scalar, Scalar)) -> (Scalar, Scalar) {
    (
        &(&m[0][0] * &v.0) + &(&m[0][1] * &v.1),
        &(&m[1][0] * &v.0) + &(&m[1][1] * &v.1),
    )
}

/// `phi_E(l (x) w s1^s2)` for `l = l1 s1* + l2 s2*`, as coordinates in `s1, s2`.
pub fn phi_e(ell: &(Scalar, Scalar), wedge: &Scalar) -> (Scalar, Scalar) {
    (wedge * &ell.1, -(wedge * &ell.0))
}

/// Matrix of `phi_E` from the basis `s1* (x) s1^s2, s2* (x) s1^s2` to `s1, s2`.
pub fn phi_e_matrix() -> ScalarMat2 {
    let one = Scalar::one();
    let (a, b) = phi_e(&(one.clone(), Scalar::zero()), &one);
    let (c, d) = phi_e(&(Scalar::zero(), one.clone()), &one);
    [[a, c], [b, d]]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiEReport {
    pub matrix: ScalarMat2,
    /// Determinant under `det(E* (x) det E) = det E`; equal to `1` means the
    /// induced map on determinants is the identity.
    pub determinant: Scalar,
    pub is_isomorphism: bool,
    /// For an isomorphism `mu: V -> W`, `phi_W = mu . phi_V . (mu^t (x) det(mu)^-1)`
    /// on every tested covector.
    pub naturality_holds: bool,
}

/// Checks the isomorphism, determinant and naturality properties of `phi_E`
/// for a change of basis `mu` (the matrix of `mu` in the standard bases).
pub fn verify_phi_e(mu: &ScalarMat2) -> Result<PhiEReport> {
    let det_mu = det2(mu);
    let det_mu_inv = det_mu
        .inverse()
        .map_err(|_| Error::Precondition("change of basis must be invertible".into()))?;
    let matrix = phi_e_matrix();
    let determinant = det2(&matrix);

    let one = Scalar::one();
    let probes = [
        (one.clone(), Scalar::zero()),
        (Scalar::zero(), one.clone()),
        (Scalar::from_int(3), Scalar::frac(-2, 5)),
    ];
    let naturality_holds = probes.iter().all(|ell_w| {
        let direct = phi_e(ell_w, &one);
        // mu^t on covectors: (l o mu) has coordinates mu^T l
        let pulled = (
            &(&mu[0][0] * &ell_w.0) + &(&mu[1][0] * &ell_w.1),
            &(&mu[0][1] * &ell_w.0) + &(&mu[1][1] * &ell_w.1),
        );
        let via_v = apply(mu, &phi_e(&pulled, &det_mu_inv));
        direct == via_v
    });

    Ok(PhiEReport {
        is_isomorphism: !determinant.is_zero(),
        determinant,
        matrix,
        naturality_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> ScalarMat2 {
        [
            [Scalar::from_int(a), Scalar::from_int(b)],
            [Scalar::from_int(c), Scalar::from_int(d)],
        ]
    }

    #[test]
    fn basis_values() {
        let one = Scalar::one();
        let zero = Scalar::zero();
        // s1* -> -s2, s2* -> s1
        assert_eq!(
            phi_e(&(one.clone(), zero.clone()), &one),
            (zero.clone(), -one.clone())
        );
        assert_eq!(phi_e(&(zero.clone(), one.clone()), &one), (one.clone(), zero));
    }

    #[test]
    fn naturality_diagonal() {
        let r = verify_phi_e(&m(2, 0, 0, 1)).unwrap();
        assert!(r.is_isomorphism);
        assert_eq!(r.determinant, Scalar::one());
        assert!(r.naturality_holds);
    }

    #[test]
    fn naturality_general() {
        assert!(verify_phi_e(&m(1, 3, -2, 5)).unwrap().naturality_holds);
        let irr = [
            [Scalar::sqrt2(), Scalar::one()],
            [Scalar::frac(1, 3), Scalar::from_int(-4)],
        ];
        assert!(verify_phi_e(&irr).unwrap().naturality_holds);
        assert!(verify_phi_e(&m(1, 2, 2, 4)).is_err());
    }

    #[test]
    fn wrong_sign_breaks_naturality() {
        // sanity check that the test is not vacuous: phi without the det(mu)^-1
        // twist fails for mu with det != 1
        let mu = m(2, 0, 0, 1);
        let one = Scalar::one();
        let ell = (one.clone(), Scalar::zero());
        let direct = phi_e(&ell, &one);
        let pulled = (Scalar::from_int(2), Scalar::zero());
        let untwisted = apply(&mu, &phi_e(&pulled, &one));
        assert_ne!(direct, untwisted);
    }
}
