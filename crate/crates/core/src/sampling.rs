//! Random exact inputs for property suites and the verification command.

use num_traits::Zero;
use rand::Rng;

use crate::arith::{Mat2, Scalar, TruncatedSeries};
use crate::configuration::{Configuration, FiberPoint};
use crate::local_model::EvaluationCovector;

/// Nonzero `p/q` with `|p| <= 50`, `1 <= q <= 20`.
pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let p = rng.gen_range(-50i64..=50);
        if p != 0 {
            return Scalar::frac(p, rng.gen_range(1i64..=20));
        }
    }
}

/// Any element of `Q(sqrt2)`, zero included.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let a = Scalar::frac(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=9));
    if rng.gen_bool(0.3) {
        let b = Scalar::frac(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9));
        &a + &(&b * &Scalar::sqrt2())
    } else {
        a
    }
}

/// Nonzero element of `Q(sqrt2)`, irrational about a third of the time.
pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let s = scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn finite_point<R: Rng + ?Sized>(rng: &mut R) -> FiberPoint {
    FiberPoint::Finite(nonzero_rational(rng))
}

/// Each slot is `Zero`, `Infinity` or finite with equal probability.
pub fn configuration<R: Rng + ?Sized>(rng: &mut R, base: &str, len: usize) -> Configuration {
    let points = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => FiberPoint::Zero,
            1 => FiberPoint::Infinity,
            _ => finite_point(rng),
        })
        .collect();
    Configuration::new(base, points)
}

/// Configuration with a prescribed mark pattern: `0` is `Zero`, `1` is
/// `Infinity`, anything else is a fresh random finite point.
pub fn configuration_with_pattern<R: Rng + ?Sized>(rng: &mut R, base: &str, pattern: &[u8]) -> Configuration {
    let points = pattern
        .iter()
        .map(|&k| match k {
            0 => FiberPoint::Zero,
            1 => FiberPoint::Infinity,
            _ => finite_point(rng),
        })
        .collect();
    Configuration::new(base, points)
}

pub fn covector<R: Rng + ?Sized>(rng: &mut R) -> EvaluationCovector {
    loop {
        // bias towards the two coordinate lines so both branches are exercised
        let (a, b) = match rng.gen_range(0..4) {
            0 => (Scalar::zero(), nonzero_scalar(rng)),
            1 => (nonzero_scalar(rng), Scalar::zero()),
            _ => (scalar(rng), scalar(rng)),
        };
        if let Ok(xi) = EvaluationCovector::new(a, b) {
            return xi;
        }
    }
}

/// Polynomial of degree below `min(order, 3)` with small coefficients.
pub fn small_series<R: Rng + ?Sized>(rng: &mut R, order: usize) -> TruncatedSeries {
    let len = order.min(3);
    TruncatedSeries::from_coeffs(
        order,
        (0..len).map(|_| {
            if rng.gen_bool(0.4) {
                Scalar::zero()
            } else {
                scalar(rng)
            }
        }),
    )
}

/// Product of elementary factors `[[1,0],[a,1]] diag(c1,c2) [[1,b],[0,1]]`,
/// optionally swapped, so the determinant is the constant `+-c1 c2`. The
/// swaps and the random zero patterns make every pivot position occur.
pub fn unit_matrix<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Mat2 {
    let one = TruncatedSeries::one(order);
    let zero = TruncatedSeries::zero(order);
    let lower = Mat2::new(one.clone(), zero.clone(), small_series(rng, order), one.clone());
    let upper = Mat2::new(one.clone(), small_series(rng, order), zero.clone(), one.clone());
    let diag = Mat2::diag(
        TruncatedSeries::constant(order, nonzero_scalar(rng)),
        TruncatedSeries::constant(order, nonzero_scalar(rng)),
    );
    let mut m = lower
        .and_then(|l| l.try_mul(&diag))
        .and_then(|m| m.try_mul(&upper?))
        .expect("same order");
    if rng.gen_bool(0.5) {
        let swap = Mat2::new(zero.clone(), one.clone(), one, zero).expect("same order");
        m = swap.try_mul(&m).expect("same order");
    }
    m
}

/// `U diag(1, zeta) V` with unit matrices `U`, `V`, rescaled so the
/// determinant is exactly `zeta`.
pub fn det_zeta_matrix<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Mat2 {
    let u = unit_matrix(rng, order);
    let v = unit_matrix(rng, order);
    let fix = (&u.det() * &v.det())
        .inverse()
        .expect("product of unit determinants");
    let u = u.scale_column(0, &fix);
    let phi = u
        .try_mul(&Mat2::smith_target(order))
        .and_then(|m| m.try_mul(&v))
        .expect("same order");
    debug_assert_eq!(phi.det(), TruncatedSeries::zeta(order));
    phi
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn det_zeta_matrices_have_det_zeta() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for t in 2..6 {
            for _ in 0..10 {
                assert_eq!(det_zeta_matrix(&mut rng, t).det(), TruncatedSeries::zeta(t));
            }
        }
    }

    #[test]
    fn patterns_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = configuration_with_pattern(&mut rng, "L", &[0, 1, 2]);
        assert_eq!(c.points[0], FiberPoint::Zero);
        assert_eq!(c.points[1], FiberPoint::Infinity);
        assert!(!c.points[2].is_marked());
    }
}
