use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Scalar, TruncatedSeries};
use crate::error::{Error, Result};

/// 2x2 matrix over truncated power series, row-major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat2 {
    entries: [[TruncatedSeries; 2]; 2],
}

impl Mat2 {
    /// Fails with [`Error::OrderMismatch`] unless all entries share one order.
    pub fn new(
        a11: TruncatedSeries,
        a12: TruncatedSeries,
        a21: TruncatedSeries,
        a22: TruncatedSeries,
    ) -> Result<Self> {
        let t = a11.order();
        for e in [&a12, &a21, &a22] {
            if e.order() != t {
                return Err(Error::OrderMismatch {
                    left: t,
                    right: e.order(),
                });
            }
        }
        Ok(Mat2 {
            entries: [[a11, a12], [a21, a22]],
        })
    }

    /// Matrix with columns `c1`, `c2`.
    pub fn from_columns(
        c1: (TruncatedSeries, TruncatedSeries),
        c2: (TruncatedSeries, TruncatedSeries),
    ) -> Result<Self> {
        Mat2::new(c1.0, c2.0, c1.1, c2.1)
    }

    pub fn from_int_rows(order: usize, rows: [[&[i64]; 2]; 2]) -> Self {
        let e = |c: &[i64]| TruncatedSeries::from_ints(order, c);
        Mat2 {
            entries: [[e(rows[0][0]), e(rows[0][1])], [e(rows[1][0]), e(rows[1][1])]],
        }
    }

    pub fn identity(order: usize) -> Self {
        Mat2::diag(TruncatedSeries::one(order), TruncatedSeries::one(order))
    }

    pub fn diag(a: TruncatedSeries, d: TruncatedSeries) -> Self {
        let t = a.order();
        Mat2 {
            entries: [[a, TruncatedSeries::zero(t)], [TruncatedSeries::zero(t), d]],
        }
    }

    /// `diag(1, zeta)`, the target of the Smith reduction.
    pub fn smith_target(order: usize) -> Self {
        Mat2::diag(TruncatedSeries::one(order), TruncatedSeries::zeta(order))
    }

    pub fn order(&self) -> usize {
        self.entries[0][0].order()
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &TruncatedSeries {
        &self.entries[row][col]
    }

    pub fn column(&self, col: usize) -> (TruncatedSeries, TruncatedSeries) {
        (self.entries[0][col].clone(), self.entries[1][col].clone())
    }

    /// Constant terms `a_ij`, the image in the residue field.
    pub fn constant_terms(&self) -> [[Scalar; 2]; 2] {
        let c = |i: usize, j: usize| self.entries[i][j].constant_term().clone();
        [[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]]
    }

    pub fn det(&self) -> TruncatedSeries {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn try_mul(&self, other: &Mat2) -> Result<Mat2> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let e = |i: usize, j: usize| {
            &(&self.entries[i][0] * &other.entries[0][j]) + &(&self.entries[i][1] * &other.entries[1][j])
        };
        Ok(Mat2 {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        })
    }

    pub fn adjugate(&self) -> Mat2 {
        let [[a, b], [c, d]] = &self.entries;
        Mat2 {
            entries: [[d.clone(), -b], [-c, a.clone()]],
        }
    }

    /// True iff the determinant has nonzero constant term.
    pub fn is_unit(&self) -> bool {
        self.det().is_unit()
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let inv_det = self.det().inverse()?;
        Ok(self.adjugate().scale_series(&inv_det))
    }

    pub fn scale_series(&self, s: &TruncatedSeries) -> Mat2 {
        self.map(|e| e * s)
    }

    pub fn scale(&self, c: &Scalar) -> Mat2 {
        self.map(|e| e.scale(c))
    }

    pub fn transpose(&self) -> Mat2 {
        let [[a, b], [c, d]] = &self.entries;
        Mat2 {
            entries: [[a.clone(), c.clone()], [b.clone(), d.clone()]],
        }
    }

    /// Multiplies column `col` by `s`.
    pub fn scale_column(&self, col: usize, s: &TruncatedSeries) -> Mat2 {
        let mut out = self.clone();
        for row in 0..2 {
            out.entries[row][col] = &self.entries[row][col] * s;
        }
        out
    }

    fn map(&self, f: impl Fn(&TruncatedSeries) -> TruncatedSeries) -> Mat2 {
        let [[a, b], [c, d]] = &self.entries;
        Mat2 {
            entries: [[f(a), f(b)], [f(c), f(d)]],
        }
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a:?}, {b:?}], [{c:?}, {d:?}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn det_identity() {
        assert_eq!(Mat2::identity(6).det(), TruncatedSeries::one(6));
    }

    #[test]
    fn adjugate_formula() {
        let m = Mat2::from_int_rows(3, [[&[1], &[2]], [&[3], &[4]]]);
        let adj = Mat2::from_int_rows(3, [[&[4], &[-2]], [&[-3], &[1]]]);
        assert_eq!(m.adjugate(), adj);
    }

    #[test]
    fn det_worked_example() {
        // (1+z)z - z*z = z
        let m = Mat2::from_int_rows(8, [[&[1, 1], &[0, 1]], [&[0, 1], &[0, 1]]]);
        assert_eq!(m.det(), TruncatedSeries::zeta(8));
        assert!(!m.is_unit());
        assert!(Mat2::identity(8).is_unit());
    }

    #[test]
    fn mixed_orders_rejected() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(4);
        assert!(Mat2::new(a.clone(), a.clone(), a, b).is_err());
        assert!(Mat2::identity(3).try_mul(&Mat2::identity(4)).is_err());
    }

    fn mat(t: usize) -> impl Strategy<Value = Mat2> {
        proptest::collection::vec(proptest::collection::vec(-5i64..5, t), 4)
            .prop_map(move |v| Mat2::from_int_rows(t, [[&v[0], &v[1]], [&v[2], &v[3]]]))
    }

    proptest! {
        #[test]
        fn det_multiplicative(a in mat(6), b in mat(6)) {
            prop_assert_eq!(a.try_mul(&b).unwrap().det(), &a.det() * &b.det());
        }

        #[test]
        fn adjugate_gives_det_identity(a in mat(6)) {
            let d = a.det();
            prop_assert_eq!(a.try_mul(&a.adjugate()).unwrap(), Mat2::diag(d.clone(), d));
        }
    }
}
