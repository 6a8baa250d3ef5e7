//! Exact scalar, truncated power series and 2x2 matrix arithmetic.

mod mat2;
mod scalar;
mod series;

pub use mat2::Mat2;
pub use scalar::Scalar;
pub use series::{TruncatedSeries, DEFAULT_ORDER};
