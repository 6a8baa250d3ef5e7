//! Exact computations on the Hitchin fiber of SU(1,2) Higgs bundles over a
//! quadratic differential with simple zeros.
//!
//! * [`stability`]: integer stability conditions, the partition census and
//!   stratum dimensions.
//! * [`configuration`]: points of `(P^1)^N`, the `C^*`-action, the stable
//!   locus, orbit equivalence and orbit-closure limits.
//! * [`git`]: invariant monomials and the two GIT classifiers.
//! * [`local_model`]: the local Hecke modification over truncated power series.
//! * [`arith`]: the exact `Q(sqrt2)` scalar, series and matrix types.

pub mod arith;
pub mod configuration;
pub mod error;
pub mod git;
pub mod local_model;
pub mod sampling;
pub mod stability;

pub use arith::{Mat2, Scalar, TruncatedSeries, DEFAULT_ORDER};
pub use configuration::{Configuration, FiberPoint, MarkData};
pub use error::{Error, Result};
pub use git::{GitClass, LinearizationSpec, MonomialIndex};
pub use local_model::{EvaluationCovector, LocalHiggs, SmithForm};
pub use stability::{Label, LabeledPartition, ModuliParams, StabilityClass};
