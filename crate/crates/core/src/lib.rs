//! Exact barycentric triangle geometry.
//!
//! Computes triangle centers and squared distances over rationals, and
//! certifies classical triangle inequalities by matching each analytic form
//! with a metric form `factor · |PQ|²` built from explicit points.
//!
//! All geometry is generic over [`Scalar`]; the aliases below fix the two
//! common instantiations.
//!
//! ```
//! use trimetric::{eld, exact, ExactTriangle};
//!
//! let t = ExactTriangle::new(exact(4, 1), exact(3, 1), exact(5, 1)).unwrap();
//! assert_eq!(eld::d_i(&t), exact(1, 25));
//! ```

pub mod bary;
pub mod catalog;
pub mod centers;
pub mod eld;
pub mod error;
pub mod planar;
pub mod report;
pub mod scalar;
pub mod suite;

#[cfg(test)]
mod testutil;

pub use bary::{area_det, BaryPoint, CauchySplit, Conway, InfinityDirection, Triangle};
pub use catalog::{Certificate, InequalityId, WeightTriple, Witness};
pub use centers::{center, CenterId};
pub use error::{GeometryError, Result};
pub use scalar::{exact, lower, parse_rational, sqrt_approx, Approx, ApproxOrdering, Exact, Scalar, Tolerance};

pub type ExactTriangle = Triangle<Exact>;
pub type ExactPoint = BaryPoint<Exact>;
pub type ExactCertificate = Certificate<Exact>;

pub type FloatTriangle = Triangle<f64>;
pub type FloatPoint = BaryPoint<f64>;
