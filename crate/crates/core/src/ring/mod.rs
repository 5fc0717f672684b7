//! Exact coefficient arithmetic: rationals, dense univariate polynomials over
//! them, and the [`RingElem`] union every other module computes with.

mod elem;
mod poly;
mod scalar;

pub use elem::{poly_eval, ring_add, ring_mul, Domain, RingElem};
pub use poly::{UniPoly, DEFAULT_INDETERMINATE, MAX_PARSED_DEGREE};
pub use scalar::Scalar;
