//! Exact symmetric-function computation.
//!
//! Elementary, complete and power-sum symmetric functions over finite
//! alphabets of rationals or polynomials in one indeterminate, the
//! Newton-Girard recurrences and the power-sum convolutions, truncated
//! generating series, two-alphabet Cauchy-type products with their
//! generalized Newton recurrences, and a catalog of specialized alphabets
//! (binomial, q-binomial, Stirling-type, zeta and prime) with independent
//! closed-form oracles.
//!
//! All arithmetic is exact. Every identity is exposed as a `verify_*`
//! function returning a [`VerificationReport`] with both sides.

pub mod error;
pub mod families;
pub mod partitions;
pub mod random;
pub mod report;
pub mod ring;
pub mod series;
pub mod suite;
pub mod symfun;
pub mod twovar;

pub use error::Error;
pub use families::{build_family, family_alphabet, Family, FamilyKind, FamilySpec};
pub use partitions::{enumerate_partitions, Partition, Partitions};
pub use report::VerificationReport;
pub use ring::{Domain, RingElem, Scalar, UniPoly};
pub use series::TruncatedSeries;
pub use symfun::{basis_table, BasisTable, VariableSet};
pub use twovar::{PairBasis, PairCoefficient};
