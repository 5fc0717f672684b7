use serde::{Deserialize, Serialize};

use crate::families::FamilySpec;
use crate::ring::RingElem;
use crate::twovar::PairBasis;

/// Outcome of checking one identity instance: both sides, exactly compared.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<PairBasis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kx_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ky_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    pub lhs: RingElem,
    pub rhs: RingElem,
    pub equal: bool,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, n: usize, lhs: RingElem, rhs: RingElem) -> Self {
        let equal = lhs == rhs;
        VerificationReport {
            identity: identity.into(),
            n,
            k: None,
            basis: None,
            kx_size: None,
            ky_size: None,
            family: None,
            lhs,
            rhs,
            equal,
        }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_pair(mut self, basis: PairBasis, kx_size: usize, ky_size: usize) -> Self {
        self.basis = Some(basis);
        self.kx_size = Some(kx_size);
        self.ky_size = Some(ky_size);
        self
    }

    pub fn with_family(mut self, family: FamilySpec) -> Self {
        self.family = Some(family);
        self
    }
}

/// True when every report in the slice is an exact equality.
pub fn all_equal(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.equal)
}
