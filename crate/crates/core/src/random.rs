//! Portable seeded case generation.
//!
//! The generator is SplitMix64 (Steele, Lea and Flood): each step adds
//! `0x9E3779B97F4A7C15` to a 64-bit state and returns
//!
//! ```text
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z ^ (z >> 31)
//! ```
//!
//! with wrapping arithmetic. An inclusive integer range `[lo, hi]` is drawn as
//! `lo + next() % (hi - lo + 1)`. A rational draws its numerator first (from
//! `[-9, 9]`, or from the 18 nonzero values in ascending order when zero is
//! excluded) and then its denominator from `[1, 9]`. An alphabet draws its
//! size first and then its entries left to right. Anything reproducing these
//! steps reproduces the case lists exactly.

use crate::ring::Scalar;
use crate::symfun::VariableSet;

pub const NUMERATOR_BOUND: i64 = 9;
pub const DENOMINATOR_BOUND: i64 = 9;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw from `lo..=hi` by reduction modulo the span.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    pub fn rational(&mut self, allow_zero: bool) -> Scalar {
        let num = if allow_zero {
            self.range(-NUMERATOR_BOUND, NUMERATOR_BOUND)
        } else {
            let i = self.range(0, 2 * NUMERATOR_BOUND - 1);
            if i < NUMERATOR_BOUND {
                i - NUMERATOR_BOUND
            } else {
                i - NUMERATOR_BOUND + 1
            }
        };
        let den = self.range(1, DENOMINATOR_BOUND);
        Scalar::ratio(num, den).expect("denominator is positive")
    }

    /// An alphabet of exactly `size` rationals.
    pub fn alphabet_of_size(&mut self, size: usize, allow_zero: bool) -> VariableSet {
        VariableSet::from_scalars((0..size).map(|_| self.rational(allow_zero)).collect::<Vec<_>>())
    }

    /// An alphabet whose size is drawn from `0..=max_size`.
    pub fn alphabet(&mut self, max_size: usize, allow_zero: bool) -> VariableSet {
        let size = self.range(0, max_size as i64) as usize;
        self.alphabet_of_size(size, allow_zero)
    }

    /// A uniformly drawn permutation of `0..n` (Fisher-Yates, high to low).
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.range(0, i as i64) as usize;
            p.swap(i, j);
        }
        p
    }
}
