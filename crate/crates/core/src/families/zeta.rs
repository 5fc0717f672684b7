use crate::report::VerificationReport;
use crate::ring::Scalar;
use crate::symfun::{complete_bruteforce, elementary_bruteforce, power_sum};

use super::{family_alphabet, reciprocal_power, Family};

/// Truncated multiple zeta values `ζ_N({s}^k)` for `k ≤ K` by the nested-sum
/// recursion `Z_k(M) = Σ_{j ≤ M} j^{-s} Z_{k-1}(j - 1)` (strict chains) or
/// `Z_k(M) = Σ_{j ≤ M} j^{-s} Z_{k-1}(j)` (weak chains, the star values).
pub(super) fn nested_sums(s: u32, terms: usize, k_max: usize, strict: bool) -> Vec<Scalar> {
    // prev[M] = Z_{k-1}(M) for M = 0..=N
    let mut prev = vec![Scalar::one(); terms + 1];
    let mut out = vec![Scalar::one()];
    for _ in 1..=k_max {
        let mut cur = vec![Scalar::zero(); terms + 1];
        for j in 1..=terms {
            let inner = if strict { &prev[j - 1] } else { &prev[j] };
            cur[j] = &cur[j - 1] + &(&reciprocal_power(j, s) * inner);
        }
        out.push(cur[terms].clone());
        prev = cur;
    }
    out
}

/// `ζ_N(sk) = Σ_{i ≤ N} i^{-sk}`.
pub(super) fn truncated_zeta(s: u32, terms: usize, k: usize) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    (1..=terms).map(|i| reciprocal_power(i, s * k as u32)).sum()
}

/// On `1/1^s, ..., 1/N^s`: `e_k` against strict-chain sums, `h_k` against
/// weak-chain sums, `p_k` against `ζ_N(sk)`, for `k ≤ K`.
pub fn verify_zeta_row(s: u32, terms: usize, k_max: usize) -> Vec<VerificationReport> {
    let family = Family::ZetaNodes { s, terms };
    let x = family_alphabet(&family);
    let spec = family.to_spec();
    let strict = nested_sums(s, terms, k_max, true);
    let weak = nested_sums(s, terms, k_max, false);
    let mut out = Vec::new();
    for k in 0..=k_max {
        out.push(
            VerificationReport::new("zeta_row_e", terms, elementary_bruteforce(&x, k), strict[k].clone().into())
                .with_k(k)
                .with_family(spec.clone()),
        );
        out.push(
            VerificationReport::new("zeta_row_h", terms, complete_bruteforce(&x, k), weak[k].clone().into())
                .with_k(k)
                .with_family(spec.clone()),
        );
        if k >= 1 {
            out.push(
                VerificationReport::new("zeta_row_p", terms, power_sum(&x, k), truncated_zeta(s, terms, k).into())
                    .with_k(k)
                    .with_family(spec.clone()),
            );
        }
    }
    out
}
