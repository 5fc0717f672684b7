use crate::error::Error;
use crate::report::VerificationReport;
use crate::ring::{RingElem, Scalar, UniPoly, DEFAULT_INDETERMINATE};
use crate::symfun::{complete_bruteforce, elementary_bruteforce, power_sum};

use super::{family_alphabet, Family};

fn q() -> UniPoly {
    UniPoly::var(DEFAULT_INDETERMINATE)
}

/// `(a; q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1})`, with `(a; q)_0 = 1`.
pub fn q_pochhammer(a: &RingElem, n: usize) -> Result<RingElem, Error> {
    let a = a.to_poly(DEFAULT_INDETERMINATE)?;
    let one = UniPoly::one(DEFAULT_INDETERMINATE);
    let mut acc = one.clone();
    let mut a_qj = a;
    for _ in 0..n {
        acc = acc.checked_mul(&one.checked_sub(&a_qj)?)?;
        a_qj = a_qj.checked_mul(&q())?;
    }
    Ok(RingElem::Poly(acc))
}

fn q_factorial(n: usize) -> UniPoly {
    match q_pochhammer(&RingElem::Poly(q()), n).expect("same indeterminate") {
        RingElem::Poly(p) => p,
        RingElem::Scalar(_) => unreachable!("pochhammer in q is a polynomial"),
    }
}

/// `[n k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k})` by exact polynomial division.
pub fn q_binomial(n: usize, k: usize) -> Result<UniPoly, Error> {
    if k > n {
        return Err(Error::Domain(format!("q-binomial needs k ≤ n, got n={n}, k={k}")));
    }
    let den = q_factorial(k).checked_mul(&q_factorial(n - k))?;
    q_factorial(n).div_exact(&den)
}

/// Closed forms on `{1, q, ..., q^{n-1}}` as polynomials in `q`:
/// `e_k = q^{C(k,2)} [n k]_q`, `h_k = [n+k-1 k]_q`,
/// `p_k = (1 - q^{nk}) / (1 - q^k)`.
pub(super) fn closed_e(n: usize, k: usize) -> UniPoly {
    if k > n {
        return UniPoly::zero(DEFAULT_INDETERMINATE);
    }
    let shift = UniPoly::monomial(DEFAULT_INDETERMINATE, Scalar::one(), k * k.saturating_sub(1) / 2);
    shift
        .checked_mul(&q_binomial(n, k).expect("k ≤ n"))
        .expect("same indeterminate")
}

pub(super) fn closed_h(n: usize, k: usize) -> UniPoly {
    if n == 0 {
        // the empty alphabet: h_0 = 1, h_k = 0
        return if k == 0 {
            UniPoly::one(DEFAULT_INDETERMINATE)
        } else {
            UniPoly::zero(DEFAULT_INDETERMINATE)
        };
    }
    q_binomial(n + k - 1, k).expect("k ≤ n + k - 1")
}

pub(super) fn closed_p(n: usize, k: usize) -> UniPoly {
    if k == 0 {
        return UniPoly::zero(DEFAULT_INDETERMINATE);
    }
    let one = UniPoly::one(DEFAULT_INDETERMINATE);
    let num = one
        .checked_sub(&UniPoly::monomial(DEFAULT_INDETERMINATE, Scalar::one(), n * k))
        .expect("same indeterminate");
    let den = one
        .checked_sub(&UniPoly::monomial(DEFAULT_INDETERMINATE, Scalar::one(), k))
        .expect("same indeterminate");
    num.div_exact(&den).expect("1 - q^k divides 1 - q^{nk}")
}

/// Symbolic-`q` check of the geometric row: `e_k` for `k ≤ min(K, n)`,
/// `h_k` for `k ≤ K`, `p_k` for `1 ≤ k ≤ K`.
pub fn verify_q_row(n: usize, k_max: usize) -> Vec<VerificationReport> {
    let family = Family::GeometricQ { n, q: None };
    let x = family_alphabet(&family);
    let spec = family.to_spec();
    let mut out = Vec::new();
    for k in 0..=k_max.min(n) {
        out.push(
            VerificationReport::new("q_row_e", n, elementary_bruteforce(&x, k), closed_e(n, k).into())
                .with_k(k)
                .with_family(spec.clone()),
        );
    }
    for k in 0..=k_max {
        out.push(
            VerificationReport::new("q_row_h", n, complete_bruteforce(&x, k), closed_h(n, k).into())
                .with_k(k)
                .with_family(spec.clone()),
        );
    }
    for k in 1..=k_max {
        out.push(
            VerificationReport::new("q_row_p", n, power_sum(&x, k), closed_p(n, k).into())
                .with_k(k)
                .with_family(spec.clone()),
        );
    }
    out
}
