use crate::error::Error;
use crate::report::VerificationReport;
use crate::ring::{RingElem, Scalar};
use crate::symfun::{complete_bruteforce, elementary_bruteforce, power_sum};

use super::{family_alphabet, reciprocal_power, Family};

/// Largest integer the prime-row oracle will scan.
pub const ENUMERATION_BOUND: u64 = 5_000_000;

/// Primes `≤ limit`, ascending, by the sieve of Eratosthenes.
pub fn prime_sieve(limit: usize) -> Vec<usize> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Prime factorization by trial division: `(largest prime factor, Ω, squarefree)`.
fn factor_profile(mut n: u64) -> (u64, u32, bool) {
    let mut largest = 1;
    let mut omega_total = 0;
    let mut squarefree = true;
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            largest = d;
            omega_total += e;
            squarefree &= e == 1;
        }
        d += 1;
    }
    if n > 1 {
        largest = largest.max(n);
        omega_total += 1;
    }
    (largest, omega_total, squarefree)
}

/// Sums over the integers whose prime factors are all `≤ limit`:
/// `Σ μ(n)²/n^s` with `ω(n) = k`, `Σ 1/n^s` with `Ω(n) = k`, and
/// `Σ_{ℓ ≤ limit} ℓ^{-sk}`, each by scanning `n ≤ L^k` (`L` the largest such
/// prime) and factoring.
pub(super) fn prime_row_oracle(
    s: u32,
    limit: usize,
    k: usize,
) -> Result<(Scalar, Scalar, Scalar), Error> {
    if limit < 2 {
        return Err(Error::invalid("limit", "must be at least 2"));
    }
    let largest_prime = (2..=limit as u64)
        .rev()
        .find(|&n| factor_profile(n).1 == 1)
        .expect("2 is prime");
    let bound = (0..k).try_fold(1u64, |acc, _| {
        acc.checked_mul(largest_prime).filter(|&b| b <= ENUMERATION_BOUND)
    });
    let bound = bound.ok_or_else(|| {
        Error::Domain(format!(
            "prime row oracle would scan past {ENUMERATION_BOUND} (limit={limit}, k={k})"
        ))
    })?;
    let mut squarefree_sum = Scalar::zero();
    let mut all_sum = Scalar::zero();
    for n in 1..=bound {
        let (largest, total, squarefree) = factor_profile(n);
        if largest > limit as u64 || total as usize != k {
            continue;
        }
        let term = reciprocal_power(n as usize, s);
        if squarefree {
            squarefree_sum += &term;
        }
        all_sum += &term;
    }
    let prime_zeta = if k == 0 {
        Scalar::zero()
    } else {
        (2..=limit as u64)
            .filter(|&n| factor_profile(n).1 == 1)
            .map(|p| reciprocal_power(p as usize, s * k as u32))
            .sum()
    };
    Ok((squarefree_sum, all_sum, prime_zeta))
}

/// On `1/ℓ^s` over primes `ℓ ≤ limit`: `e_k` against the squarefree sum with
/// `k` prime factors, `h_k` against the sum over `n` with `k` prime factors
/// counted with multiplicity, `p_k` against the truncated prime zeta `P(sk)`.
pub fn verify_prime_row(s: u32, limit: usize, k: usize) -> Result<Vec<VerificationReport>, Error> {
    if s == 0 {
        return Err(Error::invalid("s", "must be at least 1"));
    }
    let family = Family::PrimeNodes { s, limit };
    let (sf, all, pz) = prime_row_oracle(s, limit, k)?;
    let x = family_alphabet(&family);
    let spec = family.to_spec();
    let mut out = vec![
        VerificationReport::new("prime_row_e", limit, elementary_bruteforce(&x, k), RingElem::Scalar(sf))
            .with_k(k)
            .with_family(spec.clone()),
        VerificationReport::new("prime_row_h", limit, complete_bruteforce(&x, k), RingElem::Scalar(all))
            .with_k(k)
            .with_family(spec.clone()),
    ];
    if k >= 1 {
        out.push(
            VerificationReport::new("prime_row_p", limit, power_sum(&x, k), RingElem::Scalar(pz))
                .with_k(k)
                .with_family(spec),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_primes(limit: usize) -> Vec<usize> {
        (2..=limit)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect()
    }

    #[test]
    fn sieve_matches_trial_division() {
        assert!(prime_sieve(1).is_empty());
        assert_eq!(prime_sieve(10), vec![2, 3, 5, 7]);
        for limit in [2, 3, 97, 100, 1000, 10_000] {
            assert_eq!(prime_sieve(limit), trial_division_primes(limit), "{limit}");
        }
    }

    #[test]
    fn squarefree_pairs_over_small_primes() {
        let r = verify_prime_row(1, 5, 2).unwrap();
        assert_eq!(r[0].lhs, "1/3".parse().unwrap());
        assert!(r.iter().all(|x| x.equal));
        let r = verify_prime_row(1, 10, 2).unwrap();
        assert_eq!(r[0].rhs, "101/210".parse().unwrap());
    }

    #[test]
    fn first_order_values_coincide() {
        let r = verify_prime_row(1, 7, 1).unwrap();
        assert_eq!(r[0].lhs, r[1].lhs);
        assert_eq!(r[1].lhs, r[2].lhs);
        let r = verify_prime_row(2, 3, 1).unwrap();
        assert_eq!(r[2].lhs, "13/36".parse().unwrap());
        let r = verify_prime_row(1, 3, 2).unwrap();
        // p_2 over {1/2, 1/3}: 1/4 + 1/9
        assert_eq!(r[2].rhs, "13/36".parse().unwrap());
    }

    #[test]
    fn repeated_factors_count_toward_h_only() {
        // over {2}: e_2 = 0 but h_2 = 1/4 from n = 4
        let r = verify_prime_row(1, 2, 2).unwrap();
        assert!(r[0].lhs.is_zero() && r[0].equal);
        assert_eq!(r[1].rhs, "1/4".parse().unwrap());
    }

    #[test]
    fn oracle_refuses_huge_scans() {
        assert!(verify_prime_row(1, 1000, 4).is_err());
        assert!(verify_prime_row(1, 1, 1).is_err());
        assert!(verify_prime_row(0, 10, 1).is_err());
    }
}
