use crate::error::Error;
use crate::report::VerificationReport;
use crate::ring::{Scalar, UniPoly};
use crate::symfun::power_sum;

use super::{binomial, family_alphabet, Family};

/// Bernoulli polynomials `B_0(x) .. B_K(x)` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct BernoulliCache {
    polys: Vec<UniPoly>,
}

impl BernoulliCache {
    pub fn max_index(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&UniPoly> {
        self.polys.get(n)
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }
}

/// `B_n(x) = x^n - Σ_{j<n} C(n,j) B_j(x) / (n-j+1)`, starting from `B_0 = 1`.
pub fn bernoulli_polynomials(k_max: usize) -> BernoulliCache {
    let mut polys: Vec<UniPoly> = vec![UniPoly::one("x")];
    for n in 1..=k_max {
        let mut b = UniPoly::monomial("x", Scalar::one(), n);
        for (j, bj) in polys.iter().enumerate() {
            let c = &binomial(n, j) / &Scalar::from(n - j + 1);
            b = b.checked_sub(&bj.scale(&c)).expect("same indeterminate");
        }
        polys.push(b);
    }
    BernoulliCache { polys }
}

/// `Σ_{j=0}^n (r+jm)^k` by direct summation against
/// `m^k/(k+1) · (B_{k+1}(n+1+r/m) - B_{k+1}(r/m))`.
pub fn verify_arith_prog_power_sum(
    r: &Scalar,
    m: &Scalar,
    n: usize,
    k: usize,
) -> Result<VerificationReport, Error> {
    if m.is_zero() {
        return Err(Error::invalid("m", "the Bernoulli form divides by m"));
    }
    if k == 0 {
        return Err(Error::invalid("k", "power-sum closed form needs k ≥ 1"));
    }
    let family = Family::ArithProg {
        r: r.clone(),
        m: m.clone(),
        n,
    };
    let direct = power_sum(&family_alphabet(&family), k);
    let closed = arith_prog_closed(r, m, n, k, &bernoulli_polynomials(k + 1));
    Ok(VerificationReport::new("arith_prog_power_sum", n, direct, closed.into())
        .with_k(k)
        .with_family(family.to_spec()))
}

/// Bernoulli closed form of the progression power sum; `m ≠ 0`, `k ≥ 1`.
pub(super) fn arith_prog_closed(
    r: &Scalar,
    m: &Scalar,
    n: usize,
    k: usize,
    cache: &BernoulliCache,
) -> Scalar {
    let b = cache.get(k + 1).expect("cache covers k + 1");
    let ratio = r / m;
    let upper = &(&ratio + &Scalar::from(n)) + &Scalar::one();
    let diff = b.eval(&upper) - b.eval(&ratio);
    &(&m.pow(k as u32) * &diff) / &Scalar::from(k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElem;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn low_order_polynomials() {
        let c = bernoulli_polynomials(3);
        assert_eq!(c.get(0).unwrap(), &UniPoly::one("x"));
        assert_eq!(c.get(1).unwrap(), &UniPoly::new("x", vec![s("-1/2"), s("1")]));
        assert_eq!(
            c.get(2).unwrap(),
            &UniPoly::new("x", vec![s("1/6"), s("-1"), s("1")])
        );
        assert!(c.get(3).unwrap().eval(&s("1/2")).is_zero());
    }

    #[test]
    fn appell_and_endpoint_identities() {
        let c = bernoulli_polynomials(14);
        for n in 1..=14 {
            let b = c.get(n).unwrap();
            assert_eq!(b.derivative(), c.get(n - 1).unwrap().scale(&Scalar::from(n)));
            if n >= 2 {
                assert_eq!(b.eval(&Scalar::zero()), b.eval(&Scalar::one()));
            }
            // B_n(1 - x) = (-1)^n B_n(x), checked at a few points
            for x in ["1/3", "2", "-5/7"] {
                let x = s(x);
                let reflected = b.eval(&(&Scalar::one() - &x));
                assert_eq!(reflected, &Scalar::sign(n) * &b.eval(&x));
            }
        }
    }

    #[test]
    fn progression_power_sums() {
        let r = verify_arith_prog_power_sum(&s("1"), &s("3"), 2, 1).unwrap();
        assert_eq!(r.lhs, RingElem::int(12));
        assert!(r.equal);
        let r = verify_arith_prog_power_sum(&s("0"), &s("1"), 3, 1).unwrap();
        assert_eq!(r.lhs, RingElem::int(6));
        assert!(r.equal);
        let r = verify_arith_prog_power_sum(&s("2"), &s("5"), 4, 3).unwrap();
        // 2³ + 7³ + 12³ + 17³ + 22³
        assert_eq!(r.lhs, RingElem::int(8 + 343 + 1728 + 4913 + 10648));
        assert!(r.equal);
        assert!(verify_arith_prog_power_sum(&s("1"), &s("0"), 2, 1).is_err());
        assert!(verify_arith_prog_power_sum(&s("1"), &s("1"), 2, 0).is_err());
    }
}
