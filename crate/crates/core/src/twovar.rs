//! Two-alphabet sums `Σ_{λ⊢k} h_λ(x) m_λ(y)` and `Σ_{λ⊢k} e_λ(x) m_λ(y)`,
//! the coefficients of `Π(t) = Π_{i,j} (1 - x_i y_j t)^{-1}` and
//! `π(t) = Π_{i,j} (1 + x_i y_j t)`, and the Newton-type recurrences they
//! satisfy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partitions::Partitions;
use crate::report::VerificationReport;
use crate::ring::{RingElem, Scalar};
use crate::series::{linear_factor, series_inverse, series_mul, TruncatedSeries};
use crate::symfun::{
    complete_bruteforce, elementary_bruteforce, monomial_sym, power_sum, verify_newton_e,
    verify_newton_h, VariableSet,
};

/// Which two-alphabet sum: `h_λ(x) m_λ(y)` or `e_λ(x) m_λ(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairBasis {
    #[serde(rename = "H_M")]
    HM,
    #[serde(rename = "E_M")]
    EM,
}

impl PairBasis {
    pub const ALL: [PairBasis; 2] = [PairBasis::HM, PairBasis::EM];
}

impl fmt::Display for PairBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairBasis::HM => "H_M",
            PairBasis::EM => "E_M",
        })
    }
}

impl FromStr for PairBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "H_M" | "HM" | "H" => Ok(PairBasis::HM),
            "E_M" | "EM" | "E" => Ok(PairBasis::EM),
            _ => Err(Error::Parse(format!("unknown basis {s:?}; expected H_M or E_M"))),
        }
    }
}

/// The degree-`k` two-alphabet sum in one basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairCoefficient {
    pub k: usize,
    pub basis: PairBasis,
    pub value: RingElem,
}

fn check_compatible(x: &VariableSet, y: &VariableSet) -> Result<(), Error> {
    x.domain().join(y.domain()).map(|_| ())
}

/// `Σ_{λ⊢k} h_λ(x) m_λ(y)` (or with `e_λ`) by direct summation over the
/// partitions of `k`. The single-part values are computed once and reused
/// across partitions.
pub fn pair_coefficient(
    x: &VariableSet,
    y: &VariableSet,
    k: usize,
    basis: PairBasis,
) -> Result<PairCoefficient, Error> {
    check_compatible(x, y)?;
    let single: Vec<RingElem> = (0..=k)
        .map(|j| match basis {
            PairBasis::HM => complete_bruteforce(x, j),
            PairBasis::EM => elementary_bruteforce(x, j),
        })
        .collect();
    let mut value = RingElem::zero();
    for lambda in Partitions::new(k) {
        let m = monomial_sym(y, &lambda);
        if m.is_zero() {
            continue;
        }
        let b_lambda = lambda
            .parts()
            .iter()
            .fold(RingElem::one(), |acc, &part| &acc * &single[part]);
        value = value.checked_add(&b_lambda.checked_mul(&m)?)?;
    }
    Ok(PairCoefficient { k, basis, value })
}

/// The truncated product `Π(t)` or `π(t)` over all `|x|·|y|` factors.
pub fn pair_product_series(
    x: &VariableSet,
    y: &VariableSet,
    order: usize,
    basis: PairBasis,
) -> Result<TruncatedSeries, Error> {
    check_compatible(x, y)?;
    let mut acc = TruncatedSeries::one(order);
    for xi in x.values() {
        for yj in y.values() {
            let xy = xi.checked_mul(yj)?;
            let factor = match basis {
                PairBasis::HM => series_inverse(&linear_factor(&-xy, order))?,
                PairBasis::EM => linear_factor(&xy, order),
            };
            acc = series_mul(&acc, &factor)?;
        }
    }
    Ok(acc)
}

/// The same coefficient read off the product form.
pub fn pair_coefficient_via_product(
    x: &VariableSet,
    y: &VariableSet,
    k: usize,
    basis: PairBasis,
) -> Result<PairCoefficient, Error> {
    let series = pair_product_series(x, y, k, basis)?;
    Ok(PairCoefficient {
        k,
        basis,
        value: series.coeff(k).clone(),
    })
}

/// Partition sum against the product coefficient.
pub fn verify_product_expansion(
    x: &VariableSet,
    y: &VariableSet,
    k: usize,
    basis: PairBasis,
) -> Result<VerificationReport, Error> {
    let direct = pair_coefficient(x, y, k, basis)?;
    let product = pair_coefficient_via_product(x, y, k, basis)?;
    Ok(VerificationReport::new("pair_product_expansion", k, direct.value, product.value)
        .with_pair(basis, x.len(), y.len()))
}

/// The coefficient with the roles of the alphabets exchanged.
pub fn verify_corollary_symmetry(
    x: &VariableSet,
    y: &VariableSet,
    k: usize,
    basis: PairBasis,
) -> Result<VerificationReport, Error> {
    let xy = pair_coefficient(x, y, k, basis)?;
    let yx = pair_coefficient(y, x, k, basis)?;
    Ok(VerificationReport::new("pair_swap_symmetry", k, xy.value, yx.value)
        .with_pair(basis, x.len(), y.len()))
}

/// `n C_n = Σ_{k=0}^n ε_{n-k} p_{n-k}(x) p_{n-k}(y) C_k` where `C_k` is the
/// degree-`k` pair coefficient, `ε_j = 1` for `H_M` and `ε_j = (-1)^{j-1}`
/// for `E_M`. The `k = n` term vanishes through `p_0 = 0`.
///
/// Every `C_k` is recomputed from scratch, so the two sides share no cache.
pub fn verify_theorem4(
    x: &VariableSet,
    y: &VariableSet,
    n: usize,
    basis: PairBasis,
) -> Result<VerificationReport, Error> {
    let c_n = pair_coefficient(x, y, n, basis)?.value;
    let lhs = c_n.scale(&Scalar::from(n));
    let mut rhs = RingElem::zero();
    for k in 0..=n {
        let j = n - k;
        let c_k = pair_coefficient(x, y, k, basis)?.value;
        let pp = power_sum(x, j).checked_mul(&power_sum(y, j))?;
        let sign = match basis {
            PairBasis::HM => Scalar::one(),
            // (-1)^{j-1}, written without underflow at j = 0
            PairBasis::EM => Scalar::sign(j + 1),
        };
        rhs = rhs.checked_add(&pp.checked_mul(&c_k)?.scale(&sign))?;
    }
    Ok(VerificationReport::new("generalized_newton", n, lhs, rhs)
        .with_pair(basis, x.len(), y.len()))
}

/// With `y = {1}` the pair coefficients collapse to `h_k(x)` (resp.
/// `e_k(x)`) and the generalized recurrence to the classical one. Returns one
/// report per collapsed coefficient `k ≤ n`, then the two sides of the
/// recurrence against the classical sides.
pub fn specialize_to_classical(
    x: &VariableSet,
    n: usize,
    basis: PairBasis,
) -> Result<Vec<VerificationReport>, Error> {
    let y = VariableSet::from_ints(&[1]);
    let mut reports = Vec::new();
    for k in 0..=n {
        let c = pair_coefficient(x, &y, k, basis)?.value;
        let classical = match basis {
            PairBasis::HM => complete_bruteforce(x, k),
            PairBasis::EM => elementary_bruteforce(x, k),
        };
        reports.push(
            VerificationReport::new("pair_collapse", n, c, classical)
                .with_k(k)
                .with_pair(basis, x.len(), 1),
        );
    }
    let generalized = verify_theorem4(x, &y, n, basis)?;
    let classical = match basis {
        PairBasis::HM => verify_newton_h(x, n),
        PairBasis::EM => verify_newton_e(x, n),
    };
    reports.push(
        VerificationReport::new(
            "generalized_newton_collapse_lhs",
            n,
            generalized.lhs.clone(),
            classical.lhs.clone(),
        )
        .with_pair(basis, x.len(), 1),
    );
    reports.push(
        VerificationReport::new(
            "generalized_newton_collapse_rhs",
            n,
            generalized.rhs,
            classical.rhs,
        )
        .with_pair(basis, x.len(), 1),
    );
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> VariableSet {
        VariableSet::from_ints(v)
    }

    fn int(n: i64) -> RingElem {
        RingElem::int(n)
    }

    #[test]
    fn pair_coefficient_examples() {
        for basis in PairBasis::ALL {
            assert_eq!(pair_coefficient(&ints(&[4, -1]), &ints(&[7]), 0, basis).unwrap().value, int(1));
            assert_eq!(pair_coefficient(&ints(&[2]), &ints(&[3]), 1, basis).unwrap().value, int(6));
        }
        let c = pair_coefficient(&ints(&[2]), &ints(&[3]), 2, PairBasis::HM).unwrap();
        assert_eq!(c.value, int(36));
    }

    #[test]
    fn product_form_examples() {
        let c = pair_coefficient_via_product(&ints(&[2]), &ints(&[3]), 3, PairBasis::HM).unwrap();
        assert_eq!(c.value, int(216));
        let c = pair_coefficient_via_product(&ints(&[2]), &ints(&[3]), 2, PairBasis::EM).unwrap();
        assert!(c.value.is_zero());
        // (1 - t)^{-4}: coefficient of t^2 is C(5, 2)
        let c = pair_coefficient_via_product(&ints(&[1, 1]), &ints(&[1, 1]), 2, PairBasis::HM)
            .unwrap();
        assert_eq!(c.value, int(10));
        let d = pair_coefficient(&ints(&[1, 1]), &ints(&[1, 1]), 2, PairBasis::HM).unwrap();
        assert_eq!(d.value, int(10));
    }

    #[test]
    fn swap_symmetry_examples() {
        let r = verify_corollary_symmetry(&ints(&[2]), &ints(&[3, 5]), 2, PairBasis::HM).unwrap();
        assert!(r.equal);
        let r = verify_corollary_symmetry(&ints(&[2]), &ints(&[3, 5]), 0, PairBasis::EM).unwrap();
        assert_eq!((r.lhs, r.rhs), (int(1), int(1)));
    }

    #[test]
    fn single_variable_collapse() {
        for basis in PairBasis::ALL {
            let r = verify_theorem4(&ints(&[2]), &ints(&[3]), 3, basis).unwrap();
            let expected = if basis == PairBasis::HM { int(648) } else { int(0) };
            assert_eq!(r.lhs, expected, "{basis}");
            assert!(r.equal, "{basis}");
        }
    }

    #[test]
    fn first_order_case() {
        for basis in PairBasis::ALL {
            let x = ints(&[1, -4]);
            let y = ints(&[3, 2, 2]);
            let r = verify_theorem4(&x, &y, 1, basis).unwrap();
            assert!(r.equal);
            assert_eq!(r.lhs, &power_sum(&x, 1) * &power_sum(&y, 1));
        }
    }

    #[test]
    fn generalized_newton_small_alphabets() {
        for basis in PairBasis::ALL {
            let r = verify_theorem4(&ints(&[1, 2]), &ints(&[1, 3]), 3, basis).unwrap();
            assert!(r.equal, "{basis}: {} vs {}", r.lhs, r.rhs);
        }
    }

    #[test]
    fn e_m_sign_must_be_minus_one_to_the_j_minus_one() {
        // with ε_j = (-1)^j instead, n = 1 would read ab = -ab
        let c1 = pair_coefficient(&ints(&[2]), &ints(&[3]), 1, PairBasis::EM).unwrap().value;
        let flipped = -(&power_sum(&ints(&[2]), 1) * &power_sum(&ints(&[3]), 1));
        assert_ne!(c1, flipped);
        assert!(verify_theorem4(&ints(&[2]), &ints(&[3]), 1, PairBasis::EM).unwrap().equal);
    }

    #[test]
    fn collapse_to_classical() {
        let r = specialize_to_classical(&ints(&[1, 1, 1]), 2, PairBasis::HM).unwrap();
        assert!(r.iter().all(|x| x.equal));
        let lhs = r.iter().find(|x| x.identity == "generalized_newton_collapse_lhs").unwrap();
        assert_eq!(lhs.lhs, int(12));
        let r = specialize_to_classical(&ints(&[2, 3]), 2, PairBasis::EM).unwrap();
        assert!(r.iter().all(|x| x.equal));
        let rhs = r.iter().find(|x| x.identity == "generalized_newton_collapse_rhs").unwrap();
        assert_eq!(rhs.rhs, int(12));
    }

    #[test]
    fn em_vanishes_past_product_degree() {
        let x = ints(&[2, -1]);
        let y = ints(&[3]);
        for k in 3..6 {
            assert!(pair_coefficient(&x, &y, k, PairBasis::EM).unwrap().value.is_zero());
        }
    }

    #[test]
    fn basis_names() {
        assert_eq!("h_m".parse::<PairBasis>().unwrap(), PairBasis::HM);
        assert_eq!(serde_json::to_string(&PairBasis::EM).unwrap(), "\"E_M\"");
        assert!("z".parse::<PairBasis>().is_err());
    }
}
