//! Truncated formal power series in `t` with exact coefficients, and the
//! generating series E(t), H(t), P(t) of a finite alphabet.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::ring::{RingElem, Scalar};
use crate::symfun::VariableSet;

/// `c_0 + c_1 t + ... + c_T t^T`, known only up to `t^T`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<RingElem>,
}

impl TruncatedSeries {
    /// `coeffs` must hold `T + 1` entries for truncation order `T`.
    pub fn new(coeffs: Vec<RingElem>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a series needs at least the t^0 coefficient".into()));
        }
        let mut d = crate::ring::Domain::Rational;
        for c in &coeffs {
            d = d.join(&c.domain())?;
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![RingElem::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = RingElem::one();
        s
    }

    /// `c_0 + c_1 t + ...` padded with zeros (or cut) to order `order`.
    pub fn from_prefix(prefix: &[RingElem], order: usize) -> Self {
        let mut coeffs: Vec<RingElem> = prefix.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, RingElem::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &RingElem {
        &self.coeffs[i]
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<(), Error> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// Exact coefficientwise equality; comparing different orders is an error.
    pub fn series_eq(&self, other: &TruncatedSeries) -> Result<bool, Error> {
        self.check_order(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// Drops the coefficients above `t^order`.
    pub fn truncate(&self, order: usize) -> Result<Self, Error> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<Self, Error> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// The series with `t` replaced by `-t`.
    pub fn negate_t(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Formal derivative; the result has order `T - 1`.
    pub fn derivative(&self) -> Result<Self, Error> {
        if self.order() == 0 {
            return Err(Error::Domain("derivative of an order-0 series is unknown".into()));
        }
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.scale(&Scalar::from(n)))
                .collect(),
        })
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<RingElem>::deserialize(deserializer)?;
        TruncatedSeries::new(coeffs).map_err(serde::de::Error::custom)
    }
}

/// Cauchy product, `c_n = Σ_{k=0}^n a_k b_{n-k}`.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    a.check_order(b)?;
    let order = a.order();
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = RingElem::zero();
        for k in 0..=n {
            if a.coeffs[k].is_zero() || b.coeffs[n - k].is_zero() {
                continue;
            }
            acc = acc.checked_add(&a.coeffs[k].checked_mul(&b.coeffs[n - k])?)?;
        }
        coeffs.push(acc);
    }
    Ok(TruncatedSeries { coeffs })
}

/// Multiplicative inverse, `b_0 = a_0^{-1}`,
/// `b_n = -a_0^{-1} Σ_{k=1}^n a_k b_{n-k}`.
pub fn series_inverse(a: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    let inv0 = a.coeffs[0]
        .inverse()
        .map_err(|_| Error::NonInvertibleConstantTerm(a.coeffs[0].to_string()))?;
    let mut coeffs = vec![inv0.clone()];
    for n in 1..=a.order() {
        let mut acc = RingElem::zero();
        for k in 1..=n {
            if a.coeffs[k].is_zero() {
                continue;
            }
            acc = acc.checked_add(&a.coeffs[k].checked_mul(&coeffs[n - k])?)?;
        }
        coeffs.push(-acc.checked_mul(&inv0)?);
    }
    Ok(TruncatedSeries { coeffs })
}

/// `a'/a`, known up to `t^{T-1}`.
pub fn log_derivative(a: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    if a.coeffs[0].inverse().is_err() {
        return Err(Error::NonInvertibleConstantTerm(a.coeffs[0].to_string()));
    }
    let da = a.derivative()?;
    let inv = series_inverse(&a.truncate(da.order())?)?;
    series_mul(&da, &inv)
}

/// `t d/dt`: `c_n ↦ n c_n`.
pub fn apply_t_ddt(a: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: a
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&Scalar::from(n)))
            .collect(),
    }
}

/// `1 + c t`, padded to `order`.
pub(crate) fn linear_factor(c: &RingElem, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_prefix(&[RingElem::one(), c.clone()], order)
}

/// `E(t) = Π (1 + x_i t)`.
pub fn build_e(x: &VariableSet, order: usize) -> TruncatedSeries {
    x.values().iter().fold(TruncatedSeries::one(order), |acc, xi| {
        series_mul(&acc, &linear_factor(xi, order)).expect("alphabet domain validated")
    })
}

/// `H(t) = Π (1 - x_i t)^{-1}`.
pub fn build_h(x: &VariableSet, order: usize) -> TruncatedSeries {
    x.values().iter().fold(TruncatedSeries::one(order), |acc, xi| {
        let factor = series_inverse(&linear_factor(&-xi, order)).expect("constant term is 1");
        series_mul(&acc, &factor).expect("alphabet domain validated")
    })
}

/// `P(t) = Σ_i x_i / (1 - x_i t)`; coefficient `k` is `p_{k+1}`.
pub fn build_p(x: &VariableSet, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![RingElem::zero(); order + 1];
    for xi in x.values() {
        let mut power = xi.clone();
        for c in coeffs.iter_mut() {
            *c = &*c + &power;
            power = &power * xi;
        }
    }
    TruncatedSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{complete_bruteforce, elementary_bruteforce, power_sum};

    fn ints(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(c.iter().map(|&v| RingElem::int(v)).collect()).unwrap()
    }

    #[test]
    fn cauchy_product_examples() {
        assert_eq!(series_mul(&ints(&[1, 1, 0]), &ints(&[1, -1, 0])).unwrap(), ints(&[1, 0, -1]));
        let a = ints(&[3, -1, 4, 1]);
        assert_eq!(series_mul(&a, &TruncatedSeries::one(3)).unwrap(), a);
        assert!(matches!(
            series_mul(&ints(&[1, 1]), &ints(&[1, 1, 1])),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(series_inverse(&ints(&[1, -1, 0, 0])).unwrap(), ints(&[1, 1, 1, 1]));
        assert_eq!(series_inverse(&TruncatedSeries::one(4)).unwrap(), TruncatedSeries::one(4));
        assert!(matches!(
            series_inverse(&ints(&[0, 1, 1])),
            Err(Error::NonInvertibleConstantTerm(_))
        ));
        let x = VariableSet::from_ints(&[2, 3]);
        let h = series_inverse(&build_e(&x, 4).negate_t()).unwrap();
        for k in 0..=4 {
            assert_eq!(h.coeff(k), &complete_bruteforce(&x, k));
        }
    }

    #[test]
    fn log_derivative_examples() {
        let h = build_h(&VariableSet::from_ints(&[1]), 5);
        assert_eq!(log_derivative(&h).unwrap(), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(log_derivative(&TruncatedSeries::one(3)).unwrap(), TruncatedSeries::zero(2));
        let x = VariableSet::from_ints(&[2, 3]);
        let lp = log_derivative(&build_h(&x, 6)).unwrap();
        for k in 1..=5 {
            assert_eq!(lp.coeff(k - 1), &RingElem::int(2i64.pow(k as u32) + 3i64.pow(k as u32)));
        }
        assert!(log_derivative(&ints(&[0, 1])).is_err());
    }

    #[test]
    fn generating_series_examples() {
        let x = VariableSet::from_ints(&[5, -2]);
        let e = build_e(&x, 2);
        assert_eq!(e, ints(&[1, 3, -10]));
        assert_eq!(build_h(&VariableSet::from_ints(&[1]), 3), ints(&[1, 1, 1, 1]));
        assert_eq!(build_p(&VariableSet::from_ints(&[1, 1]), 3), ints(&[2, 2, 2, 2]));
        let y = VariableSet::from_ints(&[2, -1, 3]);
        let (e, h, p) = (build_e(&y, 7), build_h(&y, 7), build_p(&y, 7));
        for k in 0..=7 {
            assert_eq!(e.coeff(k), &elementary_bruteforce(&y, k));
            assert_eq!(h.coeff(k), &complete_bruteforce(&y, k));
            assert_eq!(p.coeff(k), &power_sum(&y, k + 1));
        }
    }

    #[test]
    fn t_ddt_examples() {
        assert_eq!(apply_t_ddt(&ints(&[1, 1, 1])), ints(&[0, 1, 2]));
        assert_eq!(apply_t_ddt(&TruncatedSeries::one(2)), TruncatedSeries::zero(2));
        let te = apply_t_ddt(&build_e(&VariableSet::from_ints(&[2, 3]), 3));
        assert_eq!(te.coeff(2), &RingElem::int(12));
    }

    #[test]
    fn unequal_orders_do_not_compare() {
        assert!(ints(&[1, 2]).series_eq(&ints(&[1, 2, 0])).is_err());
        assert!(ints(&[1, 2]).series_eq(&ints(&[1, 2])).unwrap());
    }

    #[test]
    fn json_form() {
        let s = ints(&[1, -3]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"["1","-3"]"#);
        assert_eq!(serde_json::from_str::<TruncatedSeries>(&text).unwrap(), s);
        assert!(serde_json::from_str::<TruncatedSeries>("[]").is_err());
    }
}
