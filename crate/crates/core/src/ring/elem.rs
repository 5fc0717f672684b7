use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Scalar, UniPoly, DEFAULT_INDETERMINATE};
use crate::error::Error;

/// An element of the coefficient ring: an exact rational, or a polynomial in
/// one named indeterminate. Scalars combine with polynomials of any name by
/// promotion to degree 0; two polynomials must share their indeterminate.
///
/// The `std::ops` impls panic on an indeterminate mismatch. Code that mixes
/// values from unvalidated sources should use the `checked_*` methods.
#[derive(Clone)]
pub enum RingElem {
    Scalar(Scalar),
    Poly(UniPoly),
}

/// Which coefficient domain a value or a collection of values lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    Polynomial(String),
}

impl Domain {
    /// The common domain of two values, if they can be combined.
    pub fn join(&self, other: &Domain) -> Result<Domain, Error> {
        match (self, other) {
            (Domain::Rational, d) | (d, Domain::Rational) => Ok(d.clone()),
            (Domain::Polynomial(a), Domain::Polynomial(b)) if a == b => Ok(self.clone()),
            (Domain::Polynomial(a), Domain::Polynomial(b)) => Err(Error::IndeterminateMismatch {
                left: a.clone(),
                right: b.clone(),
            }),
        }
    }
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem::Scalar(Scalar::zero())
    }

    pub fn one() -> Self {
        RingElem::Scalar(Scalar::one())
    }

    pub fn int(n: i64) -> Self {
        RingElem::Scalar(Scalar::from_int(n))
    }

    pub fn domain(&self) -> Domain {
        match self {
            RingElem::Scalar(_) => Domain::Rational,
            RingElem::Poly(p) => Domain::Polynomial(p.name().to_string()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElem::Scalar(s) => s.is_zero(),
            RingElem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value as a rational if it has degree at most zero.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self {
            RingElem::Scalar(s) => Some(s.clone()),
            RingElem::Poly(p) => p.as_constant(),
        }
    }

    pub fn as_scalar(&self) -> Option<&Scalar> {
        match self {
            RingElem::Scalar(s) => Some(s),
            RingElem::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&UniPoly> {
        match self {
            RingElem::Scalar(_) => None,
            RingElem::Poly(p) => Some(p),
        }
    }

    /// Promotes to a polynomial in `name`.
    pub fn to_poly(&self, name: &str) -> Result<UniPoly, Error> {
        match self {
            RingElem::Scalar(s) => Ok(UniPoly::constant(name, s.clone())),
            RingElem::Poly(p) if p.name() == name => Ok(p.clone()),
            RingElem::Poly(p) => Err(Error::IndeterminateMismatch {
                left: p.name().to_string(),
                right: name.to_string(),
            }),
        }
    }

    fn lift(
        &self,
        other: &RingElem,
        scalar_op: impl Fn(&Scalar, &Scalar) -> Scalar,
        poly_op: impl Fn(&UniPoly, &UniPoly) -> Result<UniPoly, Error>,
    ) -> Result<RingElem, Error> {
        Ok(match (self, other) {
            (RingElem::Scalar(a), RingElem::Scalar(b)) => RingElem::Scalar(scalar_op(a, b)),
            (RingElem::Poly(a), RingElem::Poly(b)) => RingElem::Poly(poly_op(a, b)?),
            (RingElem::Poly(a), RingElem::Scalar(b)) => {
                RingElem::Poly(poly_op(a, &UniPoly::constant(a.name(), b.clone()))?)
            }
            (RingElem::Scalar(a), RingElem::Poly(b)) => {
                RingElem::Poly(poly_op(&UniPoly::constant(b.name(), a.clone()), b)?)
            }
        })
    }

    pub fn checked_add(&self, other: &RingElem) -> Result<RingElem, Error> {
        self.lift(other, |a, b| a + b, UniPoly::checked_add)
    }

    pub fn checked_sub(&self, other: &RingElem) -> Result<RingElem, Error> {
        self.lift(other, |a, b| a - b, UniPoly::checked_sub)
    }

    pub fn checked_mul(&self, other: &RingElem) -> Result<RingElem, Error> {
        self.lift(other, |a, b| a * b, UniPoly::checked_mul)
    }

    /// Multiplies by a rational.
    pub fn scale(&self, c: &Scalar) -> RingElem {
        match self {
            RingElem::Scalar(s) => RingElem::Scalar(s * c),
            RingElem::Poly(p) => RingElem::Poly(p.scale(c)),
        }
    }

    /// Divides by a nonzero rational.
    pub fn div_scalar(&self, c: &Scalar) -> Result<RingElem, Error> {
        Ok(self.scale(&c.recip()?))
    }

    pub fn pow(&self, exp: u32) -> RingElem {
        match self {
            RingElem::Scalar(s) => RingElem::Scalar(s.pow(exp)),
            RingElem::Poly(p) => RingElem::Poly(p.pow(exp)),
        }
    }

    /// Multiplicative inverse; defined only for nonzero constants.
    pub fn inverse(&self) -> Result<RingElem, Error> {
        match self {
            RingElem::Scalar(s) => Ok(RingElem::Scalar(s.recip()?)),
            RingElem::Poly(p) => match p.as_constant() {
                Some(c) if !c.is_zero() => Ok(RingElem::Poly(UniPoly::constant(
                    p.name(),
                    c.recip()?,
                ))),
                _ => Err(Error::NotInvertible(p.to_string())),
            },
        }
    }

    /// Substitutes a rational value for the indeterminate.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        match self {
            RingElem::Scalar(s) => s.clone(),
            RingElem::Poly(p) => p.eval(at),
        }
    }

    /// Parses either a rational (`-3/4`) or a polynomial text form
    /// (`1 + q^2`). Polynomial text of degree at most zero gives a scalar.
    pub fn parse(text: &str) -> Result<RingElem, Error> {
        if text.contains(|c: char| c.is_ascii_alphabetic() || c == '_') {
            let p = UniPoly::parse(text, DEFAULT_INDETERMINATE)?;
            Ok(match p.degree() {
                None | Some(0) => RingElem::Scalar(p.coeffs().first().cloned().unwrap_or_default()),
                Some(_) => RingElem::Poly(p),
            })
        } else {
            Ok(RingElem::Scalar(text.parse()?))
        }
    }
}

/// Exact ring addition.
pub fn ring_add(a: &RingElem, b: &RingElem) -> Result<RingElem, Error> {
    a.checked_add(b)
}

/// Exact ring multiplication.
pub fn ring_mul(a: &RingElem, b: &RingElem) -> Result<RingElem, Error> {
    a.checked_mul(b)
}

/// Exact Horner evaluation of `p` at `v`.
pub fn poly_eval(p: &UniPoly, v: &Scalar) -> Scalar {
    p.eval(v)
}

impl PartialEq for RingElem {
    /// Values compare after promotion; a scalar equals the constant
    /// polynomial with the same value.
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (RingElem::Scalar(a), RingElem::Scalar(b)) => a == b,
            (RingElem::Poly(a), RingElem::Poly(b)) => a == b,
            (RingElem::Scalar(a), RingElem::Poly(b)) | (RingElem::Poly(b), RingElem::Scalar(a)) => {
                b.as_constant().as_ref() == Some(a)
            }
        }
    }
}

impl Eq for RingElem {}

impl From<Scalar> for RingElem {
    fn from(s: Scalar) -> Self {
        RingElem::Scalar(s)
    }
}

impl From<UniPoly> for RingElem {
    fn from(p: UniPoly) -> Self {
        RingElem::Poly(p)
    }
}

impl From<i64> for RingElem {
    fn from(n: i64) -> Self {
        RingElem::int(n)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Scalar(s) => fmt::Display::fmt(s, f),
            RingElem::Poly(p) => fmt::Display::fmt(p, f),
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Scalar(s) => write!(f, "{s}"),
            RingElem::Poly(p) => write!(f, "{p:?}"),
        }
    }
}

impl FromStr for RingElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RingElem::parse(s)
    }
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            RingElem::Scalar(s) => s.serialize(serializer),
            RingElem::Poly(p) => p.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for RingElem {
    /// A JSON string is a rational; a JSON array is a polynomial in `q`.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Scalar(Scalar),
            Poly(UniPoly),
        }
        Ok(match Wire::deserialize(deserializer)? {
            Wire::Scalar(s) => RingElem::Scalar(s),
            Wire::Poly(p) => RingElem::Poly(p),
        })
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&RingElem> for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                (&self).$method(rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        match self {
            RingElem::Scalar(s) => RingElem::Scalar(-s),
            RingElem::Poly(p) => RingElem::Poly(p.neg()),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl Sum for RingElem {
    fn sum<I: Iterator<Item = RingElem>>(iter: I) -> Self {
        iter.fold(RingElem::zero(), |acc, x| acc + x)
    }
}

impl Product for RingElem {
    fn product<I: Iterator<Item = RingElem>>(iter: I) -> Self {
        iter.fold(RingElem::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> RingElem {
        RingElem::Poly(UniPoly::from_ints("q", coeffs))
    }

    #[test]
    fn scalar_promotes_into_polynomial() {
        let r = ring_add(&q(&[1, 1]), &RingElem::int(-1)).unwrap();
        assert_eq!(r, q(&[0, 1]));
        assert!(matches!(r, RingElem::Poly(_)));
    }

    #[test]
    fn product_examples() {
        assert_eq!(ring_mul(&q(&[1, 1]), &q(&[1, -1])).unwrap(), q(&[1, 0, -1]));
        let a: RingElem = "2/3".parse().unwrap();
        let b: RingElem = "3/2".parse().unwrap();
        assert!(ring_mul(&a, &b).unwrap().is_one());
        assert!(ring_mul(&q(&[1, 1]), &RingElem::zero()).unwrap().is_zero());
    }

    #[test]
    fn mismatch_is_an_error() {
        let x = RingElem::Poly(UniPoly::var("x"));
        assert!(matches!(
            ring_add(&q(&[0, 1]), &x),
            Err(Error::IndeterminateMismatch { .. })
        ));
        assert!(ring_mul(&x, &q(&[2])).is_err());
        assert!(Domain::Polynomial("x".into())
            .join(&Domain::Polynomial("q".into()))
            .is_err());
    }

    #[test]
    fn scalar_equals_constant_polynomial() {
        assert_eq!(RingElem::int(3), q(&[3]));
        assert_eq!(RingElem::zero(), q(&[]));
        assert_ne!(RingElem::int(3), q(&[3, 1]));
    }

    #[test]
    fn constant_polynomial_text_parses_as_scalar() {
        for text in ["t^0", "x - x", "2 + 0*q"] {
            let v = RingElem::parse(text).unwrap();
            assert!(matches!(v, RingElem::Scalar(_)), "{text}");
            assert_eq!(v.domain(), Domain::Rational);
        }
        assert!(matches!(RingElem::parse("q").unwrap(), RingElem::Poly(_)));
    }

    #[test]
    fn inverse_only_for_nonzero_constants() {
        assert_eq!(q(&[4]).inverse().unwrap(), "1/4".parse().unwrap());
        assert!(q(&[1, 1]).inverse().is_err());
        assert!(RingElem::zero().inverse().is_err());
    }

    #[test]
    fn json_forms() {
        let v = vec![RingElem::int(2), q(&[1, 0, 3])];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["2",["1","0","3"]]"#);
        let back: Vec<RingElem> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
