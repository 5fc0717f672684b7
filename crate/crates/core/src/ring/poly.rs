use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Scalar;
use crate::error::Error;

/// Default indeterminate used when a polynomial is read from a form that does
/// not carry a name (JSON arrays, constant text).
pub const DEFAULT_INDETERMINATE: &str = "q";

/// Largest degree accepted by the text and JSON readers.
pub const MAX_PARSED_DEGREE: usize = 1 << 14;

/// Dense univariate polynomial with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `name^i`. The highest stored
/// coefficient is never zero, so the zero polynomial has no coefficients and
/// no numeric degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    name: String,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(name: impl Into<String>, coeffs: Vec<Scalar>) -> Self {
        let mut p = UniPoly {
            name: name.into(),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn zero(name: impl Into<String>) -> Self {
        UniPoly {
            name: name.into(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(name: impl Into<String>, c: Scalar) -> Self {
        UniPoly::new(name, vec![c])
    }

    pub fn one(name: impl Into<String>) -> Self {
        UniPoly::constant(name, Scalar::one())
    }

    /// The indeterminate itself.
    pub fn var(name: impl Into<String>) -> Self {
        UniPoly::monomial(name, Scalar::one(), 1)
    }

    /// `c * name^degree`.
    pub fn monomial(name: impl Into<String>, c: Scalar, degree: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly::new(name, coeffs)
    }

    /// Builds from small integer coefficients, lowest degree first.
    pub fn from_ints(name: impl Into<String>, coeffs: &[i64]) -> Self {
        UniPoly::new(name, coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// Coefficient of `name^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The constant value if the degree is at most zero.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.coeffs.len() {
            0 => Some(Scalar::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * at + c)
    }

    fn check_same(&self, other: &UniPoly) -> Result<(), Error> {
        if self.name == other.name {
            Ok(())
        } else {
            Err(Error::IndeterminateMismatch {
                left: self.name.clone(),
                right: other.name.clone(),
            })
        }
    }

    pub fn checked_add(&self, other: &UniPoly) -> Result<UniPoly, Error> {
        self.check_same(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(UniPoly::new(self.name.clone(), coeffs))
    }

    pub fn checked_sub(&self, other: &UniPoly) -> Result<UniPoly, Error> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &UniPoly) -> Result<UniPoly, Error> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(self.name.clone()));
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Ok(UniPoly::new(self.name.clone(), out))
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            name: self.name.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(
            self.name.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> UniPoly {
        let mut result = UniPoly::one(self.name.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&base).expect("same indeterminate");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same indeterminate");
            }
        }
        result
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Scalar::from(i))
            .collect();
        UniPoly::new(self.name.clone(), coeffs)
    }

    /// Long division: returns `(quotient, remainder)` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), Error> {
        self.check_same(divisor)?;
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((UniPoly::zero(self.name.clone()), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); rem.len() - ddeg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + ddeg];
            if top.is_zero() {
                continue;
            }
            let factor = top / dlead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &(&factor * d);
            }
            quot[shift] = factor;
        }
        Ok((
            UniPoly::new(self.name.clone(), quot),
            UniPoly::new(self.name.clone(), rem),
        ))
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly, Error> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Parses the text form (`1 + q - 3/2*q^4`). A string with no
    /// indeterminate yields a constant in `default_name`.
    pub fn parse(text: &str, default_name: &str) -> Result<UniPoly, Error> {
        parse_poly(text, default_name)
    }
}

impl fmt::Display for UniPoly {
    /// Text form, lowest degree first: `1 + q + 2*q^2`, `-1/2*x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (wrote, neg) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            wrote = true;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str(&self.name)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({})", self.name, self)
    }
}

impl FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s, DEFAULT_INDETERMINATE)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter())
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Scalar>::deserialize(deserializer)?;
        if coeffs.len() > MAX_PARSED_DEGREE + 1 {
            return Err(serde::de::Error::custom("polynomial degree too large"));
        }
        Ok(UniPoly::new(DEFAULT_INDETERMINATE, coeffs))
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits `text` into signed terms. Signs between terms are binary; a
/// leading sign belongs to the first term.
fn split_terms(text: &str) -> Result<Vec<(bool, &str)>, Error> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut start = None;
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut expect_term = true;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c == '+' || c == '-' {
            // a sign directly after '/' or '^' belongs to the number
            let prev = text[..i].trim_end().chars().last();
            if matches!(prev, Some('/') | Some('^') | Some('*')) {
                i += 1;
                continue;
            }
            if let Some(s) = start.take() {
                terms.push((negative, text[s..i].trim()));
                negative = c == '-';
            } else if expect_term {
                negative ^= c == '-';
            } else {
                return Err(Error::Parse(format!("misplaced sign in {text:?}")));
            }
            expect_term = true;
        } else if !c.is_whitespace() && start.is_none() {
            start = Some(i);
            expect_term = false;
        }
        i += 1;
    }
    match start {
        Some(s) => terms.push((negative, text[s..].trim())),
        None if terms.is_empty() => return Err(Error::Parse("empty polynomial".into())),
        None => return Err(Error::Parse(format!("dangling sign in {text:?}"))),
    }
    Ok(terms)
}

fn parse_poly(text: &str, default_name: &str) -> Result<UniPoly, Error> {
    let mut name: Option<String> = None;
    let mut monomials: Vec<(Scalar, usize)> = Vec::new();
    for (negative, term) in split_terms(text)? {
        let (coef, var_part) = match term.find(is_ident_start) {
            None => (term.parse::<Scalar>()?, None),
            Some(pos) => {
                let head = term[..pos].trim();
                let coef = if head.is_empty() {
                    Scalar::one()
                } else {
                    let head = head
                        .strip_suffix('*')
                        .ok_or_else(|| Error::Parse(format!("expected '*' in term {term:?}")))?;
                    head.parse::<Scalar>()?
                };
                (coef, Some(&term[pos..]))
            }
        };
        let degree = match var_part {
            None => 0,
            Some(v) => {
                let end = v.find(|c| !is_ident_char(c)).unwrap_or(v.len());
                let ident = &v[..end];
                match &name {
                    Some(n) if n != ident => {
                        return Err(Error::IndeterminateMismatch {
                            left: n.clone(),
                            right: ident.to_string(),
                        })
                    }
                    Some(_) => {}
                    None => name = Some(ident.to_string()),
                }
                let rest = v[end..].trim();
                if rest.is_empty() {
                    1
                } else {
                    let exp = rest
                        .strip_prefix('^')
                        .ok_or_else(|| Error::Parse(format!("unexpected {rest:?} in term")))?
                        .trim();
                    let d: usize = exp
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {exp:?}")))?;
                    if d > MAX_PARSED_DEGREE {
                        return Err(Error::Parse(format!("exponent {d} exceeds limit")));
                    }
                    d
                }
            }
        };
        monomials.push((if negative { -coef } else { coef }, degree));
    }
    let top = monomials.iter().map(|&(_, d)| d).max().unwrap_or(0);
    let mut coeffs = vec![Scalar::zero(); top + 1];
    for (c, d) in monomials {
        coeffs[d] += &c;
    }
    Ok(UniPoly::new(
        name.unwrap_or_else(|| default_name.to_string()),
        coeffs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints("q", coeffs)
    }

    #[test]
    fn difference_of_squares() {
        let p = q(&[1, 1]).checked_mul(&q(&[1, -1])).unwrap();
        assert_eq!(p, q(&[1, 0, -1]));
    }

    #[test]
    fn cancellation_drops_trailing_zero() {
        let p = q(&[1, 1]).checked_add(&q(&[-1])).unwrap();
        assert_eq!(p, UniPoly::var("q"));
        assert_eq!(p.degree(), Some(1));
        let z = q(&[0, 2]).checked_sub(&q(&[0, 2])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn horner_eval() {
        assert_eq!(q(&[1, 1, 1]).eval(&Scalar::from_int(2)), Scalar::from_int(7));
        assert_eq!(
            UniPoly::monomial("q", Scalar::one(), 3).eval(&"1/2".parse().unwrap()),
            "1/8".parse().unwrap()
        );
        assert!(UniPoly::zero("q").eval(&Scalar::from_int(5)).is_zero());
    }

    #[test]
    fn mismatched_names_error() {
        let r = q(&[1]).checked_add(&UniPoly::var("x"));
        assert!(matches!(r, Err(Error::IndeterminateMismatch { .. })));
    }

    #[test]
    fn exact_and_inexact_division() {
        let num = q(&[1, 0, -1]);
        assert_eq!(num.div_exact(&q(&[1, -1])).unwrap(), q(&[1, 1]));
        assert!(matches!(
            num.div_exact(&q(&[0, 2])),
            Err(Error::InexactDivision)
        ));
        assert!(matches!(
            num.div_rem(&UniPoly::zero("q")),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn text_round_trip() {
        let p = UniPoly::new(
            "q",
            vec![
                Scalar::one(),
                Scalar::from_int(-1),
                Scalar::zero(),
                "3/2".parse().unwrap(),
            ],
        );
        assert_eq!(p.to_string(), "1 - q + 3/2*q^3");
        assert_eq!(p.to_string().parse::<UniPoly>().unwrap(), p);
        assert_eq!(UniPoly::var("q").to_string(), "q");
        assert_eq!(UniPoly::zero("q").to_string(), "0");
        assert_eq!(
            "-q^2 + -1/2*q".parse::<UniPoly>().unwrap().to_string(),
            "-1/2*q - q^2"
        );
    }

    #[test]
    fn text_parser_rejects_bad_input() {
        for bad in ["", "+", "q^", "q^-1", "2q", "q + x", "1 +", "q^99999999", "**"] {
            assert!(bad.parse::<UniPoly>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn json_is_coefficient_array() {
        let p = q(&[0, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["0","1"]"#);
        let back: UniPoly = serde_json::from_str(r#"["1","0","-1/2","0"]"#).unwrap();
        assert_eq!(back.degree(), Some(2));
    }
}
