//! Specialized alphabets whose symmetric functions have closed forms or
//! classical combinatorial meaning, together with independent oracles for
//! those closed forms.
//!
//! | kind              | alphabet                         | params          |
//! |-------------------|----------------------------------|-----------------|
//! | `ONES`            | `1, ..., 1` (n copies)           | `n`             |
//! | `GEOMETRIC_Q`     | `1, q, ..., q^{n-1}`             | `n`, `q`?       |
//! | `ARITH_PROG`      | `r, r+m, ..., r+nm` (n+1 values) | `r`, `m`, `n`   |
//! | `JACOBI_STIRLING` | `i(i-1+2γ)`, `i = 1..n`          | `n`, `gamma`    |
//! | `ZETA_NODES`      | `1/i^s`, `i = 1..N`              | `s`, `N`        |
//! | `PRIME_NODES`     | `1/ℓ^s`, primes `ℓ ≤ limit`      | `s`, `limit`    |
//!
//! `q` is symbolic unless a rational sample value is given.

mod bernoulli;
mod primes;
mod qseries;
mod stirling;
mod table;
mod zeta;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::ring::{RingElem, Scalar, UniPoly, DEFAULT_INDETERMINATE};
use crate::symfun::VariableSet;

pub use bernoulli::{bernoulli_polynomials, verify_arith_prog_power_sum, BernoulliCache};
pub use primes::{prime_sieve, verify_prime_row, ENUMERATION_BOUND};
pub use qseries::{q_binomial, q_pochhammer, verify_q_row};
pub use stirling::{
    jacobi_stirling_first, jacobi_stirling_second, stirling_first, stirling_second,
    verify_jacobi_stirling_row, verify_r_whitney_row, verify_whitney_stirling_crosscheck,
    whitney_first, whitney_second,
};
pub use table::{
    binomial, closed_forms, table_rows, verify_generic_on_family, verify_ones_row, ClosedForms,
    TableRow,
};
pub use zeta::verify_zeta_row;

/// Largest alphabet size or prime limit accepted from a spec.
pub const MAX_FAMILY_SIZE: usize = 4096;
pub const MAX_PRIME_LIMIT: usize = 1_000_000;
pub const MAX_ZETA_WEIGHT: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    Ones,
    GeometricQ,
    ArithProg,
    JacobiStirling,
    ZetaNodes,
    PrimeNodes,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Ones,
        FamilyKind::GeometricQ,
        FamilyKind::ArithProg,
        FamilyKind::JacobiStirling,
        FamilyKind::ZetaNodes,
        FamilyKind::PrimeNodes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Ones => "ONES",
            FamilyKind::GeometricQ => "GEOMETRIC_Q",
            FamilyKind::ArithProg => "ARITH_PROG",
            FamilyKind::JacobiStirling => "JACOBI_STIRLING",
            FamilyKind::ZetaNodes => "ZETA_NODES",
            FamilyKind::PrimeNodes => "PRIME_NODES",
        }
    }

    /// Name of the parameter that sets the alphabet size.
    pub fn size_param(self) -> &'static str {
        match self {
            FamilyKind::ZetaNodes => "N",
            FamilyKind::PrimeNodes => "limit",
            _ => "n",
        }
    }

    /// Required and optional parameter names.
    fn params(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            FamilyKind::Ones => (&["n"], &[]),
            FamilyKind::GeometricQ => (&["n"], &["q"]),
            FamilyKind::ArithProg => (&["r", "m", "n"], &[]),
            FamilyKind::JacobiStirling => (&["n", "gamma"], &[]),
            FamilyKind::ZetaNodes => (&["s", "N"], &[]),
            FamilyKind::PrimeNodes => (&["s", "limit"], &[]),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Wire form of a family: `{"kind": "...", "params": {...}}`. Parameter values
/// may be JSON integers or strings (rationals as `"num/den"`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind) -> Self {
        FamilySpec {
            kind,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.params.insert(name.to_string(), value.into());
        self
    }

    /// Parses `k=v,k=v` parameter text for the given kind.
    pub fn from_kv(kind: FamilyKind, text: &str) -> Result<Self, Error> {
        let mut spec = FamilySpec::new(kind);
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {item:?}")))?;
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() {
                return Err(Error::Parse(format!("empty parameter name in {item:?}")));
            }
            if spec.params.insert(k.to_string(), Value::String(v.to_string())).is_some() {
                return Err(Error::invalid(k, "given twice"));
            }
        }
        Ok(spec)
    }

    /// Parses the JSON wire form.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    fn text(&self, name: &str) -> Result<Option<String>, Error> {
        match self.params.get(name) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.trim().to_string())),
            Some(Value::Number(n)) => Ok(Some(n.to_string())),
            Some(other) => Err(Error::invalid(name, format!("unsupported value {other}"))),
        }
    }

    fn required_text(&self, name: &str) -> Result<String, Error> {
        self.text(name)?
            .ok_or_else(|| Error::invalid(name, "missing"))
    }

    fn uint(&self, name: &str, max: usize) -> Result<usize, Error> {
        let t = self.required_text(name)?;
        let v: usize = t
            .parse()
            .map_err(|_| Error::invalid(name, format!("expected a nonnegative integer, got {t:?}")))?;
        if v > max {
            return Err(Error::invalid(name, format!("{v} exceeds the limit {max}")));
        }
        Ok(v)
    }

    fn rational(&self, name: &str) -> Result<Scalar, Error> {
        let t = self.required_text(name)?;
        t.parse()
            .map_err(|_| Error::invalid(name, format!("expected a rational, got {t:?}")))
    }

    fn weight(&self) -> Result<u32, Error> {
        let s = self.uint("s", MAX_ZETA_WEIGHT as usize)?;
        if s == 0 {
            return Err(Error::invalid("s", "must be at least 1"));
        }
        Ok(s as u32)
    }

    /// Validates the parameter set for this kind.
    pub fn validate(&self) -> Result<Family, Error> {
        let (required, optional) = self.kind.params();
        for key in self.params.keys() {
            if !required.contains(&key.as_str()) && !optional.contains(&key.as_str()) {
                return Err(Error::invalid(key, format!("not a parameter of {}", self.kind)));
            }
        }
        Ok(match self.kind {
            FamilyKind::Ones => Family::Ones {
                n: self.uint("n", MAX_FAMILY_SIZE)?,
            },
            FamilyKind::GeometricQ => {
                let q = match self.text("q")? {
                    None => None,
                    Some(t) if t == DEFAULT_INDETERMINATE => None,
                    Some(_) => Some(self.rational("q")?),
                };
                Family::GeometricQ {
                    n: self.uint("n", MAX_FAMILY_SIZE)?,
                    q,
                }
            }
            FamilyKind::ArithProg => Family::ArithProg {
                r: self.rational("r")?,
                m: self.rational("m")?,
                n: self.uint("n", MAX_FAMILY_SIZE - 1)?,
            },
            FamilyKind::JacobiStirling => Family::JacobiStirling {
                n: self.uint("n", MAX_FAMILY_SIZE)?,
                gamma: self.rational("gamma")?,
            },
            FamilyKind::ZetaNodes => Family::ZetaNodes {
                s: self.weight()?,
                terms: self.uint("N", MAX_FAMILY_SIZE)?,
            },
            FamilyKind::PrimeNodes => {
                let limit = self.uint("limit", MAX_PRIME_LIMIT)?;
                if limit < 2 {
                    return Err(Error::invalid("limit", "must be at least 2"));
                }
                Family::PrimeNodes {
                    s: self.weight()?,
                    limit,
                }
            }
        })
    }
}

/// A validated family.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Ones { n: usize },
    /// `q = None` keeps `q` symbolic.
    GeometricQ { n: usize, q: Option<Scalar> },
    ArithProg { r: Scalar, m: Scalar, n: usize },
    JacobiStirling { n: usize, gamma: Scalar },
    ZetaNodes { s: u32, terms: usize },
    PrimeNodes { s: u32, limit: usize },
}

impl Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Ones { .. } => FamilyKind::Ones,
            Family::GeometricQ { .. } => FamilyKind::GeometricQ,
            Family::ArithProg { .. } => FamilyKind::ArithProg,
            Family::JacobiStirling { .. } => FamilyKind::JacobiStirling,
            Family::ZetaNodes { .. } => FamilyKind::ZetaNodes,
            Family::PrimeNodes { .. } => FamilyKind::PrimeNodes,
        }
    }

    /// The canonical wire form (integers as numbers, rationals as strings).
    pub fn to_spec(&self) -> FamilySpec {
        let spec = FamilySpec::new(self.kind());
        match self {
            Family::Ones { n } => spec.with("n", *n),
            Family::GeometricQ { n, q } => {
                let spec = spec.with("n", *n);
                match q {
                    Some(q) => spec.with("q", q.to_string()),
                    None => spec,
                }
            }
            Family::ArithProg { r, m, n } => spec
                .with("r", r.to_string())
                .with("m", m.to_string())
                .with("n", *n),
            Family::JacobiStirling { n, gamma } => {
                spec.with("n", *n).with("gamma", gamma.to_string())
            }
            Family::ZetaNodes { s, terms } => spec.with("s", *s).with("N", *terms),
            Family::PrimeNodes { s, limit } => spec.with("s", *s).with("limit", *limit),
        }
    }

    /// True for the all-zero arithmetic progression (`r = m = 0`), which is
    /// accepted but carries no information.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Family::ArithProg { r, m, .. } if r.is_zero() && m.is_zero())
    }

    /// Same family with its size parameter replaced, for table grids.
    pub fn with_size(&self, size: usize) -> Family {
        let mut f = self.clone();
        match &mut f {
            Family::Ones { n }
            | Family::GeometricQ { n, .. }
            | Family::ArithProg { n, .. }
            | Family::JacobiStirling { n, .. } => *n = size,
            Family::ZetaNodes { terms, .. } => *terms = size,
            Family::PrimeNodes { limit, .. } => *limit = size,
        }
        f
    }
}

/// `a..b` (inclusive) or a single integer.
pub fn parse_size_range(text: &str) -> Result<Vec<usize>, Error> {
    let bad = || Error::Parse(format!("expected a size or a range a..b, got {text:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    if hi > MAX_FAMILY_SIZE {
        return Err(Error::invalid("n", format!("{hi} exceeds the limit {MAX_FAMILY_SIZE}")));
    }
    Ok((lo..=hi).collect())
}

/// `1 / base^s` as an exact rational.
pub(crate) fn reciprocal_power(base: usize, s: u32) -> Scalar {
    Scalar::from(base).pow(s).recip().expect("base is positive")
}

/// The alphabet of a family.
pub fn build_family(spec: &FamilySpec) -> Result<VariableSet, Error> {
    Ok(family_alphabet(&spec.validate()?))
}

/// The alphabet of a validated family.
pub fn family_alphabet(family: &Family) -> VariableSet {
    match family {
        Family::Ones { n } => VariableSet::from_ints(&vec![1; *n]),
        Family::GeometricQ { n, q: None } => VariableSet::new(
            (0..*n)
                .map(|i| RingElem::Poly(UniPoly::monomial(DEFAULT_INDETERMINATE, Scalar::one(), i)))
                .collect(),
        )
        .expect("single indeterminate"),
        Family::GeometricQ { n, q: Some(q) } => {
            VariableSet::from_scalars((0..*n).map(|i| q.pow(i as u32)))
        }
        Family::ArithProg { r, m, n } => {
            VariableSet::from_scalars((0..=*n).map(|j| r + &(m * &Scalar::from(j))))
        }
        Family::JacobiStirling { n, gamma } => VariableSet::from_scalars(
            (1..=*n).map(|i| stirling::jacobi_node(i, gamma)),
        ),
        Family::ZetaNodes { s, terms } => {
            VariableSet::from_scalars((1..=*terms).map(|i| reciprocal_power(i, *s)))
        }
        Family::PrimeNodes { s, limit } => VariableSet::from_scalars(
            prime_sieve(*limit).into_iter().map(|p| reciprocal_power(p, *s)),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: FamilyKind, kv: &str) -> FamilySpec {
        FamilySpec::from_kv(kind, kv).unwrap()
    }

    #[test]
    fn ones_alphabet() {
        let x = build_family(&spec(FamilyKind::Ones, "n=5")).unwrap();
        assert_eq!(x, VariableSet::from_ints(&[1; 5]));
    }

    #[test]
    fn geometric_alphabet() {
        let x = build_family(&spec(FamilyKind::GeometricQ, "n=3")).unwrap();
        let expect: VariableSet = "1,q,q^2".parse().unwrap();
        assert_eq!(x, expect);
        let x = build_family(&spec(FamilyKind::GeometricQ, "n=3,q=1/2")).unwrap();
        assert_eq!(x, "1,1/2,1/4".parse().unwrap());
    }

    #[test]
    fn jacobi_nodes_at_half_are_squares() {
        let x = build_family(&spec(FamilyKind::JacobiStirling, "n=3,gamma=1/2")).unwrap();
        assert_eq!(x, VariableSet::from_ints(&[1, 4, 9]));
        let x = build_family(&spec(FamilyKind::JacobiStirling, "n=2,gamma=1")).unwrap();
        assert_eq!(x, VariableSet::from_ints(&[2, 6]));
    }

    #[test]
    fn arith_prog_has_n_plus_one_values() {
        let x = build_family(&spec(FamilyKind::ArithProg, "r=1,m=3,n=2")).unwrap();
        assert_eq!(x, VariableSet::from_ints(&[1, 4, 7]));
        let f = spec(FamilyKind::ArithProg, "r=0,m=0,n=3").validate().unwrap();
        assert!(f.is_degenerate());
        assert_eq!(family_alphabet(&f).len(), 4);
    }

    #[test]
    fn zeta_and_prime_alphabets() {
        let x = build_family(&spec(FamilyKind::ZetaNodes, "s=2,N=3")).unwrap();
        assert_eq!(x, "1,1/4,1/9".parse().unwrap());
        let x = build_family(&spec(FamilyKind::PrimeNodes, "s=1,limit=10")).unwrap();
        assert_eq!(x, "1/2,1/3,1/5,1/7".parse().unwrap());
    }

    #[test]
    fn parameter_validation() {
        let bad = [
            (FamilyKind::Ones, "n=5,q=2"),
            (FamilyKind::Ones, ""),
            (FamilyKind::Ones, "n=-1"),
            (FamilyKind::Ones, "n=99999999"),
            (FamilyKind::ZetaNodes, "s=0,N=3"),
            (FamilyKind::PrimeNodes, "s=1,limit=1"),
            (FamilyKind::ArithProg, "r=1/0,m=1,n=2"),
            (FamilyKind::JacobiStirling, "n=2"),
        ];
        for (kind, kv) in bad {
            assert!(spec(kind, kv).validate().is_err(), "{kind} {kv}");
        }
        assert!(FamilySpec::from_kv(FamilyKind::Ones, "n").is_err());
        assert!(FamilySpec::from_kv(FamilyKind::Ones, "n=1,n=2").is_err());
    }

    #[test]
    fn json_spec_round_trip() {
        let s = FamilySpec::from_json(r#"{"kind":"ARITH_PROG","params":{"r":"1/2","m":3,"n":4}}"#)
            .unwrap();
        let f = s.validate().unwrap();
        assert_eq!(
            f,
            Family::ArithProg {
                r: "1/2".parse().unwrap(),
                m: Scalar::from_int(3),
                n: 4
            }
        );
        assert_eq!(f.to_spec().validate().unwrap(), f);
        assert!(FamilySpec::from_json(r#"{"kind":"NOPE","params":{}}"#).is_err());
        assert!(FamilySpec::from_json(r#"{"kind":"ONES","params":{"n":[1]}}"#)
            .unwrap()
            .validate()
            .is_err());
    }

    #[test]
    fn size_ranges() {
        assert_eq!(parse_size_range("1..5").unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(parse_size_range("1..=2").unwrap(), vec![1, 2]);
        assert_eq!(parse_size_range(" 3 ").unwrap(), vec![3]);
        for bad in ["", "5..1", "a..b", "1..", "-1", "1..99999999", "1..=", "..3"] {
            assert!(parse_size_range(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn kind_names() {
        assert_eq!("geometric-q".parse::<FamilyKind>().unwrap(), FamilyKind::GeometricQ);
        assert!("".parse::<FamilyKind>().is_err());
    }
}
