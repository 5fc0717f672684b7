//! The classical bases e_k, h_k, p_k, m_λ over a finite alphabet.
//!
//! Every basis has a definitional brute-force evaluator (subset and multiset
//! enumeration) and, for e/h/p, a recurrence path through the Newton-Girard
//! relations. The two are kept separate so the identities can be checked
//! differentially.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::partitions::Partition;
use crate::report::VerificationReport;
use crate::ring::{Domain, RingElem, Scalar};

/// A finite ordered alphabet `x_1, ..., x_n`. All entries live in one
/// coefficient domain.
#[derive(Clone, Debug, PartialEq)]
pub struct VariableSet {
    values: Vec<RingElem>,
    domain: Domain,
}

impl VariableSet {
    pub fn new(values: Vec<RingElem>) -> Result<Self, Error> {
        let domain = values
            .iter()
            .try_fold(Domain::Rational, |d, v| d.join(&v.domain()))?;
        Ok(VariableSet { values, domain })
    }

    pub fn from_scalars(values: impl IntoIterator<Item = Scalar>) -> Self {
        VariableSet {
            values: values.into_iter().map(RingElem::Scalar).collect(),
            domain: Domain::Rational,
        }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        VariableSet::from_scalars(values.iter().map(|&v| Scalar::from_int(v)))
    }

    pub fn empty() -> Self {
        VariableSet::from_scalars([])
    }

    pub fn values(&self) -> &[RingElem] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// The alphabet reordered by `order` (a permutation of `0..len`).
    pub fn permuted(&self, order: &[usize]) -> Self {
        VariableSet {
            values: order.iter().map(|&i| self.values[i].clone()).collect(),
            domain: self.domain.clone(),
        }
    }

    /// The alphabet with every entry negated.
    pub fn negated(&self) -> Self {
        VariableSet {
            values: self.values.iter().map(|v| -v).collect(),
            domain: self.domain.clone(),
        }
    }
}

impl fmt::Display for VariableSet {
    /// The comma-separated form read by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for VariableSet {
    type Err = Error;

    /// Comma-separated values: `1/2,-3,0`. Entries may also be polynomial
    /// text (`q^2`). An empty or blank string is the empty alphabet.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(VariableSet::empty());
        }
        let values = s
            .split(',')
            .map(RingElem::parse)
            .collect::<Result<Vec<_>, _>>()?;
        VariableSet::new(values)
    }
}

impl Serialize for VariableSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VariableSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<RingElem>::deserialize(deserializer)?;
        VariableSet::new(values).map_err(serde::de::Error::custom)
    }
}

/// `e_0..e_N`, `h_0..h_N`, `p_0..p_N` for one alphabet, with `e_0 = h_0 = 1`
/// and `p_0 = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasisTable {
    pub e: Vec<RingElem>,
    pub h: Vec<RingElem>,
    pub p: Vec<RingElem>,
}

/// Sums `Π_{i ∈ I} v_i` over every index k-multiset `I` (k-subset when
/// `strict`), walking the index tuples depth-first so each prefix product is
/// formed once.
fn sum_of_products<T: Clone>(
    values: &[T],
    k: usize,
    strict: bool,
    one: T,
    mul: &impl Fn(&T, &T) -> T,
    add: &impl Fn(&mut T, &T),
    total: &mut T,
) {
    fn walk<T: Clone>(
        values: &[T],
        start: usize,
        left: usize,
        strict: bool,
        prefix: &T,
        mul: &impl Fn(&T, &T) -> T,
        add: &impl Fn(&mut T, &T),
        total: &mut T,
    ) {
        if left == 0 {
            add(total, prefix);
            return;
        }
        for i in start..values.len() {
            let next = mul(prefix, &values[i]);
            walk(values, if strict { i + 1 } else { i }, left - 1, strict, &next, mul, add, total);
        }
    }
    walk(values, 0, k, strict, &one, mul, add, total);
}

/// Scalar alphabets are enumerated over the integers `L x_i`, `L` the least
/// common denominator, and divided by `L^k` once at the end.
fn symmetric_sum(x: &VariableSet, k: usize, strict: bool) -> RingElem {
    if let Some(scalars) = x.values().iter().map(RingElem::as_scalar).collect::<Option<Vec<_>>>() {
        let lcd = scalars
            .iter()
            .fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
        let ints: Vec<BigInt> = scalars
            .iter()
            .map(|s| s.numer() * (&lcd / s.denom()))
            .collect();
        let mut total = BigInt::zero();
        sum_of_products(&ints, k, strict, BigInt::one(), &|a, b| a * b, &|t, v| *t += v, &mut total);
        let den = num_traits::pow(lcd, k);
        return RingElem::Scalar(Scalar::from(BigRational::new(total, den)));
    }
    let mut total = RingElem::zero();
    sum_of_products(
        x.values(),
        k,
        strict,
        RingElem::one(),
        &|a, b| a * b,
        &|t, v| *t = &*t + v,
        &mut total,
    );
    total
}

/// `e_k` as the sum over strictly increasing index k-subsets.
pub fn elementary_bruteforce(x: &VariableSet, k: usize) -> RingElem {
    if k > x.len() {
        return RingElem::zero();
    }
    symmetric_sum(x, k, true)
}

/// `h_k` as the sum over weakly increasing index k-tuples.
pub fn complete_bruteforce(x: &VariableSet, k: usize) -> RingElem {
    symmetric_sum(x, k, false)
}

/// `p_k = Σ x_i^k`, with `p_0 = 0`.
pub fn power_sum(x: &VariableSet, k: usize) -> RingElem {
    if k == 0 {
        return RingElem::zero();
    }
    x.values().iter().map(|v| v.pow(k as u32)).sum()
}

/// `m_λ`: the sum of every distinct monomial whose exponent multiset is λ.
pub fn monomial_sym(x: &VariableSet, lambda: &Partition) -> RingElem {
    if lambda.len() > x.len() {
        return RingElem::zero();
    }
    let mut remaining: BTreeMap<usize, usize> = lambda.multiplicities();
    let zeros = x.len() - lambda.len();
    if zeros > 0 {
        remaining.insert(0, zeros);
    }
    let mut total = RingElem::zero();
    assign_exponents(x.values(), 0, &mut remaining, RingElem::one(), &mut total);
    total
}

/// Walks the distinct permutations of the padded exponent multiset.
fn assign_exponents(
    values: &[RingElem],
    idx: usize,
    remaining: &mut BTreeMap<usize, usize>,
    acc: RingElem,
    total: &mut RingElem,
) {
    if idx == values.len() {
        *total = &*total + &acc;
        return;
    }
    let choices: Vec<usize> = remaining
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&e, _)| e)
        .collect();
    for exp in choices {
        *remaining.get_mut(&exp).expect("present") -= 1;
        let term = if exp == 0 {
            acc.clone()
        } else {
            &acc * &values[idx].pow(exp as u32)
        };
        assign_exponents(values, idx + 1, remaining, term, total);
        *remaining.get_mut(&exp).expect("present") += 1;
    }
}

/// All three bases by brute force, for `k ≤ n_max`.
pub fn bruteforce_table(x: &VariableSet, n_max: usize) -> BasisTable {
    BasisTable {
        e: (0..=n_max).map(|k| elementary_bruteforce(x, k)).collect(),
        h: (0..=n_max).map(|k| complete_bruteforce(x, k)).collect(),
        p: (0..=n_max).map(|k| power_sum(x, k)).collect(),
    }
}

/// All three bases through the Newton-Girard recurrences:
/// `n e_n = Σ_{k=1}^n (-1)^{k-1} p_k e_{n-k}` and `n h_n = Σ_{k=1}^n p_k h_{n-k}`,
/// seeded only by the power sums.
pub fn basis_table(x: &VariableSet, n_max: usize) -> BasisTable {
    let p: Vec<RingElem> = (0..=n_max).map(|k| power_sum(x, k)).collect();
    let mut e = vec![RingElem::one()];
    let mut h = vec![RingElem::one()];
    for n in 1..=n_max {
        let mut e_acc = RingElem::zero();
        let mut h_acc = RingElem::zero();
        for k in 1..=n {
            let pe = &p[k] * &e[n - k];
            e_acc = if k % 2 == 1 { e_acc + pe } else { e_acc - pe };
            h_acc = h_acc + &p[k] * &h[n - k];
        }
        let n_s = Scalar::from(n);
        e.push(e_acc.div_scalar(&n_s).expect("n > 0"));
        h.push(h_acc.div_scalar(&n_s).expect("n > 0"));
    }
    BasisTable { e, h, p }
}

/// `n e_n` against `Σ_{k=1}^n (-1)^{k-1} p_k e_{n-k}`, brute-force values on
/// both sides.
pub fn verify_newton_e(x: &VariableSet, n: usize) -> VerificationReport {
    let t = bruteforce_table(x, n);
    let lhs = t.e[n].scale(&Scalar::from(n));
    let rhs = (1..=n)
        .map(|k| (&t.p[k] * &t.e[n - k]).scale(&Scalar::sign(k - 1)))
        .sum();
    VerificationReport::new("newton_e", n, lhs, rhs)
}

/// `n h_n` against `Σ_{k=1}^n p_k h_{n-k}`.
pub fn verify_newton_h(x: &VariableSet, n: usize) -> VerificationReport {
    let t = bruteforce_table(x, n);
    let lhs = t.h[n].scale(&Scalar::from(n));
    let rhs = (1..=n).map(|k| &t.p[k] * &t.h[n - k]).sum();
    VerificationReport::new("newton_h", n, lhs, rhs)
}

/// The two convolution forms of `p_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSumConvolutions {
    /// `Σ_{k=0}^n (-1)^{k-1} k e_k h_{n-k}`
    pub e_then_h: RingElem,
    /// `Σ_{k=0}^n (-1)^{n-k} k h_k e_{n-k}`
    pub h_then_e: RingElem,
}

/// Both Newton-type convolutions for `p_n`, from brute-force `e` and `h`.
pub fn theorem1_power_sum(x: &VariableSet, n: usize) -> PowerSumConvolutions {
    let t = bruteforce_table(x, n);
    // sign(k + 1) is (-1)^{k-1} without underflow at k = 0
    let e_then_h = (0..=n)
        .map(|k| (&t.e[k] * &t.h[n - k]).scale(&(Scalar::sign(k + 1) * Scalar::from(k))))
        .sum();
    let h_then_e = (0..=n)
        .map(|k| (&t.h[k] * &t.e[n - k]).scale(&(Scalar::sign(n - k) * Scalar::from(k))))
        .sum();
    PowerSumConvolutions { e_then_h, h_then_e }
}

/// `p_n` against each convolution form.
pub fn verify_theorem1(x: &VariableSet, n: usize) -> [VerificationReport; 2] {
    let conv = theorem1_power_sum(x, n);
    let p = power_sum(x, n);
    [
        VerificationReport::new("power_sum_conv_e_h", n, p.clone(), conv.e_then_h),
        VerificationReport::new("power_sum_conv_h_e", n, p, conv.h_then_e),
    ]
}
