//! Named identity suites over seeded-random or fixed inputs.
//!
//! A suite expands into an ordered list of cases. Random cases are drawn
//! sequentially from a [`SplitMix64`] seeded with the run seed (each suite
//! starts its own generator, so a suite's cases do not depend on which other
//! suites run). Cases are then checked in parallel and collected back in case
//! order, so the summary is identical for every thread count.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::families::{
    family_alphabet, verify_arith_prog_power_sum, verify_generic_on_family,
    verify_jacobi_stirling_row, verify_ones_row, verify_prime_row, verify_q_row,
    verify_r_whitney_row, verify_whitney_stirling_crosscheck, verify_zeta_row, Family, FamilyKind,
    FamilySpec,
};
use crate::random::SplitMix64;
use crate::report::VerificationReport;
use crate::ring::{RingElem, Scalar};
use crate::series::{apply_t_ddt, build_e, build_h, build_p, log_derivative, series_mul};
use crate::symfun::{
    complete_bruteforce, elementary_bruteforce, power_sum, verify_newton_e, verify_newton_h,
    verify_theorem1, VariableSet,
};
use crate::twovar::{
    specialize_to_classical, verify_corollary_symmetry, verify_product_expansion, verify_theorem4,
    PairBasis,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    NewtonE,
    NewtonH,
    Convolution,
    ProductExpansion,
    SwapSymmetry,
    GeneralizedNewton,
    Series,
    OnesRow,
    QRow,
    ArithProg,
    Whitney,
    JacobiStirling,
    ZetaRow,
    PrimeRow,
    FamilyGeneric,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::NewtonE,
        Suite::NewtonH,
        Suite::Convolution,
        Suite::ProductExpansion,
        Suite::SwapSymmetry,
        Suite::GeneralizedNewton,
        Suite::Series,
        Suite::OnesRow,
        Suite::QRow,
        Suite::ArithProg,
        Suite::Whitney,
        Suite::JacobiStirling,
        Suite::ZetaRow,
        Suite::PrimeRow,
        Suite::FamilyGeneric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NewtonE => "newton-e",
            Suite::NewtonH => "newton-h",
            Suite::Convolution => "convolution",
            Suite::ProductExpansion => "product-expansion",
            Suite::SwapSymmetry => "swap-symmetry",
            Suite::GeneralizedNewton => "generalized-newton",
            Suite::Series => "series",
            Suite::OnesRow => "ones-row",
            Suite::QRow => "q-row",
            Suite::ArithProg => "arith-prog",
            Suite::Whitney => "whitney",
            Suite::JacobiStirling => "jacobi-stirling",
            Suite::ZetaRow => "zeta-row",
            Suite::PrimeRow => "prime-row",
            Suite::FamilyGeneric => "family-generic",
        }
    }

    fn shape(self) -> Shape {
        match self {
            Suite::NewtonE | Suite::NewtonH | Suite::Convolution | Suite::Series => Shape::Single,
            Suite::ProductExpansion | Suite::SwapSymmetry | Suite::GeneralizedNewton => Shape::Pair,
            _ => Shape::Grid,
        }
    }

    /// The family a grid suite is about, if it is tied to one.
    fn family_kind(self) -> Option<FamilyKind> {
        match self {
            Suite::OnesRow => Some(FamilyKind::Ones),
            Suite::QRow => Some(FamilyKind::GeometricQ),
            Suite::ArithProg | Suite::Whitney => Some(FamilyKind::ArithProg),
            Suite::JacobiStirling => Some(FamilyKind::JacobiStirling),
            Suite::ZetaRow => Some(FamilyKind::ZetaNodes),
            Suite::PrimeRow => Some(FamilyKind::PrimeNodes),
            _ => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Single,
    Pair,
    Grid,
}

/// Knobs for a suite run. `None` picks the suite's default.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: Option<usize>,
    pub n_max: Option<usize>,
    pub k_max: Option<usize>,
    pub truncation: Option<usize>,
    pub max_size: Option<usize>,
    /// Exact sizes for random pairs (`--nx`, `--ny`).
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub allow_zero: bool,
    pub vars: Option<VariableSet>,
    pub yvars: Option<VariableSet>,
    pub family: Option<Family>,
    pub basis: Option<PairBasis>,
    /// Keep every report, not only the failing ones.
    pub keep_all: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: None,
            n_max: None,
            k_max: None,
            truncation: None,
            max_size: None,
            nx: None,
            ny: None,
            allow_zero: false,
            vars: None,
            yvars: None,
            family: None,
            basis: None,
            keep_all: false,
        }
    }
}

pub const DEFAULT_SINGLE_CASES: usize = 200;
pub const DEFAULT_PAIR_CASES: usize = 100;
pub const DEFAULT_SERIES_CASES: usize = 50;
pub const DEFAULT_SINGLE_SIZE: usize = 6;
pub const DEFAULT_PAIR_SIZE: usize = 4;
pub const DEFAULT_SERIES_SIZE: usize = 5;
pub const DEFAULT_SINGLE_N: usize = 10;
pub const DEFAULT_PAIR_N: usize = 6;
pub const DEFAULT_TRUNCATION: usize = 12;
/// Largest alphabet a random case may have.
pub const MAX_RANDOM_SIZE: usize = 12;
/// Largest degree any suite is asked to reach.
pub const MAX_SUITE_DEGREE: usize = 40;
/// Most monomials a single brute-force evaluation may enumerate.
pub const ENUMERATION_BUDGET: u128 = 5_000_000;

/// Number of monomials of degree at most `degree` in `size` variables,
/// `C(size + degree, degree)`, saturating.
fn monomial_count(size: usize, degree: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=degree as u128 {
        c = c.saturating_mul(size as u128 + i) / i;
        if c > ENUMERATION_BUDGET {
            return u128::MAX;
        }
    }
    c
}

/// `(r, m)` sample points for the progression suites.
pub const ARITH_PROG_POINTS: [(&str, &str); 5] =
    [("1", "3"), ("1/2", "2"), ("-2", "1/3"), ("5/4", "-7/2"), ("0", "1")];

/// `γ` sample points: more than the largest degree in `γ` reached by the
/// default grid, so agreement certifies a polynomial identity in `γ`.
pub const JACOBI_GAMMAS: [&str; 8] = ["1/2", "1", "3/2", "7/3", "0", "-1", "2", "5/4"];

/// One checked input: the operands and its reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub case: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<VariableSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<VariableSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    pub checks: usize,
    pub failed: usize,
    /// All reports with `keep_all`, otherwise only the failing ones.
    pub reports: Vec<VerificationReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    pub checks: usize,
    pub failed_checks: usize,
    pub passed: bool,
    /// Failing cases only, unless `keep_all` was set.
    pub outcomes: Vec<CaseOutcome>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteSummary>,
}

enum CaseInput {
    Single(VariableSet),
    Pair(VariableSet, VariableSet),
    Grid(GridCase),
}

enum GridCase {
    Ones { n: usize, k_max: usize },
    Q { n: usize, k_max: usize },
    ArithPowerSum { r: Scalar, m: Scalar, n: usize, k_max: usize },
    Whitney { n: usize, k_max: usize },
    Jacobi { n: usize, gamma: Scalar, k_max: usize },
    Zeta { s: u32, terms: usize, k_max: usize },
    Prime { s: u32, limit: usize, k_max: usize },
    Generic { family: Family, n_max: usize },
}

fn check_bound(name: &str, value: usize, max: usize) -> Result<usize, Error> {
    if value > max {
        return Err(Error::invalid(name, format!("{value} exceeds the limit {max}")));
    }
    Ok(value)
}

fn rational(text: &str) -> Scalar {
    text.parse().expect("constant rational")
}

impl SuiteConfig {
    /// Bounds checks shared by every suite, run before any work starts.
    pub fn validate(&self) -> Result<(), Error> {
        for (name, v) in [
            ("n", self.n_max),
            ("k-max", self.k_max),
            ("truncation", self.truncation),
        ] {
            if let Some(v) = v {
                check_bound(name, v, MAX_SUITE_DEGREE)?;
            }
        }
        for (name, v) in [("max-size", self.max_size), ("nx", self.nx), ("ny", self.ny)] {
            if let Some(v) = v {
                check_bound(name, v, MAX_RANDOM_SIZE)?;
            }
        }
        if let Some(c) = self.cases {
            check_bound("cases", c, 1_000_000)?;
        }
        if self.yvars.is_some() && self.vars.is_none() {
            return Err(Error::invalid("yvars", "needs --vars as well"));
        }
        Ok(())
    }

    fn single_inputs(&self, rng: &mut SplitMix64, default_cases: usize, default_size: usize) -> Vec<VariableSet> {
        if let Some(x) = &self.vars {
            return vec![x.clone()];
        }
        if let Some(f) = &self.family {
            return vec![family_alphabet(f)];
        }
        let size = self.max_size.unwrap_or(default_size);
        (0..self.cases.unwrap_or(default_cases))
            .map(|_| match self.nx {
                Some(n) => rng.alphabet_of_size(n, self.allow_zero),
                None => rng.alphabet(size, self.allow_zero),
            })
            .collect()
    }

    fn pair_inputs(&self, rng: &mut SplitMix64) -> Vec<(VariableSet, VariableSet)> {
        if let Some(x) = &self.vars {
            let y = self.yvars.clone().unwrap_or_else(|| x.clone());
            return vec![(x.clone(), y)];
        }
        let size = self.max_size.unwrap_or(DEFAULT_PAIR_SIZE);
        let draw = |exact: Option<usize>, rng: &mut SplitMix64| match exact {
            Some(n) => rng.alphabet_of_size(n, self.allow_zero),
            None => rng.alphabet(size, self.allow_zero),
        };
        (0..self.cases.unwrap_or(DEFAULT_PAIR_CASES))
            .map(|_| {
                let x = draw(self.nx, rng);
                let y = draw(self.ny, rng);
                (x, y)
            })
            .collect()
    }

    fn family_for(&self, kind: FamilyKind) -> Result<Option<&Family>, Error> {
        match &self.family {
            Some(f) if f.kind() == kind => Ok(Some(f)),
            Some(f) => Err(Error::invalid(
                "family",
                format!("{} does not apply to this suite (expected {kind})", f.kind()),
            )),
            None => Ok(None),
        }
    }

    fn grid_inputs(&self, suite: Suite) -> Result<Vec<GridCase>, Error> {
        if let Some(kind) = suite.family_kind() {
            if let Some(f) = self.family_for(kind)? {
                return Ok(self.grid_for_family(suite, f));
            }
        }
        let k = |d: usize| self.k_max.unwrap_or(d);
        let n = |d: usize| self.n_max.unwrap_or(d);
        let mut out = Vec::new();
        match suite {
            Suite::OnesRow => {
                for n in 0..=n(8) {
                    out.push(GridCase::Ones { n, k_max: k(8) });
                }
            }
            Suite::QRow => {
                for n in 1..=n(6) {
                    out.push(GridCase::Q { n, k_max: k(6) });
                }
            }
            Suite::ArithProg => {
                for (r, m) in ARITH_PROG_POINTS {
                    for n in 0..=n(5) {
                        out.push(GridCase::ArithPowerSum {
                            r: rational(r),
                            m: rational(m),
                            n,
                            k_max: k(4),
                        });
                    }
                }
            }
            Suite::Whitney => {
                for n in 1..=n(5) {
                    out.push(GridCase::Whitney { n, k_max: k(4) });
                }
            }
            Suite::JacobiStirling => {
                for gamma in JACOBI_GAMMAS {
                    for n in 1..=n(5) {
                        out.push(GridCase::Jacobi {
                            n,
                            gamma: rational(gamma),
                            k_max: k(5),
                        });
                    }
                }
            }
            Suite::ZetaRow => {
                for s in 1..=3 {
                    for terms in 1..=n(8) {
                        out.push(GridCase::Zeta { s, terms, k_max: k(5) });
                    }
                }
            }
            Suite::PrimeRow => {
                for s in 1..=2 {
                    for limit in [2, 3, 10, 50] {
                        out.push(GridCase::Prime { s, limit, k_max: k(3) });
                    }
                }
            }
            Suite::FamilyGeneric => {
                let families: Vec<Family> = match &self.family {
                    Some(f) => vec![f.clone()],
                    None => default_generic_families(),
                };
                for family in families {
                    out.push(GridCase::Generic { family, n_max: n(4) });
                }
            }
            _ => unreachable!("not a grid suite"),
        }
        Ok(out)
    }

    fn grid_for_family(&self, suite: Suite, f: &Family) -> Vec<GridCase> {
        let k_max = self.k_max.unwrap_or(4);
        match (suite, f) {
            (Suite::OnesRow, Family::Ones { n }) => vec![GridCase::Ones { n: *n, k_max }],
            (Suite::QRow, Family::GeometricQ { n, .. }) => vec![GridCase::Q { n: *n, k_max }],
            (Suite::ArithProg, Family::ArithProg { r, m, n }) => vec![GridCase::ArithPowerSum {
                r: r.clone(),
                m: m.clone(),
                n: *n,
                k_max,
            }],
            (Suite::Whitney, Family::ArithProg { n, .. }) => vec![GridCase::Whitney { n: *n, k_max }],
            (Suite::JacobiStirling, Family::JacobiStirling { n, gamma }) => vec![GridCase::Jacobi {
                n: *n,
                gamma: gamma.clone(),
                k_max,
            }],
            (Suite::ZetaRow, Family::ZetaNodes { s, terms }) => vec![GridCase::Zeta {
                s: *s,
                terms: *terms,
                k_max,
            }],
            (Suite::PrimeRow, Family::PrimeNodes { s, limit }) => vec![GridCase::Prime {
                s: *s,
                limit: *limit,
                k_max,
            }],
            _ => unreachable!("kind checked by family_for"),
        }
    }

    /// Refuses inputs whose brute-force sides would enumerate more than
    /// [`ENUMERATION_BUDGET`] monomials.
    fn check_budget(&self, suite: Suite) -> Result<(), Error> {
        let fixed = self
            .vars
            .iter()
            .chain(self.yvars.iter())
            .map(VariableSet::len)
            .max();
        let family = self.family.as_ref().map(|f| family_alphabet(f).len());
        let (size, degree) = match suite.shape() {
            Shape::Single if suite == Suite::Series => (
                fixed.or(family).unwrap_or(self.max_size.or(self.nx).unwrap_or(DEFAULT_SERIES_SIZE)),
                self.truncation.unwrap_or(DEFAULT_TRUNCATION) + 1,
            ),
            Shape::Single => (
                fixed.or(family).unwrap_or(self.max_size.or(self.nx).unwrap_or(DEFAULT_SINGLE_SIZE)),
                self.n_max.unwrap_or(DEFAULT_SINGLE_N),
            ),
            Shape::Pair => (
                fixed.unwrap_or(
                    self.max_size
                        .unwrap_or(DEFAULT_PAIR_SIZE)
                        .max(self.nx.unwrap_or(0))
                        .max(self.ny.unwrap_or(0)),
                ),
                self.n_max.unwrap_or(DEFAULT_PAIR_N),
            ),
            Shape::Grid => match family {
                Some(len) => (len, self.k_max.unwrap_or(4).max(self.n_max.unwrap_or(4))),
                None => return Ok(()),
            },
        };
        if monomial_count(size, degree) > ENUMERATION_BUDGET {
            return Err(Error::invalid(
                "n",
                format!("degree {degree} over {size} values exceeds the enumeration budget"),
            ));
        }
        Ok(())
    }

    fn inputs(&self, suite: Suite) -> Result<Vec<CaseInput>, Error> {
        let mut rng = SplitMix64::new(self.seed);
        Ok(match suite.shape() {
            Shape::Single => {
                let (cases, size) = if suite == Suite::Series {
                    (DEFAULT_SERIES_CASES, DEFAULT_SERIES_SIZE)
                } else {
                    (DEFAULT_SINGLE_CASES, DEFAULT_SINGLE_SIZE)
                };
                self.single_inputs(&mut rng, cases, size)
                    .into_iter()
                    .map(CaseInput::Single)
                    .collect()
            }
            Shape::Pair => {
                if self.family.is_some() {
                    return Err(Error::invalid("family", "pair suites take --vars/--yvars or random pairs"));
                }
                self.pair_inputs(&mut rng)
                    .into_iter()
                    .map(|(x, y)| CaseInput::Pair(x, y))
                    .collect()
            }
            Shape::Grid => self.grid_inputs(suite)?.into_iter().map(CaseInput::Grid).collect(),
        })
    }

    fn bases(&self) -> Vec<PairBasis> {
        match self.basis {
            Some(b) => vec![b],
            None => PairBasis::ALL.to_vec(),
        }
    }
}

/// Families used when the generic suites run without an explicit family.
pub fn default_generic_families() -> Vec<Family> {
    vec![
        Family::Ones { n: 5 },
        Family::GeometricQ { n: 3, q: None },
        Family::GeometricQ {
            n: 4,
            q: Some(rational("2/3")),
        },
        Family::ArithProg {
            r: rational("1/2"),
            m: rational("3"),
            n: 3,
        },
        Family::JacobiStirling {
            n: 4,
            gamma: rational("7/3"),
        },
        Family::ZetaNodes { s: 2, terms: 5 },
        Family::PrimeNodes { s: 1, limit: 13 },
    ]
}

fn run_single(suite: Suite, x: &VariableSet, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>, Error> {
    let n_max = cfg.n_max.unwrap_or(DEFAULT_SINGLE_N);
    let mut out = Vec::new();
    match suite {
        Suite::NewtonE => out.extend((1..=n_max).map(|n| verify_newton_e(x, n))),
        Suite::NewtonH => out.extend((1..=n_max).map(|n| verify_newton_h(x, n))),
        Suite::Convolution => {
            for n in 1..=n_max {
                out.extend(verify_theorem1(x, n));
            }
        }
        Suite::Series => out = series_reports(x, cfg.truncation.unwrap_or(DEFAULT_TRUNCATION))?,
        _ => unreachable!("not a single-alphabet suite"),
    }
    Ok(out)
}

/// `H(t)E(-t) = 1`, `H'/H = P`, `t H'(t) E(-t) = Σ p_n t^n`, and every
/// generating-series coefficient against brute force.
pub fn series_reports(x: &VariableSet, order: usize) -> Result<Vec<VerificationReport>, Error> {
    let e = build_e(x, order);
    let h = build_h(x, order);
    let mut out = Vec::new();
    let unit = series_mul(&h, &e.negate_t())?;
    for k in 0..=order {
        let expect = if k == 0 { RingElem::one() } else { RingElem::zero() };
        out.push(VerificationReport::new("series_h_times_e_neg", order, unit.coeff(k).clone(), expect).with_k(k));
    }
    if order >= 1 {
        let logd = log_derivative(&h)?;
        let p = build_p(x, order - 1);
        for k in 0..order {
            out.push(
                VerificationReport::new("series_log_derivative", order, logd.coeff(k).clone(), p.coeff(k).clone())
                    .with_k(k),
            );
        }
    }
    let tp = series_mul(&apply_t_ddt(&h), &e.negate_t())?;
    for k in 0..=order {
        out.push(VerificationReport::new("series_t_dh_e_neg", order, tp.coeff(k).clone(), power_sum(x, k)).with_k(k));
    }
    let p_full = build_p(x, order);
    for k in 0..=order {
        out.push(
            VerificationReport::new("series_e_coefficient", order, e.coeff(k).clone(), elementary_bruteforce(x, k))
                .with_k(k),
        );
        out.push(
            VerificationReport::new("series_h_coefficient", order, h.coeff(k).clone(), complete_bruteforce(x, k))
                .with_k(k),
        );
        out.push(
            VerificationReport::new("series_p_coefficient", order, p_full.coeff(k).clone(), power_sum(x, k + 1))
                .with_k(k),
        );
    }
    Ok(out)
}

fn run_pair(suite: Suite, x: &VariableSet, y: &VariableSet, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>, Error> {
    let n_max = cfg.n_max.unwrap_or(DEFAULT_PAIR_N);
    let mut out = Vec::new();
    for basis in cfg.bases() {
        match suite {
            Suite::ProductExpansion => {
                for k in 0..=n_max {
                    out.push(verify_product_expansion(x, y, k, basis)?);
                }
            }
            Suite::SwapSymmetry => {
                for k in 0..=n_max {
                    out.push(verify_corollary_symmetry(x, y, k, basis)?);
                }
            }
            Suite::GeneralizedNewton => {
                for n in 1..=n_max {
                    out.push(verify_theorem4(x, y, n, basis)?);
                }
                for n in 1..=n_max {
                    out.extend(specialize_to_classical(x, n, basis)?);
                }
            }
            _ => unreachable!("not a pair suite"),
        }
    }
    Ok(out)
}

fn run_grid(case: &GridCase) -> Result<(Vec<VerificationReport>, Option<FamilySpec>), Error> {
    Ok(match case {
        GridCase::Ones { n, k_max } => (verify_ones_row(*n, *k_max), Some(Family::Ones { n: *n }.to_spec())),
        GridCase::Q { n, k_max } => (
            verify_q_row(*n, *k_max),
            Some(Family::GeometricQ { n: *n, q: None }.to_spec()),
        ),
        GridCase::ArithPowerSum { r, m, n, k_max } => {
            let mut out = Vec::new();
            if !m.is_zero() {
                for k in 1..=*k_max {
                    out.push(verify_arith_prog_power_sum(r, m, *n, k)?);
                }
            }
            out.extend(verify_r_whitney_row(r, m, *n, *k_max));
            let family = Family::ArithProg {
                r: r.clone(),
                m: m.clone(),
                n: *n,
            };
            (out, Some(family.to_spec()))
        }
        GridCase::Whitney { n, k_max } => {
            let out = (0..=*k_max)
                .flat_map(|k| verify_whitney_stirling_crosscheck(*n, k))
                .collect();
            let family = Family::ArithProg {
                r: Scalar::zero(),
                m: Scalar::one(),
                n: *n,
            };
            (out, Some(family.to_spec()))
        }
        GridCase::Jacobi { n, gamma, k_max } => {
            let family = Family::JacobiStirling {
                n: *n,
                gamma: gamma.clone(),
            };
            (verify_jacobi_stirling_row(*n, gamma, *k_max), Some(family.to_spec()))
        }
        GridCase::Zeta { s, terms, k_max } => {
            let family = Family::ZetaNodes { s: *s, terms: *terms };
            (verify_zeta_row(*s, *terms, *k_max), Some(family.to_spec()))
        }
        GridCase::Prime { s, limit, k_max } => {
            let mut out = Vec::new();
            for k in 0..=*k_max {
                out.extend(verify_prime_row(*s, *limit, k)?);
            }
            let family = Family::PrimeNodes { s: *s, limit: *limit };
            (out, Some(family.to_spec()))
        }
        GridCase::Generic { family, n_max } => {
            let mut out = verify_generic_on_family(family, *n_max)?;
            let x = family_alphabet(family);
            let y = VariableSet::from_ints(&[1, 2]);
            for basis in PairBasis::ALL {
                for n in 1..=(*n_max).min(4) {
                    out.push(verify_theorem4(&x, &y, n, basis)?.with_family(family.to_spec()));
                }
            }
            (out, Some(family.to_spec()))
        }
    })
}

/// Runs one suite.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteSummary, Error> {
    cfg.validate()?;
    cfg.check_budget(suite)?;
    let inputs = cfg.inputs(suite)?;
    let outcomes: Vec<Result<CaseOutcome, Error>> = inputs
        .par_iter()
        .enumerate()
        .map(|(case, input)| {
            let (reports, x, y, family) = match input {
                CaseInput::Single(x) => (run_single(suite, x, cfg)?, Some(x.clone()), None, None),
                CaseInput::Pair(x, y) => (run_pair(suite, x, y, cfg)?, Some(x.clone()), Some(y.clone()), None),
                CaseInput::Grid(g) => {
                    let (r, f) = run_grid(g)?;
                    (r, None, None, f)
                }
            };
            let checks = reports.len();
            let failed = reports.iter().filter(|r| !r.equal).count();
            let reports = if cfg.keep_all {
                reports
            } else {
                reports.into_iter().filter(|r| !r.equal).collect()
            };
            Ok(CaseOutcome {
                case,
                x,
                y,
                family,
                checks,
                failed,
                reports,
            })
        })
        .collect();
    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>, _>>()?;
    let checks = outcomes.iter().map(|o| o.checks).sum();
    let failed_checks = outcomes.iter().map(|o| o.failed).sum();
    let cases = outcomes.len();
    let outcomes = if cfg.keep_all {
        outcomes
    } else {
        outcomes.into_iter().filter(|o| o.failed > 0).collect()
    };
    Ok(SuiteSummary {
        suite,
        seed: cfg.seed,
        cases,
        checks,
        failed_checks,
        passed: failed_checks == 0,
        outcomes,
    })
}

/// Runs several suites in order.
pub fn run_suites(suites: &[Suite], cfg: &SuiteConfig) -> Result<RunSummary, Error> {
    let suites = suites
        .iter()
        .map(|&s| run_suite(s, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RunSummary {
        seed: cfg.seed,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}
