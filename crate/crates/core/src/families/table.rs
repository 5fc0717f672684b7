use serde::Serialize;

use crate::error::Error;
use crate::report::VerificationReport;
use crate::ring::{RingElem, Scalar};
use crate::symfun::{basis_table, complete_bruteforce, elementary_bruteforce, power_sum};

use super::bernoulli::{arith_prog_closed, bernoulli_polynomials};
use super::primes::prime_row_oracle;
use super::stirling::{jacobi_closed, r_whitney_closed};
use super::zeta::{nested_sums, truncated_zeta};
use super::{family_alphabet, qseries, Family, FamilySpec};

/// `C(n, k)` from Pascal's rule.
pub fn binomial(n: usize, k: usize) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let mut row = vec![Scalar::one()];
    for _ in 0..n {
        let mut next = vec![Scalar::one(); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row[k].clone()
}

/// Closed-form or oracle values of `e_k`, `h_k`, `p_k` for `k ≤ K`. An entry
/// is `None` where the family has no independent formula.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForms {
    pub e: Vec<Option<RingElem>>,
    pub h: Vec<Option<RingElem>>,
    pub p: Vec<Option<RingElem>>,
}

fn all_some(v: Vec<Scalar>) -> Vec<Option<RingElem>> {
    v.into_iter().map(|s| Some(RingElem::Scalar(s))).collect()
}

pub fn closed_forms(family: &Family, k_max: usize) -> ClosedForms {
    let ks = 0..=k_max;
    match family {
        Family::Ones { n } => ClosedForms {
            e: all_some(ks.clone().map(|k| binomial(*n, k)).collect()),
            h: all_some(
                ks.clone()
                    .map(|k| match (n, k) {
                        (_, 0) => Scalar::one(),
                        (0, _) => Scalar::zero(),
                        _ => binomial(n + k - 1, k),
                    })
                    .collect(),
            ),
            p: all_some(
                ks.map(|k| if k == 0 { Scalar::zero() } else { Scalar::from(*n) })
                    .collect(),
            ),
        },
        Family::GeometricQ { n, q } => {
            let lift = |p: crate::ring::UniPoly| match q {
                None => Some(RingElem::Poly(p)),
                Some(v) => Some(RingElem::Scalar(p.eval(v))),
            };
            ClosedForms {
                e: ks.clone().map(|k| lift(qseries::closed_e(*n, k))).collect(),
                h: ks.clone().map(|k| lift(qseries::closed_h(*n, k))).collect(),
                p: ks.map(|k| lift(qseries::closed_p(*n, k))).collect(),
            }
        }
        Family::ArithProg { r, m, n } => {
            let (e, h) = r_whitney_closed(r, m, *n, k_max);
            let p = if m.is_zero() {
                vec![None; k_max + 1]
            } else {
                let cache = bernoulli_polynomials(k_max + 1);
                ks.map(|k| {
                    Some(RingElem::Scalar(if k == 0 {
                        Scalar::zero()
                    } else {
                        arith_prog_closed(r, m, *n, k, &cache)
                    }))
                })
                .collect()
            };
            ClosedForms {
                e: all_some(e),
                h: all_some(h),
                p,
            }
        }
        Family::JacobiStirling { n, gamma } => {
            let (e, h) = jacobi_closed(*n, gamma, k_max);
            ClosedForms {
                e: all_some(e),
                h: all_some(h),
                p: vec![None; k_max + 1],
            }
        }
        Family::ZetaNodes { s, terms } => ClosedForms {
            e: all_some(nested_sums(*s, *terms, k_max, true)),
            h: all_some(nested_sums(*s, *terms, k_max, false)),
            p: all_some(ks.map(|k| truncated_zeta(*s, *terms, k)).collect()),
        },
        Family::PrimeNodes { s, limit } => {
            let mut out = ClosedForms {
                e: Vec::new(),
                h: Vec::new(),
                p: Vec::new(),
            };
            for k in ks {
                match prime_row_oracle(*s, *limit, k) {
                    Ok((sf, all, pz)) => {
                        out.e.push(Some(sf.into()));
                        out.h.push(Some(all.into()));
                        out.p.push(Some(pz.into()));
                    }
                    Err(_) => {
                        out.e.push(None);
                        out.h.push(None);
                        out.p.push(None);
                    }
                }
            }
            out
        }
    }
}

/// One line of a family table: computed values next to their closed forms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub family: FamilySpec,
    pub k: usize,
    pub e: RingElem,
    pub h: RingElem,
    pub p: RingElem,
    pub e_closed: Option<RingElem>,
    pub h_closed: Option<RingElem>,
    pub p_closed: Option<RingElem>,
    /// Every available closed form agrees with the computed value.
    pub matches: bool,
}

/// Rows `k = 0..=K` for one family. Values come from the Newton-Girard
/// recurrences; closed forms from [`closed_forms`].
pub fn table_rows(family: &Family, k_max: usize) -> Vec<TableRow> {
    let x = family_alphabet(family);
    let t = basis_table(&x, k_max);
    let c = closed_forms(family, k_max);
    let spec = family.to_spec();
    (0..=k_max)
        .map(|k| {
            let agree = |v: &RingElem, closed: &Option<RingElem>| closed.as_ref().is_none_or(|c| c == v);
            let matches = agree(&t.e[k], &c.e[k]) && agree(&t.h[k], &c.h[k]) && agree(&t.p[k], &c.p[k]);
            TableRow {
                family: spec.clone(),
                k,
                e: t.e[k].clone(),
                h: t.h[k].clone(),
                p: t.p[k].clone(),
                e_closed: c.e[k].clone(),
                h_closed: c.h[k].clone(),
                p_closed: c.p[k].clone(),
                matches,
            }
        })
        .collect()
}

/// All-ones row against Pascal-rule binomials, brute-force values.
pub fn verify_ones_row(n: usize, k_max: usize) -> Vec<VerificationReport> {
    let family = Family::Ones { n };
    let x = family_alphabet(&family);
    let c = closed_forms(&family, k_max);
    let spec = family.to_spec();
    let mut out = Vec::new();
    for k in 0..=k_max {
        let cases = [
            ("ones_row_e", elementary_bruteforce(&x, k), &c.e[k]),
            ("ones_row_h", complete_bruteforce(&x, k), &c.h[k]),
            ("ones_row_p", power_sum(&x, k), &c.p[k]),
        ];
        for (id, value, closed) in cases {
            let closed = closed.clone().expect("ones row is fully closed-form");
            out.push(
                VerificationReport::new(id, n, value, closed)
                    .with_k(k)
                    .with_family(spec.clone()),
            );
        }
    }
    out
}

/// Runs the generic identity suites (both Newton-Girard recurrences and
/// both power-sum convolutions) on a family alphabet for `1 ≤ n ≤ n_max`.
pub fn verify_generic_on_family(family: &Family, n_max: usize) -> Result<Vec<VerificationReport>, Error> {
    let x = family_alphabet(family);
    let spec = family.to_spec();
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(crate::symfun::verify_newton_e(&x, n).with_family(spec.clone()));
        out.push(crate::symfun::verify_newton_h(&x, n).with_family(spec.clone()));
        for r in crate::symfun::verify_theorem1(&x, n) {
            out.push(r.with_family(spec.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyKind;

    #[test]
    fn pascal_values() {
        assert_eq!(binomial(5, 2), Scalar::from_int(10));
        assert_eq!(binomial(0, 0), Scalar::one());
        assert!(binomial(3, 4).is_zero());
    }

    #[test]
    fn ones_row_matches_binomials() {
        for n in 0..=6 {
            assert!(verify_ones_row(n, 6).iter().all(|r| r.equal), "n={n}");
        }
        let r = verify_ones_row(5, 3);
        let e: Vec<_> = r.iter().filter(|r| r.identity == "ones_row_e").map(|r| r.lhs.clone()).collect();
        assert_eq!(e, vec![RingElem::int(1), RingElem::int(5), RingElem::int(10), RingElem::int(10)]);
    }

    #[test]
    fn printed_h_variant_is_off_by_two() {
        // brute force on three ones: h_2 = 6 = C(3+2-1, 2), not C(3+2+1, 2) = 15
        let r = verify_ones_row(3, 2);
        let h2 = r.iter().find(|r| r.identity == "ones_row_h" && r.k == Some(2)).unwrap();
        assert_eq!(h2.lhs, RingElem::int(6));
        assert_ne!(h2.lhs, RingElem::Scalar(binomial(6, 2)));
    }

    #[test]
    fn every_family_table_agrees() {
        let specs = [
            "ONES:n=4",
            "GEOMETRIC_Q:n=3",
            "GEOMETRIC_Q:n=3,q=2/5",
            "ARITH_PROG:r=1/2,m=3,n=3",
            "ARITH_PROG:r=0,m=0,n=2",
            "JACOBI_STIRLING:n=3,gamma=7/3",
            "ZETA_NODES:s=2,N=4",
            "PRIME_NODES:s=1,limit=20",
        ];
        for text in specs {
            let (kind, kv) = text.split_once(':').unwrap();
            let fam = FamilySpec::from_kv(kind.parse::<FamilyKind>().unwrap(), kv)
                .unwrap()
                .validate()
                .unwrap();
            let rows = table_rows(&fam, 4);
            assert!(rows.iter().all(|r| r.matches), "{text}");
            assert!(verify_generic_on_family(&fam, 4).unwrap().iter().all(|r| r.equal), "{text}");
        }
    }

    #[test]
    fn prime_table_pair_sum() {
        let fam = Family::PrimeNodes { s: 1, limit: 10 };
        let rows = table_rows(&fam, 2);
        assert_eq!(rows[2].e, "101/210".parse().unwrap());
        assert_eq!(rows[2].e_closed, Some("101/210".parse().unwrap()));
    }

    #[test]
    fn single_zeta_node() {
        let fam = Family::ZetaNodes { s: 3, terms: 1 };
        for row in table_rows(&fam, 4) {
            assert!(row.e_closed.is_some());
            assert!(row.h.is_one());
        }
    }
}
