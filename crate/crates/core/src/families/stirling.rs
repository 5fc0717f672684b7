//! Stirling, r-Whitney and Jacobi-Stirling triangles from their recurrences,
//! and the checks that tie them to e_k/h_k on the matching alphabets.
//!
//! Index conventions (fixed against the alphabets, small cases first):
//!
//! * `h_k(r, r+m, ..., r+nm) = W_{m,r}(n+k, n)` with
//!   `W(a,b) = W(a-1,b-1) + (r+bm) W(a-1,b)`, `W(0,0) = 1`.
//! * `e_k(r, r+m, ..., r+nm) = (-1)^k w_{m,r}(n+1, n+1-k)` with
//!   `w(a,b) = w(a-1,b-1) - (r+(a-1)m) w(a-1,b)`, `w(0,0) = 1`.
//! * With nodes `θ_i = i(i-1+2γ)`:
//!   `h_k(θ_1..θ_n) = JS(n+k, n)` with `JS(a,b) = JS(a-1,b-1) + θ_b JS(a-1,b)`,
//!   and `e_k(θ_1..θ_n) = js(n+1, n+1-k)` with
//!   `js(a,b) = js(a-1,b-1) + θ_{a-1} js(a-1,b)`, both starting at 1 in cell (0,0).

use crate::report::VerificationReport;
use crate::ring::{RingElem, Scalar};
use crate::symfun::{complete_bruteforce, elementary_bruteforce, VariableSet};

use super::{family_alphabet, Family};

/// Fills a triangle `T[0..=rows][0..=rows]` from
/// `T(a,b) = T(a-1,b-1) + weight(a,b) T(a-1,b)`, `T(0,0) = 1`.
fn triangle(rows: usize, weight: impl Fn(usize, usize) -> Scalar) -> Vec<Vec<Scalar>> {
    let mut t = vec![vec![Scalar::zero(); rows + 1]; rows + 1];
    t[0][0] = Scalar::one();
    for a in 1..=rows {
        for b in 0..=a {
            let diag = if b > 0 { t[a - 1][b - 1].clone() } else { Scalar::zero() };
            let above = &weight(a, b) * &t[a - 1][b];
            t[a][b] = diag + above;
        }
    }
    t
}

fn cell(t: &[Vec<Scalar>], a: usize, b: usize) -> Scalar {
    t.get(a).and_then(|row| row.get(b)).cloned().unwrap_or_else(Scalar::zero)
}

/// Stirling numbers of the second kind `S(a, b)`.
pub fn stirling_second(a: usize, b: usize) -> Scalar {
    cell(&triangle(a, |_, b| Scalar::from(b)), a, b)
}

/// Signed Stirling numbers of the first kind `s(a, b)`.
pub fn stirling_first(a: usize, b: usize) -> Scalar {
    cell(&triangle(a, |a, _| -Scalar::from(a - 1)), a, b)
}

/// r-Whitney numbers of the second kind `W_{m,r}(a, b)`.
pub fn whitney_second(m: &Scalar, r: &Scalar, a: usize, b: usize) -> Scalar {
    cell(&triangle(a, |_, b| r + &(m * &Scalar::from(b))), a, b)
}

/// Signed r-Whitney numbers of the first kind `w_{m,r}(a, b)`.
pub fn whitney_first(m: &Scalar, r: &Scalar, a: usize, b: usize) -> Scalar {
    cell(&triangle(a, |a, _| -(r + &(m * &Scalar::from(a - 1)))), a, b)
}

pub(super) fn jacobi_node(i: usize, gamma: &Scalar) -> Scalar {
    let i_s = Scalar::from(i);
    let shift = &(&i_s - &Scalar::one()) + &(gamma * &Scalar::from_int(2));
    &i_s * &shift
}

/// Jacobi-Stirling numbers of the second kind at parameter `γ`.
pub fn jacobi_stirling_second(gamma: &Scalar, a: usize, b: usize) -> Scalar {
    cell(&triangle(a, |_, b| jacobi_node(b, gamma)), a, b)
}

/// Jacobi-Stirling numbers of the first kind (unsigned) at parameter `γ`.
pub fn jacobi_stirling_first(gamma: &Scalar, a: usize, b: usize) -> Scalar {
    cell(&triangle(a, |a, _| jacobi_node(a - 1, gamma)), a, b)
}

/// `e_k` on an `(n+1)`-point alphabet against first-kind cell
/// `(n+1, n+1-k)`, zero when `k > n+1`.
fn first_kind_cell(t: &[Vec<Scalar>], n: usize, k: usize) -> Scalar {
    if k > n + 1 {
        Scalar::zero()
    } else {
        cell(t, n + 1, n + 1 - k)
    }
}

/// At `(m, r) = (1, 0)` the progression is `0, 1, ..., n`; compares
/// `h_k` with `S(n+k, n)` and `e_k` with `(-1)^k s(n+1, n+1-k)`, using the
/// plain Stirling recurrences.
pub fn verify_whitney_stirling_crosscheck(n: usize, k: usize) -> [VerificationReport; 2] {
    let family = Family::ArithProg {
        r: Scalar::zero(),
        m: Scalar::one(),
        n,
    };
    let x = family_alphabet(&family);
    let second = stirling_second(n + k, n);
    let first = if k > n + 1 {
        Scalar::zero()
    } else {
        &Scalar::sign(k) * &stirling_first(n + 1, n + 1 - k)
    };
    let spec = family.to_spec();
    [
        VerificationReport::new("whitney_stirling_h", n, complete_bruteforce(&x, k), second.into())
            .with_k(k)
            .with_family(spec.clone()),
        VerificationReport::new("whitney_stirling_e", n, elementary_bruteforce(&x, k), first.into())
            .with_k(k)
            .with_family(spec),
    ]
}

/// Both r-Whitney rows for `k ≤ K` on `r, r+m, ..., r+nm`.
pub fn verify_r_whitney_row(r: &Scalar, m: &Scalar, n: usize, k_max: usize) -> Vec<VerificationReport> {
    let family = Family::ArithProg {
        r: r.clone(),
        m: m.clone(),
        n,
    };
    let x = family_alphabet(&family);
    let (e_oracle, h_oracle) = r_whitney_closed(r, m, n, k_max);
    row_reports("r_whitney", &x, n, &e_oracle, &h_oracle, &family)
}

pub(super) fn r_whitney_closed(
    r: &Scalar,
    m: &Scalar,
    n: usize,
    k_max: usize,
) -> (Vec<Scalar>, Vec<Scalar>) {
    let rows = (n + k_max).max(n + 1);
    let first = triangle(rows, |a, _| -(r + &(m * &Scalar::from(a - 1))));
    let second = triangle(rows, |_, b| r + &(m * &Scalar::from(b)));
    let e = (0..=k_max)
        .map(|k| &Scalar::sign(k) * &first_kind_cell(&first, n, k))
        .collect();
    let h = (0..=k_max).map(|k| cell(&second, n + k, n)).collect();
    (e, h)
}

/// `e_k`, `h_k` on the nodes `i(i-1+2γ)`, `i = 1..n`, against the
/// Jacobi-Stirling recurrences, for `k ≤ K`.
pub fn verify_jacobi_stirling_row(n: usize, gamma: &Scalar, k_max: usize) -> Vec<VerificationReport> {
    let family = Family::JacobiStirling {
        n,
        gamma: gamma.clone(),
    };
    let x = family_alphabet(&family);
    let (e_oracle, h_oracle) = jacobi_closed(n, gamma, k_max);
    row_reports("jacobi_stirling", &x, n, &e_oracle, &h_oracle, &family)
}

pub(super) fn jacobi_closed(n: usize, gamma: &Scalar, k_max: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let rows = (n + k_max).max(n + 1);
    let first = triangle(rows, |a, _| jacobi_node(a - 1, gamma));
    let second = triangle(rows, |_, b| jacobi_node(b, gamma));
    // n nodes: e_k = js(n+1, n+1-k), which is zero past k = n
    let e = (0..=k_max).map(|k| first_kind_cell(&first, n, k)).collect();
    let h = (0..=k_max).map(|k| cell(&second, n + k, n)).collect();
    (e, h)
}

fn row_reports(
    tag: &str,
    x: &VariableSet,
    n: usize,
    e_oracle: &[Scalar],
    h_oracle: &[Scalar],
    family: &Family,
) -> Vec<VerificationReport> {
    let spec = family.to_spec();
    let mut out = Vec::new();
    for (k, want) in e_oracle.iter().enumerate() {
        out.push(
            VerificationReport::new(
                format!("{tag}_e"),
                n,
                elementary_bruteforce(x, k),
                RingElem::Scalar(want.clone()),
            )
            .with_k(k)
            .with_family(spec.clone()),
        );
    }
    for (k, want) in h_oracle.iter().enumerate() {
        out.push(
            VerificationReport::new(
                format!("{tag}_h"),
                n,
                complete_bruteforce(x, k),
                RingElem::Scalar(want.clone()),
            )
            .with_k(k)
            .with_family(spec.clone()),
        );
    }
    out
}
