//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use girard::families::{binomial, stirling_second, verify_prime_row, verify_zeta_row, FamilyKind};
use girard::suite::{run_suite, run_suites, Suite, SuiteConfig, SuiteSummary, JACOBI_GAMMAS};
use girard::twovar::{verify_theorem4, PairBasis};
use girard::{FamilySpec, RingElem, Scalar, VariableSet};

const SEED: u64 = 42;

fn cfg() -> SuiteConfig {
    SuiteConfig {
        seed: SEED,
        ..SuiteConfig::default()
    }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn suites_pass(runs: &[SuiteSummary], expected_cases: Option<usize>) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for r in runs {
        ok &= r.passed;
        if let Some(c) = expected_cases {
            ok &= r.cases == c;
        }
        parts.push(format!(
            "{}: {} cases, {}/{} checks",
            r.suite,
            r.cases,
            r.checks - r.failed_checks,
            r.checks
        ));
    }
    Outcome {
        ok,
        detail: parts.join("; "),
    }
}

fn run(cfg: &SuiteConfig, suites: &[Suite]) -> Vec<SuiteSummary> {
    suites
        .iter()
        .map(|&s| run_suite(s, cfg).unwrap_or_else(|e| panic!("{s}: {e}")))
        .collect()
}

fn newton() -> Outcome {
    suites_pass(&run(&cfg(), &[Suite::NewtonE, Suite::NewtonH]), Some(200))
}

fn convolution() -> Outcome {
    suites_pass(&run(&cfg(), &[Suite::Convolution]), Some(200))
}

fn product_expansion() -> Outcome {
    suites_pass(&run(&cfg(), &[Suite::ProductExpansion]), Some(100))
}

fn swap_symmetry() -> Outcome {
    suites_pass(&run(&cfg(), &[Suite::SwapSymmetry]), Some(100))
}

fn generalized_newton() -> Outcome {
    let mut out = suites_pass(&run(&cfg(), &[Suite::GeneralizedNewton]), Some(100));
    // one variable on each side: both sides n·(ab)^n
    let (x, y) = (VariableSet::from_ints(&[2]), VariableSet::from_ints(&[3]));
    for basis in PairBasis::ALL {
        for n in 1..=6 {
            let r = verify_theorem4(&x, &y, n, basis).unwrap();
            let expect = RingElem::int(n as i64 * 6i64.pow(n as u32));
            out.ok &= r.equal && (basis == PairBasis::EM && n > 1 || r.lhs == expect);
        }
    }
    let single = SuiteConfig {
        nx: Some(1),
        ny: Some(1),
        ..cfg()
    };
    let r = run_suite(Suite::GeneralizedNewton, &single).unwrap();
    out.ok &= r.passed;
    out.detail.push_str(&format!("; one-variable pairs: {}/{} checks", r.checks - r.failed_checks, r.checks));
    out
}

fn table_reproduction() -> Outcome {
    let runs = run(
        &cfg(),
        &[
            Suite::OnesRow,
            Suite::QRow,
            Suite::ArithProg,
            Suite::Whitney,
            Suite::JacobiStirling,
            Suite::ZetaRow,
            Suite::PrimeRow,
        ],
    );
    let mut out = suites_pass(&runs, None);
    // grid sizes
    let cases: Vec<usize> = runs.iter().map(|r| r.cases).collect();
    out.ok &= cases == vec![9, 6, 30, 5, 40, 24, 8];
    // γ samples exceed the degree in γ of every checked value (at most 5)
    out.ok &= JACOBI_GAMMAS.len() >= 6;
    // frozen spot values
    out.ok &= binomial(5, 2) == Scalar::from_int(10) && stirling_second(4, 2) == Scalar::from_int(7);
    let prime = verify_prime_row(1, 10, 2).unwrap();
    out.ok &= prime[0].lhs == "101/210".parse().unwrap();
    // squares of 1/4 and 1/9
    let prime = verify_prime_row(2, 3, 2).unwrap();
    out.ok &= prime[2].lhs == "97/1296".parse().unwrap();
    let zeta = verify_zeta_row(2, 3, 1);
    out.ok &= zeta.iter().any(|r| r.identity == "zeta_row_e" && r.lhs == "49/36".parse().unwrap());
    let ap = FamilySpec::from_kv(FamilyKind::ArithProg, "r=1,m=3,n=2").unwrap();
    out.ok &= girard::build_family(&ap).unwrap() == VariableSet::from_ints(&[1, 4, 7]);
    out
}

fn series() -> Outcome {
    let runs = run(&cfg(), &[Suite::Series]);
    let mut out = suites_pass(&runs, Some(50));
    // 13 unit coefficients, 12 log-derivative, 13 t·H'·E(-t), 39 coefficient checks
    out.ok &= runs[0].checks == 50 * (13 + 12 + 13 + 39);
    out
}

fn determinism() -> Outcome {
    let all_cfg = SuiteConfig {
        keep_all: true,
        ..cfg()
    };
    let a = serde_json::to_vec(&run_suites(&Suite::ALL, &all_cfg).unwrap()).unwrap();
    let single_thread = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let b = single_thread.install(|| serde_json::to_vec(&run_suites(&Suite::ALL, &all_cfg).unwrap()).unwrap());
    Outcome {
        ok: a == b && !a.is_empty(),
        detail: format!("{} bytes, identical across thread counts: {}", a.len(), a == b),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("1 newton-girard recurrences", Duration::from_secs(10), newton),
        ("2 power-sum convolutions", Duration::from_secs(10), convolution),
        ("3 two-alphabet product expansion", Duration::from_secs(30), product_expansion),
        ("4 two-alphabet swap symmetry", Duration::from_secs(30), swap_symmetry),
        ("5 generalized newton recurrences", Duration::from_secs(30), generalized_newton),
        ("6 family table reproduction", Duration::from_secs(60), table_reproduction),
        ("7 generating series engine", Duration::from_secs(30), series),
        ("8 determinism", Duration::from_secs(120), determinism),
    ];
    let total = Instant::now();
    let mut all_ok = true;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= limit;
        all_ok &= ok;
        println!(
            "{} criterion {name} ({:.2}s, limit {}s): {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs(),
            out.detail
        );
    }
    let elapsed = total.elapsed();
    let ok = elapsed <= Duration::from_secs(180);
    all_ok &= ok;
    println!(
        "{} full acceptance run ({:.2}s, limit 180s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
