use std::process::{Command, Output};

use serde_json::Value;

fn girard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = girard(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn ok_csv(args: &[&str]) -> Vec<Vec<String>> {
    let out = girard(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    r.records()
        .map(|rec| rec.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn column(rows: &Value, key: &str) -> Vec<String> {
    rows.as_array()
        .unwrap()
        .iter()
        .map(|r| r[key].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn bases_on_ones() {
    let v = ok_json(&["bases", "--family", "ONES", "--params", "n=5", "--k-max", "3"]);
    assert_eq!(column(&v["rows"], "e"), ["1", "5", "10", "10"]);
    assert_eq!(column(&v["rows"], "h"), ["1", "5", "15", "35"]);
    assert_eq!(column(&v["rows"], "p"), ["0", "5", "5", "5"]);
}

#[test]
fn bases_on_empty_alphabet() {
    let v = ok_json(&["bases", "--vars", "", "--k-max", "2"]);
    assert_eq!(column(&v["rows"], "e"), ["1", "0", "0"]);
    assert_eq!(column(&v["rows"], "h"), ["1", "0", "0"]);
    assert_eq!(column(&v["rows"], "p"), ["0", "0", "0"]);
}

#[test]
fn bases_on_symbolic_geometric_row() {
    let rows = ok_csv(&["bases", "--family", "GEOMETRIC_Q", "--params", "n=2", "--k-max", "2", "--format", "csv"]);
    assert_eq!(rows[2], ["2", "q", "1 + q + q^2", "1 + q^2"]);
    let v = ok_json(&["bases", "--family", "GEOMETRIC_Q", "--params", "n=2", "--k-max", "2"]);
    // polynomials serialize as coefficient arrays
    assert_eq!(v["rows"][2]["e"], serde_json::json!(["0", "1"]));
}

#[test]
fn bases_with_negative_values() {
    let v = ok_json(&["bases", "--vars", "-1/2,3", "--k-max", "2"]);
    assert_eq!(column(&v["rows"], "e"), ["1", "5/2", "-3/2"]);
}

#[test]
fn verify_random_newton_suite() {
    let out = girard(&["verify", "newton-e", "--cases", "200", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let s = &v["suites"][0];
    assert_eq!(s["cases"], 200);
    assert_eq!(s["failed_checks"], 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("2000/2000"));
}

#[test]
fn verify_single_variable_pairs() {
    let v = ok_json(&["verify", "generalized-newton", "--nx", "1", "--ny", "1", "--cases", "20"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_fixed_pair_dumps_operands() {
    let v = ok_json(&[
        "verify", "generalized-newton", "--vars", "1,2", "--yvars", "1,3", "--n", "3", "--all-reports",
    ]);
    let case = &v["suites"][0]["outcomes"][0];
    assert_eq!(case["x"], serde_json::json!(["1", "2"]));
    assert_eq!(case["y"], serde_json::json!(["1", "3"]));
    assert!(case["reports"].as_array().unwrap().iter().all(|r| r["equal"] == true));
}

#[test]
fn verify_q_row_on_family() {
    let v = ok_json(&["verify", "q-row", "--family", "GEOMETRIC_Q", "--params", "n=4", "--k-max", "4"]);
    assert_eq!(v["suites"][0]["checks"], 14);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_zero_allowed_subsuite() {
    let v = ok_json(&["verify", "newton-h,convolution,series", "--allow-zero", "--cases", "30", "--seed", "5"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 3);
}

#[test]
fn table_on_ones_is_pascal() {
    let rows = ok_csv(&["table", "--family", "ONES", "--n", "1..5", "--k-max", "5", "--format", "csv"]);
    assert_eq!(rows.len(), 5 * 6);
    let mut pascal = vec![vec![1u64]];
    for n in 1..=5 {
        let prev = &pascal[n - 1];
        let row: Vec<u64> = (0..=n)
            .map(|k| if k == 0 || k == n { 1 } else { prev[k - 1] + prev[k] })
            .collect();
        pascal.push(row);
    }
    for r in &rows {
        let n: usize = r[1].strip_prefix("n=").unwrap().parse().unwrap();
        let k: usize = r[2].parse().unwrap();
        let expect = if k <= n { pascal[n][k] } else { 0 };
        assert_eq!(r[3], expect.to_string(), "n={n} k={k}");
        assert_eq!(r[9], "true");
    }
}

#[test]
fn table_prime_pairs() {
    let rows = ok_csv(&[
        "table", "--family", "PRIME_NODES", "--params", "s=1,limit=10", "--k-max", "2", "--format", "csv",
    ]);
    assert_eq!(rows[2][3], "101/210");
    assert_eq!(rows[2][6], "101/210");
}

#[test]
fn table_single_zeta_node() {
    let rows = ok_csv(&["table", "--family", "ZETA_NODES", "--params", "s=2,N=1", "--k-max", "3", "--format", "csv"]);
    let h: Vec<&str> = rows.iter().map(|r| r[4].as_str()).collect();
    assert_eq!(h, ["1", "1", "1", "1"]);
    let e: Vec<&str> = rows.iter().map(|r| r[3].as_str()).collect();
    assert_eq!(e, ["1", "1", "0", "0"]);
}

#[test]
fn table_from_json_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    std::fs::write(&path, r#"{"kind":"JACOBI_STIRLING","params":{"n":3,"gamma":"1/2"}}"#).unwrap();
    let arg = format!("@{}", path.display());
    let v = ok_json(&["table", "--spec", &arg, "--k-max", "2"]);
    assert_eq!(v[2]["e"], "49");
    assert_eq!(v[2]["e_closed"], "49");
}

#[test]
fn series_dumps() {
    let rows = ok_csv(&["series", "--vars", "1", "--which", "h", "--truncation", "3", "--format", "csv"]);
    assert_eq!(rows.iter().map(|r| r[2].as_str()).collect::<Vec<_>>(), ["1", "1", "1", "1"]);
    let v = ok_json(&["series", "--vars", "2", "--which", "pair", "--yvars", "3", "--truncation", "3"]);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "6", "36", "216"]));
    let v = ok_json(&[
        "series", "--vars", "2", "--which", "pair", "--yvars", "3", "--basis", "E_M", "--truncation", "2",
    ]);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "6", "0"]));
}

#[test]
fn config_errors_exit_two() {
    let bad: &[&[&str]] = &[
        &["bases", "--vars", "1/0"],
        &["bases", "--family", "ONES", "--params", "n=5,q=2"],
        &["bases"],
        &["bases", "--vars", "1", "--family", "ONES"],
        &["verify", "nope"],
        &["verify", "newton-e", "--n", "1000"],
        &["verify", "newton-h", "--vars", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1", "--n", "30"],
        &["verify", "swap-symmetry", "--family", "ONES", "--params", "n=2"],
        &["table", "--vars", "1,2"],
        &["table", "--family", "ONES", "--n", "5..1"],
        &["table", "--spec", "{\"kind\":\"ONES\"}"],
        &["series", "--vars", "1", "--which", "pair"],
        &["series", "--vars", "1", "--truncation", "100000"],
        &["bases", "--vars", "1", "--format", "xml"],
    ];
    for args in bad {
        let out = girard(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn same_seed_same_bytes() {
    let args = ["verify", "all", "--seed", "7", "--cases", "15", "--all-reports"];
    let a = girard(&args);
    let b = girard(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = girard(&["verify", "all", "--seed", "8", "--cases", "15", "--all-reports"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn out_flag_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let args = ["table", "--family", "ARITH_PROG", "--params", "r=1/2,m=3", "--n", "0..3", "--format", "csv"];
    let stdout = girard(&args).stdout;
    let mut with_out: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--out", p]);
    let out = girard(&with_out);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn csv_and_json_carry_the_same_values() {
    let common = ["verify", "swap-symmetry,series", "--cases", "5", "--seed", "3", "--all-reports", "--n", "3"];
    let json: Value = serde_json::from_slice(&girard(&common).stdout).unwrap();
    let mut csv_args = common.to_vec();
    csv_args.extend(["--format", "csv"]);
    let rows = ok_csv(&csv_args);
    let mut from_json = Vec::new();
    for s in json["suites"].as_array().unwrap() {
        for o in s["outcomes"].as_array().unwrap() {
            for r in o["reports"].as_array().unwrap() {
                let lhs: girard::RingElem = serde_json::from_value(r["lhs"].clone()).unwrap();
                let rhs: girard::RingElem = serde_json::from_value(r["rhs"].clone()).unwrap();
                from_json.push((
                    r["identity"].as_str().unwrap().to_string(),
                    lhs.to_string(),
                    rhs.to_string(),
                ));
            }
        }
    }
    let from_csv: Vec<_> = rows
        .iter()
        .map(|r| (r[2].clone(), r[10].clone(), r[11].clone()))
        .collect();
    assert!(!from_csv.is_empty());
    assert_eq!(from_json, from_csv);

    let table = ["table", "--family", "GEOMETRIC_Q", "--n", "1..3", "--k-max", "3"];
    let json: Value = serde_json::from_slice(&girard(&table).stdout).unwrap();
    let mut csv_args = table.to_vec();
    csv_args.extend(["--format", "csv"]);
    let rows = ok_csv(&csv_args);
    for (j, c) in json.as_array().unwrap().iter().zip(&rows) {
        for (key, col) in [("e", 3), ("h", 4), ("p", 5)] {
            let v: girard::RingElem = serde_json::from_value(j[key].clone()).unwrap();
            assert_eq!(v.to_string(), c[col]);
        }
    }
}
