use std::process::{Command, Output};

use serde_json::Value;

fn rrcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrcodes"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn factor_tables() {
    let o = rrcodes(&[
        "factor", "--p", "7", "--m", "1", "--n", "8", "--lambda", "6", "--k", "1",
    ]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "target\tfactor\tdegree\tmultiplicity");
    assert_eq!(
        lines[1..5]
            .iter()
            .filter(|l| l.starts_with("x^8+1\tx^2+"))
            .count(),
        4
    );
    assert!(lines[5..]
        .iter()
        .all(|l| l.starts_with("x^56+1\t") && l.ends_with("\t2\t7")));

    let o = rrcodes(&[
        "factor", "--p", "2", "--n", "3", "--lambda", "1", "--k", "1", "--format", "json",
    ]);
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    let base: Vec<_> = v["base"]["factorization"]["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["poly"].clone())
        .collect();
    assert_eq!(
        base,
        vec![
            serde_json::json!([[1], [1]]),
            serde_json::json!([[1], [1], [1]])
        ]
    );

    let o = rrcodes(&[
        "factor", "--p", "2", "--n", "1", "--lambda", "1", "--k", "3", "--format", "json",
    ]);
    let v = json(&o);
    assert_eq!(v["full"]["target"], "x^8+1");
    assert_eq!(v["full"]["factorization"]["factors"][0]["mult"], 8);
}

#[test]
fn decompose_examples() {
    let o = rrcodes(&[
        "decompose",
        "--p",
        "7",
        "--n",
        "8",
        "--lambda",
        "-1",
        "--exponents",
        "7,7,7,6",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["verification"]["passed"], true);
    assert_eq!(v["distance"], serde_json::json!({"d": 49, "exact": true}));
    assert_eq!(
        v["decomposition"]["components"].as_array().unwrap().len(),
        7
    );

    let o = rrcodes(&[
        "decompose",
        "--p",
        "7",
        "--n",
        "8",
        "--lambda",
        "6",
        "--exponents",
        "0,0,0,0",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["verification"]["row_space"], true);
    assert_eq!(v["distance"]["d"], 1);

    let o = rrcodes(&[
        "decompose",
        "--p",
        "2",
        "--n",
        "3",
        "--lambda",
        "1",
        "--generator",
        "1,1",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("row_space\ttrue\n"));
    assert!(out.contains("exhaustive\ttrue\n"));
}

#[test]
fn decompose_over_extension_field() {
    // GF(4) with λ = w, length 6: x^3 - w^2 is irreducible
    let o = rrcodes(&[
        "decompose",
        "--p",
        "2",
        "--m",
        "2",
        "--n",
        "3",
        "--lambda",
        "0,1",
        "--exponents",
        "1",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["verification"]["passed"], true);
}

#[test]
fn classify_small_family() {
    let o = rrcodes(&[
        "classify", "--p", "2", "--n", "3", "--lambda", "1", "--k", "1",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    let table: Vec<&str> = out.split("\n\n").next().unwrap().lines().collect();
    assert_eq!(table[0], "exponents\tdim\td\texact");
    assert_eq!(table.len(), 10);
    assert_eq!(table[1], "0,0\t6\t1\ttrue");
    assert_eq!(table[9], "2,2\t0\t0\ttrue");
    let again = rrcodes(&[
        "classify", "--p", "2", "--n", "3", "--lambda", "1", "--k", "1",
    ]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn verify_suite_selection() {
    let o = rrcodes(&[
        "verify-suite",
        "--family",
        "f2-cyclic-12",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["results"][0]["checked"], 25);
    assert_eq!(v["passed"], true);

    let o = rrcodes(&["verify-suite", "--family", ""]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn exit_codes() {
    // p divides n
    assert_eq!(
        rrcodes(&["factor", "--p", "7", "--n", "14", "--lambda", "1"])
            .status
            .code(),
        Some(2)
    );
    // not a prime
    assert_eq!(
        rrcodes(&["factor", "--p", "6", "--n", "5", "--lambda", "1"])
            .status
            .code(),
        Some(2)
    );
    // zero λ
    assert_eq!(
        rrcodes(&["factor", "--p", "5", "--n", "2", "--lambda", "0"])
            .status
            .code(),
        Some(2)
    );
    // not a divisor
    assert_eq!(
        rrcodes(&[
            "decompose",
            "--p",
            "2",
            "--n",
            "3",
            "--lambda",
            "1",
            "--generator",
            "1,0,1,1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        rrcodes(&["verify-suite", "--family", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rrcodes(&["classify", "--p", "7", "--n", "8", "--lambda", "6", "--budget", "10"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(rrcodes(&["bogus"]).status.code(), Some(2));
}
