use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magma-census"))
        .args(args)
        .env_remove("MAGMA_CENSUS_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_plain() {
    assert_eq!(stdout(&["count", "--n", "3", "--k", "2"]), "3330\n");
    assert_eq!(
        stdout(&["count", "--n", "2", "--k", "3", "--variant", "harrison-gcd"]),
        "130\n"
    );
    assert_eq!(stdout(&["count", "--n", "0", "--k", "0"]), "0\n");
    assert_eq!(
        stdout(&["count", "--n", "5", "--k", "1", "--method", "permutation"]),
        "47\n"
    );
}

#[test]
fn count_json_uses_decimal_strings() {
    let text = stdout(&["count", "--n", "4", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["count"], serde_json::json!("178981952"));
    assert_eq!(v["variant"], "correct");
    assert_eq!(v["n"], 4);
    assert_eq!(v["k"], 2);
}

#[test]
fn sequence_formats() {
    assert_eq!(
        stdout(&["sequence", "--k", "1", "--from", "0", "--to", "6", "--format", "bfile"]),
        "0 1\n1 1\n2 3\n3 7\n4 19\n5 47\n6 130\n"
    );
    assert_eq!(
        stdout(&["sequence", "--k", "2", "--from", "0", "--to", "2"]),
        "1\n1\n10\n"
    );
    assert_eq!(
        stdout(&["sequence", "--k", "0", "--from", "0", "--to", "4"]),
        "0\n1\n1\n1\n1\n"
    );
    let json = stdout(&[
        "sequence", "--k", "2", "--from", "2", "--to", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[1]["count"], "3330");
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn sequence_in_arity() {
    assert_eq!(
        stdout(&[
            "sequence", "--vary", "k", "--n", "2", "--from", "1", "--to", "5", "--format", "bfile"
        ]),
        "1 3\n2 10\n3 136\n4 32896\n5 2147516416\n"
    );
    assert_eq!(
        stdout(&["sequence", "--vary", "k", "--n", "0", "--from", "0", "--to", "3"]),
        "0\n1\n1\n1\n"
    );
}

#[test]
fn cycle_index_rendering() {
    assert_eq!(
        stdout(&["cycle-index", "--n", "3"]),
        "1/6*t1^3 + 1/2*t1*t2 + 1/3*t3\n"
    );
    assert_eq!(
        stdout(&["cycle-index", "--n", "3", "--power", "2"]),
        "1/6*t1^9 + 1/2*t1*t2^4 + 1/3*t3^3\n"
    );
    assert_eq!(stdout(&["cycle-index", "--n", "0"]), "1\n");
    let json = stdout(&[
        "cycle-index",
        "--n",
        "3",
        "--power",
        "0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["terms"][1]["coefficient"], "1/2");
    assert_eq!(v["terms"][1]["origin"], serde_json::json!([1, 1, 0]));
    assert_eq!(v["terms"][1]["exponents"], serde_json::json!({"1": 1}));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["count", "--n", "x", "--k", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["count", "--n", "2", "--k", "2", "--format", "bfile"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["sequence", "--k", "2", "--from", "3", "--to", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["count", "--n", "2", "--k", "0", "--variant", "harrison-gcd"])
            .status
            .code(),
        Some(2)
    );
    let guard = run(&["count", "--n", "9", "--k", "2", "--method", "permutation"]);
    assert_eq!(guard.status.code(), Some(3));
    assert!(guard.stdout.is_empty());
    assert!(!guard.stderr.is_empty());
    assert_eq!(
        run(&[
            "count",
            "--n",
            "9",
            "--k",
            "2",
            "--method",
            "permutation",
            "--perm-guard",
            "9"
        ])
        .status
        .code(),
        Some(0)
    );
}

#[test]
fn verify_suites() {
    let out = stdout(&["verify", "--suite", "variant"]);
    assert!(
        out.contains("first disagreement at n=2 k=3: harrison-gcd 130, correct 136"),
        "{out}"
    );
    let out = stdout(&[
        "verify",
        "--suite",
        "structural",
        "--n-max",
        "8",
        "--k-max",
        "3",
    ]);
    assert!(out.starts_with("PASS structural"));
    let bad = run(&[
        "verify",
        "--suite",
        "structural",
        "--variant",
        "harrison-gcd",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).starts_with("FAIL structural"));
    let out = stdout(&["verify", "--suite", "burnside", "--max-cells", "1048576"]);
    assert!(out.contains("(7,1)") && out.contains("(2,4)"));
}

#[test]
fn jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_magma-census"))
        .args(["sequence", "--k", "2", "--from", "0", "--to", "4"])
        .env("MAGMA_CENSUS_JOBS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1\n1\n10\n3330\n178981952\n"
    );
    let bad = Command::new(env!("CARGO_BIN_EXE_magma-census"))
        .args(["count", "--n", "2", "--k", "2"])
        .env("MAGMA_CENSUS_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
