use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rrcodes").chain(args.iter().copied());
    let code = rrcodes::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn field_info_reports_case() {
    let v = json(&["field-info", "--p", "11"]);
    assert_eq!(
        (v["q"].as_u64(), v["case"].as_str(), v["omega"].as_str()),
        (Some(11), Some("C3"), Some("3"))
    );
    let v = json(&["field-info", "--p", "7", "--m", "2"]);
    assert_eq!(
        (v["q"].as_u64(), v["case"].as_str()),
        (Some(49), Some("C2"))
    );
    assert!(v["omega"].is_null());
}

#[test]
fn factor_csv_rows() {
    let (code, out, _) = run(&["factor", "--p", "19", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "label,poly,degree,coset,recip\nU,x+18,1,0,U\nF1,x^2+15x+1,2,1 4,F1\nF2,x^2+5x+1,2,2 3,F2\n");
}

#[test]
fn distance_modes() {
    let v = json(&["distance", "--p", "7", "--exps", "[6,7]"]);
    assert_eq!(
        (
            v["exact"].as_u64(),
            v["paper"].as_u64(),
            v["agrees"].as_bool()
        ),
        (Some(35), Some(28), Some(false))
    );
    let v = json(&[
        "distance",
        "--p",
        "7",
        "--exps",
        "{\"U\":3,\"Phi\":1}",
        "--mode",
        "exact",
    ]);
    assert_eq!(v["exact"].as_u64(), Some(4));
    assert!(v.get("paper").is_none() && v.get("agrees").is_none());
    let v = json(&[
        "distance",
        "--p",
        "11",
        "--s",
        "1",
        "--exps",
        "11,11,11,11,11",
        "--mode",
        "paper",
    ]);
    assert_eq!(v["paper"].as_u64(), Some(0));
    assert!(v.get("exact").is_none());
}

#[test]
fn code_info_fields() {
    let v = json(&["code-info", "--p", "7", "--exps", "1,3"]);
    assert_eq!(v["dimension"].as_u64(), Some(22));
    assert_eq!(v["distance"].as_u64(), Some(4));
    assert_eq!(v["dual"], serde_json::json!({"U": 6, "Phi": 4}));
    assert_eq!(v["dual_containing"].as_bool(), Some(true));
}

#[test]
fn weights_csv_and_brute() {
    let (code, out, _) = run(&["weights", "--p", "11", "--include", "U", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "weight,multiplicity\n0,1\n1,0\n2,100\n3,900\n4,4550\n5,9090\n"
    );
    let v = json(&["weights", "--p", "19", "--include", "F1,F2", "--brute"]);
    assert_eq!(v["brute_agrees"].as_bool(), Some(true));
    let v = json(&["weights", "--p", "11", "--all"]);
    assert_eq!(v.as_array().unwrap().len(), 31);
}

#[test]
fn mds_scan_lines() {
    let (code, out, _) = run(&["mds-scan", "--p", "11", "--only-mds", "--format", "jsonl"]);
    assert_eq!(code, 0);
    let lines: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 11);
    assert!(lines
        .iter()
        .all(|l| l["verdict"]["is_mds"] == Value::Bool(true)));
}

#[test]
fn qsc_pair() {
    let v = json(&[
        "qsc", "--p", "7", "--c1", "[1,3]", "--c2", "[0,0]", "--al", "2", "--ar", "3",
    ]);
    assert_eq!(
        (
            v["eligible"].as_bool(),
            v["n_out"].as_u64(),
            v["k_out"].as_u64()
        ),
        (Some(true), Some(40), Some(9))
    );
    let v = json(&["qsc", "--p", "7", "--c1", "[1,1]", "--c2", "[0,0]"]);
    assert_eq!(v["eligible"].as_bool(), Some(false));
    assert!(v["k_out"].is_null());
    assert!(!v["reasons"].as_array().unwrap().is_empty());
}

#[test]
fn discrepancies_listed() {
    let (code, out, _) = run(&["discrepancies", "--p", "7", "--format", "jsonl"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 10);
}

#[test]
fn domain_errors_exit_one_with_json() {
    for args in [
        &["field-info", "--p", "5"][..],
        &["distance", "--p", "7", "--exps", "[9,9]"],
        &["distance", "--p", "7", "--exps", "1,2,3"],
        &["code-info", "--p", "7", "--exps", "{\"W1\":1}"],
        &[
            "qsc", "--p", "7", "--c1", "[1,3]", "--c2", "[0,0]", "--al", "20", "--ar", "15",
        ],
        &["distance", "--p", "7", "--exps", "not numbers"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        let v: Value = serde_json::from_str(err.trim()).unwrap();
        assert!(v["error"].is_string() && v["message"].is_string(), "{err}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["nope"]).0, 2);
    assert_eq!(run(&["distance", "--p", "7"]).0, 2);
    assert_eq!(run(&["factor", "--p", "7", "--format", "xml"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("0 unexpected\n"));
    let dir = std::env::temp_dir().join(format!("rrcodes-ledger-{}", std::process::id()));
    std::fs::write(&dir, r#"{"entries": []}"#).unwrap();
    let (code, _, _) = run(&[
        "verify",
        "--ledger",
        dir.to_str().unwrap(),
        "--format",
        "json",
        "--jobs",
        "2",
    ]);
    std::fs::remove_file(&dir).ok();
    assert_eq!(code, 3);
}

#[test]
fn output_independent_of_jobs() {
    let a = run(&["mds-scan", "--p", "19", "--format", "csv", "--jobs", "1"]);
    let b = run(&["mds-scan", "--p", "19", "--format", "csv", "--jobs", "3"]);
    assert_eq!(a, b);
}
