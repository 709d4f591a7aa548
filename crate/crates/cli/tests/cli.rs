use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn eqgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqgc")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn statuses(v: &Value) -> Vec<(String, String)> {
    v["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["name"].as_str().unwrap().to_string(), r["status"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn homology_of_c2_and_a_malformed_file() {
    let out = eqgc(&["homology", data("c2.json").to_str().unwrap(), "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let groups = &report(&out)["records"][0]["witnesses"]["groups"];
    assert_eq!(groups, &serde_json::json!(["Z", "Z/2", "0", "Z/2"]));

    let out = eqgc(&["homology", data("malformed.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3, column"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn forms_queries() {
    let unit = data("unit.json");
    let out = eqgc(&["forms", "invariants", unit.to_str().unwrap()]);
    let inv = &report(&out)["records"][0]["witnesses"]["invariants"];
    assert_eq!(inv["rank"], 1);
    assert_eq!(inv["determinant"], 1);
    assert_eq!(inv["signature"], serde_json::json!([1, 0]));
    assert_eq!(inv["even"], false);

    let out = eqgc(&["forms", "k0", unit.to_str().unwrap()]);
    assert_eq!(report(&out)["records"][0]["witnesses"]["invertible"], false);

    let out = eqgc(&["forms", "normalize", data("disguised_symplectic.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["records"][0]["witnesses"]["n"], 2);

    // normalize needs an alternating form
    assert_eq!(eqgc(&["forms", "normalize", unit.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn group_completion_on_s3_is_skipped_but_ji_passes() {
    let out = eqgc(&["verify", "group-completion", "--input", data("s3.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let s = statuses(&report(&out));
    assert_eq!(
        s,
        vec![
            ("group-completion/s3".into(), "SKIPPED".into()),
            ("group-completion/s3/ji".into(), "PASS".into())
        ]
    );
}

#[test]
fn category_inputs_including_a_non_strict_duality() {
    let out = eqgc(&[
        "verify",
        "categories",
        "--input",
        data("c2_nonstrict.json").to_str().unwrap(),
        "--input",
        data("poset1.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let s = statuses(&report(&out));
    assert_eq!(s.len(), 8);
    assert!(s.iter().all(|(_, st)| st == "PASS"), "{s:?}");
}

#[test]
fn wrong_input_kind_and_bad_flags() {
    let out = eqgc(&["verify", "forms", "--input", data("c2.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(eqgc(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(eqgc(&["verify", "ji", "--stage-budget", "0"]).status.code(), Some(2));
}

#[test]
fn a_failing_check_exits_with_one() {
    // right multiplication by the absorbing element collapses the fibre, so
    // the projection from B(M, M, *) is no homology fibration
    let out = eqgc(&["verify", "hofib", "--input", data("max01.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(statuses(&v), vec![("hofib/max01/contractible-bar-projection".into(), "FAIL".into())]);
    assert!(v["records"][0]["witnesses"]["first_failure"]["witness"].is_string());
}

#[test]
fn report_written_to_a_file() {
    let dir = std::env::temp_dir().join(format!("eqgc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let out = eqgc(&["verify", "hofib", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["config"]["out"], out_path.to_str().unwrap());
    assert!(statuses(&v).iter().all(|(_, s)| s == "PASS"));
    std::fs::remove_dir_all(&dir).unwrap();
}
