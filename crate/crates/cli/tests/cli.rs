use std::process::{Command, Output};

fn negaconv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negaconv")).args(args).env_remove("NEGACONV_BUDGET").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_prints_classical_tuple() {
    let o = negaconv(&["build", "--family", "I", "--q", "5", "--i", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(26, 23, 2; 1, 6) over GF(25)");
}

#[test]
fn build_json_is_a_record() {
    let o = negaconv(&["build", "--family", "II", "--q", "3", "--i", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family"], "II");
    assert_eq!(v["dual"]["k"], 3);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        &["build", "--family", "IV", "--q", "7", "--i", "2"][..],
        &["build", "--family", "I", "--q", "6", "--i", "2"],
        &["verify", "--family", "V", "--q", "11", "--i", "9"],
        &["build", "--family", "VI", "--q", "5", "--i", "2"],
        &["table", "--table", "3"],
        &["build", "--family", "I", "--q", "5", "--i", "2", "--seedless"],
        &["build", "--family", "I"],
    ] {
        assert_eq!(negaconv(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_flagship_instance() {
    let o = negaconv(&["verify", "--family", "II", "--q", "3", "--i", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("free_distance_search: d_f = 5"), "{s}");
    assert!(s.contains("certificate: PASS"));
}

#[test]
fn verify_quantum_writes_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let o = negaconv(&[
        "verify",
        "--family",
        "IV",
        "--q",
        "5",
        "--i",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["certificate"]["pass"], true);
    assert_eq!(v["quantum"]["mds"], true);
    let text = negaconv(&["verify", "--family", "IV", "--q", "5", "--i", "2"]);
    assert!(stdout(&text).contains("[(26, 20, 1; 2, 6)]_5"));
}

#[test]
fn starved_budget_fails_verification() {
    let o = negaconv(&["verify", "--family", "II", "--q", "3", "--i", "2", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("[skip]") && s.contains("certificate: FAIL"), "{s}");
    let env = Command::new(env!("CARGO_BIN_EXE_negaconv"))
        .args(["verify", "--family", "II", "--q", "3", "--i", "2"])
        .env("NEGACONV_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(1));
}

#[test]
fn table_two_csv() {
    let o = negaconv(&["table", "--table", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("family,q,i,n,k,gamma,mu,d_f,status"));
    assert_eq!(lines.next(), Some("IV,5,2,26,20,2,1,6,verified-exact"));
    assert_eq!(s.lines().count(), 23);
}

#[test]
fn output_is_deterministic() {
    let a = negaconv(&["verify", "--family", "V", "--q", "7", "--i", "3", "--format", "json"]);
    let b = negaconv(&["verify", "--family", "V", "--q", "7", "--i", "3", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
