use std::process::{Command, Output};

fn dua(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dua"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn eval_normal_forms() {
    let o = dua(&["eval", "d*u"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "lambda*u*d + w");
    let o = dua(&["eval", "--alg", "A0", "w*u"]);
    assert_eq!(stdout(&o).trim(), "mu*u*w");
    let o = dua(&["eval", "--alg", "tilde", "w*u", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["normal_form"], "mu*u*w + u");
}

#[test]
fn eval_errors() {
    let o = dua(&["eval", "u*(w + "]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("1:8"));
    assert_eq!(dua(&["eval", "--alg", "tilde", "d"]).status.code(), Some(2));
    assert_eq!(dua(&["eval", "--alg", "B7", "u"]).status.code(), Some(2));
    assert_eq!(dua(&["eval", "u/0"]).status.code(), Some(2));
    assert_eq!(dua(&["eval", "sqrt(-1)*u"]).status.code(), Some(3));
}

#[test]
fn classify_output() {
    let o = dua(&["classify", "2", "-1", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("stable rank: sr = 3"));
    let o = dua(&["classify", "5/2", "-1", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["sr_lower"].as_u64(), v["sr_upper"].as_u64()), (Some(2), Some(3)));
    assert_eq!(v["krull_dim"], 3);
    let o = dua(&["classify", "1", "0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not noetherian"));
}

#[test]
fn classify_errors() {
    assert_eq!(dua(&["classify", "lambda", "1", "0"]).status.code(), Some(3));
    assert_eq!(dua(&["classify", "sqrt(2)", "sqrt(3)", "0"]).status.code(), Some(3));
    assert_eq!(dua(&["classify", "1", "2"]).status.code(), Some(2));
    assert_eq!(dua(&["classify", "1/", "2", "0"]).status.code(), Some(2));
}

#[test]
fn table_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.md");
    let o = dua(&["table", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, downup::table::EXPECTED_MARKDOWN);
    assert_eq!(dua(&["table", "--fixture", "/nonexistent/t.json"]).status.code(), Some(2));

    let mut fixture = downup::table::TableFixture::load(None).unwrap();
    fixture.rows[0].lower = 1;
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&fixture).unwrap()).unwrap();
    let o = dua(&["table", "--fixture", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("mismatch"));
}

#[test]
fn verify_subset_with_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = dua(&["verify", "--suite", "section3_1", "--bound", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["id"].as_str().unwrap().starts_with("s31.")));
    let theory: Vec<_> = checks
        .iter()
        .filter(|c| c["id"].as_str().unwrap().contains(".theory."))
        .collect();
    assert!(!theory.is_empty());
    for c in theory {
        assert_eq!(c["verdict"]["status"], "skipped");
        assert!(!c["citation"].as_str().unwrap().is_empty());
    }
}

#[test]
fn verify_usage_errors() {
    assert_eq!(dua(&["verify", "--bound", "1"]).status.code(), Some(2));
    assert_eq!(dua(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(dua(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dua(&["--help"]).status.code(), Some(0));
}
