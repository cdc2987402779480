use ce_lab::algebra::Algebra;
use ce_lab::semirings::FiniteSemiring;
use ce_lab::suite::strip_timing;
use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn ce_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ce-lab")).args(args).output().expect("spawn ce-lab")
}

fn ce_lab_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ce-lab")).args(args).env(key, value).output().expect("spawn ce-lab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn build_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let builds: &[&[&str]] = &[
        &["q8-group-algebra", "--field", "F2"],
        &["grassmann", "--field", "F3", "--n", "3"],
        &["grassmann", "--field", "F3", "--n", "0"],
        &["cayley-dickson", "--field", "Z4", "--alpha", "1,1,1"],
        &["cayley-dickson", "--field", "Z3", "--alpha", "-1,-1"],
        &["ce-matrix", "--field", "F5", "--n", "8"],
        &["ce-matrix", "--field", "F3", "--n", "7", "--no-unit"],
        &["t-algebra", "--variant", "S", "--k", "2"],
        &["skew-poly", "--q", "4", "--k", "3"],
        &["uniserial", "--p", "2"],
        &["group-algebra", "--field", "F3", "--group", "S3"],
        &["truncated", "--group", "Q8", "--k", "2"],
    ];
    for (i, args) in builds.iter().enumerate() {
        let out = path(dir.path(), &format!("a{i}.json"));
        let mut full = vec!["build"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", &out]);
        let o = ce_lab(&full);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let text = std::fs::read_to_string(&out).unwrap();
        let a = Algebra::from_json(&text).unwrap();
        assert_eq!(a.to_json(), text, "{args:?}");
        // same inputs, same bytes
        let again = ce_lab(&[&full[..full.len() - 2]].concat());
        assert_eq!(stdout(&again), text, "{args:?}");
    }
    let dim = |i: usize| Algebra::from_json(&std::fs::read_to_string(path(dir.path(), &format!("a{i}.json"))).unwrap()).unwrap().dim();
    assert_eq!((dim(0), dim(1), dim(2)), (8, 8, 1));
}

#[test]
fn semiring_builds_round_trip() {
    for args in [
        vec!["build", "powerset-semiring"],
        vec!["build", "boolean-group-semiring", "--group", "Q8"],
        vec!["build", "triangular-semiring", "--k", "2"],
    ] {
        let o = ce_lab(&args);
        assert!(o.status.success());
        let text = stdout(&o);
        assert_eq!(FiniteSemiring::from_json(&text).unwrap().to_json(), text);
    }
}

#[test]
fn analyze_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let q8 = path(dir.path(), "q8.json");
    assert!(ce_lab(&["build", "q8-group-algebra", "--field", "F2", "--out", &q8]).status.success());
    let o = ce_lab(&["analyze", &q8, "--checks", "ce,center,idempotents"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["results"];
    assert_eq!(r[0]["verdict"], true);
    assert_eq!(r[1]["dim"], 5);
    assert_eq!(r[2]["count"], 2);

    let enumerate = ce_lab(&["analyze", &q8, "--strategy", "enumerate", "--format", "text"]);
    assert_eq!(stdout(&enumerate).trim(), "ce: true (enumerate)");

    assert_eq!(ce_lab(&["analyze", &q8, "--checks", "ce,frobnicate"]).status.code(), Some(2));
    assert_eq!(ce_lab(&["analyze", &q8, "--strategy", "guess"]).status.code(), Some(2));
    assert_eq!(ce_lab(&["analyze", &path(dir.path(), "missing.json")]).status.code(), Some(2));

    let t = path(dir.path(), "t.json");
    assert!(ce_lab(&["build", "t-algebra", "--variant", "T", "--out", &t]).status.success());
    assert_eq!(stdout(&ce_lab(&["analyze", &t, "--format", "text"])).trim(), "ce: false (socle)");

    let broken = path(dir.path(), "broken.json");
    std::fs::write(&broken, r#"{"scalar":{"kind":"prime_field","p":2},"dim":1,"labels":["1"],"table":[[0,0,0,7]]}"#).unwrap();
    let o = ce_lab(&["analyze", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("table"));
}

#[test]
fn analyze_semiring_file() {
    let dir = tempfile::tempdir().unwrap();
    let s = path(dir.path(), "s.json");
    assert!(ce_lab(&["build", "powerset-semiring", "--out", &s]).status.success());
    let o = ce_lab(&["analyze", &s, "--checks", "ce,center,commutative", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("ce: true"), "{text}");
    assert!(text.contains("center: {∅, {1}, {c}, {1,c}}"), "{text}");
    assert!(text.contains("commutative: false"), "{text}");
    assert_eq!(ce_lab(&["analyze", &s, "--checks", "socle"]).status.code(), Some(2));
}

#[test]
fn bad_build_parameters_exit_two() {
    for args in [
        vec!["build", "no-such-thing"],
        vec!["build", "grassmann"],
        vec!["build", "grassmann", "--field", "F4", "--n", "2"],
        vec!["build", "t-algebra", "--variant", "X"],
        vec!["build", "group-algebra", "--group", "blob"],
        vec!["build", "cayley-dickson", "--field", "Z4", "--alpha", "2,1"],
        vec!["frobnicate"],
    ] {
        assert_eq!(ce_lab(&args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(ce_lab(&["--help"]).status.code(), Some(0));
}

#[test]
fn suite_filter_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let (r1, r2) = (path(dir.path(), "r1.json"), path(dir.path(), "r2.json"));
    let o = ce_lab(&["suite", "--filter", "cd-*", "--report", &r1]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(ce_lab(&["suite", "--filter", "cd-*", "--report", &r2]).status.success());
    let mut a: Value = serde_json::from_str(&std::fs::read_to_string(&r1).unwrap()).unwrap();
    let mut b: Value = serde_json::from_str(&std::fs::read_to_string(&r2).unwrap()).unwrap();
    let ids: Vec<&str> = a["cases"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["cd-octonion-z4", "cd-quaternion-z2", "cd-quaternion-z3", "cd-quaternion-z4", "cd-sedenion-z4"]);
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(a, b);
    assert_eq!(ce_lab(&["suite", "--filter", "["]).status.code(), Some(2));
}

#[test]
fn full_suite_passes() {
    let o = ce_lab(&["suite"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn corrupted_grassmann_sign_fails_intro_ex2() {
    let o = ce_lab_env(&["suite", "--filter", "intro-*"], "CE_LAB_TEST_CORRUPT", "grassmann-sign");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("intro-ex2"));
    assert!(stdout(&o).contains("FAIL  intro-ex2"));
    assert!(!stdout(&o).contains("FAIL  intro-ex1"));
}

#[test]
fn oracle_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (r1, r2, r3) = (path(dir.path(), "1.json"), path(dir.path(), "2.json"), path(dir.path(), "3.json"));
    let args = ["oracle", "--count", "200", "--dim", "3", "--scalar", "F2", "--seed", "7"];
    assert_eq!(ce_lab(&[&args[..], &["--report", &r1]].concat()).status.code(), Some(0));
    assert_eq!(ce_lab(&[&args[..], &["--report", &r2]].concat()).status.code(), Some(0));
    assert_eq!(std::fs::read(&r1).unwrap(), std::fs::read(&r2).unwrap());
    let other = ["oracle", "--count", "200", "--dim", "3", "--scalar", "F2", "--seed", "8", "--report", &r3];
    assert!(ce_lab(&other).status.success());
    assert_ne!(std::fs::read(&r1).unwrap(), std::fs::read(&r3).unwrap());
    assert_eq!(ce_lab(&["oracle", "--dim", "5"]).status.code(), Some(2));
    assert_eq!(ce_lab(&["oracle", "--scalar", "Q"]).status.code(), Some(2));
}

#[test]
fn injected_disagreement_dumps_minimized_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let dump = path(dir.path(), "dump.json");
    let report = path(dir.path(), "r.json");
    let o = ce_lab_env(
        &["oracle", "--count", "10", "--seed", "1", "--dump", &dump, "--report", &report],
        "CE_LAB_TEST_INJECT_DISAGREEMENT",
        "1",
    );
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&dump).unwrap()).unwrap();
    let f = &v["failures"][0];
    assert_eq!(f["index"], 0);
    assert_eq!(f["reason"], "injected disagreement");
    let a = Algebra::from_json(&f["algebra"].to_string()).unwrap();
    assert!(a.is_unital());
}
