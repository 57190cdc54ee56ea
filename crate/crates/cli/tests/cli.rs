use std::process::{Command, Output};

use qdyson_cli::{to_json, ResultKind, RunResult, Status, VerifyReport};

fn qdyson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdyson")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ct_json(args: &[&str]) -> (RunResult, String) {
    let mut full = vec!["ct"];
    full.extend_from_slice(args);
    full.push("--json");
    let out = stdout(&qdyson(&full));
    (serde_json::from_str(&out).expect("valid report"), out)
}

#[test]
fn brute_force_text() {
    let o = qdyson(&["ct", "--n", "1", "--a", "1,1", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 + q");
}

#[test]
fn closed_form_text() {
    let o = qdyson(&["ct", "--n", "1", "--a", "1,1", "--num", "1:1", "--den", "0", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-1");
}

#[test]
fn gx_matches_closed_at_negative_a0() {
    for extra in [&[][..], &["--num", "1:1", "--den", "0"][..], &["--num", "2:1", "--den", "0"][..]] {
        for a in ["-2,1,1", "-3,1,1", "-1,2,1"] {
            let mut args = vec!["--n", "2", "--a", a];
            args.extend_from_slice(extra);
            let (gx, _) = ct_json(&[&args[..], &["--method", "gx"]].concat());
            let (closed, _) = ct_json(&[&args[..], &["--method", "closed"]].concat());
            assert_eq!(gx.status, Status::Ok, "{args:?}");
            assert_eq!(gx.result, closed.result, "{args:?}");
        }
    }
}

#[test]
fn brute_matches_closed_after_rotation() {
    let args = ["--n", "2", "--a", "1,2,1", "--num", "0:1", "--den", "2"];
    let (brute, _) = ct_json(&[&args[..], &["--method", "brute"]].concat());
    let (closed, _) = ct_json(&[&args[..], &["--method", "closed"]].concat());
    assert_eq!(brute.result, closed.result);
    let rot = brute.rotation.expect("rotation reported");
    assert_eq!(rot.q_shift, 1);
}

#[test]
fn json_schema_and_round_trip() {
    for args in [
        &["--n", "2", "--a", "1,1,1", "--num", "1:1", "--den", "0"][..],
        &["--n", "1", "--a", "-1,1", "--method", "closed"][..],
        &["--n", "2", "--a", "-3,1,1", "--num", "1:1", "--den", "0", "--method", "gx", "--trace"][..],
        &["--n", "1", "--a", "-1,1", "--method", "brute"][..],
    ] {
        let (report, bytes) = ct_json(args);
        assert_eq!(to_json(&report), bytes, "{args:?}");
        let value: serde_json::Value = serde_json::from_str(&bytes).unwrap();
        for key in ["params", "spec", "method", "status", "elapsed_ms"] {
            assert!(value.get(key).is_some(), "{key} missing for {args:?}");
        }
        if report.status == Status::Ok {
            let r = report.result.as_ref().unwrap();
            match r.kind {
                ResultKind::Poly => assert!(r.q_low.is_some() && r.coeffs.is_some()),
                ResultKind::Rat => assert!(r.num.is_some() && r.den.is_some()),
            }
        }
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["ct", "--n", "1", "--a", "-1,1", "--method", "brute"][..],
        &["ct", "--n", "1", "--a", "1,1", "--method", "gx"][..],
        &["ct", "--n", "2", "--a", "1,1"][..],
        &["ct", "--n", "1", "--a", "1,1", "--num", "1:2", "--den", "0"][..],
        &["ct", "--n", "1", "--a", "1,1", "--method", "nope"][..],
        &["verify", "--suite", "nope"][..],
    ] {
        assert_eq!(qdyson(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn error_reports_are_json() {
    let (report, _) = ct_json(&["--n", "1", "--a", "-1,1", "--method", "brute"]);
    assert_eq!(report.status, Status::Error);
    assert!(report.error.is_some() && report.result.is_none());
}

fn verify(args: &[&str]) -> (VerifyReport, Output) {
    let mut full = vec!["verify", "--json"];
    full.extend_from_slice(args);
    let o = qdyson(&full);
    (serde_json::from_str(&stdout(&o)).expect("valid report"), o)
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["--suite", "zb", "--max-n", "3", "--max-a", "2"][..],
        &["--suite", "gx", "--max-n", "2", "--max-a", "2"][..],
        &["--suite", "lemma34", "--max-n", "4", "--max-a", "3"][..],
    ] {
        let (report, o) = verify(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(report.passed());
        assert!(report.suites.iter().all(|s| s.passed && s.checked > 0));
    }
}

#[test]
fn verify_is_independent_of_jobs() {
    let strip = |r: VerifyReport| r.suites.into_iter().map(|s| (s.suite, s.checked, s.failed)).collect::<Vec<_>>();
    let args = ["--suite", "main,corollaries", "--max-n", "2", "--max-a", "2"];
    let (one, _) = verify(&[&args[..], &["--jobs", "1"]].concat());
    let (four, _) = verify(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(strip(one), strip(four));
}

#[test]
fn verify_text_output() {
    let o = qdyson(&["verify", "--suite", "lemma51", "--max-n", "2", "--max-a", "2"]);
    let text = stdout(&o);
    assert!(text.starts_with("PASS lemma51:"), "{text}");
    assert!(text.trim_end().ends_with("overall: pass"));
}
