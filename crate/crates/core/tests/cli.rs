use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn txray(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_txray"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn error_code(out: &Output) -> String {
    assert!(!out.status.success());
    let v: Value = serde_json::from_slice(&out.stderr).expect("error JSON on stderr");
    v["error"]["code"].as_str().unwrap().to_string()
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn pipeline_reproduces_tolman() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(txray(
        &[
            "scenario",
            "gelfand-cetlin",
            "--lambda",
            "5,1,0",
            "--out",
            "gc.json"
        ],
        d
    )
    .status
    .success());
    assert!(txray(
        &[
            "cut",
            "--chamber",
            "gc.json",
            "--circle",
            "1,2",
            "--level",
            "4",
            "--out",
            "c.json"
        ],
        d
    )
    .status
    .success());
    assert!(txray(
        &["xray", "chamber", "--chamber", "c.json", "--out", "x.json"],
        d
    )
    .status
    .success());
    let verdict = stdout_json(&txray(&["check", "--xray", "x.json"], d));
    assert_eq!(verdict["kind"], "verdict");
    assert_eq!(verdict["payload"]["obstructed"], true);
    let faces: Vec<&Value> = verdict["payload"]["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| &c["uncovered_face"])
        .collect();
    assert!(faces.contains(&&serde_json::json!([["1", "0"], ["2", "1"]])));

    let emitted = txray(&["scenario", "hn", "--n", "2", "--emit", "xray"], d);
    assert_eq!(
        stdout_json(&emitted)["payload"],
        serde_json::from_str::<Value>(&std::fs::read_to_string(d.join("x.json")).unwrap()).unwrap()
            ["payload"]
    );
}

#[test]
fn sweep_accepts_negative_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let v = stdout_json(&txray(
        &["scenario", "sweep", "--from", "-3", "--to", "5"],
        dir.path(),
    ));
    let rows = v["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for r in rows {
        assert_eq!(
            r["verdict"]["obstructed"].as_bool().unwrap(),
            r["n"].as_i64().unwrap() >= 2
        );
    }
    assert_eq!(
        error_code(&txray(
            &["scenario", "sweep", "--from", "2", "--to", "1"],
            dir.path()
        )),
        "InvalidParameter"
    );
}

#[test]
fn errors_are_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    txray(&["scenario", "gelfand-cetlin", "--out", "gc.json"], d);
    let cut = |c: &str, a: &str| {
        txray(
            &["cut", "--chamber", "gc.json", "--circle", c, "--level", a],
            d,
        )
    };
    assert_eq!(error_code(&cut("2,1", "5")), "NonFreeAction");
    assert_eq!(error_code(&cut("1,2", "3")), "WallNotPerpendicular");
    assert_eq!(error_code(&cut("1,2", "7")), "VertexOnCutLine");
    assert_eq!(error_code(&cut("1,-1", "-5")), "EmptyCut");
    assert_eq!(
        error_code(&txray(&["xray", "flag", "--lambda", "1,1,0"], d)),
        "NonGenericLambda"
    );
    assert_eq!(
        error_code(&txray(&["check", "--xray", "missing.json"], d)),
        "Io"
    );
    assert_eq!(
        error_code(&txray(&["check", "--xray", "gc.json"], d)),
        "Document"
    );
    assert_eq!(
        error_code(&txray(&["scenario", "hn", "--n", "-4"], d)),
        "InvalidParameter"
    );

    std::fs::write(
        d.join("bad.json"),
        r#"{"kind":"xray","payload":{},"meta":{"tool_version":"0","provenance":""}}"#,
    )
    .unwrap();
    let out = txray(&["validate", "--file", "bad.json"], d);
    assert_eq!(error_code(&out), "Document");
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .starts_with("payload"));
}

#[test]
fn wrong_scope_and_dangling_weights() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let one_point = r#"{"kind":"xray","meta":{"tool_version":"0","provenance":""},
        "payload":{"fixed_points":[{"position":["0","0"],"weights":[{"direction":[1,0]},{"direction":[0,1]}]}],"edges":[]}}"#;
    std::fs::write(d.join("p.json"), one_point).unwrap();
    assert_eq!(
        error_code(&txray(&["check", "--xray", "p.json"], d)),
        "WrongDimensionScope"
    );
    assert_eq!(
        error_code(&txray(&["validate", "--file", "p.json"], d)),
        "InvalidXRay"
    );
}

#[test]
fn stdin_and_render() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let m1 = txray(&["scenario", "m1"], d);
    let mut child = Command::new(env!("CARGO_BIN_EXE_txray"))
        .args(["render", "--xray", "-", "--format", "svg"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&m1.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        (
            svg.matches("<circle ").count(),
            svg.matches("<line ").count()
        ),
        (6, 9)
    );

    txray(&["scenario", "m3", "--emit", "xray", "--out", "m3.json"], d);
    txray(&["scenario", "m3", "--out", "v.json"], d);
    let a = txray(
        &[
            "render",
            "--xray",
            "m3.json",
            "--highlight",
            "v.json",
            "--wall",
            "--circle",
            "1,2",
            "--level",
            "4",
        ],
        d,
    );
    let b = txray(
        &[
            "render",
            "--xray",
            "m3.json",
            "--highlight",
            "v.json",
            "--wall",
            "--circle",
            "1,2",
            "--level",
            "4",
        ],
        d,
    );
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("uncovered"));
    let art = txray(&["render", "--xray", "m3.json", "--format", "ascii"], d);
    assert!(String::from_utf8_lossy(&art.stdout).contains("6 fixed points, 9 edges"));
}

#[test]
fn toric_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    txray(
        &["scenario", "m2", "--emit", "polytope3", "--out", "p.json"],
        d,
    );
    let x = stdout_json(&txray(&["xray", "toric", "--file", "p.json"], d));
    assert_eq!(x["payload"]["fixed_points"].as_array().unwrap().len(), 6);
    let ok = stdout_json(&txray(&["validate", "--file", "p.json"], d));
    assert_eq!(ok["valid"], true);
    txray(&["scenario", "m3", "--emit", "xray", "--out", "m3.json"], d);
    assert!(txray(&["validate", "--file", "m3.json", "--weyl"], d)
        .status
        .success());
}
