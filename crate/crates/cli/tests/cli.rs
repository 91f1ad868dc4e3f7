use std::path::Path;
use std::process::{Command, Output};

fn monopart(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monopart"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn h3_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        code(&monopart(
            &["gen", "--kind", "h3", "--n", "6", "--seed", "1", "-o", "c.txt"],
            d
        )),
        0
    );
    assert_eq!(code(&monopart(&["solve", "c.txt", "-o", "cert.json"], d)), 0);
    let v = monopart(&["verify", "c.txt", "cert.json"], d);
    assert_eq!(code(&v), 0);
    assert!(String::from_utf8_lossy(&v.stdout).starts_with("ok"));
}

#[test]
fn split_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        code(&monopart(
            &["gen", "--kind", "bnn", "--split", "1,2", "--n", "4", "-o", "s.txt"],
            d
        )),
        0
    );
    let out = monopart(&["solve", "s.txt"], d);
    assert_eq!(code(&out), 2);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["structure"]["a1"], serde_json::json!([0]));
    assert_eq!(json["structure"]["b1"], serde_json::json!([0, 1]));
}

#[test]
fn corrupted_certificate_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    monopart(
        &[
            "gen",
            "--kind",
            "bnn",
            "--n",
            "4",
            "--seed",
            "3",
            "--palette",
            "3",
            "-o",
            "c.txt",
        ],
        d,
    );
    assert_eq!(code(&monopart(&["solve", "c.txt", "-o", "cert.json"], d)), 0);
    let mut cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("cert.json")).unwrap()).unwrap();
    cert["pieces"]
        .as_array_mut()
        .unwrap()
        .retain(|p| !p["vertices"].as_array().unwrap().is_empty());
    cert["pieces"].as_array_mut().unwrap().pop();
    std::fs::write(d.join("bad.json"), cert.to_string()).unwrap();
    let out = monopart(&["verify", "c.txt", "bad.json"], d);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stdout).contains("coverage"));
}

#[test]
fn enumerate_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = monopart(
        &["enumerate", "--suite", "lemma6-equiv", "--n", "4", "--jobs", "2"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "65536 checked, 0 failures");
}

#[test]
fn usage_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&monopart(&["gen", "--kind", "h3"], d)), 1);
    assert_eq!(code(&monopart(&["gen", "--kind", "h3", "--n", "5"], d)), 1);
    assert_eq!(code(&monopart(&["solve", "missing.txt"], d)), 1);
    assert_eq!(code(&monopart(&["enumerate", "--suite", "nope", "--n", "2"], d)), 1);
    assert_eq!(code(&monopart(&["enumerate", "--suite", "thm4", "--n", "6"], d)), 1);
    assert_eq!(code(&monopart(&["--help"], d)), 0);
}

#[test]
fn outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for kind in [
        ["--kind", "h3", "--n", "9"],
        ["--kind", "bnn", "--n", "7"],
        ["--kind", "kn", "--n", "8"],
    ] {
        let mut args = vec!["gen"];
        args.extend(kind);
        args.extend(["--seed", "11", "--palette", if kind[1] == "kn" { "3" } else { "2" }]);
        let a = monopart(&args, d);
        let b = monopart(&args, d);
        assert_eq!(a.stdout, b.stdout);
        std::fs::write(d.join("c.txt"), &a.stdout).unwrap();
        let s1 = monopart(&["solve", "c.txt"], d);
        let s2 = monopart(&["solve", "c.txt"], d);
        assert_eq!(s1.stdout, s2.stdout);
        assert!(matches!(code(&s1), 0 | 2));
    }
}

#[test]
fn rxn_report() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    monopart(
        &["gen", "--kind", "rxn", "--n", "4", "--split", "1,2", "-o", "r.txt"],
        d,
    );
    assert_eq!(std::fs::read_to_string(d.join("r.txt")).unwrap(), "rxn 4 2\nsplit 1 2");
    let out = monopart(&["solve", "r.txt", "--samples", "200"], d);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["min_cover"], 2);
    assert_eq!(json["one_sided_paths"], 200);
}

#[test]
fn two_paths_and_three_colour_split() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    monopart(&["gen", "--kind", "bnn", "--n", "5", "--seed", "4", "-o", "c.txt"], d);
    let out = monopart(&["solve", "--two-paths", "c.txt", "-o", "p.json"], d);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&monopart(&["verify", "c.txt", "p.json"], d)), 0);
    monopart(
        &["gen", "--kind", "bnn", "--n", "6", "--blocks", "2,2,2", "-o", "t.txt"],
        d,
    );
    assert_eq!(code(&monopart(&["solve", "t.txt", "-o", "t.json"], d)), 0);
    assert_eq!(code(&monopart(&["verify", "t.txt", "t.json"], d)), 0);
}
