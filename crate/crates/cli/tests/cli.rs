use std::path::Path;
use std::process::{Command, Output};

fn bicover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicover")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn gen_matches_golden_files() {
    let o = bicover(&["gen", "gstar", "--r", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("golden/gstar3.toml"));
    let o = bicover(&["gen", "truncplane", "--q", "2"]);
    assert_eq!(stdout(&o), include_str!("golden/truncplane2.toml"));
}

#[test]
fn gen_is_byte_stable() {
    for args in [["gen", "doubling", "--r", "4"], ["gen", "hamfactor", "--s", "4"]] {
        assert_eq!(bicover(&args).stdout, bicover(&args).stdout);
    }
}

#[test]
fn exact_cover_of_gstar3_is_four() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.toml", include_str!("golden/gstar3.toml"));
    let o = bicover(&["cover", "--exact", &f]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("size: 4\n"), "{text}");
    assert!(text.contains("optimal: true\n"));

    let o = bicover(&["--json", "cover", "--exact", &f]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rule"], "exact-solver");
    assert_eq!(v["cover"]["parts"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_cover_sweep_passes() {
    let o = bicover(&["verify", "--claim", "cover", "--r", "3", "--max-m", "3", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("PASS, exhaustive, bound 4"));
}

#[test]
fn verify_failure_exits_one() {
    let o = bicover(&["verify", "--claim", "cover", "--r", "2", "--max-m", "2", "--max-n", "2", "--bound", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("FAIL, exhaustive, bound 0\n"));
    assert!(text.contains("witness: [[1]]\n"), "{text}");
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(bicover(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bicover(&["gen", "gstar"]).status.code(), Some(2));
    assert_eq!(bicover(&["gen", "gstar", "--r", "3", "--bogus"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.toml", include_str!("golden/gstar3.toml"));
    // cover methods are mutually exclusive
    assert_eq!(bicover(&["cover", "--exact", "--structural", &f]).status.code(), Some(2));
    assert_eq!(bicover(&["cover", &f]).status.code(), Some(2));
    let bad = write(dir.path(), "bad.toml", "m = 1\nn = 1\nr = 1\nmatrix = [[0]]\n");
    let o = bicover(&["analyze", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("color out of range"));
    assert_eq!(bicover(&["analyze", "/nonexistent/file.toml"]).status.code(), Some(2));
    // gstar(3) is not spanning
    assert_eq!(bicover(&["dualize", &f]).status.code(), Some(2));
}

#[test]
fn guard_limits_and_override() {
    let args = ["verify", "--claim", "cover", "--r", "4", "--max-m", "1", "--max-n", "2"];
    let o = bicover(&args);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_bicover"))
        .args(args)
        .env("BCL_GUARD_OVERRIDE", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn dualize_then_transversal() {
    let dir = tempfile::tempdir().unwrap();
    let d = stdout(&bicover(&["gen", "doubling", "--r", "3"]));
    let f = write(dir.path(), "d.toml", &d);
    let exact = stdout(&bicover(&["cover", "--exact", &f]));
    assert!(exact.contains("size: 2\n"));

    let pair = stdout(&bicover(&["dualize", &f]));
    let p = write(dir.path(), "pair.toml", &pair);
    let o = bicover(&["transversal", &p]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("tau: 2\n"));

    let prefix = dir.path().join("dual");
    let o = bicover(&["--out", prefix.to_str().unwrap(), "dualize", &f]);
    assert!(o.status.success());
    let h1 = dir.path().join("dual.h1.toml");
    assert!(dir.path().join("dual.h2.toml").exists());
    let o = bicover(&["transversal", h1.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("tau: 2\n"));
}

#[test]
fn analyze_reports_predicates() {
    let dir = tempfile::tempdir().unwrap();
    let d = stdout(&bicover(&["gen", "doubling", "--r", "2"]));
    let f = write(dir.path(), "d.toml", &d);
    let text = stdout(&bicover(&["analyze", &f]));
    for line in ["spanning: true\n", "antichain: true\n", "reduced: true\n", "width 1: 2\n"] {
        assert!(text.contains(line), "{text}");
    }
    let g = write(dir.path(), "g.toml", include_str!("golden/gstar3.toml"));
    let plain = stdout(&bicover(&["analyze", &g]));
    let iso = stdout(&bicover(&["analyze", "--include-isolated", &g]));
    assert!(plain.contains("width 1: 2\n"));
    assert!(iso.contains("width 1: 4\n"), "{iso}");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("h.toml");
    let o = bicover(&["gen", "hamfactor", "--s", "3", "--out", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&p).unwrap();
    assert!(text.starts_with("m = 3\nn = 3\nr = 3\n"), "{text}");
}
