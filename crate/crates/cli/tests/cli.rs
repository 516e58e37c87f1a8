//! End-to-end runs of the binary against golden files. Set `UPDATE_GOLDEN=1`
//! to rewrite them.

use std::path::PathBuf;
use std::process::{Command, Output};

use locmod::catalog;

fn locmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locmod")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = locmod(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str, ext: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{}.{ext}", name.replace('/', "_")))
}

fn compare(path: &PathBuf, actual: &str) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "{} differs", path.display());
}

#[test]
fn catalog_reports_match_golden_json() {
    for e in catalog() {
        compare(&golden(e.name, "json"), &stdout(&["check", e.name, "--json"]));
    }
}

#[test]
fn catalog_specs_round_trip_through_fmt() {
    for e in catalog() {
        let path = golden(e.name, "lm");
        let canonical = stdout(&["fmt", e.name]);
        compare(&path, &canonical);
        let p = path.to_str().unwrap();
        assert_eq!(stdout(&["fmt", p]), canonical, "{}", e.name);
        assert_eq!(stdout(&["check", p, "--json"]), stdout(&["check", e.name, "--json"]), "{}", e.name);
    }
}

#[test]
fn output_is_stable_across_runs_and_thread_counts() {
    let a = stdout(&["check", "sl2xsl2-orbit", "--json"]);
    let b = stdout(&["--threads", "1", "check", "sl2xsl2-orbit", "--json"]);
    let c = stdout(&["check", "sl2xsl2-orbit", "--json", "--threads", "3"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn criteria_selection() {
    let out = stdout(&["check", "sl2/n", "--json", "--criteria", "prop-trace-free,thm-main-1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ids: Vec<&str> = v[0]["criteria"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["thm-main-1", "prop-trace-free"]);
    let all = stdout(&["check", "sl2/n", "--json", "--all"]);
    let v: serde_json::Value = serde_json::from_str(&all).unwrap();
    assert_eq!(v[0]["criteria"].as_array().unwrap().len(), 7);
    assert!(!locmod(&["check", "sl2/n", "--criteria", "thm-main-9"]).status.success());
}

#[test]
fn errors_exit_nonzero_with_positions() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("unresolved.lm");
    std::fs::write(&path, "algebra g {\n  basis H F\n  bracket [H,E] = 2*E\n}\n").unwrap();
    let out = locmod(&["check", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unresolved.lm:3:14: unresolved name `E`"), "{err}");
    let out = locmod(&["info", "no-such-entry"]);
    assert!(String::from_utf8(out.stderr).unwrap().contains("UNKNOWN_ENTRY"));
    assert!(!out.status.success());
}

#[test]
fn obstructed_is_a_successful_run() {
    assert!(locmod(&["check", "aff/0"]).status.success());
    assert!(stdout(&["check", "aff/0"]).contains("verdict: OBSTRUCTED"));
}

#[test]
fn info_prints_the_betti_table() {
    let out = stdout(&["info", "heis3/0"]);
    assert!(out.contains("  b_p      1  2  2  1"), "{out}");
    assert!(out.contains("nilpotent"));
}

#[test]
fn catalog_listing() {
    let out = stdout(&["catalog", "list"]);
    for e in catalog() {
        assert!(out.contains(e.name));
    }
    assert_eq!(stdout(&["catalog", "show", "aff/0"]), catalog::catalog_get("aff/0").unwrap().source);
}
