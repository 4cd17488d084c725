use std::process::Command;

use glattice_cli::{run_report, ReportConfig, Status};
use glattice::Caps;
use serde_json::Value;

fn glattice(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_glattice")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json_of(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, err) = glattice(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).expect("json output")
}

#[test]
fn h1_of_root_lattice() {
    let v = json_of(&["h1", "--lattice", "A(4)"]);
    assert_eq!(v["invariants"], serde_json::json!([4]));
    assert_eq!(v["path"], "bar");
    let (code, out, _) = glattice(&["h1", "--lattice", "A", "--n", "5", "--group", "alpha_beta(4,2)"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn sha_commands() {
    let v = json_of(&["sha1", "--lattice", "A(6)", "--group", "even_pairs(6)"]);
    assert_eq!(v["invariants"], serde_json::json!([2]));
    let v = json_of(&["sha2", "--seq", "sym2seq", "--n", "6", "--group", "even_pairs(6)"]);
    assert_eq!(v["invariants"], serde_json::json!([2]));
    assert_eq!(v["path"], "sequence");
    let v = json_of(&["sha2", "--seq", "gn", "--n", "4", "--group", "A4"]);
    assert_eq!(v["invariants"], serde_json::json!([2]));
    assert_eq!(v["path"], "sequence");
    let v = json_of(&["sha2", "--lattice", "Wedge2A(6)", "--group", "even_pairs(6)"]);
    assert_eq!(v["invariants"], serde_json::json!([]));
}

#[test]
fn resolutions_and_certificates() {
    let v = json_of(&["coflasque", "--lattice", "Sym2A(4)"]);
    assert_eq!(v["coflasque"]["verdict"], "yes");
    let v = json_of(&["flasque-res", "--lattice", "A(4)", "--group", "S4"]);
    assert_eq!(v["flasque"]["verdict"], "yes");
    assert_eq!(v["rho_h1"]["invariants"], serde_json::json!([]));
    let v = json_of(&["cert", "--n", "5"]);
    assert!(v["certificate"].is_object());
    let v = json_of(&["iso", "--lattice", "Wedge2A(3)", "--to", "sign(3)"]);
    assert_eq!(v["found"], true);
    let v = json_of(&["seq", "--name", "koszul", "--n", "3"]);
    assert_eq!(v["verified"], true);
}

#[test]
fn user_catalog() {
    let dir = std::env::temp_dir().join(format!("glattice-cat-{}", std::process::id()));
    std::fs::write(&dir, r#"["S4", "A4"]"#).unwrap();
    let v = json_of(&["coflasque", "--lattice", "U(4)", "--catalog", dir.to_str().unwrap()]);
    assert_eq!(v["coflasque"]["verdict"], "unknown");
    assert_eq!(v["coflasque"]["catalog_complete"], false);
    std::fs::remove_file(dir).ok();
}

#[test]
fn exit_codes() {
    assert_eq!(glattice(&["h1", "--lattice", "Q(3)"]).0, 2);
    assert_eq!(glattice(&["seq", "--name", "newexact", "--n", "4"]).0, 2);
    assert_eq!(glattice(&["sha1", "--lattice", "A(7)", "--caps", r#"{"bar_h1": 10}"#]).0, 3);
    assert_eq!(glattice(&["h1", "--lattice", "A(7)", "--caps", "{not json"]).0, 2);
    let (code, out, _) = glattice(&["report", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("h1-transitive.n3"));
    assert!(!out.contains("h1-transitive.n4"));
}

#[test]
fn report_subset_and_small_caps() {
    let r = run_report(&ReportConfig { n_min: 3, n_max: 3, ..ReportConfig::default() }).unwrap();
    assert!(r.rows.iter().all(|x| x.n == 3));
    assert_eq!(r.exit_code, 0);
    let caps = Caps { bar_h1: 6, bar_h2: 6, ..Caps::default() };
    let r = run_report(&ReportConfig { n_min: 4, n_max: 4, caps, ..ReportConfig::default() }).unwrap();
    let skipped: Vec<_> = r.rows.iter().filter(|x| x.status == Status::Skipped).collect();
    assert!(!skipped.is_empty());
    assert!(skipped.iter().all(|x| x.reason.as_deref().unwrap_or("").contains("cap")));
    assert!(r.rows.iter().all(|x| x.status != Status::Fail));
    assert_eq!(r.exit_code, 3);
    assert!(run_report(&ReportConfig { n_min: 5, n_max: 4, ..ReportConfig::default() }).is_err());
}
