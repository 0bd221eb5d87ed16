use std::path::PathBuf;
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdgraph"))
        .arg("--data-dir")
        .arg(data_dir())
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_connected_order_four() {
    let o = run(&["enumerate", "--order", "4", "--connected"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn classify_json_parses() {
    let o = run(&["classify", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["eligible"], 85);
    assert_eq!(v["summary"]["occurring"], 22);
    assert_eq!(v["summary"]["non_occurring"], 19);
}

#[test]
fn verify_paper_exits_zero() {
    let o = run(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("[pass]"))
            .count(),
        8
    );
}

#[test]
fn broken_data_fails_verification() {
    let dir = std::env::temp_dir().join(format!("cdgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for entry in std::fs::read_dir(data_dir()).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.join(p.file_name().unwrap())).unwrap();
    }
    let claims = dir.join("lemma_checks.claims");
    let text = std::fs::read_to_string(&claims).unwrap().replace(
        "C18 subset b(ii) 1,2,3,5,6,7 => none",
        "C18 subset b(ii) 1,2,3,5,6,7 => 1,2|3,5,6,7",
    );
    std::fs::write(&claims, text).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_cdgraph"))
        .arg("--data-dir")
        .arg(&dir)
        .arg("verify-paper")
        .output()
        .unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run(&["status", "!!"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "Z9"]).status.code(), Some(2));
    assert_eq!(
        run(&["--data-dir", "/nonexistent", "classify"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn construct_and_render() {
    let o = run(&["construct", "B15"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("matches target: yes"));

    let o = run(&["render", "D2", "--labels"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("\"131071\""));

    let o = run(&["render", "C18"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"v0\""));
}

#[test]
fn status_reports_derived_verdict() {
    let o = run(&["status", "F|SWw"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("label: C18"), "{out}");
    assert!(out.contains("admissible-vertex-argument"), "{out}");
}
