use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sextic-forge")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sextic-forge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn help_and_bad_input() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["frobnicate"]).0, 3);
    assert_eq!(run(&["classify", "--group", "E8"]).0, 3);
    assert_eq!(run(&["classify", "--group", "C2", "--t", "x/y"]).0, 3);
    assert_eq!(run(&["decompose", "--group", "Icosa", "--deg", "3"]).0, 3);
    assert_eq!(run(&["lifts", "build", "--group", "C2", "--deg", "3"]).0, 3);
    assert_eq!(run(&["lifts", "build", "--group", "C2", "--deg", "3", "--t", "0"]).0, 3);
    let (code, _, err) = run(&["verify", "--all", "--tables", "/nonexistent/tables.json"]);
    assert_eq!(code, 3);
    assert!(err.contains("nonexistent"));
}

#[test]
fn classify_reroutes_and_writes_identical_json() {
    let (p1, p2) = (tmp("c2a.json"), tmp("c2b.json"));
    let args = |p: &PathBuf| -> Vec<String> {
        ["classify", "--group", "C2", "--t", "1", "--t", "-1", "--json", p.to_str().unwrap()].map(String::from).to_vec()
    };
    let a1: Vec<String> = args(&p1);
    let (code, out, _) = run(&a1.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(code, 0);
    assert!(out.contains("(from C2/3/generic)"));
    let a2: Vec<String> = args(&p2);
    assert_eq!(run(&a2.iter().map(String::as_str).collect::<Vec<_>>()).0, 0);
    let (j1, j2) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    assert_eq!(j1, j2);
    let v: serde_json::Value = serde_json::from_slice(&j1).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["t_samples"], serde_json::json!(["1", "-1"]));
}

#[test]
fn seed_does_not_touch_classification() {
    let p1 = tmp("c3a.json");
    let p2 = tmp("c3b.json");
    for (p, seed) in [(&p1, "1"), (&p2, "99")] {
        let out = Command::new(env!("CARGO_BIN_EXE_sextic-forge"))
            .args(["classify", "--group", "C3", "--t", "2", "--json", p.to_str().unwrap()])
            .env("SEXTIC_FORGE_SEED", seed)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
}

#[test]
fn dumps() {
    let (code, out, _) = run(&["decompose", "--group", "Q16", "--deg", "9"]);
    assert_eq!(code, 0);
    assert!(out.contains("V9: 3psi6 + 2psi7"), "{out}");
    let (code, out, _) = run(&["groups", "dump", "--group", "Dic12"]);
    assert_eq!(code, 0);
    assert!(out.contains("order 12") && out.contains("verify: ok"));
    let (code, out, _) = run(&["invariants", "dump", "--group", "S4"]);
    assert_eq!(code, 0);
    assert!(out.contains("syzygy residual: 0") && out.contains("invariant: true"));
    let (code, out, _) = run(&["invariants", "dump", "--group", "C3"]);
    assert_eq!(code, 0);
    assert!(out.contains("C3: Nu = (1)*x^3"));
}

#[test]
fn lifts_build_one_family() {
    let p = tmp("d3.json");
    let (code, out, _) = run(&["lifts", "build", "--group", "D3", "--deg", "7", "--t", "2", "--json", p.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("exceptional_transversal"));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&p).unwrap()).unwrap();
    assert_eq!(v["rank"], 7);
    assert_eq!(v["passed"], true);
    let (code, out, _) = run(&["lifts", "build", "--group", "D4", "--deg", "11", "--case", "L1", "--t", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("rank 6"));
}

#[test]
fn verify_names_a_corrupted_table() {
    let good = tmp("q8.json");
    assert_eq!(run(&["groups", "dump", "--group", "Q8", "--json", good.to_str().unwrap()]).0, 0);
    let mut fx: serde_json::Value = serde_json::from_slice(&std::fs::read(&good).unwrap()).unwrap();
    fx["table"][2][3][0] = serde_json::json!("-1");
    let bad = tmp("q8_bad.json");
    std::fs::write(&bad, serde_json::to_string(&fx).unwrap()).unwrap();
    let report = tmp("verify.json");
    let (code, out, err) = run(&["verify", "--all", "--tables", bad.to_str().unwrap(), "--json", report.to_str().unwrap()]);
    assert_eq!(code, 2, "{out}\n{err}");
    assert!(out.contains("criterion  2 character_data               FAIL"));
    assert!(err.contains("orthonormality"));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["passed"], false);
    let failures = v["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 1);
    assert!(failures[0].as_str().unwrap().contains("Q8: orthonormality"));
}
