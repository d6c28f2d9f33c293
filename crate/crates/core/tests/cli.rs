use std::process::Command;

use serde_json::Value;

fn maxchain(cache: &std::path::Path, args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_maxchain"))
        .args(args)
        .env("MAXCHAIN_CACHE_DIR", cache)
        .output()
        .unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json)
}

#[test]
fn commands_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    let (code, v) = maxchain(d, &["chains", "--group", "A(4)", "--subgroup", "trivial"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["lengths"], serde_json::json!([2, 3]));

    let (code, v) = maxchain(d, &["delta", "--group", "A(5)"]);
    assert_eq!((code, v["value"].as_u64()), (0, Some(16)));

    let (code, v) = maxchain(d, &["verify", "--group", "S(4)"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["hypothesis_all"], false);

    let (code, v) = maxchain(d, &["lattice", "--group", "A(5)"]);
    assert_eq!((code, v["nodes"].as_u64()), (0, Some(59)));
    assert!(std::fs::read_dir(d).unwrap().count() >= 2);
    // second run is served from the cache
    let (code, v) = maxchain(d, &["lattice", "--group", "A(5)"]);
    assert_eq!((code, v["edges"].as_u64().is_some()), (0, true));

    let (code, v) = maxchain(d, &["info", "--group", "@order75"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["fitting"]["order"], 25);

    assert_eq!(maxchain(d, &["info", "--group", "PSL2(9)"]).0, 2);
    assert_eq!(maxchain(d, &["info"]).0, 2);
    assert_eq!(maxchain(d, &["--cap", "50", "info", "--group", "A(5)"]).0, 3);
}

#[test]
fn damaged_cache_fails_the_command() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(maxchain(d, &["lattice", "--group", "S(4)"]).0, 0);
    let file = std::fs::read_dir(d).unwrap().next().unwrap().unwrap().path();
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::write(&file, &text[..text.len() / 3]).unwrap();
    assert_eq!(maxchain(d, &["lattice", "--group", "S(4)"]).0, 1);
    assert_eq!(maxchain(d, &["--no-cache", "lattice", "--group", "S(4)"]).0, 0);
}

#[test]
fn corpus_reports_every_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = maxchain(dir.path(), &["corpus", "--jobs", "2"]);
    let criteria = v["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 11);
    let failed: Vec<u64> = criteria
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["id"].as_u64().unwrap())
        .collect();
    // exit status follows the claim table
    assert_eq!(code, if failed.is_empty() { 0 } else { 1 });
    assert!(v["groups"].as_array().unwrap().iter().all(|g| g["passed"] == true));
}
