//! End-to-end checks of the binary: output shapes, exit codes, JSON
//! determinism, and cache behavior.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tensor-decomp"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn partitions_listing() {
    let out = run(&["partitions", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("p(4) = 5"));
    assert!(text.contains("(2,1,1)"));
}

#[test]
fn char_value() {
    let out = run(&["char", "--lambda", "2,1", "--class", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= -1"));
}

#[test]
fn rho_example_output() {
    let out = run(&["rho", "--mu", "1,1", "--nu", "2", "--n", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["(5): 1", "(4,1): 1", "(3,2): 1"] {
        assert!(text.contains(needle), "missing {needle} in {text}");
    }
}

#[test]
fn rho_zero_verdict() {
    let out = run(&["rho", "--mu", "3", "--nu", "1,1,1", "--n", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("zero (ν does not dominate μ)"));
}

#[test]
fn rho_with_oracle_agrees() {
    let out = run(&["rho", "--mu", "2,1", "--nu", "2,1", "--n", "6", "--oracle"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("formula and oracle agree"));
}

#[test]
fn exponential_partition_syntax() {
    let a = run(&["rho", "--mu", "1^2", "--nu", "2", "--n", "5", "--json"]);
    let b= run(&["rho", "--mu", "1,1", "--nu", "2", "--n", "5", "--json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["rho", "--mu", "abc", "--nu", "2", "--n", "5"][..],
        &["rho", "--mu", "2", "--nu", "3", "--n", "5"][..],
        &["oracle", "--mu", "1", "--nu", "1", "--n", "9"][..],
        &["char", "--lambda", "2,0", "--class", "2"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args = {args:?}");
    }
    // clap-level usage error
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_bounds_liftable_with_force() {
    let out = run(&["oracle", "--mu", "1", "--nu", "1", "--n", "8", "--force"]);
    assert!(out.status.success());
}

#[test]
fn verify_tables_passes() {
    let out = run(&["verify", "--suite", "tables"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all passed"));
}

#[test]
fn json_documents_are_deterministic() {
    for args in [
        &["table", "--k", "3", "--format", "json", "--json"][..],
        &["rho", "--mu", "2,1", "--nu", "2,1", "--n", "6", "--json"][..],
        &["verify", "--suite", "identities", "--k", "2", "--n", "4", "--json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "args = {args:?}");
    }
}

#[test]
fn json_envelope_shape() {
    let out = run(&["pi", "--mu", "2,2", "--nu", "3,1", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "tensor-decomp/1");
    assert_eq!(doc["command"]["name"], "pi");
    assert_eq!(
        doc["result"]["decomposition"]["terms"][0]["partition"],
        serde_json::json!([1, 1])
    );
    assert_eq!(doc["result"]["decomposition"]["terms"][0]["mult"], 3);
    assert!(doc.get("timing_ms").is_none());

    let timed = run(&["pi", "--mu", "2,2", "--nu", "3,1", "--json", "--timing"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&timed)).unwrap();
    assert!(doc.get("timing_ms").is_some());
}

#[test]
fn plethysm_inner_flags() {
    let out = run(&["plethysm", "--outer", "2", "--inner-h", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("s(4) + s(2,2)"));

    let out = run(&["plethysm", "--outer", "2", "--inner-s", "1,1"]);
    assert!(out.status.success());

    let out = run(&["plethysm", "--outer", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_survives_corruption() {
    let dir = std::env::temp_dir().join(format!("td-cli-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("cache.json");
    let path_str = path.to_str().unwrap();

    let out = run(&["plethysm", "--outer", "2,1", "--inner-h", "2", "--cache", path_str]);
    assert!(out.status.success());
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(first.contains("s2,1[h2]"));

    std::fs::write(&path, "{ not json").unwrap();
    let out = run(&["plethysm", "--outer", "2,1", "--inner-h", "2", "--cache", path_str]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ignoring cache"));
    let rewritten = std::fs::read_to_string(&path).unwrap();
    assert!(rewritten.contains("s2,1[h2]"));

    // The env variable is an equivalent way to point at the cache.
    let out = bin()
        .args(["plethysm", "--outer", "3", "--inner-h", "2"])
        .env("TENSORDECOMP_CACHE", path_str)
        .output()
        .unwrap();
    assert!(out.status.success());
    let extended = std::fs::read_to_string(&path).unwrap();
    assert!(extended.contains("s3[h2]"));

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn thread_env_is_accepted() {
    let out = bin()
        .args(["table", "--k", "3"])
        .env("TENSORDECOMP_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}
