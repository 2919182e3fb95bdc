use std::process::{Command, Output};

fn etaforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etaforge")).args(args).env_remove("ETAFORGE_PREC").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("etaforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn expand_text_and_json() {
    let o = etaforge(&["expand", "--e", "8,-7,0,3", "--terms", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "q - 8*q^2 + 27*q^3 - 56*q^4 + 105*q^5 + O(q^6)\n");
    let o = etaforge(&["expand", "--e", "-7,8,3,0", "--terms", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // n·d(n)/2 for 2q + 7q^2 + 18q^3 + 42q^4
    assert_eq!(v["series"]["coeffs"], serde_json::json!(["1", "7", "27", "84"]));
    assert_eq!(v["admissible"], true);
    assert_eq!(etaforge(&["expand", "--e", "1,2,3"]).status.code(), Some(2));
}

#[test]
fn integrate_k_log_example() {
    let o = etaforge(&["integrate-k", "--a", "0,0,0"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rational"], false);
    let o = etaforge(&["integrate-k", "--a", "0,-2,1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rational"], true);
    assert_eq!(v["a"], serde_json::json!([1, 0, -2, 1]));
    assert_eq!(etaforge(&["integrate-k", "--a", "1,1,1,1"]).status.code(), Some(2));
}

#[test]
fn scan_a_is_deterministic_across_job_counts() {
    let one = etaforge(&["--jobs", "1", "scan-a", "--range", "6"]);
    let four = etaforge(&["--jobs", "4", "scan-a", "--range", "6"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert!(stdout(&one).lines().last().unwrap().starts_with("EMPTY-DIFF range=6"));
}

#[test]
fn search_multiplier_split() {
    let hits = |b: &str| -> Vec<String> {
        let o = etaforge(&["search", "--emax", "8", "--b", b, "--terms", "400"]);
        assert!(o.status.success());
        stdout(&o)
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["e"].to_string())
            .collect()
    };
    let b1 = hits("1");
    assert!(b1.contains(&"[8,-7,0,3]".to_string()) && b1.contains(&"[0,3,8,-7]".to_string()));
    assert!(!b1.contains(&"[3,0,-7,8]".to_string()) && !b1.contains(&"[-7,8,3,0]".to_string()));
    let b2 = hits("2");
    assert!(b2.contains(&"[3,0,-7,8]".to_string()) && b2.contains(&"[-7,8,3,0]".to_string()));
}

#[test]
fn verify_suite_and_errors() {
    let o = etaforge(&["verify", "--suite", "rp"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(etaforge(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn eval_reports_and_exit_codes() {
    let o = etaforge(&["eval", "--what", "row:1.0", "--prec", "256"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reports"][0]["check"], "row.1.0.series");
    for key in ["check", "lhs", "rhs", "abs_error", "precision_bits"] {
        assert!(v["reports"][0].get(key).is_some(), "{key}");
    }
    assert_eq!(etaforge(&["eval", "--what", "row:2.0"]).status.code(), Some(2));
    assert_eq!(etaforge(&["eval", "--what", "nothing"]).status.code(), Some(2));
    // 64 bits cannot reach the 1e-60 target
    let o = Command::new(env!("CARGO_BIN_EXE_etaforge")).args(["eval", "--what", "k"]).env("ETAFORGE_PREC", "64").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["precision_bits"], 64);
}

#[test]
fn config_file_and_output() {
    let cfg = tmp("run.cfg");
    let out = tmp("suite.json");
    std::fs::write(&cfg, format!("# rp only\nsuite = rp\noutput = {}\n", out.display())).unwrap();
    let o = etaforge(&["--config", cfg.to_str().unwrap(), "verify"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let first = std::fs::read(&out).unwrap();
    assert_eq!(first, etaforge(&["verify", "--suite", "rp"]).stdout);
    std::fs::write(&cfg, "suite = rp\nwidth = 3\n").unwrap();
    let o = etaforge(&["--config", cfg.to_str().unwrap(), "verify"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown key"));
}
