use std::process::{Command, Output};

fn dsl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dsl"))
        .args(args)
        .env_remove("DSL_MAX_WEIGHT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dims_csv() {
    let o = dsl(&[
        "dims",
        "--space",
        "ls",
        "--max-weight",
        "5",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows[0], "space,m,n,dim");
    assert!(rows.contains(&"ls,3,1,1"));
    assert!(rows.contains(&"ls,4,1,0"));
    assert_eq!(rows.len(), 1 + 20);
}

#[test]
fn dims_json_schema() {
    let o = dsl(&[
        "dims",
        "--space",
        "lq",
        "--max-weight",
        "4",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["space"], "lq");
    assert_eq!(v["max_weight"], 4);
    let dims = v["dims"].as_array().unwrap();
    assert_eq!(dims.len(), 14);
    let row = dims.iter().find(|r| r["m"] == 3 && r["n"] == 1).unwrap();
    assert_eq!(row["dim"], 2);
}

#[test]
fn max_weight_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_dsl"))
        .args(["dims", "--space", "liex", "--format", "csv"])
        .env("DSL_MAX_WEIGHT", "3")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "liex,3,1,1"));
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
}

#[test]
fn basis_lines() {
    let o = dsl(&["basis", "--space", "ls", "--weight", "3", "--depth", "1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 1);
    let o = dsl(&["basis", "--space", "lieb", "--weight", "2", "--depth", "1"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn verify_small_claims() {
    for claim in ["stab-ls", "stab-lq", "closure-ls", "closure-lq", "theta"] {
        let o = dsl(&["verify", "--claim", claim, "--max-weight", "5"]);
        assert!(o.status.success(), "{claim}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("PASS\n"));
    }
    let o = dsl(&["verify", "--claim", "lemmas", "--max-weight", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn verify_output_is_deterministic() {
    let args = [
        "verify",
        "--claim",
        "stab-lq",
        "--max-weight",
        "4",
        "--no-timing",
        "--format",
        "json",
    ];
    let a = dsl(&args);
    let b = dsl(&[
        "--jobs", "1", args[0], args[1], args[2], args[3], args[4], args[5], args[6], args[7],
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v[0]["claim"], "stab-lq");
    assert!(v[0].get("elapsed_ms").is_none());
}

#[test]
fn golden_record_then_match() {
    let dir = std::env::temp_dir().join(format!("dsl-cli-golden-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let args = [
        "verify",
        "--claim",
        "stab-ls",
        "--max-weight",
        "4",
        "--golden",
        d,
    ];
    let first = stdout(&dsl(&args));
    assert!(first.contains("recorded"), "{first}");
    assert!(dir.join("stab-ls-4.json").exists());
    let second = dsl(&args);
    assert!(second.status.success());
    assert!(stdout(&second).contains("matched"));
    let file = dir.join("stab-ls-4.json");
    let tampered = std::fs::read_to_string(&file)
        .unwrap()
        .replacen("\"dim\": 1", "\"dim\": 2", 1);
    std::fs::write(&file, tampered).unwrap();
    let third = dsl(&args);
    assert_eq!(third.status.code(), Some(1));
    assert!(stdout(&third).contains("MISMATCH"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bracket_and_defect() {
    let o = dsl(&[
        "bracket",
        "--kind",
        "ihara",
        "--a",
        "x0 x1 - x1 x0",
        "--b",
        "x0",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\n");
    let o = dsl(&["bracket", "--kind", "ari", "--a", "b1", "--b", "b2"]);
    assert!(o.status.success());
    assert_ne!(stdout(&o), "0\n");
    let o = dsl(&[
        "defect",
        "--kind",
        "coderivation",
        "--psi",
        "x0",
        "--arg",
        "y1 y2",
    ]);
    assert_eq!(stdout(&o), "0\n");
    let o = dsl(&["defect", "--kind", "tau", "--psi", "b0", "--arg", "b1 b2"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn errors_exit_two() {
    let o = dsl(&["bracket", "--kind", "ihara", "--a", "x0 x", "--b", "x1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    let o = dsl(&["bracket", "--kind", "ihara", "--a", "x0 x1", "--b", "x1"]);
    assert_eq!(o.status.code(), Some(2), "non-Lie input is rejected");
    let o = dsl(&["defect", "--kind", "tau", "--psi", "b1", "--arg", "b1 b0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dsl(&["dims", "--space", "nope", "--max-weight", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dsl(&["verify", "--claim", "stab-ls", "--max-weight", "0"]);
    assert_eq!(o.status.code(), Some(2));
}
