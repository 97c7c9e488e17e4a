use std::process::{Command, Output};

use cubic_pancake::{CensusReport, SetSpec};
use serde_json::Value;

fn pancake(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pancake"))
        .args(args)
        .env_remove("PANCAKE_MAX_VERTICES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = pancake(&full);
    let value = serde_json::from_slice(&out.stdout).expect("valid json");
    (out.status.code().unwrap(), value)
}

#[test]
fn girth_commands() {
    let (code, v) = json(&["girth", "--set", "bs5", "--n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["girth"], 12);
    assert_eq!(v["set"], "bs5");
    assert_eq!(v["witness"].as_array().unwrap().len(), 12);

    let out = pancake(&["girth", "--set", "bs3", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n is even"));

    let (code, v) = json(&["girth", "--set", "pr", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["girth"], 6);
    assert_eq!(
        v["canonical_witness"],
        serde_json::json!([3, 2, 3, 2, 3, 2])
    );
}

#[test]
fn girth_with_oracle_and_custom_sets() {
    let (code, v) = json(&[
        "girth", "--set", "custom", "--gens", "2,3", "--n", "3", "--oracle",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["girth"], 6);
    assert_eq!(v["oracle"], 6);
    assert_eq!(v["set"], "custom:2,3");

    let out = pancake(&["girth", "--set", "custom", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pancake(&["girth", "--set", "custom:4", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pancake(&["girth", "--set", "pr", "--n", "9", "--oracle"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_limits_exit_four() {
    let out = pancake(&["girth", "--set", "bs6", "--n", "19", "--depth-cap", "5"]);
    assert_eq!(out.status.code(), Some(4));
    let out = pancake(&["girth", "--set", "bs6", "--n", "19", "--max-vertices", "50"]);
    assert_eq!(out.status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_pancake"))
        .args(["girth", "--set", "bs6", "--n", "19"])
        .env("PANCAKE_MAX_VERTICES", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let out = pancake(&[
        "census", "--set", "pr", "--n", "8", "--len", "9", "--budget", "1000",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn census_commands() {
    let (code, v) = json(&[
        "census", "--set", "pr", "--n", "5", "--len", "8", "--expect",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["per_vertex"], 43);
    assert_eq!(v["expected"], 43);
    assert_eq!(v["status"], "MATCH");

    let (code, v) = json(&["census", "--set", "bs5", "--n", "9", "--len", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["per_vertex"], 0);

    let out = pancake(&[
        "census", "--set", "pr", "--n", "4", "--len", "6", "--pretty",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(r₃ r₂)³"));

    // No published count to compare with.
    let out = pancake(&[
        "census", "--set", "pr", "--n", "5", "--len", "9", "--expect",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let (code, v) = json(&[
        "census", "--set", "bs5", "--n", "5", "--len", "10", "--oracle",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"], v["per_vertex"]);
}

#[test]
fn census_json_round_trips() {
    let out = pancake(&[
        "census", "--set", "bs6", "--n", "6", "--len", "8", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: CensusReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.set, SetSpec::Bs(cubic_pancake::BsKind::Bs6));
    assert_eq!(report.forms.len() as u64, report.per_vertex);
    let again: Value = serde_json::to_value(&report).unwrap();
    let original: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(again, original);
    for key in ["n", "set", "length", "per_vertex", "total", "forms"] {
        assert!(original.get(key).is_some(), "{key}");
    }
}

#[test]
fn theorem1_table() {
    let (code, v) = json(&["table", "--theorem1", "--n", "4..9"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0]["P2"], 6);
    for row in &rows[1..] {
        assert_eq!(row["P2"], 8);
        assert_eq!(row["status"], "MATCH");
    }
    // BS3 is skipped at odd n.
    assert_eq!(rows[1]["P3"], Value::Null);
}

#[test]
fn bs6_tables() {
    let (code, v) = json(&["table", "--bs6", "--n", "5..18"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    let row13 = rows.iter().find(|r| r["n"] == 13).unwrap();
    assert_eq!(row13["girth"], 20);

    // The published value at n = 19 is 28; the search finds a 24-cycle.
    let (code, v) = json(&["table", "--bs6", "--n", "5..19"]);
    assert_eq!(code, 3);
    let row19 = v.as_array().unwrap().iter().find(|r| r["n"] == 19).unwrap();
    assert_eq!(row19["girth"], 24);
    assert_eq!(row19["expected"], 28);
    assert_eq!(row19["status"], "MISMATCH");

    let (code, v) = json(&["table", "--conjecture", "--n", "19..21"]);
    assert_eq!(code, 3);
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn census_check_table() {
    let out = pancake(&["table", "--census-check", "--n", "4..6", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n\tlength\tper_vertex\texpected\tstatus\n"));
    assert!(text.contains("6\t8\t103\t103\tMATCH"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn verify_forms_commands() {
    let (code, v) = json(&["verify-forms", "--family", "c8", "--n", "8"]);
    assert_eq!(code, 0);
    assert!(v.as_array().unwrap().iter().all(|r| r["result"] == "PASS"));

    let (code, v) = json(&["verify-forms", "--family", "c7", "--n", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 7);

    let (code, v) = json(&["verify-forms", "--family", "c12", "--n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 1);

    let out = pancake(&["verify-forms", "--family", "c9", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_check_is_seeded_and_clean() {
    let args = [
        "oracle-check",
        "--n-max",
        "5",
        "--random-sets",
        "10",
        "--max-len",
        "8",
        "--seed",
        "7",
    ];
    let a = pancake(&args);
    let b = pancake(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("MISMATCH"));
}

#[test]
fn bad_invocations_exit_two() {
    assert_eq!(pancake(&["table", "--n", "5"]).status.code(), Some(2));
    assert_eq!(
        pancake(&["table", "--bs6", "--n", "9..5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        pancake(&["girth", "--set", "bs9", "--n", "7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pancake(&["census", "--set", "pr", "--n", "4", "--len", "2"])
            .status
            .code(),
        Some(2)
    );
}
