use std::process::Command;

use serde_json::Value;
use subdepth::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("subdepth").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn depth_of_named_pairs() {
    for (sub, d) in [("V4", 2), ("D8", 4), ("S3", 5), ("S4", 1)] {
        let v = json(&["depth", "--group", "S4", "--subgroup", sub]);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["depth"], d, "{sub}");
        assert_eq!(v["matrix_depth"]["depth"], d);
    }
}

#[test]
fn depth_of_raw_generators() {
    let v = json(&["depth", "--group", "(1,2);(1,2,3,4,5)", "--subgroup", "(1,2);(1,2,3,4)"]);
    assert_eq!(v["depth"], 7);
    assert_eq!(v["group_order"], 120);
}

#[test]
fn family_member_defaults_to_h() {
    let v = json(&["depth", "--group", "A:n=2"]);
    assert_eq!((v["group_order"].as_u64(), v["subgroup_order"].as_u64()), (Some(1152), Some(96)));
    assert_eq!(v["depth"], 4);
    let k = json(&["depth", "--group", "A:n=2", "--subgroup", "A:n=2/K"]);
    assert_eq!(k["subgroup_order"], 576);
    assert_eq!(k["normal"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["depth", "--group", "S4", "--subgroup", "D8"];
    assert_eq!(call(&args).1, call(&args).1);
    let t = ["table", "--group", "S4"];
    assert_eq!(call(&t).1, call(&t).1);
}

#[test]
fn imported_tables_give_the_same_report() {
    let dir = std::env::temp_dir().join(format!("subdepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g_path = dir.join("s4.json");
    let h_path = dir.join("d8.json");
    std::fs::write(&g_path, call(&["table", "--group", "S4"]).1).unwrap();
    std::fs::write(&h_path, call(&["table", "--group", "D8"]).1).unwrap();
    let direct = call(&["depth", "--group", "S4", "--subgroup", "D8"]).1;
    let imported = call(&[
        "depth",
        "--group",
        "S4",
        "--subgroup",
        "D8",
        "--group-table",
        g_path.to_str().unwrap(),
        "--subgroup-table",
        h_path.to_str().unwrap(),
    ])
    .1;
    assert_eq!(direct, imported);
    // a table for the wrong group is rejected
    let (code, _, _) = call(&[
        "depth",
        "--group",
        "S4",
        "--subgroup",
        "D8",
        "--group-table",
        h_path.to_str().unwrap(),
    ]);
    assert_ne!(code, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn csv_and_text_formats() {
    let (code, out, _) = call(&["--format", "csv", "table", "--group", "S4"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[1], "class size,1,3,6,6,8");
    assert_eq!(lines[2], "X.1,1,1,1,1,1");
    let (_, text, _) = call(&["--format", "text", "depth", "--group", "S4", "--subgroup", "V4"]);
    assert!(text.lines().next().unwrap().ends_with(" 2"));
}

#[test]
fn family_verify() {
    let v = json(&["family", "--series", "B", "--n", "2", "--verify"]);
    assert_eq!(v["expected_depth"], 8);
    assert_eq!(v["depth"]["depth"], 8);
    let c = json(&["family", "--series", "C", "--n", "1"]);
    assert_eq!(c["spec"], "C:step=1");
    assert!(c.get("depth").is_none());
}

#[test]
fn lemma_command() {
    let v = json(&["lemma", "--n", "2"]);
    assert_eq!(v["parts"].as_array().unwrap().len(), 5);
    assert!(v["parts"].as_array().unwrap().iter().all(|p| p["pass"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["bogus"]).0, 2);
    assert_eq!(call(&["depth", "--group", "S4", "--subgroup", "(1,5)"]).0, 2);
    assert_eq!(call(&["depth", "--group", "S4", "--subgroup", "(1,2"]).0, 2);
    assert_eq!(call(&["depth", "--group", "S4"]).0, 2);
    assert_eq!(call(&["family", "--series", "C", "--n", "3"]).0, 3);
    assert_eq!(call(&["--cap", "100", "table", "--group", "A:n=2"]).0, 3);
    assert_eq!(call(&["--prime", "11", "table", "--group", "S4"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn binary_reads_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_subdepth"))
        .args(["table", "--group", "A:n=2"])
        .env("SUBDEPTH_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    let ok = Command::new(env!("CARGO_BIN_EXE_subdepth"))
        .args(["--format", "text", "depth", "--group", "S4", "--subgroup", "V4"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
}
