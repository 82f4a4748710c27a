use std::process::{Command, Output};

use serde_json::Value;

fn golden8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_golden8"))
        .args(args)
        .env_remove("GOLDEN8_OUT_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> Value {
    serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap()
}

/// Top-level `data` keys of a report against the schema branch for its command.
fn check_against_schema(report: &Value) {
    let s = schema();
    let command = report["command"].as_str().unwrap();
    let branch = s["oneOf"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["properties"]["command"]["const"] == command)
        .unwrap();
    let data_schema = &branch["properties"]["data"];
    let allowed = data_schema["properties"].as_object().unwrap();
    let data = report["data"].as_object().unwrap();
    for key in data.keys() {
        assert!(allowed.contains_key(key), "{command}: unexpected key {key}");
    }
    for key in data_schema["required"].as_array().unwrap() {
        assert!(data.contains_key(key.as_str().unwrap()), "{command}: missing {key}");
    }
    assert!(report["ok"].is_boolean());
}

#[test]
fn verify_passes_on_the_built_in_matrix() {
    let o = golden8(&["verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    check_against_schema(&v);
    assert_eq!(v["ok"], true);
    assert!(v["data"]["reports"].as_array().unwrap().iter().all(|r| r["holds"] == true));
    assert_eq!(v["data"]["probes"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_fails_with_exit_1_on_the_printed_matrix() {
    let o = golden8(&["verify", "--u", "U_printed"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] u_square_is_cmu"));
}

#[test]
fn powers_four() {
    let o = golden8(&["powers", "-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sum scalar 7, diff scalar 3√5"));
}

#[test]
fn roots_of_e8() {
    let o = golden8(&["roots", "--matrix", "cmE8", "--max-height", "30"]);
    assert!(stdout(&o).starts_with("120 positive roots"));
    let o = golden8(&["roots", "--matrix", "cmE8", "--max-height", "30", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    check_against_schema(&v);
    assert_eq!(v["data"]["count"], 120);
    assert_eq!(v["data"]["max_height"], 29);
}

#[test]
fn roots_from_a_literal_file() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("g2.txt");
    std::fs::write(&path, "# G2\n2; -1\n-3; 2\n").unwrap();
    let o = golden8(&["roots", "--matrix", path.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("6 positive roots"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["frobnicate"],
        vec!["roots", "--matrix", "no-such-matrix"],
        vec!["roots", "--matrix", "U"],
        vec!["roots", "--matrix", "J"],
        vec!["powers", "-n", "0"],
        vec!["project", "--dims", "1,1,2"],
        vec!["project", "--dims", "1,2"],
        vec!["project", "--dims", "0,2,3"],
        vec!["roots", "--dot", "--csv"],
        vec!["verify", "--unknown-flag"],
    ] {
        let o = golden8(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn every_json_report_matches_the_schema() {
    for args in [
        vec!["powers", "--json"],
        vec!["lattice", "--json"],
        vec!["lattice", "--check", "hadamard-map", "--json"],
        vec!["project", "--json"],
        vec!["dump", "cmE8", "--json"],
        vec!["roots", "--matrix", "J", "--mode", "relaxed", "--max-height", "4", "--json"],
    ] {
        let o = golden8(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        check_against_schema(&serde_json::from_slice(&o.stdout).unwrap());
    }
}

#[test]
fn out_dir_from_environment() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli_out_dir");
    let _ = std::fs::remove_dir_all(&dir);
    let o = Command::new(env!("CARGO_BIN_EXE_golden8"))
        .args(["roots", "--matrix", "cmE8", "--max-height", "30", "--dot"])
        .env("GOLDEN8_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(dir.join("roots.dot")).unwrap();
    assert!(dot.starts_with("digraph hasse {"));
}

#[test]
fn project_dims_and_obj() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli_obj");
    let _ = std::fs::remove_dir_all(&dir);
    let o = golden8(&["project", "--dims", "2,3,4", "--obj", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("regular octahedron"));
    let obj = std::fs::read_to_string(dir.join("hull_234.obj")).unwrap();
    assert_eq!(obj.matches("\no layer_").count(), 14);
    let csv = stdout(&golden8(&["project", "--all", "--csv"]));
    assert_eq!(csv.lines().next().unwrap(), "dims,distinct_points,layer,vertex_count,classification,edge_count,edge_spread");
}
