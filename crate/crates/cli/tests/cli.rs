use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn liemap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liemap")).args(args).env_remove("LIEMAP_BUDGET").output().expect("binary runs")
}

fn schema_for(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Runs the command, checks the exit code and validates stdout against the subcommand's schema.
fn run_ok(args: &[&str], code: i32) -> Value {
    let out = liemap(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    let validator = schema_for(args[0]);
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{args:?} violates its schema: {errors:#?}");
    v
}

#[test]
fn filippov_is_an_identity() {
    let v = run_ok(&["identity", "--poly", "@filippov.lie", "--field", "Q", "--mode", "exact"], 0);
    assert_eq!(v["result"], "identity");
    assert_eq!(v["schema"], "liemap/identity/v1");
}

#[test]
fn expect_mismatch_exits_one() {
    let v = run_ok(&["identity", "--poly", "[[X,Y],Y]", "--expect", "identity"], 1);
    assert_eq!(v["result"], "not_identity");
    assert!(v["witness"].is_array());
    run_ok(&["identity", "--poly", "[[X,Y],Y]", "--expect", "not_identity"], 0);
}

#[test]
fn randomized_identity_records_seed_and_bound() {
    let v = run_ok(&["identity", "--poly", "@razmyslov", "--mode", "randomized", "--seed", "17"], 0);
    assert_eq!(v["seed"], 17);
    assert!(v["result"] == "identity" || v["result"] == "probably_identity");
}

#[test]
fn bundled_witnesses_confirm() {
    let v = run_ok(&["witness", "--realization", "sl3", "--fixtures", "paper-a2"], 0);
    assert_eq!(v["result"], "confirmed");
    assert_eq!(v["invariants"][0]["f1"], "-642379122855");
    let v = run_ok(&["witness", "--fixtures", "paper-b2"], 0);
    assert_eq!(v["result"], "confirmed");
    assert_eq!(v["realization"], "so5");
    assert_eq!(liemap(&["witness", "--realization", "so5", "--fixtures", "paper-a2"]).status.code(), Some(2));
}

#[test]
fn witness_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fx.json");
    let text = fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/paper-a2.json")).unwrap();
    fs::write(&path, text).unwrap();
    let v = run_ok(&["witness", "--file", path.to_str().unwrap()], 0);
    assert_eq!(v["result"], "confirmed");
}

#[test]
fn engel_scan_on_sl2_f3_is_surjective() {
    let v = run_ok(&["scan", "--poly", "[[X1,X2],X2]", "--algebra", "A1", "--field", "F3", "--mode", "exhaustive"], 0);
    assert_eq!(v["attained_total"], 27);
    assert_eq!(v["elements_total"], 27);
    assert_eq!(v["evaluated"], 729);
    assert_eq!(v["contains_all_noncentral"], true);
}

#[test]
fn sampled_scan_is_deterministic() {
    let args = ["scan", "--poly", "[X,Y]", "--type", "A", "--rank", "2", "--field", "F3", "--mode", "sampled", "--count", "5000", "--seed", "3", "--workers", "2"];
    let a = liemap(&args);
    let b = liemap(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = run_ok(&args, 0);
    assert_eq!(v["mode"]["seed"], 3);
}

#[test]
fn budget_env_and_flag() {
    let args = ["scan", "--poly", "[X,Y]", "--algebra", "A1", "--field", "F5"];
    let out = Command::new(env!("CARGO_BIN_EXE_liemap")).args(args).env("LIEMAP_BUDGET", "100").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_liemap"))
        .args(args)
        .args(["--budget", "1000000"])
        .env("LIEMAP_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_liemap")).args(args).env("LIEMAP_BUDGET", "lots").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn roots_and_algebra() {
    let v = run_ok(&["roots", "--type", "A", "--rank", "2"], 0);
    assert_eq!(v["cartan_matrix"], serde_json::json!([[2, -1], [-1, 2]]));
    assert_eq!(v["roots"].as_array().unwrap().len(), 6);
    let v = run_ok(&["algebra", "--algebra", "G2", "--field", "F7", "--print-structure"], 0);
    assert_eq!(v["dim"], 14);
    assert!(!v["structure"].as_array().unwrap().is_empty());
    let v = run_ok(&["algebra", "--algebra", "A2", "--field", "F3"], 0);
    assert_eq!(v["center_dim"], 1);
    assert!(v.get("structure").is_none());
}

#[test]
fn parse_shows_normal_form() {
    let v = run_ok(&["parse", "--poly", "[X,Y] + [Y,X]"], 0);
    assert_eq!(v["is_zero"], true);
    let v = run_ok(&["parse", "--poly", "-2*[[X,Y],Y]"], 0);
    assert_eq!(v["normal_form"], serde_json::json!([{ "word": [1, 2, 2], "coeff": "-2" }]));
}

#[test]
fn engel_solve_certifies() {
    let v = run_ok(&["engel-solve", "--algebra", "A2", "--field", "F5", "--m", "3", "--target", "1,2,3,4,0,0,1,1"], 0);
    assert_eq!(v["result"], "solved");
    assert_eq!(v["value"], v["target"]);
    let v = run_ok(&["engel-solve", "--algebra", "A2", "--field", "F7", "--coeffs", "1,1", "--target", "0,0,0,5,0,0,0,0"], 0);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "1"]));
    // central nonzero target in sl(3, F3)
    assert_eq!(liemap(&["engel-solve", "--algebra", "A2", "--field", "F3", "--m", "1", "--target", "1,2,0,0,0,0,0,0"]).status.code(), Some(1));
    assert_eq!(liemap(&["engel-solve", "--algebra", "A2", "--field", "F5", "--m", "1", "--target", "1,2"]).status.code(), Some(2));
}

#[test]
fn central_probe_and_quartic_example() {
    let v = run_ok(&["central-probe", "--algebra", "A2", "--field", "F3", "--m-from", "1", "--m-to", "4"], 0);
    assert_eq!(v["m0"], 3);
    let v = run_ok(&["example48", "--field", "F5"], 0);
    assert_eq!(v["tuples"], 625);
    assert_eq!(v["corrected_mismatches"], 0);
    assert_eq!(v["scan"]["root_line_hits"], 0);
    let v = run_ok(&["example48", "--field", "F3", "--no-scan"], 0);
    assert!(v.get("scan").is_none());
}

#[test]
fn witness_search_finds_separation() {
    let v = run_ok(&["witness-search", "--poly", "[X,Y]", "--realization", "sl3", "--budget", "50", "--seed", "1"], 0);
    assert_eq!(v["result"], "confirmed");
    assert_eq!(v["check"]["result"], "confirmed");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["scan", "--poly", "[X1,", "--algebra", "A1", "--field", "F3"][..],
        &["identity", "--poly", "@no/such/file.lie"],
        &["roots", "--type", "E", "--rank", "6"],
        &["scan", "--poly", "[X,Y]", "--algebra", "A1", "--field", "F4"],
        &["frobnicate"],
        &["witness", "--fixtures", "nope"],
    ] {
        let out = liemap(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = liemap(&["roots", "--algebra", "B2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["label"], "B2");
}
