use std::process::Command;

use qcgroups::cli::run;
use serde_json::Value;

fn qcg(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("qcg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = qcg(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn family_verdict_t3() {
    let v = json(&["family-verdict", "--family", "T3", "--seq", "1,3,5"]);
    assert_eq!(v["outcome"], "QuasiConvex");
    assert_eq!(v["schema"], "qcgroups/1");
    let v = json(&["family-verdict", "--family", "T2", "--seq", "0,2"]);
    assert_eq!(v["outcome"], "NotQuasiConvex");
    assert_eq!(v["violated"], "A.i");
    assert_eq!(v["witness"], "5/8");
}

#[test]
fn hull_zn_contains_four() {
    let v = json(&["hull-zn", "--n", "24", "--set", "1,3,6", "--target", "4"]);
    assert!(v["hull"].as_array().unwrap().contains(&Value::from(4)));
    assert_eq!(v["target_in_hull"], true);
    let v = json(&["hull-zn", "--n", "40", "--set", "1,3", "--target", "2"]);
    assert_eq!(v["target_in_hull"], false);
    assert!(v["witness"].is_i64());
}

#[test]
fn circle_commands() {
    let v = json(&["polar-t", "--chars", "1,4,8"]);
    assert_eq!(v["polar"], "[-1/4,-7/32]∪[-1/32,1/32]∪[7/32,1/4]");
    let v = json(&["polar-t", "--set", "1/4,-1/4"]);
    assert_eq!(v["period"], 4);
    assert_eq!(v["characters"], serde_json::json!([-1, 0, 1]));
    let v = json(&["hull-t", "--set", "0,1/9,-1/9,1/27,-1/27"]);
    assert_eq!(v["quasi_convex"], false);
    assert!(v["hull"].as_array().unwrap().contains(&Value::from("2/27")));
    let v = json(&["hull-t", "--family", "T3", "--seq", "1,3", "--grid", "729"]);
    assert_eq!(v["grid"], 729);
    assert_eq!(v["quasi_convex"], true);
}

#[test]
fn real_line_commands() {
    let v = json(&["polar-r", "--set", "1/4"]);
    assert_eq!(v["period"], "4/1");
    let v = json(&["member-r", "--set", "1/6,1/2,1", "--target", "2/3"]);
    assert_eq!(v["member"], true);
    let v = json(&["member-r", "--set", "1/4", "--target", "1/2"]);
    assert_eq!(v["member"], false);
    let v = json(&["hull-r", "--family", "R2", "--seq", "1,2,4"]);
    assert_eq!(v["quasi_convex"], false);
}

#[test]
fn ternary_commands() {
    let v = json(&["jm", "--family", "J3", "--seq", "0,2,4", "--m", "2"]);
    assert_eq!(v["jm"], serde_json::json!([1, 3, 5]));
    let v = json(&["q12", "--family", "T3", "--seq", "1,3"]);
    assert_eq!(v["equal"], true);
    let v = json(&["hull-j3", "--seq", "0,2,4", "--level", "7"]);
    assert_eq!(v["quasi_convex"], true);
    let (code, _, err) = qcg(&["jm", "--family", "J3", "--seq", "0,2", "--k-max", "9"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn certify_and_verify_round_trip() {
    let dir = std::env::temp_dir().join(format!("qcg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let (code, out, _) = qcg(&["certify", "--family", "T3", "--seq", "1,3,5", "--eps", "1,-1,0"]);
    assert_eq!(code, 0);
    std::fs::write(&path, &out).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(json(&["verify-cert", "--cert", p])["passed"], true);

    let mut cert: Value = serde_json::from_str(&out).unwrap();
    cert["evaluation"] = "1/81".into();
    std::fs::write(&path, cert.to_string()).unwrap();
    let (code, out, _) = qcg(&["verify-cert", "--cert", p]);
    assert_eq!(code, 1);
    assert!(out.contains("\"passed\":false"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(qcg(&["hull-zn", "--n", "0", "--set", "1"]).0, 2);
    assert_eq!(qcg(&["family-verdict", "--family", "T5", "--seq", "1"]).0, 2);
    assert_eq!(qcg(&["family-verdict", "--family", "T2", "--seq", "3,1"]).0, 2);
    assert_eq!(qcg(&["nonsense"]).0, 2);
    assert_eq!(qcg(&["hull-zn", "--n", "8", "--set", "1", "--jobs", "0"]).0, 2);
    assert_eq!(qcg(&["hull-zn", "--n", "4000000", "--set", "1"]).0, 2);
}

#[test]
fn output_is_deterministic_and_exact() {
    let args = ["hull-t", "--family", "T2", "--seq", "1,3,6"];
    let (_, a, _) = qcg(&args);
    let (_, b, _) = qcg(&args);
    assert_eq!(a, b);
    assert!(!a.contains('.'), "no floating point in {a}");
}

#[test]
fn text_mode() {
    let (code, out, _) = qcg(&["--text", "hull-zn", "--n", "24", "--set", "1,3,6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("Z(24): hull"));
}

#[test]
fn acceptance_subset() {
    let (code, out, err) = qcg(&["verify-paper", "--only", "3,7,8"]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 3);
    assert_eq!(err.lines().count(), 3);
}

#[test]
fn binary_and_grid_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_qcg"))
        .args(["hull-zn", "--n", "100", "--set", "1"])
        .env("QCG_MAX_GRID", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("QCG_MAX_GRID"));
    let out = Command::new(env!("CARGO_BIN_EXE_qcg")).args(["hull-zn", "--n", "100", "--set", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
