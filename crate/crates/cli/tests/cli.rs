use std::process::{Command, Output};

use serde_json::Value;

fn pretzel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pretzel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = pretzel(&all);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON");
    (out.status.code().unwrap(), v)
}

const EXAMPLE: [&str; 6] = ["-r", "-5", "-s", "5", "-t", "3"];

fn with<'a>(cmd: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend(EXAMPLE);
    v.extend(extra);
    v
}

#[test]
fn jones_prints_the_polynomial() {
    let out = pretzel(&with("jones", &["-n", "1"]));
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");
    let (code, v) = json(&with("jones", &["-n", "2"]));
    assert_eq!(code, 0);
    assert_eq!(v["knot"]["r"], -5);
    assert_eq!(v["n"], 2);
    assert!(v["jones"].as_str().unwrap().contains("v^-34"));
}

#[test]
fn degrees_report_keys() {
    let (code, v) = json(&with("degrees", &["-n", "13"]));
    assert_eq!(code, 0);
    let j = &v["jones"];
    assert_eq!(j["slope"], "16/3");
    assert_eq!(j["linear"], "-6");
    assert_eq!(j["constants"], serde_json::json!(["-2", "2/3", "2/3"]));
    assert_eq!(j["period"], 3);
    assert_eq!(j["cutoff"], 0);
    assert_eq!(j["consistent"], true);
    assert_eq!(j["degrees"][12], "824");
}

#[test]
fn slopes_report_keys() {
    let (code, v) = json(&with("slopes", &[]));
    assert_eq!(code, 0);
    let surfaces = v["surfaces"].as_array().unwrap();
    for key in [
        "slope",
        "chi_over_m",
        "sheets",
        "boundary_components",
        "r_cycle",
        "incompressible",
    ] {
        assert!(surfaces.iter().all(|s| s.get(key).is_some()), "{key}");
    }
    assert!(surfaces
        .iter()
        .any(|s| s["slope"] == "16/3" && s["incompressible"] == true));
}

#[test]
fn verify_exit_codes() {
    let (code, v) = json(&with("verify", &["-n", "10"]));
    assert_eq!(code, 0);
    assert_eq!(v["case"], "case2");
    assert_eq!(v["matches"]["slope"], true);
    assert_eq!(v["matches"]["strong"], true);

    let out = pretzel(&["verify", "-r", "-3", "-s", "3", "-t", "5", "-n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pretzel(&["verify", "-r", "-4", "-s", "3", "-t", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd"));
}

#[test]
fn case_one_knot() {
    let (code, v) = json(&["verify", "-r", "-3", "-s", "7", "-t", "7", "-n", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["case"], "case1");
    assert_eq!(v["jones"]["slope"], "0");
    assert_eq!(v["jones"]["linear"], "-2");
}

#[test]
fn sweep_ranges_and_order() {
    let (code, v) = json(&[
        "sweep",
        "--r-range",
        "-5..-3",
        "--s-range",
        "3..5",
        "--t-range",
        "3",
        "-n",
        "10",
    ]);
    assert_eq!(code, 0);
    let knots: Vec<(i64, i64)> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["knot"]["r"].as_i64().unwrap(),
                r["knot"]["s"].as_i64().unwrap(),
            )
        })
        .collect();
    let mut sorted = knots.clone();
    sorted.sort();
    assert_eq!(knots, sorted);
    assert_eq!(v["summary"]["failures"], 0);

    let (code, v) = json(&[
        "sweep",
        "--r-range",
        "2",
        "--s-range",
        "3",
        "--t-range",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"], serde_json::json!([]));

    let out = pretzel(&[
        "sweep",
        "--r-range",
        "x..3",
        "--s-range",
        "3",
        "--t-range",
        "3",
    ]);
    assert!(!out.status.success());
}

#[test]
fn output_is_deterministic_and_float_free() {
    let args = with("verify", &["-n", "12", "--format", "json"]);
    let a = pretzel(&args).stdout;
    let b = pretzel(
        &["--threads", "1"]
            .iter()
            .chain(&args)
            .copied()
            .collect::<Vec<_>>(),
    )
    .stdout;
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    fn no_floats(v: &Value) -> bool {
        match v {
            Value::Number(n) => n.is_i64() || n.is_u64(),
            Value::Array(xs) => xs.iter().all(no_floats),
            Value::Object(m) => m.values().all(no_floats),
            _ => true,
        }
    }
    assert!(no_floats(&v));
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("pretzel-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let mut args = with("slopes", &["--format", "json", "--out"]);
    args.push(p);
    let out = pretzel(&args);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["knot"]["t"], 3);
}
