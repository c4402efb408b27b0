use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn load_schema(name: &str) -> Value {
    let path = schema_dir().join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap()
}

fn assert_valid(schema_file: &str, instance: &Value) {
    let schema = load_schema(schema_file);
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| format!("{e} at {}", e.instance_path))
        .collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:?}\n{instance:#}");
}

fn data_schema(command: &str) -> &'static str {
    match command {
        "nf" | "mul" | "inv" => "element.schema.json",
        "hom-check" => "hom-check.schema.json",
        "phi1" => "phi1.schema.json",
        "ball" => "ball.schema.json",
        "mcgk" => "mcgk.schema.json",
        "lift" => "lift.schema.json",
        "snf" => "snf.schema.json",
        "nab" => "nab.schema.json",
        "dims" => "dims.schema.json",
        "verify-presentations" => "verify-presentations.schema.json",
        other => panic!("no schema for {other}"),
    }
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_surfgroups"))
        .args(args)
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs with `--json`, validates the envelope and (when present) the data
/// against the shipped schemas.
fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let r = run(&full);
    let v: Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout));
    assert_valid("command-result.schema.json", &v);
    if !v["data"].is_null() {
        assert_valid(data_schema(v["command"].as_str().unwrap()), &v["data"]);
    }
    let ok = v["status"] == "ok";
    assert_eq!(ok, r.code == 0, "status and exit code disagree: {v:#}");
    (r.code, v)
}

#[test]
fn b2t_sigma_squared() {
    let (code, v) = run_json(&["nf", "--group", "b2t", "--word", "s*s"]);
    assert_eq!(code, 0);
    let d = &v["data"];
    assert_eq!(d["word"], "x*y^-1*x^-1*y");
    assert_eq!(
        (d["m"].as_i64(), d["n"].as_i64(), d["eps"].as_i64()),
        (Some(0), Some(0), Some(0))
    );
}

#[test]
fn phi1_of_beta_squared_is_b() {
    let (code, v) = run_json(&["phi1", "--word", "be^2"]);
    assert_eq!(code, 0);
    let img = &v["data"]["image"];
    assert_eq!(img["word"], "1");
    assert_eq!(
        (img["m"].as_i64(), img["n"].as_i64(), img["eps"].as_i64()),
        (Some(0), Some(1), Some(0))
    );
    assert_eq!(img["normal_form"], "b");

    let (_, v) = run_json(&["phi1", "--word", "al^2*be^4"]);
    assert_eq!(v["data"]["image"]["normal_form"], "x^4*a^-2*b^2");
}

#[test]
fn dims_examples() {
    let (code, v) = run_json(&[
        "dims",
        "--surface",
        "sphere",
        "-k",
        "3",
        "--group",
        "braid",
        "--quantity",
        "vcd",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["value"]["kind"], "undefined");
    assert_eq!(v["data"]["value"]["reason"], "requires k≥4");

    let (_, v) = run_json(&[
        "dims",
        "--surface",
        "N",
        "-g",
        "5",
        "-k",
        "2",
        "--group",
        "mcg",
        "--quantity",
        "vcd",
    ]);
    assert_eq!(
        v["data"]["value"],
        serde_json::json!({"kind": "at_most", "bound": 14})
    );

    let (_, v) = run_json(&[
        "dims",
        "--surface",
        "klein-bottle",
        "-k",
        "6",
        "--group",
        "pmcg",
        "--quantity",
        "vcd",
    ]);
    assert_eq!(
        v["data"]["value"],
        serde_json::json!({"kind": "exact", "value": 6})
    );

    let (code, v) = run_json(&[
        "dims",
        "--surface",
        "torus",
        "-g",
        "2",
        "-k",
        "1",
        "--group",
        "mcg",
        "--quantity",
        "vcd",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain");
}

#[test]
fn parse_errors_echo_token_and_column() {
    let (code, v) = run_json(&["nf", "--group", "klein", "--word", "al*be^2*xx"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["token"], "xx");
    assert_eq!(v["error"]["column"], 9);

    let r = run(&["mul", "--group", "b2t", "--left", "x**y", "--right", "y"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("column 3"), "{}", r.stderr);
}

#[test]
fn domain_errors_exit_one() {
    let (code, v) = run_json(&["ball", "--radius", "65"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain");
    let (code, _) = run_json(&["nab", "--surface", "orientable", "-g", "0", "-k", "2"]);
    assert_eq!(code, 1);
    let (code, _) = run_json(&["lift", "--points", "1/4,0;1/4,0"]);
    assert_eq!(code, 1);
    let (code, _) = run_json(&["nf", "--group", "p2t", "--word", "x*s"]);
    assert_eq!(code, 1);
}

#[test]
fn klein_arithmetic() {
    let (_, v) = run_json(&[
        "mul", "--group", "klein", "--left", "al*be", "--right", "al^2*be",
    ]);
    assert_eq!(
        (v["data"]["r"].as_i64(), v["data"]["s"].as_i64()),
        (Some(-1), Some(2))
    );
    let (_, v) = run_json(&["inv", "--group", "klein", "--word", "al*be"]);
    assert_eq!(v["data"]["normal_form"], "al*be^-1");
    let (_, v) = run_json(&["nf", "--group", "free", "--word", "x*y*y^-1*x"]);
    assert_eq!(v["data"]["normal_form"], "x^2");
    let (_, v) = run_json(&[
        "inv",
        "--group",
        "free",
        "--alphabet",
        "x,y",
        "--word",
        "x*y^-1*x^-1*y",
    ]);
    assert_eq!(v["data"]["normal_form"], "y^-1*x*y*x^-1");
    let (_, v) = run_json(&["inv", "--group", "b2t", "--word", "s"]);
    assert_eq!(v["data"]["normal_form"], "y^-1*x*y*x^-1*s");
}

#[test]
fn printed_normal_forms_reparse() {
    let cases = [
        ("free", "b^3*a^-2*b*a*a^-1*c"),
        ("klein", "be^3*al^2*be^-1*al^-7"),
        ("p2t", "a*x*b^-2*y^3*a*x^-1"),
        ("b2t", "s*x^2*a*s^-1*y*B*s"),
        ("b2t", "1"),
    ];
    for (group, word) in cases {
        let (_, first) = run_json(&["nf", "--group", group, "--word", word]);
        let nf = first["data"]["normal_form"].as_str().unwrap().to_string();
        let (_, second) = run_json(&["nf", "--group", group, "--word", &nf]);
        assert_eq!(second["data"]["normal_form"], nf.as_str(), "{group} {word}");
    }
}

#[test]
fn mapping_class_table() {
    let (code, v) = run_json(&["mcgk", "--table"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["kernel"], serde_json::json!(["E1", "E2"]));
    assert_eq!(
        v["data"]["rows"][2]["induced_sl2"],
        serde_json::json!([[-1, 0], [0, -1]])
    );
    let (code, v) = run_json(&["mcgk", "--alpha", "al", "--beta", "be^2"]);
    assert_eq!(code, 1);
    assert_eq!(v["data"]["endomorphism"], false);
    assert!(v["data"]["lifts"].is_null());
    let (code, v) = run_json(&["mcgk", "--alpha", "al^-1", "--beta", "be"]);
    assert_eq!(code, 0);
    // conjugation by be, so inner and trivial on the torus
    assert_eq!(
        v["data"]["induced_sl2"],
        serde_json::json!([[1, 0], [0, 1]])
    );
}

#[test]
fn lift_points() {
    let (_, v) = run_json(&["lift", "--points", "1/4,0;0,1/2"]);
    assert_eq!(v["data"]["k"], 2);
    assert_eq!(
        v["data"]["lifted"],
        serde_json::json!([["1/4", "0"], ["3/4", "0"], ["0", "1/2"], ["1/2", "1/2"]])
    );
    let (_, v) = run_json(&["lift", "--points", ""]);
    assert_eq!(v["data"]["lifted"], serde_json::json!([]));
}

#[test]
fn ball_and_verification() {
    let (code, v) = run_json(&["ball", "--radius", "12"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["distinct"], 625);
    let (_, seq) = run_json(&["ball", "--radius", "12", "--sequential"]);
    assert_eq!(seq["data"], v["data"]);

    let (code, v) = run_json(&["verify-presentations", "--fuzz", "100", "--seed", "3"]);
    assert_eq!(code, 0, "{v:#}");
    assert_eq!(v["data"]["pass"], true);
    assert_eq!(v["data"]["fuzz"]["samples"], 100);
}

#[test]
fn snf_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, "[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]").unwrap();
    let p = path.to_str().unwrap();
    let (code, v) = run_json(&["snf", "--matrix", p, "--transforms"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["diagonal"], serde_json::json!([2, 6, 12]));
    assert_eq!(v["data"]["cokernel"]["display"], "Z_2 + Z_6 + Z_12");
    assert!(v["data"]["u"].is_array());

    std::fs::write(&path, r#"{"rows": [], "cols": 3}"#).unwrap();
    let (_, v) = run_json(&["snf", "--matrix", p]);
    assert_eq!(v["data"]["cokernel"]["display"], "0");

    std::fs::write(&path, r#"[["123456789012345678901234567890", 0]]"#).unwrap();
    let (_, v) = run_json(&["snf", "--matrix", p]);
    assert_eq!(
        v["data"]["diagonal"],
        serde_json::json!(["123456789012345678901234567890"])
    );

    std::fs::write(&path, "[[1, 2], [3]]").unwrap();
    let (code, _) = run_json(&["snf", "--matrix", p]);
    assert_eq!(code, 1);
}

#[test]
fn nab_reports() {
    let (code, v) = run_json(&["nab", "--surface", "orientable", "-g", "2", "-k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["data"]["quotient"],
        serde_json::json!({"free_rank": 4, "torsion": []})
    );
    let (_, v) = run_json(&["nab", "--surface", "nonorientable", "-g", "2", "-k", "3"]);
    assert_eq!(
        v["data"]["quotient"],
        serde_json::json!({"free_rank": 1, "torsion": [2]})
    );
    assert_eq!(v["diagnostics"].as_array().unwrap().len(), 1);
}

#[test]
fn hom_check_files_and_builtins() {
    for b in [
        "phi1",
        "p2t-rho",
        "p2t-useful",
        "p2t-delta-tau",
        "p2t-xyab",
        "b2t",
        "e1",
        "e2",
        "e3",
        "e4",
    ] {
        let (code, v) = run_json(&["hom-check", "--builtin", b]);
        assert_eq!(code, 0, "{b}: {v:#}");
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.json");
    std::fs::write(
        &path,
        r#"{"alphabet": ["al", "be"], "relators": ["al*be*al*be^-1"]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (code, _) = run_json(&[
        "hom-check",
        "--presentation",
        p,
        "--target",
        "klein",
        "--images",
        "al=al;be=be^-1",
    ]);
    assert_eq!(code, 0);
    let (code, v) = run_json(&[
        "hom-check",
        "--presentation",
        p,
        "--target",
        "klein",
        "--images",
        "al=al;be=al",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "verification");
    assert_eq!(v["data"]["checks"][0]["image"], "al^2");
    let (code, _) = run_json(&[
        "hom-check",
        "--presentation",
        p,
        "--target",
        "b2t",
        "--images",
        "al=x^2*a^-1;be=y*s^-1",
    ]);
    assert_eq!(code, 0);
    let (code, v) = run_json(&[
        "hom-check",
        "--presentation",
        p,
        "--target",
        "free",
        "--images",
        "al=u;be=v",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["data"]["pass"], false);
}

#[test]
fn human_output() {
    let r = run(&["nf", "--group", "b2t", "--word", "s*s"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.trim(), "x*y^-1*x^-1*y");
    let r = run(&[
        "dims",
        "--surface",
        "sphere",
        "-k",
        "3",
        "--group",
        "braid",
        "--quantity",
        "vcd",
    ]);
    assert!(
        r.stdout.contains("undefined (requires k≥4)"),
        "{}",
        r.stdout
    );
}
