use std::path::{Path, PathBuf};

use braidrep::cli::{render, run, Outcome};
use serde_json::Value;

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn validate(name: &str, doc: &Value) {
    let path = schema_dir().join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{name} schema violations: {errors:#?}\n{}", render(doc));
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("braidrep-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str) -> String {
        self.0.join(name).display().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn cmd(args: &[&str]) -> Outcome {
    run(std::iter::once("braidrep").chain(args.iter().copied()))
}

fn gen_to(dir: &Scratch, name: &str, args: &[&str]) -> String {
    let path = dir.file(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", &path]);
    let out = cmd(&full);
    assert_eq!(out.code, 0, "{}", render(&out.report));
    validate("rep", &out.report);
    path
}

#[test]
fn gen_standard_three_matches_the_definition() {
    let out = cmd(&["gen", "--family", "standard", "--n", "3", "--format", "json"]);
    assert_eq!(out.code, 0);
    validate("rep", &out.report);
    let g = &out.report["generators"];
    assert_eq!(g[0]["entries"][0], serde_json::json!(["0", "1*t^1", "0"]));
    assert_eq!(g[0]["entries"][1], serde_json::json!(["1*t^0", "0", "0"]));
    assert_eq!(g[1]["entries"][1], serde_json::json!(["0", "0", "1*t^1"]));
    assert_eq!(g[1]["entries"][2], serde_json::json!(["0", "1*t^0", "0"]));
}

#[test]
fn gen_variants() {
    let burau = cmd(&["gen", "--family", "burau", "--n", "3", "--u", "2"]);
    assert_eq!(burau.report["generators"][0]["entries"][0], serde_json::json!(["-1/1", "2/1", "0/1"]));
    let twisted = cmd(&["gen", "--n", "3", "--u", "1/2", "--y", "-3"]);
    assert_eq!(twisted.report["generators"][0]["entries"][0][1], "-3/2");
    let decimal = cmd(&["gen", "--n", "3", "--u", "0.25"]);
    assert_eq!(decimal.report["generators"][0]["entries"][0][1], "1/4");
    let complex = cmd(&["gen", "--n", "3", "--u", "0,1"]);
    assert_eq!(complex.report["domain"], "complex");
    assert_eq!(complex.report["generators"][0]["entries"][0][1], serde_json::json!([0.0, 1.0]));
    let forced = cmd(&["gen", "--n", "3", "--u", "2", "--domain", "complex"]);
    assert_eq!(forced.report["domain"], "complex");
    for out in [&burau, &twisted, &decimal, &complex, &forced] {
        assert_eq!(out.code, 0);
        validate("rep", &out.report);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "--n", "1"][..],
        &["gen", "--n", "3", "--u", "abc"],
        &["gen", "--n", "3", "--domain", "complex"],
        &["audit", "--n", "9", "--tol", "0"],
        &["audit", "--n", "9", "--tol", "-1e-9"],
        &["frobnicate"],
        &["corank"],
    ] {
        let out = cmd(args);
        assert_eq!(out.code, 2, "{args:?}");
        validate("error", &out.report);
    }
}

#[test]
fn zero_substitution_is_a_math_failure() {
    let out = cmd(&["gen", "--n", "3", "--u", "0"]);
    assert_eq!(out.code, 1);
    assert_eq!(out.report["error"], "ZeroSubstitution");
}

#[test]
fn non_square_input_is_a_schema_error() {
    let dir = Scratch::new("schema");
    let path = dir.file("bad.json");
    std::fs::write(
        &path,
        r#"{"strands":3,"degree":2,"domain":"rational","generators":[
            {"rows":2,"cols":3,"domain":"rational","entries":[[1,0,0],[0,1,0]]},
            {"rows":2,"cols":2,"domain":"rational","entries":[[1,0],[0,1]]}]}"#,
    )
    .unwrap();
    let out = cmd(&["corank", "--input", &path]);
    assert_eq!(out.code, 2);
    assert_eq!(out.report["error"], "SchemaError");
    validate("corank", &out.report);
    validate("error", &out.report);

    let missing = cmd(&["relations", "--input", &dir.file("absent.json")]);
    assert_eq!(missing.code, 2);
    assert_eq!(missing.report["error"], "ReadError");
    std::fs::write(&path, "{not json").unwrap();
    let garbled = cmd(&["relations", "--input", &path]);
    assert_eq!(garbled.code, 2);
    assert_eq!(garbled.report["error"], "JsonError");
}

#[test]
fn relations_report_and_failure() {
    let dir = Scratch::new("relations");
    let good = gen_to(&dir, "good.json", &["--n", "4"]);
    let out = cmd(&["relations", "--input", &good]);
    assert_eq!(out.code, 0);
    assert_eq!(out.report["all_hold"], true);
    assert_eq!(out.report["relations"].as_array().unwrap().len(), 3);
    validate("relations", &out.report);

    // s1 swaps the first two coordinates and s2 doubles the third: the braid relation fails.
    let bad = dir.file("bad.json");
    let swap = r#"{"rows":3,"cols":3,"domain":"rational","entries":[[0,1,0],[1,0,0],[0,0,1]]}"#;
    let scale = r#"{"rows":3,"cols":3,"domain":"rational","entries":[[1,0,0],[0,1,0],[0,0,2]]}"#;
    let other = r#"{"rows":3,"cols":3,"domain":"rational","entries":[[1,0,0],[0,0,1],[0,1,0]]}"#;
    std::fs::write(&bad, format!(r#"{{"strands":3,"degree":3,"domain":"rational","generators":[{swap},{scale}]}}"#)).unwrap();
    let out = cmd(&["relations", "--input", &bad]);
    assert_eq!(out.code, 1);
    assert_eq!(out.report["error"], "RelationFailure");
    validate("relations", &out.report);

    // Analyses reject the same file on load.
    let out = cmd(&["corank", "--input", &bad]);
    assert_eq!(out.code, 1);
    assert_eq!(out.report["error"], "RelationFailure");

    std::fs::write(&bad, format!(r#"{{"strands":3,"degree":3,"domain":"rational","generators":[{swap},{other}]}}"#)).unwrap();
    assert_eq!(cmd(&["relations", "--input", &bad]).code, 0);
}

#[test]
fn corank_over_each_domain() {
    let dir = Scratch::new("corank");
    for (name, args, expected) in [
        ("laurent.json", &["--n", "5"][..], 2),
        ("rational.json", &["--n", "5", "--u", "7/2"], 2),
        ("complex.json", &["--n", "5", "--u", "1,1"], 2),
        ("burau.json", &["--family", "burau", "--n", "5"], 1),
    ] {
        let path = gen_to(&dir, name, args);
        let out = cmd(&["corank", "--input", &path, "--seed", "9"]);
        assert_eq!(out.code, 0, "{}", render(&out.report));
        assert_eq!(out.report["corank"], expected, "{name}");
        validate("corank", &out.report);
    }
}

#[test]
fn irreducible_exit_codes() {
    let dir = Scratch::new("irreducible");
    let generic = gen_to(&dir, "generic.json", &["--n", "4", "--u", "3"]);
    let out = cmd(&["irreducible", "--input", &generic]);
    assert_eq!(out.code, 0);
    assert_eq!(out.report["dimension"], 16);
    validate("irreducible", &out.report);

    let laurent = gen_to(&dir, "laurent.json", &["--n", "4"]);
    let out = cmd(&["irreducible", "--input", &laurent, "--seed", "3"]);
    assert_eq!(out.code, 0);
    validate("irreducible", &out.report);

    let perm = gen_to(&dir, "perm.json", &["--n", "4", "--u", "1"]);
    let out = cmd(&["irreducible", "--input", &perm]);
    assert_eq!(out.code, 1);
    assert_eq!(out.report["error"], "NotIrreducible");
    assert_eq!(out.report["common_eigenvector"]["vector"], serde_json::json!(["1/1", "1/1", "1/1", "1/1"]));
    assert!(out.report["invariant_subspace"]["dimension"].as_u64().unwrap() < 4);
    validate("irreducible", &out.report);
}

#[test]
fn classify_round_trip_and_domain_errors() {
    let dir = Scratch::new("classify");
    let rep = gen_to(&dir, "twisted.json", &["--n", "6", "--u", "3", "--y", "2"]);
    let out = cmd(&["classify", "--input", &rep]);
    assert_eq!(out.code, 0, "{}", render(&out.report));
    assert_eq!(out.report["verdict"], "EQUIVALENT");
    let y = out.report["y"][0].as_f64().unwrap();
    let u = out.report["u"][0].as_f64().unwrap();
    assert!((y - 2.0).abs() < 1e-8 && (u - 3.0).abs() < 1e-8);
    validate("classify", &out.report);

    let laurent = gen_to(&dir, "laurent.json", &["--n", "6"]);
    for sub in ["classify", "theta-cycle"] {
        let out = cmd(&[sub, "--input", &laurent]);
        assert_eq!(out.code, 2);
        assert_eq!(out.report["error"], "DomainError");
    }

    let small = gen_to(&dir, "small.json", &["--n", "4", "--u", "3"]);
    let out = cmd(&["classify", "--input", &small]);
    assert_eq!(out.code, 2);
    assert_eq!(out.report["error"], "DegreeTooSmall");

    let perm = gen_to(&dir, "perm.json", &["--n", "6", "--u", "1"]);
    let out = cmd(&["classify", "--input", &perm]);
    assert_eq!(out.code, 1);
    assert_eq!(out.report["error"], "NotIrreducible");
}

#[test]
fn audit_is_deterministic_and_parallel_safe() {
    let a = cmd(&["audit", "--n", "6", "--trials", "6", "--seed", "11", "--jobs", "1"]);
    let b = cmd(&["audit", "--n", "6", "--trials", "6", "--seed", "11", "--jobs", "3"]);
    assert_eq!(a.code, 0, "{}", render(&a.report));
    assert_eq!(render(&a.report), render(&b.report));
    assert_eq!(a.report["passed"], 6);
    validate("audit", &a.report);
    let small = cmd(&["audit", "--n", "4", "--trials", "1"]);
    assert_eq!(small.code, 2);
}

#[test]
fn jordan_projection_report() {
    let dir = Scratch::new("jordan");
    let rep = gen_to(&dir, "nine.json", &["--n", "9", "--u", "3", "--y", "2"]);
    let out = cmd(&["jordan", "--input", &rep, "--lambda", "2"]);
    assert_eq!(out.code, 0, "{}", render(&out.report));
    assert_eq!(out.report["d"], 7);
    assert_eq!(out.report["largest_block_count"], 7);
    assert_eq!(out.report["invariant"], true);
    assert_eq!(out.report["subset"], serde_json::json!([1, 2, 3, 4, 5, 6, 8]));
    validate("jordan", &out.report);

    let explicit = cmd(&["jordan", "--input", &rep, "--lambda", "2", "--generator", "8", "--subset", "1,8"]);
    assert_eq!(explicit.code, 0);
    assert_eq!(explicit.report["subset"], serde_json::json!([1, 8]));

    let bad = cmd(&["jordan", "--input", &rep, "--lambda", "2", "--generator", "9"]);
    assert_eq!(bad.code, 2);
}

#[test]
fn theta_cycle_over_rational_input_falls_back_to_complex() {
    let dir = Scratch::new("theta");
    let irrational = gen_to(&dir, "irrational.json", &["--n", "6", "--u", "3", "--y", "2"]);
    let out = cmd(&["theta-cycle", "--input", &irrational]);
    assert_eq!(out.code, 0, "{}", render(&out.report));
    assert!(out.report["note"].is_string());
    assert_eq!(out.report["rank_conclusion"], 2);
    validate("theta-cycle", &out.report);

    let square = gen_to(&dir, "square.json", &["--n", "6", "--u", "4"]);
    let out = cmd(&["theta-cycle", "--input", &square]);
    assert_eq!(out.code, 0);
    assert!(out.report.get("note").is_none());
    assert_eq!(out.report["witness"]["x"], "2/1");
    validate("theta-cycle", &out.report);

    let perm = gen_to(&dir, "perm.json", &["--n", "6", "--u", "1"]);
    let out = cmd(&["theta-cycle", "--input", &perm]);
    assert_eq!(out.code, 1);
    validate("theta-cycle", &out.report);
}

#[test]
fn spectrum_over_each_domain() {
    let dir = Scratch::new("spectrum");
    let laurent = gen_to(&dir, "laurent.json", &["--n", "3"]);
    let out = cmd(&["spectrum", "--input", &laurent]);
    assert_eq!(out.code, 0);
    assert_eq!(out.report["central_scalar"], "1*t^2");
    validate("spectrum", &out.report);

    let rational = gen_to(&dir, "rational.json", &["--n", "5", "--u", "4", "--y", "2", "--domain", "rational"]);
    let out = cmd(&["spectrum", "--input", &rational, "--generator", "2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.report["rational_eigenvalues"].as_array().unwrap().len(), 3);
    validate("spectrum", &out.report);

    let complex = gen_to(&dir, "complex.json", &["--n", "5", "--u", "2,1"]);
    let out = cmd(&["spectrum", "--input", &complex]);
    assert_eq!(out.code, 0);
    validate("spectrum", &out.report);
}

#[test]
fn tolerance_flag_and_environment() {
    let dir = Scratch::new("tol");
    let rep = gen_to(&dir, "r.json", &["--n", "5", "--u", "2,0"]);
    let out = cmd(&["relations", "--input", &rep, "--tol", "1e-6"]);
    assert_eq!(out.report["tolerance"], 1e-6);
    let out = cmd(&["relations", "--input", &rep]);
    let expected = std::env::var("BRAIDREP_TOL").ok().and_then(|s| s.parse::<f64>().ok()).unwrap_or(1e-9);
    assert_eq!(out.report["tolerance"], expected);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = Scratch::new("bytes");
    let rep = gen_to(&dir, "r.json", &["--n", "5", "--u", "5/3"]);
    for args in [
        &["irreducible", "--input", &rep, "--seed", "4"][..],
        &["corank", "--input", &rep],
        &["spectrum", "--input", &rep],
    ] {
        assert_eq!(render(&cmd(args).report), render(&cmd(args).report));
    }
    let written = dir.file("copy.json");
    assert_eq!(cmd(&["gen", "--n", "5", "--u", "5/3", "--output", &written]).code, 0);
    assert_eq!(std::fs::read_to_string(&written).unwrap(), std::fs::read_to_string(&rep).unwrap());
}
