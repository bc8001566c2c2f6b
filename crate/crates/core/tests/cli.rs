//! End-to-end checks of the command-line surface: worked examples, format
//! stability, schema validity, and CSV round-tripping.

mod common;

use common::{run_cli, validate_schema};
use serde_json::Value;

const SCHEMA: &str = include_str!("../data/output.schema.json");

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend_from_slice(&["--format", "json"]);
    let (out, ok) = run_cli(&full);
    assert!(ok, "command {args:?} failed:\n{out}");
    serde_json::from_str(&out).expect("valid JSON output")
}

#[test]
fn every_command_validates_against_the_shipped_schema() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["variants", "--material", "NiTi"],
        vec!["compat", "--material", "NiTi"],
        vec!["distances", "--material", "NiTi"],
        vec!["symmetry", "--material", "NiTi", "--check", "r0"],
        vec!["functionals", "--material", "NiTi"],
        vec!["facets", "--material", "NiTi"],
        vec!["t3", "list", "--material", "NiTi"],
        vec!["t3", "lambdas", "--material", "NiTi"],
        vec!["t3", "nodes", "--material", "NiTi", "--triple", "1,8,10"],
        vec!["t3", "level2", "--material", "NiTi"],
        vec!["t3", "witness", "--material", "NiTi"],
        vec!["verify", "--material", "NiTi"],
    ];
    for args in commands {
        let doc = json_of(&args);
        validate_schema(&schema, &doc).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn compat_row_one_lists_published_partners() {
    let doc = json_of(&["compat", "--material", "NiTi"]);
    let row = &doc["data"]["rows"][0];
    assert_eq!(row["zero"], serde_json::json!([2, 3, 4, 5, 7, 9, 11]));
    assert_eq!(doc["regime"], "Ia");
}

#[test]
fn variants_from_explicit_rationals_have_constant_trace() {
    let doc = json_of(&["variants", "--params", "1/41,-2/41,3/41,2/41"]);
    let variants = doc["data"]["variants"].as_array().unwrap();
    assert_eq!(variants.len(), 12);
    for v in variants {
        assert_eq!(v["trace"], "0"); // 2/41 + 2/41... 2*(1/41) + (-2/41) = 0
    }
}

#[test]
fn symmetry_check_r0_reports_the_lemmas() {
    let doc = json_of(&["symmetry", "--material", "NiTi", "--check", "r0"]);
    let check = &doc["data"]["check"];
    assert_eq!(check["symmetry_of_variants"], Value::Bool(false));
    assert_eq!(check["symmetry_of_compatible_pairs"], Value::Bool(false));
    assert_eq!(check["symmetry_of_incompatible_pairs"], Value::Bool(true));
    assert_eq!(check["symmetry_of_incompatible_triples"], Value::Bool(true));
    assert_eq!(check["has_linear_representation"], Value::Bool(false));
}

#[test]
fn facet_counts_by_regime() {
    assert_eq!(json_of(&["facets", "--material", "NiTi"])["data"]["count"], 25);
    assert_eq!(
        json_of(&["facets", "--params", "0.0243,-0.0437,0.05,0.05"])["data"]["count"],
        7
    );
    assert_eq!(
        json_of(&["facets", "--params", "0.0243,-0.0437,0.04,0.06"])["data"]["count"],
        33
    );
}

#[test]
fn t3_lambda_values_match_the_published_table() {
    let doc = json_of(&["t3", "lambdas", "--material", "NiTi"]);
    let lambdas = doc["data"]["lambdas"].as_array().unwrap();
    assert_eq!(lambdas.len(), 8);
    let first = &lambdas[0];
    let lam = first["lambda"].as_str().unwrap();
    let mirror = first["one_minus_lambda"].as_str().unwrap();
    assert!(
        lam.starts_with("0.68304") || mirror.starts_with("0.68304"),
        "lambda {lam} / {mirror}"
    );
    assert_eq!(doc["data"]["all_similar"], Value::Bool(true));

    let cuzr = json_of(&["t3", "lambdas", "--material", "CuZr"]);
    let first = &cuzr["data"]["lambdas"][0];
    let lam = first["lambda"].as_str().unwrap();
    let mirror = first["one_minus_lambda"].as_str().unwrap();
    assert!(lam.starts_with("0.03955") || mirror.starts_with("0.03955"), "{lam} / {mirror}");
}

#[test]
fn t3_list_contains_the_eight_triples() {
    let doc = json_of(&["t3", "list", "--material", "NiTi"]);
    assert_eq!(doc["data"]["count"], 8);
    let triples: Vec<Vec<u64>> = doc["data"]["triples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            t["triple"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect()
        })
        .collect();
    assert!(triples.contains(&vec![1, 6, 12]));
    assert!(triples.contains(&vec![2, 7, 9]));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["facets", "--material", "NiTi", "--format", "json"],
        vec!["t3", "lambdas", "--material", "NiTi", "--format", "text"],
        vec!["t3", "witness", "--material", "NiTi", "--format", "json"],
        vec!["distances", "--material", "NiTi", "--format", "csv"],
    ] {
        let (a, ok_a) = run_cli(&args);
        let (b, ok_b) = run_cli(&args);
        assert!(ok_a && ok_b);
        assert_eq!(a, b, "output of {args:?} is not reproducible");
    }
}

#[test]
fn csv_round_trips_the_table() {
    let (csv_text, ok) = run_cli(&["compat", "--material", "NiTi", "--format", "csv"]);
    assert!(ok);
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), vec!["i", "det=0", "det=+D", "det=-D"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 12);
    let doc = json_of(&["compat", "--material", "NiTi"]);
    for (record, row) in rows.iter().zip(doc["data"]["rows"].as_array().unwrap()) {
        let zero: Vec<String> = row["zero"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap().to_string())
            .collect();
        assert_eq!(record.get(1).unwrap(), zero.join(" "));
    }
}

#[test]
fn unknown_material_fails_cleanly() {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_martensite"))
        .args(["variants", "--material", "Unobtainium"])
        .output()
        .unwrap();
    assert!(!output.status.success());
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("unknown material"), "stderr: {err}");
}

#[test]
fn degenerate_parameters_skip_facet_claims_but_verify_cleanly() {
    // (alpha-beta) delta + eps^2 - delta^2 = 0
    let (out, ok) = run_cli(&["verify", "--params", "3/8,0,1/2,1/4"]);
    assert!(ok, "degenerate verify must still exit zero:\n{out}");
    assert!(out.contains("SKIPPED"));
    assert!(!out.contains("FAIL"));

    let (out, ok) = run_cli(&["verify", "--params", "0.02,0.02,0.058,0.0427"]);
    assert!(ok, "flat verify must still exit zero:\n{out}");
    assert!(out.contains("three-dimensional affine span"));
}

#[test]
fn width_controls_reported_precision() {
    let coarse = json_of(&["t3", "lambdas", "--material", "NiTi", "--width", "1/1000"]);
    let fine = json_of(&["t3", "lambdas", "--material", "NiTi"]);
    let c = coarse["data"]["lambdas"][0]["lambda"].as_str().unwrap();
    let f = fine["data"]["lambdas"][0]["lambda"].as_str().unwrap();
    assert!(c.len() < f.len(), "coarse {c} vs fine {f}");
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join("martensite-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("facets.json");
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_martensite"))
        .args([
            "facets",
            "--material",
            "NiTi",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(output.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(written, stdout);
    std::fs::remove_file(&path).unwrap();
}
