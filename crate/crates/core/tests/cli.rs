use std::fs;

use cherednik::cli::{run, EXIT_INPUT, EXIT_MATH, EXIT_OK, EXIT_RESOURCE};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cherednik").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn enumerate_w_family_table() {
    let (code, out, _) = cli(&["enumerate", "--p", "3", "--r", "2", "--t", "1", "--c", "1"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("W_")).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("W_0\tdim=1\t"));
    assert!(rows[1].starts_with("W_1\tdim=5\t"));
    assert!(!out.contains('\r'));
}

#[test]
fn enumerate_weyl_algebra() {
    let (code, out, _) = cli(&["enumerate", "--p", "5", "--r", "1", "--a", "1", "--b", "0"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("V[")).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].contains("dim=5"));
}

#[test]
fn enumerate_classical_roots_in_the_quadratic_extension() {
    let (code, out, _) = cli(&[
        "enumerate", "--p", "3", "--r", "2", "--t", "0", "--c", "1", "--a", "1", "--b", "1", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["field"]["k"], 2);
    assert_eq!(doc["complete"], true);
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 2);
    // beta^2 = 1 + c^2/4 = 2 in F_3, whose square roots are +-g in GF(9)
    let betas: Vec<&str> = classes
        .iter()
        .map(|c| c["representation"]["beta"].as_str().unwrap())
        .collect();
    assert_eq!(betas, ["0,1", "0,2"]);
    for c in classes {
        assert_eq!(c["representation"]["dim"], 2);
        assert_eq!(c["irreducible"], true);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--p", "5", "--r", "2", "--t", "1", "--c", "2", "--a", "1", "--b", "3", "--format", "json"];
    let first = cli(&args);
    let second = cli(&args);
    assert_eq!(first, second);
}

#[test]
fn verify_round_trip_and_faults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reps.json");
    let path_s = path.to_str().unwrap();
    let (code, out, _) = cli(&[
        "enumerate", "--p", "3", "--r", "2", "--t", "1", "--c", "1", "--a", "1", "--b", "0", "--format", "json", "--out", path_s,
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let (code, out, _) = cli(&["verify", path_s]);
    assert_eq!(code, EXIT_OK, "{out}");

    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let y01 = &mut doc["classes"][0]["representation"]["y"][0][1];
    let replacement = if y01 == "0" { "1" } else { "0" };
    *y01 = Value::from(replacement);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, doc.to_string()).unwrap();
    let (code, _, err) = cli(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_MATH);
    assert!(err.contains("[y,x]"), "{err}");

    doc["classes"][0]["representation"]["dim"] = Value::from(7);
    fs::write(&bad, doc.to_string()).unwrap();
    let (code, _, err) = cli(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT, "{err}");

    fs::write(&bad, "{not json").unwrap();
    assert_eq!(cli(&["verify", bad.to_str().unwrap()]).0, EXIT_INPUT);
}

#[test]
fn verify_single_representation_with_flags_for_context() {
    let dir = tempfile::tempdir().unwrap();
    let (_, out, _) = cli(&["enumerate", "--p", "5", "--r", "2", "--c", "2", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let rep = &doc["classes"][1]["representation"];
    let path = dir.path().join("w.json");
    fs::write(&path, rep.to_string()).unwrap();
    // no field/params inside: the flags supply them
    assert_eq!(cli(&["verify", path.to_str().unwrap()]).0, EXIT_INPUT);
    let (code, out, _) = cli(&["verify", "--p", "5", "--r", "2", "--c", "2", "--format", "json", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["ok"], true);
}

#[test]
fn center_check_examples() {
    let (code, out, _) = cli(&["center-check", "--p", "3", "--r", "2", "--t", "1", "--c", "1", "x^6"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "true\n"));
    let (code, out, _) = cli(&["center-check", "--p", "3", "--r", "2", "--t", "0", "--c", "1", "x^2"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "true\n"));
    let (code, out, _) = cli(&["center-check", "--p", "3", "--r", "2", "--t", "1", "--c", "1", "--format", "json", "x"]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["central"], false);
    assert_eq!(doc["witness"]["generator"], "y");
    let (code, _, _) = cli(&["center-check", "--p", "3", "--r", "2", "--c", "1", "x^^2"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn normal_form() {
    let (code, out, _) = cli(&["normal-form", "--p", "3", "--r", "2", "--c", "1", "y*x"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 + 2*s + 1*x*y\n");
    let (code, _, err) = cli(&["normal-form", "--p", "3", "--r", "2", "--c", "1", "x^30*y"]);
    assert_eq!(code, EXIT_RESOURCE, "{err}");
}

#[test]
fn input_errors() {
    for args in [
        vec!["enumerate", "--p", "4"],
        vec!["enumerate", "--p", "3", "--r", "3", "--c", "1;1"],
        vec!["enumerate", "--p", "3", "--r", "2", "--t", "2", "--c", "1"],
        vec!["enumerate", "--p", "3", "--r", "2"],
        vec!["enumerate", "--p", "3", "--r", "2", "--c", "1;2"],
        vec!["enumerate", "--p", "3", "--r", "2", "--c", "x"],
        vec!["enumerate", "--p", "3", "--r", "2", "--c", "1,1"],
        vec!["enumerate", "--r", "2", "--c", "1"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = cli(&args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(!err.is_empty());
    }
    let (_, _, err) = cli(&["enumerate", "--p", "3", "--r", "2", "--t", "2", "--c", "1"]);
    assert!(err.contains("rescaling"));
}

#[test]
fn forced_degree_without_roots_of_unity_is_a_resource_error() {
    let (code, _, err) = cli(&["enumerate", "--p", "5", "--r", "3", "--c", "1;2", "--ext-degree", "1"]);
    assert_eq!(code, EXIT_RESOURCE);
    assert!(err.contains("order 3"));
    let (code, _, _) = cli(&["enumerate", "--p", "5", "--r", "3", "--c", "1;2", "--ext-degree", "2"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn help_succeeds() {
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for sub in ["enumerate", "verify", "normal-form", "center-check"] {
        assert!(out.contains(sub));
    }
}
