//! Command-line behavior: exact output bytes, exit codes, JSON validity,
//! and determinism. Most tests drive the CLI in-process through
//! `cover_algebra::cli::run`; one spawns the compiled binary.

use std::process::Command;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cover_algebra::cli::run(
        std::iter::once("vca").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).expect("stdout is UTF-8"),
        String::from_utf8(err).expect("stderr is UTF-8"),
    )
}

fn sample(name: &str) -> String {
    format!("{}/samples/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn order_prints_the_bare_value() {
    let (code, out, err) = run_cli(&["order", &sample("two-facet.vca"), "--vector", "1,1"]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, "2\n", ""));
}

#[test]
fn order_prints_inf_for_unbounded_vectors() {
    let (code, out, _) = run_cli(&["order", &sample("unbounded.vca"), "--vector", "0,1"]);
    assert_eq!((code, out.as_str()), (0, "inf\n"));
}

#[test]
fn order_json_is_valid_and_exact() {
    let (code, out, _) = run_cli(&[
        "order",
        &sample("two-facet.vca"),
        "--vector",
        "1,1",
        "--json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["order"], 2);
    assert_eq!(doc["vector"], serde_json::json!([1, 1]));
}

#[test]
fn order_rejects_vectors_of_the_wrong_dimension() {
    let (code, out, err) = run_cli(&["order", &sample("two-facet.vca"), "--vector", "1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("dimension"), "stderr was: {err}");
}

#[test]
fn covers_prints_descending_lexicographic_lines() {
    let (code, out, err) = run_cli(&["covers", &sample("simplex.vca"), "-k", "2"]);
    assert_eq!((code, err.as_str()), (0, ""));
    assert_eq!(out, "2 0\n1 1\n0 2\n");
    // The long flag spells the same option.
    let (_, long_out, _) = run_cli(&["covers", &sample("simplex.vca"), "--degree", "2"]);
    assert_eq!(long_out, out);
}

#[test]
fn covers_of_order_zero_is_the_zero_vector() {
    let (code, out, _) = run_cli(&["covers", &sample("simplex.vca"), "-k", "0"]);
    assert_eq!((code, out.as_str()), (0, "0 0\n"));
}

#[test]
fn covers_json_lists_vectors_in_order() {
    let (code, out, _) = run_cli(&["covers", &sample("simplex.vca"), "-k", "2", "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["degree"], 2);
    assert_eq!(doc["covers"], serde_json::json!([[2, 0], [1, 1], [0, 2]]));
}

#[test]
fn generators_report_certification_phrases() {
    let (code, out, _) = run_cli(&["generators", &sample("simplex.vca"), "--horizon", "3"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("certified finitely generated, bound=2"),
        "got:\n{out}"
    );
    assert!(out.contains("max new generator degree: 1"), "got:\n{out}");

    let (code, out, _) = run_cli(&["generators", &sample("two-facet.vca"), "--horizon", "4"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("no finite certificate within horizon"),
        "got:\n{out}"
    );
    assert!(out.contains("max new generator degree: 4"), "got:\n{out}");
}

#[test]
fn generators_json_documents_every_degree() {
    let (code, out, _) = run_cli(&[
        "generators",
        &sample("simplex.vca"),
        "--horizon",
        "3",
        "--json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["horizon"], 3);
    assert_eq!(doc["certified_bound"], 2);
    assert_eq!(doc["degrees"].as_array().unwrap().len(), 3);
    for degree in doc["degrees"].as_array().unwrap() {
        assert!(degree["covers"].is_array());
        assert!(degree["new_generators"].is_array());
        assert!(degree["certificates"].is_array());
    }
    assert_eq!(doc["splits"]["rule"], "weighted-support");
}

#[test]
fn decompose_prints_the_structure_report() {
    let (code, out, err) = run_cli(&["decompose", &sample("mixed-single.vca")]);
    assert_eq!((code, err.as_str()), (0, ""));
    assert_eq!(
        out,
        "dimension: 3\n\
         positive coordinates: x1\n\
         zero coordinates: x2\n\
         infinite coordinates: x3\n\
         kind: composite\n\
         form: S + t( A(Gamma(2), w=3)[x2] + (x3) S[t] )\n\
         reduced facet: 2 (weight 3)\n"
    );
}

#[test]
fn decompose_requires_a_single_facet() {
    let (code, out, err) = run_cli(&["decompose", &sample("two-facet.vca")]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("single maximal facet"), "stderr was: {err}");
}

#[test]
fn verify_passes_and_exits_zero() {
    let (code, out, _) = run_cli(&[
        "verify",
        &sample("simplex.vca"),
        "--horizon",
        "3",
        "--max-degree",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.ends_with("verification passed\n"), "got:\n{out}");
    assert!(out.contains("oracle-equivalence: pass"));
}

#[test]
fn verify_json_reports_suites() {
    let (code, out, _) = run_cli(&[
        "verify",
        &sample("two-facet.vca"),
        "--horizon",
        "3",
        "--max-degree",
        "3",
        "--json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["passed"], true);
    let suites = doc["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 6);
    assert!(suites
        .iter()
        .any(|s| s["name"] == "counting-identity" && s["status"] == "skipped"));
}

#[test]
fn parse_errors_carry_line_numbers_and_exit_2() {
    let path = std::env::temp_dir().join(format!("vca-bad-{}.vca", std::process::id()));
    std::fs::write(&path, "1 2 : 1\n3 four : 1\n").unwrap();
    let (code, out, err) = run_cli(&["order", path.to_str().unwrap(), "--vector", "1,1"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 2"), "stderr was: {err}");
    assert!(err.contains("four"), "stderr was: {err}");
}

#[test]
fn missing_files_exit_2() {
    let (code, _, err) = run_cli(&["order", "/definitely/not/here.vca", "--vector", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("error:"), "stderr was: {err}");
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = run_cli(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = run_cli(&["covers", &sample("simplex.vca"), "-k", "minus-one"]);
    assert_eq!(code, 2);
    let (code, _, _) = run_cli(&["order", &sample("simplex.vca")]);
    assert_eq!(code, 2);
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, err) = run_cli(&["--help"]);
    assert_eq!((code, err.as_str()), (0, ""));
    for subcommand in ["order", "covers", "generators", "decompose", "verify"] {
        assert!(
            out.contains(subcommand),
            "help is missing {subcommand}:\n{out}"
        );
    }
    let (code, out, _) = run_cli(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("vca "));
}

#[test]
fn reports_are_deterministic_across_runs() {
    let args = ["generators", &sample("two-facet.vca"), "--horizon", "5"];
    assert_eq!(run_cli(&args), run_cli(&args));
    let args = [
        "verify",
        &sample("mixed-single.vca"),
        "--horizon",
        "3",
        "--max-degree",
        "4",
        "--json",
    ];
    assert_eq!(run_cli(&args), run_cli(&args));
}

#[test]
fn the_compiled_binary_behaves_like_the_library_entry_point() {
    let output = Command::new(env!("CARGO_BIN_EXE_vca"))
        .args(["covers", &sample("simplex.vca"), "-k", "3"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "3 0\n2 1\n1 2\n0 3\n"
    );
    let output = Command::new(env!("CARGO_BIN_EXE_vca"))
        .args(["decompose", &sample("two-facet.vca")])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
}
