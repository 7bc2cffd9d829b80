use std::process::{Command, Output};

use serde_json::Value;

fn trialg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trialg"))
        .args(args)
        .env_remove("TRIALG_THREADS")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (Value, i32) {
    let out = trialg(args);
    let json = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (json, out.status.code().expect("exit code"))
}

#[test]
fn tree_count_in_degree_five() {
    let (r, code) = report(&["enumerate", "--what", "trees", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["command"], "enumerate");
    assert_eq!(r["result"]["count"], 197);
    assert_eq!(r["verdict"], "pass");
    assert!(r.get("wall_time_s").is_none());
}

#[test]
fn graded_counts_and_listing() {
    let (r, _) = report(&[
        "enumerate",
        "--what",
        "cubes",
        "--n",
        "2",
        "--by-grade",
        "--list",
    ]);
    assert_eq!(r["result"]["count"], 9);
    assert_eq!(
        r["result"]["by_grade"]["counts"],
        serde_json::json!([4, 4, 1])
    );
    assert_eq!(r["result"]["objects"].as_array().unwrap().len(), 9);
    let (r, _) = report(&["enumerate", "--what", "subsets", "--n", "4", "--by-grade"]);
    assert_eq!(
        r["result"]["by_grade"]["counts"],
        serde_json::json!([4, 6, 4, 1])
    );
}

#[test]
fn trias_relations_to_weight_seven() {
    let (r, code) = report(&["axioms", "--theory", "trias", "--max-weight", "7"]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("pass")));
    assert_eq!(r["result"]["relations"].as_array().unwrap().len(), 11);
}

#[test]
fn random_sweeps_log_their_seed() {
    let (r, code) = report(&[
        "axioms",
        "--theory",
        "tricub",
        "--max-weight",
        "4",
        "--random",
        "200",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["params"]["seed"], 7);
    assert_eq!(r["result"]["seed"], 7);
    assert_eq!(r["result"]["random"]["triples"], 200);
}

#[test]
fn cube_series_is_self_dual() {
    let (r, code) = report(&["series", "--check", "self-dual", "--order", "10"]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("pass")));
    assert_eq!(r["result"]["checks"]["cube_after_cube_is_x"], true);
}

#[test]
fn koszul_and_homology_reports() {
    let (r, code) = report(&["koszul"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["dim_trias"], 11);
    let (r, code) = report(&[
        "homology",
        "--theory",
        "tricub",
        "--weight",
        "3",
        "--per-class",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["betti"], serde_json::json!([0, 0, 0]));
    assert!(r["result"]["per_class"].is_object());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(trialg(&["--bogus"]).status.code(), Some(2));
    assert_eq!(
        trialg(&["enumerate", "--what", "trees"]).status.code(),
        Some(2)
    );
    assert_eq!(
        trialg(&["homology", "--theory", "qsym", "--weight", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        trialg(&[
            "axioms",
            "--theory",
            "trias",
            "--max-weight",
            "5",
            "--seed",
            "3"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "axioms",
        "--theory",
        "qsym",
        "--max-weight",
        "5",
        "--random",
        "100",
    ];
    assert_eq!(trialg(&args).stdout, trialg(&args).stdout);
    let args = ["--format", "text", "series", "--order", "6"];
    let first = trialg(&args).stdout;
    assert_eq!(first, trialg(&args).stdout);
    assert!(String::from_utf8(first)
        .unwrap()
        .ends_with("verdict: pass\n"));
}

#[test]
fn timing_is_opt_in() {
    let (r, _) = report(&["--timing", "koszul"]);
    assert!(r["wall_time_s"].as_f64().is_some());
}
