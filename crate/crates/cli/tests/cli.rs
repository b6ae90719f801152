//! End-to-end runs of the `hecke` binary.

use std::process::Command;

use serde_json::Value;

fn hecke(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn hecke_json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, out, err) = hecke(&all);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn gsp4_hecke_polynomial_has_degree_four() {
    let v = hecke_json(&["heckepoly", "--preset", "gsp4", "--c", "1"]);
    let terms = v["terms"].as_array().unwrap();
    let degrees: std::collections::BTreeSet<i64> = terms.iter().map(|t| t["degree"].as_i64().unwrap()).collect();
    assert_eq!(degrees.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
    assert_eq!(terms.len(), 6);
    let x2: Vec<(&Value, &str)> = terms
        .iter()
        .filter(|t| t["degree"] == 2)
        .map(|t| (&t["lambda"], t["coeff"].as_str().unwrap()))
        .collect();
    assert_eq!(x2.len(), 2);
    assert_eq!(x2[0].1, "q^-1 + q^-3");
}

#[test]
fn verify_counts_gl2_cosets() {
    let v = hecke_json(&["verify", "--preset", "gl2", "--p", "2", "--lambda", "0,2"]);
    assert_eq!(v["count"], 6);
    assert_eq!(v["lambda"], serde_json::json!([2, 0]));
    let total: u64 = v["shapes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["count"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 6);
}

#[test]
fn verify_matches_gl4_orbits() {
    let v = hecke_json(&[
        "verify",
        "--preset",
        "gln",
        "--n",
        "4",
        "--p",
        "2",
        "--lambda",
        "2,1,1,0,0",
        "--orbits",
    ]);
    assert_eq!(v["orbits"]["count"], 6);
    assert_eq!(v["classes"]["bijective"], true);
}

#[test]
fn gu4_orbit_diagram_is_a_chain() {
    let (code, dot, _) = hecke(&[
        "orbit-diagram",
        "--preset",
        "gu4",
        "--lambda",
        "2,2,1",
        "--format",
        "dot",
    ]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 3);
    let v = hecke_json(&["orbit-diagram", "--preset", "gu4", "--lambda", "2,2,1"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(v["chain"], true);
}

#[test]
fn mixed_word_aliases() {
    let a = hecke_json(&["mixed", "--preset", "gsp4", "--word", "w0r2"]);
    let b = hecke_json(&["mixed", "--preset", "gsp4", "--word", "w0ρ^2"]);
    assert_eq!(a, b);
    assert_eq!(a["tables"].as_array().unwrap().len(), 1);
    let (code, _, err) = hecke(&["mixed", "--preset", "gsp4", "--word", "w7"]);
    assert_eq!(code, 2);
    assert!(err.contains("available"));
}

#[test]
fn zeta_check_exit_codes() {
    let (ok, _, _) = hecke(&["zeta-check", "--preset", "gln", "--m", "2", "--c", "1", "--expect-pass"]);
    assert_eq!(ok, 0);
    let (bad, _, err) = hecke(&[
        "zeta-check",
        "--preset",
        "gln",
        "--m",
        "2",
        "--c",
        "1",
        "--layer",
        "product",
        "--expect-pass",
    ]);
    assert_eq!(bad, 1);
    assert!(err.contains("did not pass"));
    let (soft, _, _) = hecke(&[
        "zeta-check",
        "--preset",
        "gln",
        "--m",
        "2",
        "--c",
        "1",
        "--layer",
        "product",
    ]);
    assert_eq!(soft, 0);
}

#[test]
fn gsp4_zeta_check_at_a_prime() {
    let v = hecke_json(&["zeta-check", "--preset", "gsp4", "--c", "1", "--p", "2"]);
    assert_eq!(v["pass"], true);
    let (code, _, _) = hecke(&[
        "zeta-check",
        "--preset",
        "gsp4",
        "--c",
        "2",
        "--p",
        "2",
        "--expect-pass",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn schwartz_identities_and_dump() {
    let dir = std::env::temp_dir().join(format!("hecke-cli-dump-{}.json", std::process::id()));
    let path = dir.to_str().unwrap();
    let v = hecke_json(&["schwartz", "--p", "2", "--check", "frakh1", "--dump", path]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    let dumped: Value = serde_json::from_str(&std::fs::read_to_string(&dir).unwrap()).unwrap();
    assert!(dumped.get("frakh1").is_some() && dumped.get("psi").is_some());
    std::fs::remove_file(&dir).unwrap();
}

#[test]
fn satake_from_config_matches_the_preset() {
    let dir = std::env::temp_dir().join(format!("hecke-cli-config-{}.json", std::process::id()));
    std::fs::write(
        &dir,
        r#"{"version": 1, "datum": {"name": "split-gl2", "rank": 2, "roots": [[1, -1], [-1, 1]],
            "coroots": [[1, -1], [-1, 1]], "simple": [0]}}"#,
    )
    .unwrap();
    let from_config = hecke_json(&["satake", "--config", dir.to_str().unwrap(), "--lambda", "2,0"]);
    let from_preset = hecke_json(&["satake", "--preset", "gl2", "--lambda", "2,0"]);
    assert_eq!(from_config["orbits"], from_preset["orbits"]);
    std::fs::remove_file(&dir).unwrap();
}

#[test]
fn decompose_totals() {
    let v = hecke_json(&["decompose", "--preset", "gsp4", "--lambda", "2,2,1"]);
    assert!(!v["cells"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        hecke(&["verify", "--preset", "gl2", "--p", "2", "--lambda", "1,0,0"]).0,
        2
    );
    assert_eq!(hecke(&["heckepoly", "--preset", "gln", "--c", "1"]).0, 2);
    assert_eq!(hecke(&["heckepoly", "--preset", "e8", "--c", "1"]).0, 1);
    assert_eq!(hecke(&["frobnicate"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["decompose", "--preset", "gu4", "--lambda", "2,2,1", "--json"];
    assert_eq!(hecke(&args).1, hecke(&args).1);
}
