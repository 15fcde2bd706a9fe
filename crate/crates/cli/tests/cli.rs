use std::process::{Command, Output};

fn harmonia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonia"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn harmonicity_suite_passes_at_full_size() {
    let o = harmonia(&[
        "verify",
        "--suite",
        "harmonicity",
        "--seed",
        "42",
        "--instances",
        "500",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("[PASS] harmonicity/harmonic-fourth-independence 500/500"));
}

#[test]
fn fano_plane_is_an_expected_failure() {
    let o = harmonia(&[
        "verify", "--suite", "finite", "--p", "2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["status"], "expected-failure");
    let axioms = &report["finite_models"][0]["results"];
    let failed: Vec<_> = axioms
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["verdict"] == "fail")
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["axiom"], 5);
    let w = failed[0]["witness"].as_array().unwrap();
    assert_eq!(w[1], w[3]);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        harmonia(&["verify", "--field", "gf(4)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        harmonia(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(harmonia(&["verify", "--p", "9"]).status.code(), Some(2));
    assert_eq!(
        harmonia(&["verify", "--property", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        harmonia(&["export", "--figure", "saddle", "--format", "svg"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn pinned_instance_replays_one_case() {
    let o = harmonia(&[
        "verify",
        "--suite",
        "curves",
        "--seed",
        "9",
        "--property",
        "curve-coherence",
        "--instance",
        "17",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("curve-coherence 1/1"));
}

#[test]
fn prime_field_suites_run() {
    let o = harmonia(&[
        "verify",
        "--suite",
        "polarity",
        "--field",
        "gf(13)",
        "--instances",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn finite_verb_reports_axioms_and_characteristic() {
    let o = harmonia(&["finite", "--p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PG(2,5): 31 points, 31 lines"));
    assert!(text.contains("characteristic probe 5"));
    assert_eq!(harmonia(&["finite", "--p", "2"]).status.code(), Some(3));
    assert_eq!(
        harmonia(&["finite", "--p", "11", "--dim", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn square_export_is_labeled() {
    let o = harmonia(&["export", "--figure", "square", "--format", "svg"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg"));
    for label in ["A", "B", "C", "D", "a", "b", "c", "d", "Q", "q"] {
        assert!(svg.contains(&format!(">{label}</text>")), "{label}");
    }
}

#[test]
fn space_verbs_emit_scene_json() {
    for verb in ["lift", "section"] {
        let o = harmonia(&[verb, "--seed", "3"]);
        assert_eq!(o.status.code(), Some(0), "{verb}");
        let scene: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(scene["field"], "rational");
        assert!(!scene["elements"].as_array().unwrap().is_empty());
    }
    let o = harmonia(&["export", "--figure", "saddle"]);
    let scene: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(scene["segments"].as_array().unwrap().len(), 6);
}

#[test]
fn pappus_verb_finds_collinear_points() {
    let o = harmonia(&["pappus", "--seed", "4", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("collinear true"));
}

#[test]
fn sample_curve_is_seeded() {
    let a = harmonia(&["sample-curve", "--seed", "5", "--instances", "10"]);
    let b = harmonia(&["sample-curve", "--seed", "5", "--instances", "10"]);
    let c = harmonia(&["sample-curve", "--seed", "6", "--instances", "10"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}
