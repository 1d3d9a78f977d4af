use std::process::{Command, Output};

use owa_minimax::cli::{solutions_from_json, Document, KcurveRecord, TransformRecord};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_owa-minimax"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sweep_json_revalidates() {
    let o = run(&["sweep", "--n", "10", "--eta", "0:1:0.1", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let sols = solutions_from_json(&stdout(&o)).unwrap();
    assert_eq!(sols.len(), 11);
    assert!((sols[7].eta.value() - 0.7).abs() < 1e-15);
    assert!((sols[7].delta.unwrap() - 0.0218).abs() < 1e-4);
}

#[test]
fn tampered_json_is_rejected() {
    let o = run(&["solve", "--n", "6", "--eta", "0.3", "--output", "json"]);
    let json = stdout(&o).replacen("\"delta\": 0.0", "\"delta\": 0.5", 1);
    assert!(solutions_from_json(&json).is_err());
}

#[test]
fn infeasible_levels_exit_one_and_omit_fields() {
    let o = run(&["kcurve", "--n", "10", "--eta", "0.2", "--output", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Document<KcurveRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.results[..2].iter().all(|r| r.delta.is_none()));
    assert!(doc.results[2..].iter().all(|r| r.delta.is_some()));
    assert!(!stdout(&o).contains("null"));

    let o = run(&[
        "solve", "--n", "10", "--eta", "0.2", "--k", "2", "--output", "csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("eta,status,delta,w_1,"));
    assert!(lines.next().unwrap().starts_with("0.2,infeasible,,"));
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        &["solve", "--n", "10", "--eta", "1.5"][..],
        &["solve", "--n", "1", "--eta", "0.5"],
        &["solve", "--n", "10", "--eta", "0.5", "--k", "0"],
        &["solve", "--n", "10"],
        &["to-weights", "--n", "3", "--alpha", "3,-2"],
        &["measures", "--weights", "0.5,0.6"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn infeasible_coefficients_name_the_condition() {
    let o = run(&["to-weights", "--n", "3", "--alpha", "3,-2"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("condition 3"), "{err}");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "sweep", "--n", "12", "--eta", "0:1:0.05", "--method", "alpha", "--output", "csv",
    ];
    let first = run(&args);
    for _ in 0..3 {
        assert_eq!(run(&args).stdout, first.stdout);
    }
}

#[test]
fn to_alpha_and_back_are_exact() {
    let o = run(&[
        "to-alpha",
        "--n",
        "4",
        "--weights",
        "0.1,0.2,0.3,0.4",
        "--output",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("\"8/5\"") && text.contains("\"-3/5\""),
        "{text}"
    );
    let o = run(&[
        "to-weights",
        "--n",
        "4",
        "--alpha",
        "1.6,-0.6",
        "--output",
        "json",
    ]);
    let doc: Document<TransformRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    let exact = doc.results[0].exact.clone().unwrap();
    assert_eq!(exact, ["1/10", "1/5", "3/10", "2/5"]);
    assert!((doc.results[0].weights[0] - 0.1).abs() < 1e-15);
}

#[test]
fn table_output_has_one_column_per_level() {
    let o = run(&[
        "sweep",
        "--n",
        "4",
        "--eta",
        "0.25,0.75",
        "--method",
        "weights",
    ]);
    let text = stdout(&o);
    let header = text.lines().next().unwrap();
    assert_eq!(
        header.split_whitespace().collect::<Vec<_>>(),
        ["eta", "0.25", "0.75"]
    );
    assert!(text.lines().any(|l| l.starts_with("delta")));
    assert!(!text.contains("-0.0000"));
}

#[test]
fn measures_and_seed_check() {
    let o = run(&[
        "measures",
        "--weights",
        "0.4,0.3,0.2,0.1",
        "--output",
        "csv",
    ]);
    // 0.4 - 0.3 in binary floating point.
    assert_eq!(
        stdout(&o),
        "orness,disparity\n0.3333333333333333,0.10000000000000003\n"
    );
    let o = run(&["--seed-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("seed-check"));
}
