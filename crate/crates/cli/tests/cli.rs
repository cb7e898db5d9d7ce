use std::process::{Command, Output};

use dilogint_cli::report::{Overall, ReportDocument};

fn dilogint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dilogint"))
        .args(args)
        .env_remove("DILOGINT_DIGITS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_examples() {
    let o = dilogint(&["eval", "cl2", "--theta", "pi/2", "--digits", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0.915965594177219015054603514932");

    let o = dilogint(&["eval", "lseries", "--d", "-7", "--s", "2", "--digits", "30"]);
    assert_eq!(stdout(&o).trim(), "1.15192547054449104710169239732");

    let o = dilogint(&["eval", "hurwitz", "--s", "2", "--a", "1", "--digits", "20"]);
    assert_eq!(stdout(&o).trim(), "1.6449340668482264365");
}

#[test]
fn eval_default_digits_and_env() {
    let o = dilogint(&["eval", "cl2", "--theta", "1"]);
    assert_eq!(stdout(&o).trim().len(), "1.".len() + 31);
    let o = Command::new(env!("CARGO_BIN_EXE_dilogint"))
        .args(["eval", "cl2", "--theta", "1"])
        .env("DILOGINT_DIGITS", "20")
        .output()
        .unwrap();
    assert_eq!(stdout(&o).trim(), "1.0139591323607685043");
    let o = Command::new(env!("CARGO_BIN_EXE_dilogint"))
        .args(["eval", "cl2", "--theta", "1", "--digits", "18"])
        .env("DILOGINT_DIGITS", "20")
        .output()
        .unwrap();
    assert_eq!(stdout(&o).trim(), "1.01395913236076850");
}

#[test]
fn eval_domain_errors_exit_two() {
    let o = dilogint(&["eval", "hurwitz", "--s", "1", "--a", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.trim().lines().count(), 1);

    let o = dilogint(&["eval", "cl2", "--theta", "pi +"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn integrate_reports_summary() {
    let o = dilogint(&["integrate", "--digits", "16"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("value          = 1.151925470544491"));
    for key in ["error_estimate", "levels", "nodes"] {
        assert!(text.contains(key));
    }
    let o = dilogint(&["integrate", "--digits", "64"]);
    assert!(stdout(&o).contains("1.151925470544491047101692397320549964797821404686566914083968"));
}

#[test]
fn integrate_failures_exit_two() {
    assert_eq!(
        dilogint(&["integrate", "--digits", "15"]).status.code(),
        Some(2)
    );
    assert_eq!(
        dilogint(&["integrate", "--digits", "64", "--max-levels", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_all_passes() {
    let o = dilogint(&["verify", "--all", "--digits", "64", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.overall, Overall::Pass);
    assert_eq!(doc.reports.len(), 13);
    assert!(doc
        .reports
        .iter()
        .all(|r| r.passed && r.digits_agreed >= 54));
    // Round trip through the schema keeps the document intact.
    let again: ReportDocument = serde_json::from_str(&doc.to_json()).unwrap();
    assert_eq!(again, doc);
}

#[test]
fn text_and_json_agree_on_digits() {
    let args = [
        "verify",
        "--identity",
        "NEW_16",
        "--identity",
        "LEMMA1_A",
        "--digits",
        "40",
    ];
    let text = stdout(&dilogint(&args));
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&dilogint(&json_args))).unwrap();
    for r in &doc.reports {
        let block: Vec<&str> = text
            .lines()
            .skip_while(|l| !l.starts_with(r.id.name()))
            .take(2)
            .collect();
        assert_eq!(
            block[1].trim(),
            format!("digits_agreed = {}", r.digits_agreed)
        );
    }
}

#[test]
fn verify_conjecture_at_scale() {
    let o = dilogint(&[
        "verify",
        "--identity",
        "CONJ_15",
        "--digits",
        "256",
        "--required",
        "240",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("conjecture"));
}

#[test]
fn verify_configuration_errors() {
    let cases: [&[&str]; 4] = [
        &["verify", "--identity", "CONJ_13", "--digits", "12"],
        &[
            "verify",
            "--identity",
            "NEW_16",
            "--digits",
            "64",
            "--required",
            "60",
        ],
        &["verify", "--identity", "NOT_AN_ID"],
        &["verify"],
    ];
    for args in cases {
        assert_eq!(dilogint(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_non_convergence_exits_two() {
    let o = dilogint(&[
        "verify",
        "--identity",
        "COFFEY_12A",
        "--max-levels",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.overall, Overall::Fail);
    assert!(doc.reports[0]
        .error
        .as_deref()
        .unwrap()
        .contains("did not converge"));
    assert_eq!(doc.reports[0].verdict, "failed");
}

#[test]
fn verify_writes_out_file() {
    let path = std::env::temp_dir().join(format!("dilogint-report-{}.json", std::process::id()));
    let o = dilogint(&[
        "verify",
        "--identity",
        "MULT_FORMULA",
        "--digits",
        "32",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: ReportDocument =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(doc.reports.len(), 1);
}

#[test]
fn pslq_examples() {
    let o = dilogint(&[
        "pslq",
        "cl2(2*phi7)",
        "cl2(4*phi7)",
        "cl2(6*phi7)",
        "7*sqrt(7)/4*L(-7,2)",
        "--digits",
        "120",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("relation: (3, -3, 1, -1)"));

    let o = dilogint(&["pslq", "1", "1"]);
    assert!(stdout(&o).contains("relation: (1, -1)"));

    let o = dilogint(&["pslq", "1", "sqrt(2)", "--norm-bound", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no relation found"));
}

#[test]
fn pslq_needs_enough_digits() {
    let o = dilogint(&["pslq", "1", "2", "3", "4", "--digits", "60"]);
    assert_eq!(o.status.code(), Some(2));
}
