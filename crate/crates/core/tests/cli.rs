use std::process::{Command, Output};

use eigenbound::report::Report;

fn eigenbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigenbound")).args(args).output().expect("binary runs")
}

fn report_of(out: &Output) -> Report {
    Report::from_json(std::str::from_utf8(&out.stdout).unwrap()).expect("stdout is a report")
}

fn number(r: &Report, key: &str) -> f64 {
    r.values[key].as_f64().unwrap_or_else(|| panic!("{key} is not a number"))
}

#[test]
fn constants_json() {
    let out = eigenbound(&["constants", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report_of(&out);
    assert!(r.pass);
    // 30-digit evaluation of (2/(3pi^2))(4/(3(4-pi)) + 3(4-pi)/4 - 2)
    assert!((number(&r, "tau") - 0.0133115522438028).abs() < 1e-13);
    assert!((number(&r, "mu") - 0.76497).abs() < 1e-4);
    assert!((number(&r, "sigma_ratio_at_nu") - 0.374837516563).abs() < 1e-9);
}

#[test]
fn bound_on_round_sphere_diameter() {
    let out = eigenbound(&["bound", "--n", "2", "--K", "1", "--d", "3.14159265", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report_of(&out);
    // pi^2/d^2 + (3/8) K with d just below pi
    assert!((number(&r, "main_bound") - 1.375).abs() < 1e-8);
    assert_eq!(number(&r, "lichnerowicz"), 2.0);
    assert!((number(&r, "zhong_yang") - 1.0).abs() < 1e-8);
    assert!((number(&r, "yang") - 1.25).abs() < 1e-8);
}

#[test]
fn lemma_suite_passes_and_is_deterministic() {
    let args = ["verify", "lemmas", "--grid", "2000", "--tol", "1e-9", "--json"];
    let first = eigenbound(&args);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    let r = report_of(&first);
    assert!(r.pass);
    assert_eq!(r.checks.len(), eigenbound::lemmas::LEMMA_CHECK_COUNT);
    assert_eq!(eigenbound(&args).stdout, first.stdout);
}

#[test]
fn impossible_tolerance_fails_with_status_one() {
    let out = eigenbound(&["verify", "lemmas", "--grid", "200", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("failed:"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[][..],
        &["frobnicate"][..],
        &["bound", "--n", "2", "--K", "1"][..],
        &["bound", "--n", "1", "--K", "1", "--d", "1"][..],
        &["verify", "lemmas", "--tol", "-1"][..],
        &["verify", "lemmas", "--grid", "1"][..],
        &["model", "--n", "3", "--K", "1", "--left", "-2", "--right", "1"][..],
        &["compare", "--n", "3", "--K", "1", "--left", "-0.6", "--right", "1", "--theorem", "symmetric"][..],
        &["constants", "--csv"][..],
    ] {
        let out = eigenbound(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty() || args.is_empty(), "{args:?}");
    }
}

#[test]
fn out_path_and_csv_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("profile.csv");
    let out = eigenbound(&[
        "compare", "--n", "3", "--K", "1", "--left", "-0.6", "--right", "1.0", "--mesh", "512", "--theorem", "mu",
        "--csv", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let rows = eigenbound::report::read_profile_csv(std::fs::File::open(&path).unwrap()).unwrap();
    assert!(rows.len() > 400);
    assert!(rows.iter().all(|r| r.big_z.unwrap() <= r.z.unwrap() + 1e-6));
}

#[test]
fn sweep_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    std::fs::write(
        &path,
        r#"[{"n": 2, "K": 1.0, "left": -1.0, "right": 1.0, "mesh": 512},
            {"n": 5, "K": 0.25, "left": -0.5, "right": 2.5, "mesh": 512}]"#,
    )
    .unwrap();
    let out = eigenbound(&["sweep", "--config", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report_of(&out);
    assert_eq!(r.checks.len(), 2 * eigenbound::model::MODEL_CHECK_IDS.len());
    assert!(r.checks[0].id.starts_with("sweep[0]."));

    std::fs::write(&path, r#"[{"n": 2}]"#).unwrap();
    assert_eq!(eigenbound(&["sweep", "--config", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn in_process_entry_point_matches_binary() {
    let args = ["eigenbound", "case", "--a", "0.3", "--delta", "0.25", "--n", "3", "--json"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(eigenbound::cli::run_with(args, &mut out, &mut err), 0);
    assert_eq!(out, eigenbound(&args[1..]).stdout);
    let r = Report::from_json(std::str::from_utf8(&out).unwrap()).unwrap();
    assert_eq!(r.values["label"], "II_b_2");
}
