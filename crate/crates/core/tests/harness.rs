use modrep::branching::Orientation;
use modrep::verify::{
    run_all, run_check, run_check_sharded, CheckId, LemmaCheck, LemmaReport, RunOptions,
    VerifyConfig,
};
use modrep::Error;

fn without_elapsed(mut report: LemmaReport) -> String {
    report.elapsed_ms = 0;
    report.to_json_line()
}

fn check(id: CheckId, n_max: usize) -> LemmaCheck {
    LemmaCheck {
        n_max,
        ..id.default_check()
    }
}

#[test]
fn default_suite_passes_with_twelve_reports() {
    let outcome = run_all(&VerifyConfig::default()).unwrap();
    assert!(!outcome.aborted);
    assert_eq!(outcome.reports.len(), 12);
    let ids: Vec<CheckId> = outcome.reports.iter().map(|r| r.id).collect();
    assert_eq!(ids, CheckId::ALL.to_vec());
    for report in &outcome.reports {
        assert!(report.pass, "{}: {:?}", report.id, report.counterexamples);
        assert!(report.instances > 0, "{} checked nothing", report.id);
    }
    assert_eq!(outcome.exit_code(), 0);
}

#[test]
fn empty_sweeps_pass_vacuously() {
    let config = VerifyConfig {
        max_n: Some(0),
        ..VerifyConfig::default()
    };
    let outcome = run_all(&config).unwrap();
    assert_eq!(outcome.reports.len(), 12);
    for report in &outcome.reports {
        assert!(report.pass);
        assert!(
            report.instances <= report.primes.len() as u64,
            "{} has {}",
            report.id,
            report.instances
        );
    }
}

#[test]
fn reports_are_deterministic() {
    let config = VerifyConfig {
        max_n: Some(12),
        ..VerifyConfig::default()
    };
    let first: Vec<String> = run_all(&config)
        .unwrap()
        .reports
        .into_iter()
        .map(without_elapsed)
        .collect();
    let second: Vec<String> = run_all(&config)
        .unwrap()
        .reports
        .into_iter()
        .map(without_elapsed)
        .collect();
    assert_eq!(first, second);
}

#[test]
fn json_lines_round_trip() {
    let report = run_check(&check(CheckId::L29, 30), &RunOptions::default()).unwrap();
    let line = report.to_json_line();
    assert!(!line.contains('\n'));
    let value: serde_json::Value = serde_json::from_str(&line).unwrap();
    for field in [
        "id",
        "n_min",
        "n_max",
        "primes",
        "instances",
        "counterexamples",
        "pass",
    ] {
        assert!(value.get(field).is_some(), "missing {field}");
    }
    assert_eq!(value["id"], "L29");
    let back: LemmaReport = serde_json::from_str(&line).unwrap();
    assert_eq!(back, report);
}

#[test]
fn sharding_does_not_change_results() {
    let wrong = RunOptions {
        orientation: Orientation::BottomUp,
        cap: 1000,
        ..RunOptions::default()
    };
    for id in [CheckId::L52, CheckId::MULLX, CheckId::L17, CheckId::JSEQ] {
        for opts in [RunOptions::default(), wrong] {
            let whole = run_check(&check(id, 11), &opts).unwrap();
            for shards in [2, 3, 7] {
                let split = run_check_sharded(&check(id, 11), &opts, shards).unwrap();
                assert_eq!(
                    without_elapsed(split),
                    without_elapsed(whole.clone()),
                    "{id} / {shards}"
                );
            }
        }
    }
}

#[test]
fn flipped_orientation_breaks_mullineux_but_not_the_excess_count() {
    let wrong = RunOptions {
        orientation: Orientation::BottomUp,
        ..RunOptions::default()
    };
    assert!(run_check(&check(CheckId::L52, 10), &wrong).unwrap().pass);
    assert!(!run_check(&check(CheckId::MULLX, 10), &wrong).unwrap().pass);
}

#[test]
fn calibration_gate_aborts_under_wrong_orientation() {
    let config = VerifyConfig {
        max_n: Some(10),
        options: RunOptions {
            orientation: Orientation::BottomUp,
            ..RunOptions::default()
        },
        ..VerifyConfig::default()
    };
    let outcome = run_all(&config).unwrap();
    assert!(outcome.aborted);
    assert_eq!(outcome.exit_code(), 1);
    let ids: Vec<CheckId> = outcome.reports.iter().map(|r| r.id).collect();
    assert_eq!(ids, vec![CheckId::MULLX, CheckId::CLOSED]);
}

#[test]
fn oversized_sweep_is_a_configuration_error() {
    let config = VerifyConfig {
        max_n: Some(50),
        ..VerifyConfig::default()
    };
    assert_eq!(
        run_all(&config).unwrap_err(),
        Error::SweepTooLarge {
            n_max: 50,
            ceiling: 40
        }
    );
}

#[test]
fn selected_checks_only() {
    let config = VerifyConfig {
        max_n: Some(8),
        checks: vec![CheckId::L52, CheckId::JSEQ],
        ..VerifyConfig::default()
    };
    let outcome = run_all(&config).unwrap();
    let ids: Vec<CheckId> = outcome.reports.iter().map(|r| r.id).collect();
    assert_eq!(ids, vec![CheckId::L52, CheckId::JSEQ]);
}
